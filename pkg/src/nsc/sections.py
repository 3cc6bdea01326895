"""Sections with prescribed principal parts, canonical formal parameters, and
the two residue-type coefficients deciding cohomology vanishing.

For weights (a_1, ..., a_n) summing to the genus and m > a_i, the section
f_i[-m] is the unique global function with poles bounded by m p_i + sum_j a_j
p_j whose expansion at p_i in the chosen parameter is

    u^-m  +  (nothing between exponents -m and -a_i)  +  c_{-a_i} u^-a_i + ...

with constant term zero.  The canonical parameter at p_i is the unique
tangent-compatible parameter making the coefficient at u^-a_i vanish for
every m; it is found order by order, re-solving the section after each
correction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .curves import (
    CurveModel,
    Divisor,
    FunctionOnCurve,
    _ambient,
    _elt_expansion,
    _jet_rows,
    arithmetic_genus,
    validate,
)
from .errors import CohomologyError, ValidationError
from .laurent import LaurentSeries, ParamChange, series_substitute


def _normalize_weights(curve: CurveModel, weights: dict) -> dict:
    out = {}
    for pid, a in weights.items():
        idx = curve.point_index(pid)
        if not isinstance(a, int) or a < 0:
            raise ValidationError("weights must be nonnegative integers")
        out[f"p{idx}"] = a
    if sum(out.values()) != arithmetic_genus(curve):
        raise ValidationError(
            f"weights sum to {sum(out.values())}, genus is {arithmetic_genus(curve)}"
        )
    return out


def _elt_series(curve, elt, pid, low, high, param_change=None) -> LaurentSeries:
    """Expansion of one ambient element at a marked point, in the tangent-
    rescaled parameter, then through the optional parameter change."""
    mp = curve.marked(pid)
    raw = _elt_expansion(elt, mp.component, mp.point, low, high)
    v = mp.tangent
    coeffs = [c * v ** (low + k) for k, c in enumerate(raw)]
    series = LaurentSeries(None, "u", low, coeffs, cut=high)
    if param_change is not None:
        series = series_substitute(series, param_change)
    return series


@dataclass(frozen=True)
class Section:
    point_id: str
    order: int
    function: FunctionOnCurve
    expansions: dict  # point_id -> LaurentSeries

    def alpha(self, other_id: str, exponent: int) -> Fraction:
        """Expansion coefficient of this section at another marked point."""
        return self.expansions[other_id].coefficient(exponent)


def f_sections(curve: CurveModel, weights: dict, i: str, m: int,
               params: dict | None = None, tail: int = 6) -> Section:
    """Solve for f_i[-m]; expansions are returned at every marked point to
    exponents < tail, in each point's (optionally changed) parameter."""
    validate(curve)
    weights = _normalize_weights(curve, weights)
    i = f"p{curve.point_index(i)}"
    a_i = weights.get(i, 0)
    if m <= a_i:
        raise ValidationError(f"need m > a_i = {a_i}, got m = {m}")
    params = {f"p{curve.point_index(k)}": v for k, v in (params or {}).items()}

    divisor = Divisor.of({**weights, i: m})
    elts = _ambient(curve, divisor)
    rows = _jet_rows(curve, elts)
    rhs = [Fraction(0)] * len(rows)

    pc_i = params.get(i)
    per_elt = [_elt_series(curve, elt, i, -m, 1, pc_i) for elt in elts]
    targets = [(-m, Fraction(1))]
    targets += [(e, Fraction(0)) for e in range(-m + 1, -a_i)]
    targets += [(0, Fraction(0))]
    for e, value in targets:
        rows.append([s.coefficient(e) for s in per_elt])
        rhs.append(value)

    solved = linalg.solve_affine(rows, rhs)
    if solved is None:
        raise CohomologyError(
            f"no section with principal part u^-{m} at {i}: h1 obstruction "
            f"(weights {weights})"
        )
    x, kernel = solved
    if kernel:
        raise CohomologyError(
            f"section of order {m} at {i} is not unique: h1({divisor.items}) != 0"
        )
    fn = FunctionOnCurve(curve, elts, x)
    expansions = {}
    for pid in curve.point_ids():
        low = -m if pid == i else -weights.get(pid, 0)
        expansions[pid] = fn.expansion_at(pid, low, tail, params.get(pid))
    return Section(i, m, fn, expansions)


def canonical_parameter(curve: CurveModel, weights: dict, i: str, m_max: int,
                        order: int | None = None) -> ParamChange:
    """Tangent-compatible parameter change at p_i making the coefficient at
    u^-a_i of every f_i[-m], m <= m_max, vanish exactly."""
    validate(curve)
    weights = _normalize_weights(curve, weights)
    i = f"p{curve.point_index(i)}"
    a_i = weights.get(i, 0)
    if order is None:
        order = m_max + 6
    pc = ParamChange.identity(None, "u", order=order)
    for m in range(a_i + 1, m_max + 1):
        sec = f_sections(curve, weights, i, m, params={i: pc}, tail=-a_i + 1)
        alpha = sec.expansions[i].coefficient(-a_i)
        if alpha:
            r = m - a_i + 1
            step = ParamChange(LaurentSeries(None, "u", 1, [1] + [0] * (r - 2) + [alpha / m]))
            pc = pc.compose(step)
    return pc


def alpha_beta(curve: CurveModel, i: str = "p0", j: str = "p1",
               weights: dict | None = None):
    """The coefficients of t_j^-1 in f_i[-g] and f_i[-(g+1)], computed in the
    canonical parameter at p_i.  (alpha != 0) detects h1(g p_i) = 0 and
    ((alpha, beta) != (0,0)) detects h1((g+1) p_i) = 0."""
    validate(curve)
    g = arithmetic_genus(curve)
    i = f"p{curve.point_index(i)}"
    j = f"p{curve.point_index(j)}"
    if weights is None:
        weights = {i: g - 1, j: 1}
    weights = _normalize_weights(curve, weights)
    if weights.get(j, 0) < 1:
        raise ValidationError("the second point must carry weight >= 1")
    pc = canonical_parameter(curve, weights, i, g + 1, order=g + 4)
    sec_g = f_sections(curve, weights, i, g, params={i: pc}, tail=1)
    sec_g1 = f_sections(curve, weights, i, g + 1, params={i: pc}, tail=1)
    return sec_g.alpha(j, -1), sec_g1.alpha(j, -1)


def rescale_tangent(curve: CurveModel, point_id: str, factor) -> CurveModel:
    """The same curve with the tangent scalar at one marked point rescaled."""
    factor = Fraction(factor)
    if factor == 0:
        raise ValidationError("tangent rescale factor must be nonzero")
    idx = curve.point_index(point_id)
    marked = list(curve.marked_points)
    old = marked[idx]
    marked[idx] = type(old)(old.component, old.point, old.tangent * factor, old.weight)
    return type(curve)(curve.components, curve.singularities, tuple(marked))
