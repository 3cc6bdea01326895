"""Singular curves with rational normalization, modelled at the jet level.

A curve is a union of projective lines glued along singular points.  Each
singular point is given by its branches (points of the normalization), a jet
order k, a conductor c with c <= k, and a basis of the local algebra's image
in the product jet space prod_branches Q[s]/(s^k).  Because the span contains
everything vanishing to order >= c on all branches, it determines the local
ring exactly, and delta invariants, arithmetic genus and section spaces of
divisors supported on marked smooth points all become finite exact linear
algebra over Q.

Global functions are tuples of rational functions, one per component, with
poles confined to the marked points; they are represented on the partial
fraction basis {1} + {(t-a)^-j} + {t^j at infinity}.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import InternalInconsistencyError, ValidationError
from .laurent import LaurentSeries, ParamChange, series_substitute
from .rational import format_rational


class Infinity:
    """The point at infinity on a projective line (singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __hash__(self):
        return hash("nsc-point-at-infinity")

    def __eq__(self, other):
        return isinstance(other, Infinity)


INF = Infinity()


def format_point(p) -> str:
    return "inf" if isinstance(p, Infinity) else format_rational(p)


@dataclass(frozen=True)
class Branch:
    component: str
    point: object  # Fraction or INF


@dataclass(frozen=True)
class SingularPoint:
    branches: tuple
    jet_order: int
    conductor: int
    algebra_basis: tuple  # tuples of Fractions, length len(branches)*jet_order


@dataclass(frozen=True)
class MarkedPoint:
    component: str
    point: object
    tangent: Fraction = Fraction(1)
    weight: int | None = None


@dataclass(frozen=True)
class CurveModel:
    components: tuple
    singularities: tuple
    marked_points: tuple

    def point_id(self, index: int) -> str:
        return f"p{index}"

    def point_ids(self):
        return [f"p{i}" for i in range(len(self.marked_points))]

    def marked(self, point_id: str) -> MarkedPoint:
        return self.marked_points[self.point_index(point_id)]

    def point_index(self, point_id: str) -> int:
        if point_id == "pinf":
            hits = [i for i, p in enumerate(self.marked_points) if isinstance(p.point, Infinity)]
            if len(hits) != 1:
                raise ValidationError("no unique marked point at infinity for id 'pinf'")
            return hits[0]
        if point_id.startswith("p") and point_id[1:].isdigit():
            i = int(point_id[1:])
            if i < len(self.marked_points):
                return i
        raise ValidationError(f"unknown marked point id {point_id!r}")


@dataclass(frozen=True)
class Divisor:
    """Integer multiplicities on marked points; negative = prescribed zero."""

    items: tuple  # sorted tuple of (point_id, multiplicity), zeros dropped

    @classmethod
    def of(cls, mapping) -> "Divisor":
        return cls(tuple(sorted((pid, int(n)) for pid, n in mapping.items() if int(n) != 0)))

    def multiplicity(self, point_id: str) -> int:
        return dict(self.items).get(point_id, 0)

    def degree(self) -> int:
        return sum(n for _, n in self.items)

    def mapping(self) -> dict:
        return dict(self.items)

    def __le__(self, other: "Divisor") -> bool:
        ids = {pid for pid, _ in self.items} | {pid for pid, _ in other.items}
        return all(self.multiplicity(i) <= other.multiplicity(i) for i in ids)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _span_info(sing: SingularPoint):
    """(rref rows, pivots, annihilator functionals) of the algebra span.

    A functional is a vector phi with phi . v = 0 for every v in the span;
    the jet of a candidate section lies in the span iff all functionals kill
    it, so these are exactly the linear conditions cut out by the singularity.
    """
    width = len(sing.branches) * sing.jet_order
    rows = [list(map(Fraction, v)) for v in sing.algebra_basis]
    red, pivots = linalg.rref(rows)
    functionals = linalg.nullspace(rows, ncols=width)
    return red, pivots, functionals


def _span_contains(sing: SingularPoint, vector) -> bool:
    red, pivots, _ = _span_info(sing)
    return linalg.in_row_space(red, pivots, vector)


def _jet_slot(sing: SingularPoint, branch_index: int, degree: int) -> int:
    return branch_index * sing.jet_order + degree


def _truncated_branch_product(sing, u, v, branch_index):
    k = sing.jet_order
    base = branch_index * k
    out = [Fraction(0)] * k
    for i in range(k):
        a = u[base + i]
        if not a:
            continue
        for j in range(k - i):
            b = v[base + j]
            if b:
                out[i + j] += a * b
    return out


def validate(curve: CurveModel) -> CurveModel:
    """Check every model invariant; returns the curve or raises ValidationError."""
    _validate_cached(curve)
    return curve


@functools.lru_cache(maxsize=None)
def _validate_cached(curve: CurveModel) -> bool:
    if not curve.components:
        raise ValidationError("curve has no components")
    if len(set(curve.components)) != len(curve.components):
        raise ValidationError("duplicate component labels")

    branch_points = set()
    for sing in curve.singularities:
        if not sing.branches:
            raise ValidationError("singularity with no branches")
        if sing.conductor < 1:
            raise ValidationError("conductor must be >= 1")
        # k >= c is the sound minimum: jets of order >= c are free, so the span
        # determines the local ring; the delta-stability checks at deeper jet
        # orders guard against under-truncated inputs.
        if sing.jet_order < max(sing.conductor, 2):
            raise ValidationError(
                f"jet order {sing.jet_order} too small for conductor {sing.conductor}"
            )
        for br in sing.branches:
            if br.component not in curve.components:
                raise ValidationError(f"branch on undeclared component {br.component!r}")
            key = (br.component, br.point)
            if key in branch_points:
                raise ValidationError(f"branch point {format_point(br.point)} on {br.component} reused")
            branch_points.add(key)
        width = len(sing.branches) * sing.jet_order
        for v in sing.algebra_basis:
            if len(v) != width:
                raise ValidationError("algebra basis vector has wrong length")

        ones = [Fraction(0)] * width
        for b in range(len(sing.branches)):
            ones[_jet_slot(sing, b, 0)] = Fraction(1)
        if not _span_contains(sing, ones):
            raise ValidationError("missing constants: the all-ones jet is not in the span")

        for b in range(len(sing.branches)):
            for d in range(sing.conductor, sing.jet_order):
                unit = [Fraction(0)] * width
                unit[_jet_slot(sing, b, d)] = Fraction(1)
                if not _span_contains(sing, unit):
                    raise ValidationError(
                        f"conductor violation: jet s^{d} on branch {b} is not in the span"
                    )

        basis = [list(map(Fraction, v)) for v in sing.algebra_basis]
        for i, u in enumerate(basis):
            for v in basis[i:]:
                prod = []
                for b in range(len(sing.branches)):
                    prod.extend(_truncated_branch_product(sing, u, v, b))
                if not _span_contains(sing, prod):
                    raise ValidationError(
                        "non-subalgebra span: a product of basis jets leaves the span"
                    )

        # the singularity must glue all its branches into one point: the only
        # branchwise-constant jets in the span are the global constants
        if _constant_block_dimension(sing) != 1:
            raise ValidationError("singularity does not glue its branches into one point")

    seen_marked = set()
    for mp in curve.marked_points:
        if mp.component not in curve.components:
            raise ValidationError(f"marked point on undeclared component {mp.component!r}")
        if mp.tangent == 0:
            raise ValidationError("tangent scalar must be nonzero")
        if mp.weight is not None and (not isinstance(mp.weight, int) or mp.weight < 0):
            raise ValidationError("marked point weight must be a nonnegative integer")
        key = (mp.component, mp.point)
        if key in seen_marked:
            raise ValidationError("marked points must be distinct")
        if key in branch_points:
            raise ValidationError(
                f"marked point at {format_point(mp.point)} on {mp.component} coincides with a singular branch point"
            )
        seen_marked.add(key)

    # connectivity of the component graph, singularities joining their branches
    if len(curve.components) > 1:
        parent = {c: c for c in curve.components}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for sing in curve.singularities:
            comps = [br.component for br in sing.branches]
            for c in comps[1:]:
                parent[find(c)] = find(comps[0])
        roots = {find(c) for c in curve.components}
        if len(roots) != 1:
            raise ValidationError("disconnected curve")
    return True


def _constant_block_dimension(sing: SingularPoint) -> int:
    """Dimension of {c in Q^B : the branchwise-constant jet c lies in the span}.

    Dimension 1 means the local algebra has no nontrivial idempotents, i.e.
    the branches really are glued into a single point.
    """
    B = len(sing.branches)
    _, _, functionals = _span_info(sing)
    cond = [[phi[_jet_slot(sing, b, 0)] for b in range(B)] for phi in functionals]
    if not cond:
        return B
    return len(linalg.nullspace(cond, ncols=B))


# ---------------------------------------------------------------------------
# delta invariant and genus
# ---------------------------------------------------------------------------

def delta_invariant(curve: CurveModel, sing: SingularPoint, jet_order: int | None = None) -> int:
    """(#branches * k) - dim(span), optionally recomputed at a deeper jet order
    (the span extends by zero-padding plus the conductor tail)."""
    if sing not in curve.singularities:
        raise ValidationError("singularity does not belong to this curve")
    k0, B = sing.jet_order, len(sing.branches)
    k = jet_order if jet_order is not None else k0
    if k < k0:
        raise ValidationError("cannot shrink the jet order below the model's")
    width = B * k
    rows = []
    for v in sing.algebra_basis:
        padded = []
        for b in range(B):
            seg = list(v[b * k0:(b + 1) * k0])
            padded.extend(seg + [Fraction(0)] * (k - k0))
        rows.append(padded)
    for b in range(B):
        for d in range(k0, k):
            unit = [Fraction(0)] * width
            unit[b * k + d] = Fraction(1)
            rows.append(unit)
    return width - linalg.rank(rows)


def arithmetic_genus(curve: CurveModel) -> int:
    """Sum of delta invariants minus (#components - 1); components are rational."""
    total = sum(delta_invariant(curve, s) for s in curve.singularities)
    return total - (len(curve.components) - 1)


# ---------------------------------------------------------------------------
# expansions of ambient basis functions
# ---------------------------------------------------------------------------
# An ambient element is ("const", component) or ("pole", component, point, j):
# the function 1 resp. (t-point)^-j (t^j when point is INF), supported on one
# component and zero on the others.

def _binom_neg(j: int, i: int) -> Fraction:
    # binomial(-j, i) = (-1)^i * C(j+i-1, i)
    out = Fraction(1)
    for r in range(i):
        out *= Fraction(j + r, r + 1)
    return out if i % 2 == 0 else -out


@functools.lru_cache(maxsize=None)
def _elt_expansion(elt, component, point, low: int, high: int) -> tuple:
    """Coefficients of the element's expansion at (component, point) in the
    standard parameter s (= t - point, or 1/t at infinity), exponents [low, high)."""
    kind = elt[0]
    coeffs = {e: Fraction(0) for e in range(low, high)}
    if elt[1] != component:
        return tuple(coeffs[e] for e in range(low, high))
    if kind == "const":
        if low <= 0 < high:
            coeffs[0] = Fraction(1)
    else:
        _, _, t0, j = elt
        at_inf = isinstance(point, Infinity)
        pole_at_inf = isinstance(t0, Infinity)
        if not at_inf and not pole_at_inf and t0 == point:
            if low <= -j < high:
                coeffs[-j] = Fraction(1)
        elif at_inf and pole_at_inf:
            if low <= -j < high:
                coeffs[-j] = Fraction(1)
        elif at_inf:
            # (t - t0)^-j = s^j (1 - t0 s)^-j
            for i in range(max(0, low - j), high - j):
                coeffs[j + i] = _binom_neg(j, i) * (-t0) ** i
        elif pole_at_inf:
            # t^j = (point + s)^j
            for i in range(max(0, low), min(j, high - 1) + 1):
                c = Fraction(1)
                for r in range(i):
                    c *= Fraction(j - r, r + 1)
                coeffs[i] = c * point ** (j - i)
        else:
            # (t - t0)^-j around s = t - point:  ((point - t0) + s)^-j
            base = point - t0
            for i in range(max(0, low), high):
                coeffs[i] = _binom_neg(j, i) * base ** (-j - i)
    return tuple(coeffs[e] for e in range(low, high))


def _ambient(curve: CurveModel, divisor: Divisor):
    elts = [("const", c) for c in curve.components]
    for idx, mp in enumerate(curve.marked_points):
        n = divisor.multiplicity(curve.point_id(idx))
        for j in range(1, max(0, n) + 1):
            elts.append(("pole", mp.component, mp.point, j))
    return elts


def _jet_rows(curve: CurveModel, elts):
    """One row per independent jet condition at each singularity."""
    rows = []
    for sing in curve.singularities:
        k = sing.jet_order
        _, _, functionals = _span_info(sing)
        jets = []
        for elt in elts:
            jet = []
            for br in sing.branches:
                jet.extend(_elt_expansion(elt, br.component, br.point, 0, k))
            jets.append(jet)
        for phi in functionals:
            rows.append([sum(p * j for p, j in zip(phi, jet)) for jet in jets])
    return rows


def _vanishing_rows(curve: CurveModel, divisor: Divisor, elts):
    rows = []
    for idx, mp in enumerate(curve.marked_points):
        n = divisor.multiplicity(curve.point_id(idx))
        if n < 0:
            for d in range(-n):
                rows.append([_elt_expansion(elt, mp.component, mp.point, d, d + 1)[0] for elt in elts])
    return rows


class FunctionOnCurve:
    """A global section: coordinates over the partial-fraction ambient basis."""

    __slots__ = ("curve", "elts", "coords")

    def __init__(self, curve, elts, coords):
        self.curve = curve
        self.elts = list(elts)
        self.coords = [Fraction(c) for c in coords]

    def expansion_at(self, point_id: str, low: int, high: int,
                     param_change: ParamChange | None = None, tangent_scaled: bool = True) -> LaurentSeries:
        """Laurent expansion at a marked point, in the tangent-rescaled
        parameter u = s/v, optionally followed by a parameter change u = pc(w)."""
        mp = self.curve.marked(point_id)
        raw_low = low
        coeffs = [Fraction(0)] * (high - raw_low)
        for x, elt in zip(self.coords, self.elts):
            if not x:
                continue
            for i, c in enumerate(_elt_expansion(elt, mp.component, mp.point, raw_low, high)):
                coeffs[i] += x * c
        if tangent_scaled:
            v = mp.tangent
            coeffs = [c * v ** (raw_low + i) for i, c in enumerate(coeffs)]
        series = LaurentSeries(None, "u", raw_low, coeffs, cut=high)
        if param_change is not None:
            series = series_substitute(series, param_change)
        return series

    def component_terms(self, component: str):
        """(constant, [(point, order, coeff), ...]) for one component."""
        const = Fraction(0)
        poles = []
        for x, elt in zip(self.coords, self.elts):
            if not x or elt[1] != component:
                continue
            if elt[0] == "const":
                const += x
            else:
                poles.append((elt[2], elt[3], x))
        return const, poles

    def to_jsonable(self):
        out = []
        for comp in self.curve.components:
            const, poles = self.component_terms(comp)
            out.append({
                "component": comp,
                "constant": format_rational(const),
                "poles": [
                    {"point": format_point(p), "order": j, "coeff": format_rational(c)}
                    for p, j, c in poles
                ],
            })
        return out

    def __str__(self):
        parts = []
        for comp in self.curve.components:
            const, poles = self.component_terms(comp)
            terms = []
            if const or not poles:
                terms.append(format_rational(const))
            for p, j, c in poles:
                if isinstance(p, Infinity):
                    mono = "t" if j == 1 else f"t^{j}"
                else:
                    denom = f"(t - {format_rational(p)})" if p else "t"
                    mono = f"1/{denom}" if j == 1 else f"1/{denom}^{j}"
                terms.append(mono if c == 1 else f"{format_rational(c)}*{mono}")
            parts.append(f"{comp}: " + " + ".join(terms))
        return "; ".join(parts)


@dataclass(frozen=True)
class H0Result:
    dimension: int
    basis: tuple  # FunctionOnCurve

    def __iter__(self):
        return iter(self.basis)


def _canonical_divisor(curve: CurveModel, divisor: Divisor) -> Divisor:
    """Resolve id aliases (e.g. "pinf") to the canonical p<i> keys, merging."""
    mapping: dict = {}
    for pid, n in divisor.items:
        key = f"p{curve.point_index(pid)}"
        mapping[key] = mapping.get(key, 0) + n
    return Divisor.of(mapping)


def _check_divisor(curve: CurveModel, divisor: Divisor) -> None:
    for pid, _ in divisor.items:
        mp = curve.marked(pid)
        for sing in curve.singularities:
            for br in sing.branches:
                if br.component == mp.component and br.point == mp.point:
                    raise ValidationError("divisor touches a singular branch point")


def h0(curve: CurveModel, divisor: Divisor) -> H0Result:
    """Dimension and explicit basis of the sections of O(divisor)."""
    validate(curve)
    divisor = _canonical_divisor(curve, divisor)
    _check_divisor(curve, divisor)
    elts = _ambient(curve, divisor)
    rows = _jet_rows(curve, elts) + _vanishing_rows(curve, divisor, elts)
    kernel = linalg.nullspace(rows, ncols=len(elts))
    kernel, _ = linalg.rref(kernel) if kernel else ([], [])
    return H0Result(len(kernel), tuple(FunctionOnCurve(curve, elts, v) for v in kernel))


def h1(curve: CurveModel, divisor: Divisor) -> int:
    """Defined through Riemann-Roch: h1 = h0 - deg - 1 + arithmetic genus."""
    value = h0(curve, divisor).dimension - divisor.degree() - 1 + arithmetic_genus(curve)
    if value < 0:
        raise InternalInconsistencyError(
            f"negative h1 = {value} for divisor {divisor.items}: bug in the solver"
        )
    return value


def h1_corank(curve: CurveModel, divisor: Divisor) -> int:
    """Independent oracle: corank of the full constraint matrix (jet conditions
    plus prescribed-zero conditions) on the ambient pole space."""
    validate(curve)
    divisor = _canonical_divisor(curve, divisor)
    _check_divisor(curve, divisor)
    elts = _ambient(curve, divisor)
    rows = _jet_rows(curve, elts) + _vanishing_rows(curve, divisor, elts)
    if not rows:
        return 0
    return len(rows) - linalg.rank(rows)


def nonspecial_check(curve: CurveModel, weights: dict) -> bool:
    """True iff h1(sum a_i p_i) = 0; the weights must sum to the genus."""
    g = arithmetic_genus(curve)
    total = sum(weights.values())
    if total != g:
        raise ValidationError(f"weights sum to {total}, genus is {g}")
    if any(a < 0 for a in weights.values()):
        raise ValidationError("weights must be nonnegative")
    return h1(curve, Divisor.of(weights)) == 0
