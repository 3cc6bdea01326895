"""Leading-polar-term recursion for the canonical parameter at a moving point.

The model works over Q[lam] with lam a graded indeterminate of weight 1.  The
inputs are the filtration representatives

    F[-(g+1)] = t^-(g+1) - lam * t^-g,      F[-m] = t^-m   (m >= g+2),

and the recursion alternates two moves: a tangent-preserving parameter
correction u_{n-1} = u_n + (c/(g+n-1)) u_n^n killing the u^-g coefficient of
the previously built series, and a subtraction of earlier normal forms killing
every exponent strictly between -(g+n) and -g.  The output normal forms have
the shape u^-m + sum_j s_{m,j} lam^(m-g+j) u^(-g+j); the rational constants
s_{m,j} are the coefficient table.

A table entry for (m, j) only becomes final once the recursion has run past
stage m-g+j+1 (later corrections first disturb exponent -m+n-1), so the
recursion internally runs (m_max-g) + j_max + 1 stages and reports exactly the
stable window.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInconsistencyError, ValidationError
from .laurent import LaurentSeries, ParamChange, series_substitute
from .multipoly import MultiPoly, PolyRing
from .rational import format_rational

LAMBDA = "lam"


def lambda_ring() -> PolyRing:
    return PolyRing((LAMBDA,), (1,))


def filtration_representative(g: int, m: int, ring: PolyRing | None = None) -> LaurentSeries:
    """The leading-polar-term input F[-m]: t^-(g+1) - lam t^-g at m = g+1,
    the bare monomial t^-m for every m >= g+2."""
    ring = ring or lambda_ring()
    if m == g + 1:
        return LaurentSeries(ring, "u", -m, [1, -ring.var(LAMBDA)])
    return LaurentSeries.monomial(ring, "u", -m)


def _monomial_value(c: MultiPoly, degree: int) -> Fraction:
    """The rational r with c = r * lam^degree; rejects anything else."""
    if c.is_zero():
        return Fraction(0)
    if set(c.terms) != {(degree,)}:
        raise InternalInconsistencyError(
            f"expected a pure lam^{degree} monomial, got {c}"
        )
    return Fraction(c.terms[(degree,)])


def _check_lambda_homogeneous(series: LaurentSeries, m: int) -> None:
    """Coefficient of u^e in the working series for f[-m] has lam-degree m+e."""
    for e, c in series.known_items():
        if c and not c.is_homogeneous(m + e):
            raise InternalInconsistencyError(
                f"lam-homogeneity violated in f[-{m}] at exponent {e}: {c}"
            )


@dataclass(frozen=True)
class StageRecord:
    """One recursion stage: the read pole coefficient, the correction, the
    subtraction multipliers (all elements of Q[lam])."""

    n: int
    pole_coefficient: MultiPoly | None  # c read at u^-g before correcting
    correction: MultiPoly | None        # c/(g+n-1), coefficient of u_n^n
    multipliers: tuple  # p_1 .. p_{n-1} used to build f[-(g+n)]


@dataclass(frozen=True)
class STable:
    """Map (m, j) -> s_{m,j}: the rational with coefficient-of-u^(-g+j) in
    f[-m] equal to s_{m,j} * lam^(m-g+j)."""

    genus: int
    entries: dict

    def value(self, m: int, j: int) -> Fraction:
        return self.entries[(m, j)]

    def to_jsonable(self) -> dict:
        return {
            "genus": self.genus,
            "entries": [
                {"m": m, "j": j, "value": format_rational(v)}
                for (m, j), v in sorted(self.entries.items())
            ],
        }


@dataclass(frozen=True)
class NormalFormResult:
    genus: int
    m_max: int
    j_max: int
    param_change: ParamChange                # t1 in terms of the final parameter
    corrections: tuple                       # per-step changes u_{n-1} = phi_n(u_n)
    normal_forms: dict                       # m -> LaurentSeries in the final parameter
    s_table: STable
    stages: tuple                            # StageRecord per stage


def run_recursion(g: int, m_max: int | None = None, j_max: int = 6) -> NormalFormResult:
    """Run the recursion for genus g, reporting f[-m] for m <= m_max and the
    s_{m,j} table for 1 <= j <= j_max.  Exact and deterministic."""
    if not (isinstance(g, int) and g >= 2):
        raise ValidationError("genus must be an integer >= 2")
    if m_max is None:
        m_max = g + 6
    if not (isinstance(m_max, int) and m_max >= g + 1):
        raise ValidationError("m_max must be an integer >= g+1")
    if not (isinstance(j_max, int) and j_max >= 0):
        raise ValidationError("j_max must be an integer >= 0")

    ring = lambda_ring()
    cut = -g + j_max + 1
    stages_total = (m_max - g) + j_max + 1

    def tilde(m: int) -> LaurentSeries:
        return filtration_representative(g, m, ring)

    total = ParamChange.identity(ring, "u", order=stages_total + j_max + 2)
    current = {g + 1: tilde(g + 1).with_cut(cut)}
    corrections = []
    stages = [StageRecord(1, None, None, ())]
    _check_lambda_homogeneous(current[g + 1], g + 1)

    for n in range(2, stages_total + 1):
        c = current[g + n - 1].coefficient(-g)
        eps = c / (g + n - 1)
        phi = ParamChange(LaurentSeries(ring, "u", 1, [1] + [0] * (n - 2) + [eps]))
        total = total.compose(phi)
        for m in list(current):
            current[m] = series_substitute(current[m], phi)
        if current[g + n - 1].coefficient(-g):
            raise InternalInconsistencyError(
                f"stage {n}: correction failed to kill the u^-{g} coefficient"
            )
        work = series_substitute(tilde(g + n), total, cut=cut)
        multipliers = []
        for i in range(1, n):
            p_i = work.coefficient(-g - n + i)
            multipliers.append(p_i)
            if p_i:
                work = work - current[g + n - i].scale(p_i)
        for e in range(-g - n + 1, -g):
            if work.coefficient(e):
                raise InternalInconsistencyError(
                    f"stage {n}: exponent {e} not cleared in f[-{g + n}]"
                )
        current[g + n] = work
        for m, s in current.items():
            _check_lambda_homogeneous(s, m)
        corrections.append(phi)
        stages.append(StageRecord(n, c, eps, tuple(multipliers)))

    entries = {}
    for m in range(g + 1, m_max + 1):
        for j in range(1, j_max + 1):
            entries[(m, j)] = _monomial_value(current[m].coefficient(-g + j), m - g + j)

    normal_forms = {m: current[m] for m in range(g + 1, m_max + 1)}
    return NormalFormResult(
        genus=g,
        m_max=m_max,
        j_max=j_max,
        param_change=ParamChange(total.series.truncate(stages_total + 1)),
        corrections=tuple(corrections),
        normal_forms=normal_forms,
        s_table=STable(g, entries),
        stages=tuple(stages),
    )


def closed_form_s1(g: int) -> Fraction:
    return Fraction(-(2 * g + 1), 2 * (g + 1))


def closed_form_s2(g: int) -> Fraction:
    return Fraction(4 * g + 2, 3 * (g + 1) ** 2)


@dataclass(frozen=True)
class ClosedFormReport:
    genus: int
    computed_s1: Fraction
    computed_s2: Fraction
    expected_s1: Fraction
    expected_s2: Fraction

    @property
    def passed(self) -> bool:
        return self.computed_s1 == self.expected_s1 and self.computed_s2 == self.expected_s2

    def to_jsonable(self) -> dict:
        return {
            "genus": self.genus,
            "computed": {"s_g+1_1": format_rational(self.computed_s1),
                         "s_g+1_2": format_rational(self.computed_s2)},
            "expected": {"s_g+1_1": format_rational(self.expected_s1),
                         "s_g+1_2": format_rational(self.expected_s2)},
            "status": "pass" if self.passed else "fail",
        }


def closed_form_check(g: int) -> ClosedFormReport:
    """Compare s_{g+1,1} and s_{g+1,2} against their closed forms, exactly."""
    result = run_recursion(g, g + 3, 2)
    return ClosedFormReport(
        genus=g,
        computed_s1=result.s_table.value(g + 1, 1),
        computed_s2=result.s_table.value(g + 1, 2),
        expected_s1=closed_form_s1(g),
        expected_s2=closed_form_s2(g),
    )


@dataclass(frozen=True)
class MonomialCheckReport:
    genus: int
    failures: tuple
    stage_multiplier_counts: dict

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_jsonable(self) -> dict:
        return {
            "genus": self.genus,
            "status": "pass" if self.passed else "fail",
            "failures": list(self.failures),
            "multiplier_counts": {str(n): c for n, c in sorted(self.stage_multiplier_counts.items())},
        }


def correction_monomial_check(result: NormalFormResult) -> MonomialCheckReport:
    """Every correction coefficient at stage n must be a pure r*lam^(n-1)
    monomial and every subtraction multiplier p_i a pure lam^i monomial."""
    failures = []
    counts = {}
    for rec in result.stages:
        if rec.n == 1:
            continue
        counts[rec.n] = len(rec.multipliers)
        if len(rec.multipliers) != rec.n - 1:
            failures.append(f"stage {rec.n}: expected {rec.n - 1} multipliers, got {len(rec.multipliers)}")
        try:
            _monomial_value(rec.correction, rec.n - 1)
        except InternalInconsistencyError:
            failures.append(f"stage {rec.n}: correction {rec.correction} is not a pure lam^{rec.n - 1} monomial")
        for i, p in enumerate(rec.multipliers, start=1):
            try:
                _monomial_value(p, i)
            except InternalInconsistencyError:
                failures.append(f"stage {rec.n}: multiplier p_{i} = {p} is not a pure lam^{i} monomial")
    return MonomialCheckReport(result.genus, tuple(failures), counts)
