import random
from fractions import Fraction

import pytest

from nsc.errors import ValidationError
from nsc.genus2 import (
    G2Params,
    GeneralPresentation,
    RELATION_DEGREES,
    buchberger_verify,
    closed_form_c,
    coefficient_f_ring,
    fit_parameters,
    fit_relations_vanish,
    normalize_presentation,
    parameter_ring,
    presentation_from_series,
    section_series,
    solve_c,
    transform_presentation,
    universal_relations,
)
from nsc.multipoly import poly_reduce
from nsc.zoo import zoo


def symbolic_relations():
    return universal_relations(G2Params.symbolic())


def test_displayed_relations_term_by_term():
    rels = symbolic_relations()
    qr = parameter_ring()
    q1, q20, q21, q30, q31 = qr.gens()
    one = qr.one()
    # exponent tuples are (k, h, f)
    expected1 = {
        (0, 2, 0): one, (1, 0, 1): -one, (0, 1, 0): -q1,
        (0, 0, 0): -2 * q1 * q1, (0, 0, 1): -q20, (0, 0, 2): -q21,
    }
    expected2 = {
        (1, 1, 0): one, (0, 0, 1): -(q30 + q1 * q21), (0, 0, 2): -q31,
        (0, 0, 3): -one, (1, 0, 0): q1, (0, 1, 0): -q20, (0, 1, 1): -q21,
        (0, 0, 0): -q1 * q20,
    }
    expected3 = {
        (2, 0, 0): one, (0, 1, 0): -q30, (0, 1, 1): -q31, (0, 1, 2): -one,
        (0, 0, 0): -(q20 * q20 - 2 * q1 * q30),
        (0, 0, 1): -(2 * q20 * q21 - 2 * q1 * q31),
        (0, 0, 2): -(q21 * q21 - 2 * q1),
    }
    for rel, expected in zip(rels.relations, (expected1, expected2, expected3)):
        assert rel.terms == {e: c for e, c in expected.items() if c}
    # flattened over Q[q1,q20,q21,q30,q31,f,h,k] the supports have 6, 9, 10 monomials
    flat_counts = [sum(len(c.terms) for c in rel.terms.values()) for rel in rels.relations]
    assert flat_counts == [6, 9, 10]


def test_leading_monomials_are_h2_hk_k2():
    assert symbolic_relations().leads_are_h2_hk_k2()


def test_relations_weighted_homogeneous():
    for rel, degree in zip(symbolic_relations().relations, RELATION_DEGREES):
        assert rel.is_homogeneous(degree)


def test_buchberger_symbolic_passes():
    cert = buchberger_verify(symbolic_relations())
    assert cert.ok
    for _, quotients, rem in cert.reductions:
        assert rem.is_zero()
        assert len(quotients) == 3


def test_zero_params_give_monomial_relations():
    rels = universal_relations(G2Params.zero())
    ring = rels.ring
    k, h, f = ring.gens()
    assert rels.relations == (h * h - f * k, h * k - f ** 3, k * k - f * f * h)


def test_buchberger_all_zero_params_passes():
    assert buchberger_verify(universal_relations(G2Params.zero())).ok


def test_buchberger_perturbations_fail():
    for which in range(3):
        rels = universal_relations(G2Params.symbolic())
        perturbed = list(rels.relations)
        perturbed[which] = perturbed[which] + 1  # bump the constant term of c_i
        assert not buchberger_verify(type(rels)(rels.ring, tuple(perturbed))).ok


def test_buchberger_rejects_wrong_leading_monomials():
    rels = symbolic_relations()
    ring = rels.ring
    k, h, f = ring.gens()
    broken = (f ** 3 - h * k, rels.relations[1], rels.relations[2])
    with pytest.raises(ValidationError, match="leading"):
        buchberger_verify(type(rels)(ring, broken))


def test_reduce_remainder_basis_order_independent_on_groebner_basis():
    rels = symbolic_relations()
    ring = rels.ring
    k, h, f = ring.gens()
    probe = k * k * h + f * h * h + k
    baseline = poly_reduce(probe, rels.relations)[1]
    import itertools

    for perm in itertools.permutations(rels.relations):
        assert poly_reduce(probe, list(perm))[1] == baseline


def test_standard_monomial_completeness():
    rels = universal_relations(G2Params.symbolic())
    ring = rels.ring
    k, h, f = ring.gens()
    for a in range(7):
        for b in range(7 - a):
            for c in range(7 - a - b):
                mono = f ** a * h ** b * k ** c
                _, rem = poly_reduce(mono, rels.relations)
                for (ek, eh, ef) in rem.terms:
                    assert (ek, eh) in ((0, 0), (0, 1), (1, 0))


def test_solve_c_symbolic_closed_forms():
    report = solve_c()
    assert report.residuals == ()
    assert report.matches_closed_forms
    assert report.ok


def test_solve_c_numeric_spot_checks():
    # q1 = 1, everything else 0: c1 = 2, c2 = f^3 + ..., c3 = -2 q1 q3
    report = solve_c(G2Params(Fraction(1), Fraction(0), Fraction(0), Fraction(0), Fraction(0)))
    assert report.ok
    ring = coefficient_f_ring()
    f = ring.var("f")
    assert report.closed_forms["c1"] == ring.const(2)
    assert report.closed_forms["c2"] == f ** 3
    assert report.closed_forms["c3"] == -2 * f * f
    report0 = solve_c(G2Params.zero())
    assert report0.ok
    assert report0.closed_forms["c1"].is_zero()
    assert (report0.closed_forms["c2"] - f ** 3).is_zero()
    assert report0.closed_forms["c3"].is_zero()


def test_solve_c_agrees_with_buchberger_on_random_samples():
    rng = random.Random(424242)
    for _ in range(20):
        params = G2Params(*(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(5)))
        assert solve_c(params).ok
        assert buchberger_verify(universal_relations(params)).ok


def random_presentation(rng, base_ring):
    ring = coefficient_f_ring(base_ring)
    f = ring.var("f")

    def rnd():
        return Fraction(rng.randint(-5, 5), rng.randint(1, 3))

    def poly(deg, monic=False):
        coeffs = [rnd() for _ in range(deg + 1)]
        if monic:
            coeffs[-1] = Fraction(1)
        out = ring.zero()
        for i, c in enumerate(coeffs):
            out = out + ring.const(c) * f ** i
        return out

    return GeneralPresentation(
        p1=poly(1, monic=True), p2=poly(1), p3=poly(1),
        q1=poly(1), q2=poly(1), q3=poly(2, monic=True),
        c1=poly(2), c2=poly(3, monic=True), c3=poly(3),
    )


def test_normalize_identity_fixed_point():
    params = G2Params(*(Fraction(x) for x in (1, 2, 3, 4, 5)))
    rels = universal_relations(params)
    ring = coefficient_f_ring()
    f = ring.var("f")
    cf = closed_form_c(params)
    pres = GeneralPresentation(
        p1=f, p2=ring.const(-params.q1), p3=ring.zero(),
        q1=ring.const(params.q1),
        q2=ring.const(params.q20) + ring.const(params.q21) * f,
        q3=ring.const(params.q30) + ring.const(params.q31) * f + f * f,
        c1=cf["c1"], c2=cf["c2"], c3=cf["c3"],
    )
    normalized, (A, B, C, shift) = normalize_presentation(pres)
    assert A.is_zero() and C.is_zero() and B == 0 and shift == 0
    assert normalized == pres
    assert normalized.parameters() == params


def test_normalize_random_presentations_postconditions():
    rng = random.Random(99)
    for _ in range(50):
        pres = random_presentation(rng, None)
        normalized, _ = normalize_presentation(pres)
        assert normalized.is_normalized()


def test_transform_relations_are_unimodular_combinations():
    # hand-derived bookkeeping check: substituting the new generators back
    # into the transformed relations recovers R1, R2 + B R1, R3 + B^2 R1 + 2B R2
    rng = random.Random(5)
    pres = random_presentation(rng, None)
    ring = coefficient_f_ring()
    f1 = ring.var("f")
    A = ring.const(Fraction(2, 3)) + ring.const(Fraction(-1, 2)) * f1
    B = Fraction(3, 4)
    C = ring.const(Fraction(-1)) + ring.const(Fraction(5, 3)) * f1
    shift = Fraction(2, 7)
    new = transform_presentation(pres, A, B, C, shift=shift)

    R = pres.relations()
    N = new.relations()
    rring = R.ring
    k, h, f = rring.gens()

    def lift(p):
        return rring.element({(0, 0, e[0]): c for e, c in p.terms.items()})

    sub = {
        "k": k + B * h + lift(C),
        "h": h + lift(A),
        "f": f + rring.const(shift),
    }
    got = [n.substitute(sub) for n in N.relations]
    r1, r2, r3 = R.relations
    assert got[0] == r1
    assert got[1] == r2 + B * r1
    assert got[2] == r3 + B * B * r1 + 2 * B * r2


def test_normalize_round_trip_recovers_parameters():
    rng = random.Random(31337)
    params = G2Params(*(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(5)))
    ring = coefficient_f_ring()
    f = ring.var("f")
    cf = closed_form_c(params)
    pres = GeneralPresentation(
        p1=f, p2=ring.const(-params.q1), p3=ring.zero(),
        q1=ring.const(params.q1),
        q2=ring.const(params.q20) + ring.const(params.q21) * f,
        q3=ring.const(params.q30) + ring.const(params.q31) * f + f * f,
        c1=cf["c1"], c2=cf["c2"], c3=cf["c3"],
    )
    for _ in range(10):
        A = ring.const(Fraction(rng.randint(-3, 3))) + ring.const(Fraction(rng.randint(-3, 3))) * f
        B = Fraction(rng.randint(-3, 3))
        C = ring.const(Fraction(rng.randint(-3, 3))) + ring.const(Fraction(rng.randint(-3, 3))) * f
        shift = Fraction(rng.randint(-3, 3))
        scrambled = transform_presentation(pres, A, B, C, shift=shift)
        normalized, _ = normalize_presentation(scrambled)
        assert normalized.parameters() == params


def test_fit_deep_cusp_is_origin():
    cur = zoo("ccusp2")
    params = fit_parameters(cur, "p0")
    assert params == G2Params.zero()
    assert fit_relations_vanish(cur, "p0")


def test_fit_two_node_curve_generic_point():
    cur = zoo("Ia")
    params = fit_parameters(cur, "p0")
    assert params.is_numeric()
    assert buchberger_verify(universal_relations(params)).ok
    assert fit_relations_vanish(cur, "p0")
    assert any(v != 0 for v in params.astuple())


def test_fit_every_zoo_case_at_generic_point():
    from nsc.zoo import ZOO_IDS

    for case in ZOO_IDS:
        params = fit_parameters(zoo(case), "p0")
        assert buchberger_verify(universal_relations(params)).ok, case
        assert fit_relations_vanish(zoo(case), "p0"), case


def test_fit_rejects_weierstrass_point():
    from nsc.errors import CohomologyError

    cur = zoo("IIc-C0")  # p1 at infinity is the special point
    with pytest.raises(CohomologyError):
        fit_parameters(cur, "p1")


def test_fit_equivariance_under_tangent_rescale():
    cur = zoo("Ia")
    base = fit_parameters(cur, "p0")
    for c in (Fraction(2), Fraction(-1, 2)):
        scaled = fit_parameters(cur, "p0", tangent=c)
        assert scaled.q21 == c ** 2 * base.q21
        assert scaled.q31 == c ** 3 * base.q31
        assert scaled.q1 == c ** 4 * base.q1
        assert scaled.q20 == c ** 5 * base.q20
        assert scaled.q30 == c ** 6 * base.q30


def test_fit_gauge_independence():
    cur = zoo("Ib")
    pid = "p0"
    sf, sh, sk = section_series(cur, pid)
    baseline = normalize_presentation(presentation_from_series(sf, sh, sk))[0].parameters()
    one = type(sf).monomial(None, sf.var, 0, 1, cut=sf.cut)
    # allowed ambiguity: f += const, h += a + b f, k += d h + e0 + e1 f
    sf2 = sf + one.scale(Fraction(3, 2))
    sh2 = sh + one.scale(Fraction(-2)) + sf2.scale(Fraction(1, 3))
    sk2 = sk + sh2.scale(Fraction(5)) + one.scale(Fraction(7)) + sf2.scale(Fraction(-1, 4))
    other = normalize_presentation(presentation_from_series(sf2, sh2, sk2))[0].parameters()
    assert other == baseline


def test_presentation_rejects_bad_shapes():
    ring = coefficient_f_ring()
    f = ring.var("f")
    with pytest.raises(ValidationError):
        GeneralPresentation(
            p1=2 * f, p2=ring.zero(), p3=ring.zero(), q1=ring.zero(),
            q2=ring.zero(), q3=f * f, c1=ring.zero(), c2=f ** 3, c3=ring.zero(),
        )
