from fractions import Fraction

import pytest

from nsc.curves import INF, arithmetic_genus, delta_invariant, validate
from nsc.errors import ValidationError
from nsc.zoo import ZOO_IDS, zoo


def test_zoo_ids_are_eight():
    assert len(ZOO_IDS) == 8


def test_all_cases_validate_and_have_genus_two():
    for case in ZOO_IDS:
        cur = zoo(case)
        validate(cur)
        assert arithmetic_genus(cur) == 2


def test_singularity_budgets():
    deltas = {
        "Ia": [1, 1],
        "Ib": [1, 1],
        "Ic": [1, 1],
        "IIa": [2],
        "IIb-tacnode": [2],
        "IIb-cusp-node": [2],
        "IIc-ccusp2": [2],
        "IIc-C0": [2],
    }
    for case, expected in deltas.items():
        cur = zoo(case)
        assert sorted(delta_invariant(cur, s) for s in cur.singularities) == sorted(expected)


def test_branch_counts():
    assert len(zoo("IIa").singularities[0].branches) == 3
    assert len(zoo("IIb-tacnode").singularities[0].branches) == 2
    assert len(zoo("IIc-C0").singularities[0].branches) == 1


def test_cusp_family():
    for a in (1, 4, 8):
        cur = zoo(f"ccusp{a}")
        assert arithmetic_genus(cur) == a
        assert cur.marked_points[0].point is INF
        assert cur.marked_points[0].weight == a


def test_c0_default_markings():
    cur = zoo("IIc-C0")
    assert cur.marked_points[0].point == Fraction(1)
    assert cur.marked_points[1].point is INF
    assert cur.point_index("pinf") == 1


def test_unknown_case_rejected():
    with pytest.raises(ValidationError):
        zoo("IIz")
    with pytest.raises(ValidationError):
        zoo("ccusp0")
