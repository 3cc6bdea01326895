from fractions import Fraction

from nsc.deskcheck import contraction_point_report, pinched_curve_alpha_table


def test_report_passes_with_single_scale():
    rep = contraction_point_report()
    assert rep.passed
    assert rep.scale == Fraction(-1, 2)
    assert len(rep.matched) == 12
    assert all(row["match"] for row in rep.matched)


def test_exponent_zero_column_is_the_normalized_coordinate():
    rep = contraction_point_report()
    assert len(rep.discrepancies) == 4
    for row in rep.discrepancies:
        assert row["exponent"] == 0
        assert row["alpha"] == "0"
        assert row["s"] != "0"
        assert "note" in row


def test_alpha_table_stable_under_deeper_canonical_parameter():
    # the canonical parameter must reach depth m + q + 2; anything deeper
    # cannot change the reported entries
    base = pinched_curve_alpha_table(m_max=5, q_max=1)
    deep = pinched_curve_alpha_table(m_max=6, q_max=2)
    for key, value in base.items():
        assert deep[key] == value


def test_report_is_json_ready():
    import json

    doc = contraction_point_report().to_jsonable()
    json.dumps(doc)
    assert doc["status"] == "pass"
    assert doc["scale_c"] == "-1/2"
