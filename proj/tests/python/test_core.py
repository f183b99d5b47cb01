from fractions import Fraction

import pytest

quartica = pytest.importorskip("quartica")


def test_labels_include_the_curve_and_quotients():
    labels = quartica.catalog_labels()
    for label in ("C", "C12", "C123", "C1234"):
        assert label in labels


def test_counts():
    assert quartica.count("C", 5) == 6
    assert quartica.count("C", 11) == 0
    assert quartica.count("C", 71) == 132
    assert quartica.count("C", 5, m=2, workers=2) == 54


def test_lpoly_schema_and_values():
    d = quartica.lpoly("C123", 31)
    assert d == {"curve": "C123", "p": 31, "genus": 2, "L": [1, 8, 78, 248, 961]}
    big = quartica.lpoly("C", 71)
    assert big["genus"] == 4 and len(big["L"]) == 9
    assert big["L"][-1] == 71**4
    assert 71 + 1 + big["L"][1] == quartica.count("C", 71)


def test_table_rows():
    assert quartica.points_row(5) == (5, -10, 6, 22)
    row = quartica.lpoly_row(31)
    assert row["C123_factors"] is not None
    assert row["p_rank"] >= 0


def test_invariants_and_quotients():
    assert quartica.quotient_ideal("(1,2)") == ["a^3 - 3*a*c + 2*b*c + 2*b - 2", "b^2 + c + 1"]
    assert quartica.molien("(1,2,3)", 3, 4) == [1, 1, 2, 4, 5]
    assert quartica.groebner(["x^2+y^2-1", "x-y"], ["x", "y"]) == ["x - y", "y^2 - 1/2"]


def test_exact_invariants():
    assert quartica.j_invariant("C12") == -36
    (i2, i4, i6, i10), (a1, a2, a3) = quartica.igusa()
    assert (i2, i4, i6, i10) == (-138240, 234150912, -448888946688, -12999674453557248)
    assert a1 == Fraction(2823, 1600)
    assert a2 == Fraction(2597331, 128000)
    assert a3 == Fraction(6561, 52428800000)


def test_verify_suite_reports_checks():
    results = quartica.verify("genus")
    assert results and all(r["passed"] for r in results)
    assert all(r["suite"] == "genus" for r in results)
    with pytest.raises(ValueError):
        quartica.verify("no-such-suite")


def test_bad_input_raises():
    with pytest.raises(ValueError):
        quartica.count("not-a-curve", 5)
