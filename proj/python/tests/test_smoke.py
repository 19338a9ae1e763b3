import json
from fractions import Fraction

import pytest

import wildram


def test_series_literal_round_trip():
    s = wildram.Series("p=3 e=1; 2*t^-5 + t^-1 + 1 + O(t^20)")
    assert (s.p, s.e, s.prec, s.valuation) == (3, 1, 20, -5)
    assert s.coefficients == {-5: 2, -1: 1, 0: 1}
    assert wildram.Series(str(s)) == s


def test_reduce_and_jumps():
    r = wildram.reduce_as(wildram.Series("p=3 e=1; 2*t^-6 + t^-5 + t^-3 + O(t^10)"))
    assert r["kind"] == "WildReduced" and r["conductor"] == 5
    rep = wildram.jumps_witt2(
        wildram.Series("p=3 e=1; t^-1 + O(t^20)"), wildram.Series("p=3 e=1; t^-5 + O(t^20)")
    )
    assert rep.lower_jumps == [1, 13]
    assert rep.upper_jumps == [1, 5]
    assert rep.status == wildram.Status.FormulaOnly


def test_herbrand_round_trip():
    up = wildram.lower_to_upper([1, 7], [9, 3])
    assert up == [1, 3]
    assert wildram.upper_to_lower(up, [9, 3]) == [1, 7]
    assert wildram.lower_to_upper([2], [2]) == [Fraction(2)]


def test_oracles_match_formula():
    a0 = wildram.Series("p=2 e=1; t^-1 + O(t^20)")
    assert wildram.oracle_p_cyclic_jump(wildram.Series("p=2 e=1; t^-5 + O(t^20)")) == 5
    assert wildram.oracle_p2_second_jump(a0, a0) == 3
    with pytest.raises(wildram.RootNotInField):
        wildram.oracle_p_cyclic_jump(wildram.Series("p=5 e=1; 3*t^-2 + O(t^20)"))


def test_run_job_genus_and_json():
    rep = wildram.run_job("field p=2 e=1\ncover cyclic: W2(x ; x)\n", "verify")
    assert rep.genus == 1
    assert rep.status == wildram.Status.OracleConfirmed
    data = json.loads(rep.to_json())
    assert list(data) == [
        "group", "case", "upper_jumps", "lower_jumps", "orders",
        "different_degree", "genus", "status", "notes",
    ]
    assert wildram.Report.from_json(rep.to_json()).genus == 1


def test_discrepancy_and_errors():
    rep = wildram.run_job("field p=3\ncover elementary: x^4 + x^2 ; x^4\n", "genus")
    assert rep.status == wildram.Status.DiscrepancyFlag and rep.exit_code == 3
    assert rep.genus == 10
    with pytest.raises(wildram.ParseError, match="p must be prime"):
        wildram.run_job("field p=4\nas: t^-1 + O(t^5)\n")
    with pytest.raises(wildram.Error):
        wildram.run_job("field p=3\nas: t^-1 + O(t^5)\n", "genus")
