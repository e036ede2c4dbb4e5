import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diaglab import FaultModelSpec, InvalidInputError, RangeError, brute_force_diagnosability, hypercube, m_connectivity
from diaglab import formulas
from diaglab.formulas import CATALOG, cross_check, evaluate


def test_spot_values():
    assert evaluate("t_bar_2_arrangement", 8, 3) == 34
    assert evaluate("kappa_bar_g_hypercube_extended", 9, g=18) == 61
    assert evaluate("t_bar_g_nkstar_pmc", 5, 3, 2) == 8
    assert evaluate("kappa_bar_g_hypercube", 4, g=1) == 6
    assert evaluate("kappa_1_arrangement_special", 4, 2) == 4
    assert evaluate("t_bar_1_hypercube_mmstar_small", 3) == 3
    assert evaluate("t_bar_1_hypercube_mmstar_small", 4) == 5


def test_range_errors_name_the_range():
    with pytest.raises(RangeError, match="n >= 8"):
        evaluate("t_bar_2_arrangement", 7, 3)
    with pytest.raises(RangeError):
        evaluate("kappa_bar_g_hypercube", 4, g=2)
    with pytest.raises(InvalidInputError):
        evaluate("no_such_entry", 5)


def test_interval_entry():
    lo, hi = evaluate("t_3_arrangement_interval", 7, 4)
    assert lo <= hi
    assert CATALOG["t_3_arrangement_interval"].interval


def test_dump_shape():
    dump = formulas.catalog_dump()
    assert len(dump) == len(CATALOG)
    for d in dump:
        assert {"id", "quantity", "family", "diagnostic", "range", "citation"} <= set(d)
    json.dumps(dump)


@given(st.integers(5, 12), st.data())
def test_standard_and_extended_hypercube_agree(n, data):
    g = data.draw(st.integers(0, n - 4))
    assert evaluate("kappa_bar_g_hypercube", n, g=g) == evaluate("kappa_bar_g_hypercube_extended", n, g=g)


def test_t_bar_is_kappa_bar_plus_g():
    for n in range(5, 12):
        for g in range(1, n - 2):
            assert evaluate("t_bar_g_hypercube_pmc", n, g=g) == evaluate("kappa_bar_g_hypercube", n, g=g) + g


@pytest.mark.parametrize("report", formulas.consistency_checks(), ids=lambda r: r.name)
def test_consistency(report):
    assert report.passed, report


def test_cross_check_statuses(q4):
    assert cross_check("kappa_bar_g_hypercube", {"n": 4, "g": 1}, m_connectivity(q4, FaultModelSpec.extra(1))).passed
    assert cross_check("kappa_bar_g_hypercube", {"n": 4, "g": 1}, 5).status == "fail"
    assert cross_check("kappa_bar_g_hypercube", {"n": 4, "g": 1}, (5, None)).status == "inconclusive"
    res = brute_force_diagnosability(q4, FaultModelSpec.extra(1), "PMC")
    assert cross_check("t_bar_g_hypercube_pmc", {"n": 4, "g": 1}, res).passed


# brute-force values below came from the exhaustive engine and the
# independent cut enumeration; they pin entries whose ranges were adjusted
def test_nkstar_k2_mmstar_outside_entry():
    with pytest.raises(RangeError):
        evaluate("t_bar_1_nkstar", 4, 2)
    assert evaluate("t_bar_1_nkstar_pmc", 4, 2) == 4


def test_kappa_2_arrangement_small_case_excluded():
    with pytest.raises(RangeError):
        evaluate("kappa_2_arrangement", 4, 3)
    from diaglab import arrangement

    assert m_connectivity(arrangement(4, 3), FaultModelSpec.good_neighbor(2)).kappa == 6


def test_q3_q4_mmstar_small_entry_matches_brute_force():
    for n in (3, 4):
        res = brute_force_diagnosability(hypercube(n), FaultModelSpec.extra(1), "MMstar")
        assert cross_check("t_bar_1_hypercube_mmstar_small", {"n": n}, res).passed


@pytest.mark.slow
def test_formula_suite():
    from diaglab.verify import suite_formulas

    bad = [r for r in suite_formulas() if not r.passed]
    assert not bad, bad
