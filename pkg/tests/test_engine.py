import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import connected_graphs
from diaglab import (
    FaultModelSpec,
    InvalidInputError,
    NeedsIsolationArgumentError,
    NotApplicableError,
    arrangement,
    brute_force_diagnosability,
    hypercube,
    lower_bound_certificate,
    m_connectivity,
    nk_star,
    relation_audit,
    syndrome_oracle_distinguishable,
    upper_bound_from_witness,
)
from diaglab.engine import analyze_indistinguishable_pair, naive_diagnosability
from diaglab.fault_models import is_faulty_set
from diaglab.witnesses import Q4_PAIR_LABELS

F = FaultModelSpec
MODELS = [F.unrestricted(), F.conditional(), F.good_neighbor(1), F.extra(1), F.good_neighbor(2), F.extra(2)]

# (graph, fault model, diagnostic, cap) -> (t, exhaustive), checked against
# the naive syndrome-oracle search over every pair
FROZEN = [
    ("Q3", F.unrestricted(), "PMC", 3, True),
    ("Q3", F.unrestricted(), "MMstar", 2, True),
    ("Q3", F.conditional(), "PMC", 3, True),
    ("Q3", F.conditional(), "MMstar", 3, True),
    ("Q3", F.extra(1), "MMstar", 3, True),
    ("Q3", F.good_neighbor(2), "PMC", 3, True),
    ("S42", F.unrestricted(), "PMC", 3, True),
    ("S42", F.unrestricted(), "MMstar", 3, True),
    ("S42", F.conditional(), "MMstar", 3, True),
    ("S42", F.good_neighbor(1), "MMstar", 3, True),
    ("S42", F.extra(1), "MMstar", 3, True),
    ("S42", F.extra(1), "PMC", 4, False),
    ("A42", F.unrestricted(), "PMC", 4, False),
    ("A42", F.extra(2), "MMstar", 4, False),
]
GRAPHS = {"Q3": hypercube(3), "S42": nk_star(4, 2), "A42": arrangement(4, 2)}


@pytest.mark.parametrize("name,fault,diag,t,exhaustive", FROZEN)
def test_frozen_values(name, fault, diag, t, exhaustive):
    res = brute_force_diagnosability(GRAPHS[name], fault, diag, 4)
    assert (res.t, res.exhaustive) == (t, exhaustive)


@pytest.mark.parametrize("fault", MODELS)
@pytest.mark.parametrize("diag", ["PMC", "MMstar"])
def test_matches_naive_on_q3(q3, fault, diag):
    res = brute_force_diagnosability(q3, fault, diag, 4)
    assert (res.t, res.exhaustive) == naive_diagnosability(q3, fault, diag, 4)


@pytest.mark.slow
@pytest.mark.parametrize("name", ["S42", "A42"])
@pytest.mark.parametrize("diag", ["PMC", "MMstar"])
def test_matches_naive_on_12_vertex_graphs(name, diag):
    g = GRAPHS[name]
    for fault in (F.unrestricted(), F.extra(1)):
        res = brute_force_diagnosability(g, fault, diag, 4)
        assert (res.t, res.exhaustive) == naive_diagnosability(g, fault, diag, 4)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_n=3, max_n=7), st.sampled_from(MODELS), st.sampled_from(["PMC", "MMstar"]))
def test_matches_naive_on_random_graphs(g, fault, diag):
    res = brute_force_diagnosability(g, fault, diag, 3)
    assert (res.t, res.exhaustive) == naive_diagnosability(g, fault, diag, 3)
    if res.extremal_pair is not None:
        f1, f2 = res.extremal_pair
        assert not syndrome_oracle_distinguishable(g, f1, f2, diag)
        assert max(len(f1), len(f2)) == res.t + 1


def test_q3_q4_extra_mmstar():
    q3, q4 = hypercube(3), hypercube(4)
    assert brute_force_diagnosability(q3, F.extra(1), "mmstar").t == 3
    res = brute_force_diagnosability(q4, F.extra(1), "mmstar")
    assert res.t == 5 and res.exhaustive
    f1, f2 = res.extremal_pair
    assert (tuple(q4.labels_of(f1)), tuple(q4.labels_of(f2))) == tuple(tuple(sorted(s)) for s in Q4_PAIR_LABELS)


def test_anchor_and_workers_do_not_change_t(q3):
    base = brute_force_diagnosability(q3, F.extra(1), "MMstar")
    assert brute_force_diagnosability(q3, F.extra(1), "MMstar", anchor=False).t == base.t
    assert brute_force_diagnosability(q3, F.extra(1), "MMstar", workers=2) == base


def test_result_dict(q3):
    d = brute_force_diagnosability(q3, F.unrestricted(), "pmc", 4).to_dict(q3)
    assert d["t"] == 3 and d["diagnostic"] == "PMC" and d["cap"] == 4
    assert set(d["extremal_pair"]) == {"F1", "F2"}


def test_bad_inputs(q3):
    with pytest.raises(InvalidInputError):
        brute_force_diagnosability(q3, F.unrestricted(), "PMC", 9)
    with pytest.raises(InvalidInputError):
        brute_force_diagnosability(q3, F.unrestricted(), "BGM")


def test_s42_extra_mmstar_pair_has_isolated_survivor(s42):
    # the extremal pair differs in one vertex on each side and leaves a
    # survivor whose neighbours are all faulty
    res = brute_force_diagnosability(s42, F.extra(1), "MMstar", 6)
    assert res.t == 3
    f1, f2 = res.extremal_pair
    assert s42.labels_of(f1) == ["[1,2]", "[2,1]", "[2,3]", "[2,4]"]
    assert s42.labels_of(f2) == ["[2,1]", "[2,3]", "[2,4]", "[3,2]"]
    pa = analyze_indistinguishable_pair(s42, f1, f2, F.extra(1))
    assert pa.isolated_survivors == s42.vset("[4,2]")
    assert pa.diff_sizes == (1, 1) and pa.intersection_is_m_cut
    assert not pa.implication_holds


def test_upper_bound_certificate(q4):
    cert = upper_bound_from_witness(q4, q4.vset("0000", "0100"), F.extra(1))
    assert cert.value == 7
    assert cert.value >= brute_force_diagnosability(q4, F.extra(1), "PMC").t
    with pytest.raises(NotApplicableError):
        upper_bound_from_witness(q4, [0], F.conditional())


def test_lower_bound_certificate(q4):
    kappa = m_connectivity(q4, F.extra(1))
    cert = lower_bound_certificate(q4, F.extra(1), "PMC", kappa)
    assert cert.value == 7 == brute_force_diagnosability(q4, F.extra(1), "PMC").t
    with pytest.raises(NeedsIsolationArgumentError):
        lower_bound_certificate(q4, F.extra(1), "MMstar", 6)
    with pytest.raises(NotApplicableError):
        lower_bound_certificate(q4, F.extra(2), "MMstar", 8)
    with pytest.raises(NotApplicableError):
        lower_bound_certificate(q4, F.conditional(), "PMC", 4)


def test_pair_analysis_on_q3_extremal_pairs(q3):
    for fault in (F.extra(1), F.good_neighbor(1)):
        res = brute_force_diagnosability(q3, fault, "PMC", 4)
        f1, f2 = res.extremal_pair
        assert is_faulty_set(q3, f1, fault) and is_faulty_set(q3, f2, fault)
        pa = analyze_indistinguishable_pair(q3, f1, f2, fault)
        assert pa.implication_holds
        # the extremal pair covers every vertex
        assert not pa.survivors_nonempty and pa.diff_sizes == (4, 4)


@pytest.mark.parametrize("diag", ["PMC", "MMstar"])
def test_relation_audit_q3(q3, diag):
    rep = relation_audit(q3, diag, 2, 6)
    assert rep.all_pass and rep.exhaustive
    assert rep.to_dict()["values"]["tbar_1"] == {"lo": 3, "hi": 3}
