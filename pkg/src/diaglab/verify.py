"""Verification suites: formulas, relations, constructions, oracles.

Each suite returns a list of :class:`CheckReport`; a suite passes when every
report has status ``pass``.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Callable
from typing import Optional

from . import formulas
from .distinguishability import (
    DiagnosticModel,
    mmstar_distinguishable,
    pmc_distinguishable,
    syndrome_oracle_distinguishable,
)
from .engine import brute_force_diagnosability, relation_audit, upper_bound_from_witness
from .fault_models import FaultModelSpec, is_faulty_mask, m_connectivity, super_connected_check
from .formulas import CheckReport
from .graph import Graph, common_neighbors
from .topology import (
    arrangement,
    check_exact_common_neighbors,
    check_lemma_common_neighbors,
    hypercube,
    nk_star,
)
from .witnesses import (
    arrangement_witness,
    hypercube_star_witness,
    nk_star_block_census,
    nk_star_predicted_census,
    nk_star_witness,
    q4_indistinguishable_pair,
)

SUITES = ("formulas", "relations", "constructions", "oracles")
DEFAULT_SEED = 42

Log = Optional[Callable[[str], None]]


def _eq(name: str, expected, observed, detail: str = "") -> CheckReport:
    return CheckReport(name, "pass" if expected == observed else "fail", expected, observed, detail)


def _true(name: str, ok: bool, detail: str = "") -> CheckReport:
    return CheckReport(name, "pass" if ok else "fail", True, bool(ok), detail)


# formulas -------------------------------------------------------------------


def _brute_cases():
    q4, s42, s43 = hypercube(4), nk_star(4, 2), nk_star(4, 3)
    a42, a43, a52 = arrangement(4, 2), arrangement(4, 3), arrangement(5, 2)
    q3 = hypercube(3)
    gn, ex = FaultModelSpec.good_neighbor, FaultModelSpec.extra
    cases = [
        ("kappa_bar_g_hypercube", {"n": 4, "g": 0}, lambda: m_connectivity(q4, ex(0))),
        ("kappa_bar_g_hypercube", {"n": 4, "g": 1}, lambda: m_connectivity(q4, ex(1))),
        ("kappa_1_arrangement_special", {"n": 4, "k": 2}, lambda: m_connectivity(a42, gn(1))),
        ("kappa_1_arrangement_special", {"n": 4, "k": 3}, lambda: m_connectivity(a43, gn(1))),
        ("kappa_1_arrangement", {"n": 5, "k": 2}, lambda: m_connectivity(a52, gn(1))),
        ("kappa_bar_g_nkstar", {"n": 4, "k": 3, "g": 1}, lambda: m_connectivity(s43, ex(1))),
        ("t_bar_g_hypercube_pmc", {"n": 4, "g": 1}, lambda: brute_force_diagnosability(q4, ex(1), "PMC", 8)),
        ("t_bar_1_hypercube_mmstar_small", {"n": 3}, lambda: brute_force_diagnosability(q3, ex(1), "MMstar", 6)),
        ("t_bar_1_hypercube_mmstar_small", {"n": 4}, lambda: brute_force_diagnosability(q4, ex(1), "MMstar", 8)),
        ("t_bar_1_nkstar_pmc", {"n": 4, "k": 2}, lambda: brute_force_diagnosability(s42, ex(1), "PMC", 6)),
        ("t_c_nkstar", {"n": 4, "k": 3}, lambda: brute_force_diagnosability(s43, FaultModelSpec.conditional(), "MMstar", 7)),
    ]
    for g in range(3):
        cases.append(("kappa_g_nkstar", {"n": 4, "k": 2, "g": g}, lambda g=g: m_connectivity(s42, gn(g))))
        cases.append(("t_g_nkstar_pmc", {"n": 4, "k": 2, "g": g},
                      lambda g=g: brute_force_diagnosability(s42, gn(g), "PMC", 7)))
    for g in range(2):
        cases.append(("kappa_g_nkstar", {"n": 4, "k": 3, "g": g}, lambda g=g: m_connectivity(s43, gn(g))))
        cases.append(("t_g_nkstar_pmc", {"n": 4, "k": 3, "g": g},
                      lambda g=g: brute_force_diagnosability(s43, gn(g), "PMC", 7)))
    for d in ("PMC", "MMstar"):
        cases.append(("t_1_nkstar", {"n": 4, "k": 3}, lambda d=d: brute_force_diagnosability(s43, gn(1), d, 7)))
        cases.append(("t_bar_1_nkstar", {"n": 4, "k": 3}, lambda d=d: brute_force_diagnosability(s43, ex(1), d, 7)))
        for g in range(2):
            cases.append(("upper_t_g_arrangement", {"n": 4, "k": 2, "g": g},
                          lambda d=d, g=g: brute_force_diagnosability(a42, gn(g), d, 7)))
            cases.append(("upper_t_g_nkstar", {"n": 4, "k": 2, "g": g},
                          lambda d=d, g=g: brute_force_diagnosability(s42, gn(g), d, 7)))
    return cases


def suite_formulas(log: Log = None) -> list[CheckReport]:
    out = formulas.consistency_checks()
    for entry_id, params, thunk in _brute_cases():
        if log:
            log(f"cross-check {entry_id} {params}")
        out.append(formulas.cross_check(entry_id, params, thunk()))
    return out


# relations ------------------------------------------------------------------


def suite_relations(log: Log = None, size_cap: int = 6, g_max: int = 2) -> list[CheckReport]:
    out = []
    for g in (hypercube(3), nk_star(4, 2)):
        for d in (DiagnosticModel.PMC, DiagnosticModel.MMSTAR):
            if log:
                log(f"relation audit {g.family}{dict(g.params)} {d.value}")
            rep = relation_audit(g, d, g_max, size_cap)
            tag = f"{g.family}{dict(g.params)} {d.value}"
            for c in rep.checks:
                out.append(CheckReport(f"{tag}: {c.name}", c.status, "pass", c.status, c.detail))
    return out


# constructions --------------------------------------------------------------


def _witness_checks(tag: str, wp, gg: int) -> list[CheckReport]:
    v = wp.validation
    return [
        _eq(f"{tag} |N(Y)|", wp.predicted_boundary_size, len(wp.boundary)),
        _eq(f"{tag} two components", True, v["two_components"], str(v["components"])),
        _eq(f"{tag} components >= g+1", True, all(s >= gg + 1 for s in v["components"])),
        _eq(f"{tag} V - N^c(Y) nonempty", True, v["outside_closed_nonempty"]),
    ]


def suite_constructions(log: Log = None) -> list[CheckReport]:
    out = []
    wp = hypercube_star_witness(4, 1)
    out.append(_eq("Q_4 g=1 |N(Y)|", 6, len(wp.boundary)))
    out.append(_eq("Q_4 g=1 |N^c(Y)|", 8, len(wp.closed)))
    out += _witness_checks("Q_4 g=1", wp, 1)
    alt = hypercube_star_witness(4, 1, positions=[2])
    out.append(_eq("Q_4 g=1 alternate leaf |N(Y)|, |N^c(Y)|", (6, 8), (len(alt.boundary), len(alt.closed))))
    for n in range(4, 8):
        for g in range(0, n - 2):
            w = hypercube_star_witness(n, g)
            out += _witness_checks(f"Q_{n} g={g}", w, g)
            leaves = sorted(w.y - {0})
            out.append(_true(
                f"Q_{n} g={g} leaves share exactly two neighbours incl. the centre",
                all(len(common_neighbors(w.graph, a, b)) == 2 and 0 in common_neighbors(w.graph, a, b)
                    for a, b in itertools.combinations(leaves, 2)),
            ))
    for n, k in ((6, 4), (7, 4)):
        out += _witness_checks(f"A_{n},{k} P3", arrangement_witness(n, k, "P3"), 2)
    out.append(_eq("A_6,4 P3 |N(Y)|", 17, len(arrangement_witness(6, 4, "P3").boundary)))
    out.append(_eq("A_7,4 P3 |N(Y)|", 27, len(arrangement_witness(7, 4, "P3").boundary)))
    c4 = arrangement_witness(7, 4, "C4")
    out.append(_eq("A_7,4 C4 |N(Y)|", 32, len(c4.boundary)))
    out += _witness_checks("A_7,4 C4", c4, 3)
    out.append(_true("A_6,4 C3 larger than P3",
                     len(arrangement_witness(6, 4, "C3").boundary) == 18 > 17))
    out.append(_eq("A_7,4 P4 |N(Y)| measured", 34, len(arrangement_witness(7, 4, "P4").boundary)))
    for g in (1, 2):
        w = nk_star_witness(5, 3, g)
        out.append(_eq(f"S_5,3 g={g} |N(Y)|", 5 + g - 1, len(w.boundary)))
        out += _witness_checks(f"S_5,3 g={g}", w, g)
        out.append(_eq(f"S_5,3 g={g} block census", nk_star_predicted_census(5, 3, g), nk_star_block_census(w)))
    out.append(_eq("S_6,3 g=2 |N(Y)|", 7, len(nk_star_witness(6, 3, 2).boundary)))
    for name, (n, k) in {"A_4,2": (4, 2), "A_4,3": (4, 3), "A_5,2": (5, 2), "A_5,3": (5, 3)}.items():
        g = arrangement(n, k)
        bad = check_lemma_common_neighbors(g)
        out.append(_eq(f"{name} distance-based common-neighbour rule", 0, len(bad),
                       "; ".join(f"{g.labels[u]}~{g.labels[v]}: {got} vs {want}" for u, v, got, want in bad[:3])))
        out.append(_eq(f"{name} exact common-neighbour count", 0, len(check_exact_common_neighbors(g))))
    q4 = hypercube(4)
    rep = super_connected_check(q4, 5, 1)
    out.append(_eq("Q_4 super 5-connected of order 1", True, rep.holds))
    rep6 = super_connected_check(q4, 6, 1)
    out.append(_eq("Q_4 m=6 violation found", False, rep6.holds,
                   str(q4.labels_of(rep6.counterexample or ()))))
    f1, f2 = q4_indistinguishable_pair()
    ex1 = FaultModelSpec.extra(1)
    out.append(_true("Q_4 pair 1-extra", is_faulty_mask(q4, q4.mask(f1), ex1) and is_faulty_mask(q4, q4.mask(f2), ex1)))
    out.append(_eq("Q_4 pair MM* decider", False, mmstar_distinguishable(q4, f1, f2).distinguishable))
    out.append(_eq("Q_4 pair MM* oracle", False, syndrome_oracle_distinguishable(q4, f1, f2, "MMstar")))
    out.append(_eq("Q_4 pair PMC decider", True, pmc_distinguishable(q4, f1, f2).distinguishable))
    out.append(_eq("Q_4 upper bound g=1", 7,
                   upper_bound_from_witness(q4, q4.vset("0000", "0100"), ex1).value))
    a64 = arrangement_witness(6, 4, "P3")
    out.append(_eq("A_6,4 P3 upper bound g=2", 19,
                   upper_bound_from_witness(a64.graph, a64.y, FaultModelSpec.extra(2)).value))
    return out


# oracles --------------------------------------------------------------------


def _random_pair(rng: random.Random, n: int, max_size: int) -> tuple[frozenset[int], frozenset[int]]:
    while True:
        a = frozenset(rng.sample(range(n), rng.randint(0, max_size)))
        b = frozenset(rng.sample(range(n), rng.randint(0, max_size)))
        if a != b:
            return a, b


def _agree(g: Graph, a, b) -> tuple[bool, bool]:
    pmc = pmc_distinguishable(g, a, b).distinguishable == syndrome_oracle_distinguishable(g, a, b, "PMC")
    mm = mmstar_distinguishable(g, a, b).distinguishable == syndrome_oracle_distinguishable(g, a, b, "MMstar")
    return pmc, mm


def oracle_equivalence_exhaustive(g: Graph, max_size: int) -> tuple[int, int, int]:
    """Compare deciders with the oracle on every ordered pair of distinct small subsets."""
    subsets = [frozenset(c) for s in range(max_size + 1) for c in itertools.combinations(range(g.vertex_count), s)]
    bad_pmc = bad_mm = count = 0
    for a in subsets:
        for b in subsets:
            if a == b:
                continue
            count += 1
            p, m = _agree(g, a, b)
            bad_pmc += not p
            bad_mm += not m
    return count, bad_pmc, bad_mm


def oracle_equivalence_random(g: Graph, pairs: int, max_size: int, seed: int) -> tuple[int, int, int]:
    rng = random.Random(seed)
    bad_pmc = bad_mm = 0
    for _ in range(pairs):
        a, b = _random_pair(rng, g.vertex_count, max_size)
        p, m = _agree(g, a, b)
        bad_pmc += not p
        bad_mm += not m
    return pairs, bad_pmc, bad_mm


def random_faulty_set(g: Graph, model: FaultModelSpec, rng: random.Random, max_size: Optional[int] = None) -> int:
    n = g.vertex_count
    max_size = n // 2 if max_size is None else max_size
    while True:
        m = 0
        for v in rng.sample(range(n), rng.randint(0, max_size)):
            m |= 1 << v
        if is_faulty_mask(g, m, model):
            return m


def intersection_closure(g: Graph, model: FaultModelSpec, pairs: int, seed: int) -> tuple[int, int]:
    """Number of sampled faulty pairs whose intersection is not faulty."""
    rng = random.Random(seed)
    bad = 0
    for _ in range(pairs):
        a = random_faulty_set(g, model, rng)
        b = random_faulty_set(g, model, rng)
        if not is_faulty_mask(g, a & b, model):
            bad += 1
    return pairs, bad


def suite_oracles(log: Log = None, seed: int = DEFAULT_SEED, random_pairs: int = 100_000,
                  closure_pairs: int = 1000) -> list[CheckReport]:
    out = []
    q3 = hypercube(3)
    if log:
        log("exhaustive decider/oracle comparison on Q_3")
    count, bp, bm = oracle_equivalence_exhaustive(q3, 3)
    out.append(_eq(f"Q_3 PMC decider = oracle ({count} pairs)", 0, bp))
    out.append(_eq(f"Q_3 MM* decider = oracle ({count} pairs)", 0, bm))
    for i, g in enumerate((nk_star(4, 2), arrangement(4, 2))):
        if log:
            log(f"random decider/oracle comparison on {g.family}{dict(g.params)}")
        count, bp, bm = oracle_equivalence_random(g, random_pairs, 5, seed + i)
        tag = f"{g.family}{dict(g.params)}"
        out.append(_eq(f"{tag} PMC decider = oracle ({count} pairs)", 0, bp))
        out.append(_eq(f"{tag} MM* decider = oracle ({count} pairs)", 0, bm))
    graphs = (hypercube(3), hypercube(4), nk_star(4, 2), arrangement(4, 2))
    for i, g in enumerate(graphs):
        for gg in (1, 2):
            model = FaultModelSpec.extra(gg)
            count, bad = intersection_closure(g, model, closure_pairs, seed + 10 * i + gg)
            out.append(_eq(f"{g.family}{dict(g.params)} {gg}-extra intersection closure ({count} pairs)", 0, bad))
    return out


def run_suite(name: str, log: Log = None, seed: int = DEFAULT_SEED, random_pairs: int = 100_000) -> list[CheckReport]:
    if name == "formulas":
        return suite_formulas(log)
    if name == "relations":
        return suite_relations(log)
    if name == "constructions":
        return suite_constructions(log)
    if name == "oracles":
        return suite_oracles(log, seed, random_pairs)
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, log, seed, random_pairs)]
    raise ValueError(f"unknown suite {name!r}")
