"""Brute-force M-diagnosability, witness upper bounds and connectivity lower bounds.

The search runs in levels s = 1, 2, ... . Level s looks for an
indistinguishable pair of distinct M-faulty sets (F1, F2) with
``|F1| = s >= |F2|``; the first level that has one gives ``t = s - 1``.

Each pair is written ``F2 = (F1 - A) | B`` with ``A`` inside F1, ``B`` outside
it and ``|A| >= max(|B|, 1)``. The indistinguishability conditions pin down
the possible ``B`` from the components of ``G - F1`` and restrict ``A`` to
vertices not adjacent to the survivors, so the enumeration is driven by F1
alone. :func:`naive_diagnosability` is the plain pair enumeration used to
validate it.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Optional, Union

from .distinguishability import (
    DiagnosticModel,
    mmstar_distinguishable,
    pmc_distinguishable,
    syndrome_oracle_distinguishable,
)
from .errors import (
    InvalidInputError,
    NeedsIsolationArgumentError,
    NotApplicableError,
    VerificationFailedError,
)
from .fault_models import (
    ConnectivityResult,
    FaultModelSpec,
    is_faulty_mask,
    is_m_cut_mask,
    resolve_workers,
)
from .graph import Graph, component_masks, is_connected_mask, iter_bits, neighborhood_mask, set_of

Pair = tuple[frozenset[int], frozenset[int]]


@dataclass(frozen=True)
class DiagnosabilityResult:
    t: int
    extremal_pair: Optional[Pair]
    exhaustive: bool
    cap: int
    model: FaultModelSpec = field(default_factory=FaultModelSpec.unrestricted)
    diagnostic: DiagnosticModel = DiagnosticModel.PMC

    def to_dict(self, g: Optional[Graph] = None) -> dict:
        pair = None
        if self.extremal_pair is not None:
            f1, f2 = self.extremal_pair
            conv = g.labels_of if g is not None else sorted
            pair = {"F1": conv(f1), "F2": conv(f2)}
        return {
            "t": self.t,
            "exhaustive": self.exhaustive,
            "extremal_pair": pair,
            "model": self.model.to_dict(),
            "diagnostic": self.diagnostic.value,
            "cap": self.cap,
        }


# submask helpers ----------------------------------------------------------


def _submasks(pool: int, required: int, min_size: int) -> Iterator[int]:
    """All masks ``X`` with ``required <= X <= pool`` and ``|X| >= min_size``."""
    free = pool & ~required
    sub = free
    while True:
        x = sub | required
        if x.bit_count() >= min_size:
            yield x
        if not sub:
            return
        sub = (sub - 1) & free


def _key(m1: int, m2: int) -> tuple:
    return (m1.bit_count(), m1.bit_count() + m2.bit_count(), tuple(iter_bits(m1)), tuple(iter_bits(m2)))


def _nbr_union(nbrs: tuple[int, ...], s: int) -> int:
    acc = 0
    for v in iter_bits(s):
        acc |= nbrs[v]
    return acc


# completion of a fixed F1 -------------------------------------------------


def _pmc_b_options(g: Graph, rest: int, limit: int) -> Iterator[int]:
    # survivors never touch B, so B is a union of components of G - F1
    comps = component_masks(g, rest)
    for r in range(len(comps) + 1):
        for chosen in itertools.combinations(comps, r):
            b = 0
            for c in chosen:
                b |= c
            if b.bit_count() <= limit:
                yield b


def _mmstar_component_options(g: Graph, comp: int, rest: int, limit: int) -> list[int]:
    # Either B misses the component, or the component's survivors are
    # pairwise non-adjacent leaves hanging off B.
    nbrs = g.nbr_masks
    opts = [0]
    leaves = [v for v in iter_bits(comp) if (nbrs[v] & rest).bit_count() == 1]
    for r in range(len(leaves) + 1):
        for chosen in itertools.combinations(leaves, r):
            lmask = 0
            for v in chosen:
                lmask |= 1 << v
            if any(nbrs[v] & rest & lmask for v in chosen):
                continue
            b = comp & ~lmask
            if b and b.bit_count() <= limit:
                opts.append(b)
    return opts


def _mmstar_b_options(g: Graph, rest: int, limit: int) -> Iterator[int]:
    per_comp = [_mmstar_component_options(g, c, rest, limit) for c in component_masks(g, rest)]

    def rec(i: int, acc: int) -> Iterator[int]:
        if i == len(per_comp):
            yield acc
            return
        budget = limit - acc.bit_count()
        for opt in per_comp[i]:
            if opt.bit_count() <= budget:
                yield from rec(i + 1, acc | opt)

    yield from rec(0, 0)


def _complete(g: Graph, f1: int, fault: FaultModelSpec, diag: DiagnosticModel, anchor: int):
    """Best (by key) indistinguishable partner F2 of F1 with |F2| <= |F1|, or None."""
    nbrs = g.nbr_masks
    rest = g.full_mask & ~f1
    s = f1.bit_count()
    best = None
    best_size = s + 1
    b_opts = _pmc_b_options(g, rest, s) if diag is DiagnosticModel.PMC else _mmstar_b_options(g, rest, s)
    for b in b_opts:
        surv = rest & ~b
        if diag is DiagnosticModel.PMC:
            iso = 0
            allowed = f1 & ~_nbr_union(nbrs, surv)
        else:
            iso = 0
            for w in iter_bits(surv):
                if not nbrs[w] & surv:
                    iso |= 1 << w
            allowed = f1 & ~_nbr_union(nbrs, surv & ~iso)
        if anchor & ~allowed:
            continue
        need = max(b.bit_count(), 1)
        if allowed.bit_count() < need:
            continue
        iso_nbrs = [nbrs[w] for w in iter_bits(iso)]
        for a in _submasks(allowed, anchor, need):
            if any((m & a).bit_count() > 1 for m in iso_nbrs):
                continue
            f2 = (f1 & ~a) | b
            size2 = f2.bit_count()
            if size2 > best_size:
                continue
            if not is_faulty_mask(g, f2, fault):
                continue
            if best is None or size2 < best_size or _key(f1, f2) < _key(*best):
                best, best_size = (f1, f2), size2
    return best


def _complete_chunk(args) -> Optional[tuple[int, int]]:
    g, fault, diag, anchor, chunk = args
    best = None
    for f1 in chunk:
        hit = _complete(g, f1, fault, diag, anchor)
        if hit is not None and (best is None or _key(*hit) < _key(*best)):
            best = hit
    return best


def _faulty_sets(g: Graph, size: int, fault: FaultModelSpec, anchored: bool) -> list[int]:
    n = g.vertex_count
    out = []
    if anchored:
        combos = ((0,) + rest for rest in itertools.combinations(range(1, n), size - 1))
    else:
        combos = itertools.combinations(range(n), size)
    for combo in combos:
        m = 0
        for i in combo:
            m |= 1 << i
        if is_faulty_mask(g, m, fault):
            out.append(m)
    return out


def brute_force_diagnosability(
    g: Graph,
    fault: FaultModelSpec,
    diag: Union[str, DiagnosticModel],
    cap: Optional[int] = None,
    *,
    anchor: Optional[bool] = None,
    workers: Optional[int] = None,
    progress: Optional[Callable[[str], None]] = None,
) -> DiagnosabilityResult:
    """Exact ``t_M(G, D)`` by exhaustive search over pair sizes up to ``cap``.

    With ``anchor`` (default: on for the generated families) only pairs whose
    F1 - F2 contains vertex 0 are examined; an automorphism moves any
    indistinguishable pair onto such a pair without changing sizes.
    Each level is finished before returning, so the extremal pair does not
    depend on ``workers``.
    """
    diag = DiagnosticModel.parse(diag)
    n = g.vertex_count
    if n == 0 or not is_connected_mask(g, g.full_mask):
        raise InvalidInputError("brute_force_diagnosability needs a nonempty connected graph")
    if cap is None:
        cap = n // 2
    if not 0 <= cap <= n:
        raise InvalidInputError(f"cap must lie in [0, {n}]")
    if anchor is None:
        anchor = g.vertex_transitive
    anchor_mask = 1 if anchor else 0
    workers = resolve_workers(workers)
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for s in range(1, cap + 1):
            f1s = _faulty_sets(g, s, fault, anchor)
            if progress:
                progress(f"level {s}: {len(f1s)} candidate F1 sets")
            if pool is None or len(f1s) < 2 * workers:
                best = _complete_chunk((g, fault, diag, anchor_mask, f1s))
            else:
                chunks = [f1s[i::workers * 4] for i in range(workers * 4)]
                best = None
                for hit in pool.map(_complete_chunk, [(g, fault, diag, anchor_mask, c) for c in chunks]):
                    if hit is not None and (best is None or _key(*hit) < _key(*best)):
                        best = hit
            if best is not None:
                pair = (set_of(best[0]), set_of(best[1]))
                _revalidate(g, pair, fault, diag)
                return DiagnosabilityResult(s - 1, pair, True, cap, fault, diag)
    finally:
        if pool is not None:
            pool.shutdown()
    return DiagnosabilityResult(cap, None, False, cap, fault, diag)


def _revalidate(g: Graph, pair: Pair, fault: FaultModelSpec, diag: DiagnosticModel) -> None:
    f1, f2 = pair
    if not (is_faulty_mask(g, g.mask(f1), fault) and is_faulty_mask(g, g.mask(f2), fault)):
        raise VerificationFailedError("extremal pair is not M-faulty")
    decider = pmc_distinguishable if diag is DiagnosticModel.PMC else mmstar_distinguishable
    if decider(g, f1, f2).distinguishable or syndrome_oracle_distinguishable(g, f1, f2, diag):
        raise VerificationFailedError("extremal pair is distinguishable")


def naive_diagnosability(
    g: Graph, fault: FaultModelSpec, diag: Union[str, DiagnosticModel], cap: int
) -> tuple[int, bool]:
    """Reference search over all pairs, judged by the syndrome oracle.

    Returns ``(t, exhaustive)`` with the same conventions as
    :func:`brute_force_diagnosability`.
    """
    diag = DiagnosticModel.parse(diag)
    n = g.vertex_count
    by_size: list[list[frozenset[int]]] = []
    for s in range(cap + 1):
        by_size.append([
            frozenset(c) for c in itertools.combinations(range(n), s)
            if is_faulty_mask(g, g.mask(c), fault)
        ])
    for s in range(1, cap + 1):
        smaller = [f for level in by_size[: s + 1] for f in level]
        for f1 in by_size[s]:
            for f2 in smaller:
                if f1 != f2 and not syndrome_oracle_distinguishable(g, f1, f2, diag):
                    return s - 1, True
    return cap, False


# certificates --------------------------------------------------------------


@dataclass(frozen=True)
class BoundCertificate:
    kind: str  # "upper_witness" | "lower_connectivity"
    value: int
    evidence: dict[str, Any]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "value": self.value, "evidence": self.evidence}


def upper_bound_from_witness(g: Graph, y: Iterable[int], fault: FaultModelSpec) -> BoundCertificate:
    """``t_M(G, D) <= |N^c(Y)| - 1`` for either diagnostic model.

    Needs ``N(Y)`` M-faulty (``N^c(Y)`` is then faulty as well; it is
    re-checked) and some vertex outside ``N^c(Y)``.
    """
    if fault.kind == "conditional":
        raise NotApplicableError("the witness bound does not cover the conditional model")
    ym = g.mask(y)
    if not ym or ym == g.full_mask:
        raise InvalidInputError("Y must be a nonempty proper subset of V")
    boundary = neighborhood_mask(g, ym)
    closed = boundary | ym
    if not is_faulty_mask(g, boundary, fault):
        raise VerificationFailedError(f"N(Y) is not a {fault.kind} faulty set")
    if closed == g.full_mask:
        raise VerificationFailedError("N^c(Y) = V, no fault-free vertex remains")
    if not is_faulty_mask(g, closed, fault):
        raise VerificationFailedError(f"N^c(Y) is not a {fault.kind} faulty set")
    value = closed.bit_count() - 1
    return BoundCertificate(
        "upper_witness",
        value,
        {
            "Y": g.labels_of(set_of(ym)),
            "boundary_size": boundary.bit_count(),
            "closed_size": closed.bit_count(),
            "boundary_components": len(component_masks(g, g.full_mask & ~boundary)),
        },
    )


def lower_bound_certificate(
    g: Graph,
    fault: FaultModelSpec,
    diag: Union[str, DiagnosticModel],
    kappa: Union[int, ConnectivityResult],
) -> BoundCertificate:
    """``t_M(G, D) >= kappa + g`` when ``|V| > 2(kappa + g)``.

    ``kappa`` must be the exact M-connectivity. Under MM* the argument also
    needs survivors that are not isolated, which only follows for g >= 2,
    so smaller g is refused.
    """
    diag = DiagnosticModel.parse(diag)
    if fault.kind not in ("g_good_neighbor", "g_extra"):
        raise NotApplicableError("lower certificate covers g-good-neighbor and g-extra models only")
    if isinstance(kappa, ConnectivityResult):
        if kappa.kappa is None or not kappa.exhaustive:
            raise NotApplicableError("connectivity search was not exhaustive")
        kval = kappa.kappa
    else:
        kval = int(kappa)
    if diag is DiagnosticModel.MMSTAR and fault.g < 2:
        raise NeedsIsolationArgumentError("MM* with g < 2 needs a separate isolation argument")
    value = kval + fault.g
    if not g.vertex_count > 2 * value:
        raise NotApplicableError(f"|V| = {g.vertex_count} is not > 2(kappa + g) = {2 * value}")
    return BoundCertificate(
        "lower_connectivity",
        value,
        {"kappa": kval, "g": fault.g, "vertex_count": g.vertex_count, "cardinality_check": True},
    )


# proof-scheme bookkeeping --------------------------------------------------


@dataclass(frozen=True)
class PairAnalysis:
    survivors_nonempty: bool
    isolated_survivors: frozenset[int]
    intersection_faulty: bool
    intersection_is_m_cut: bool
    diff_sizes: tuple[int, int]
    diff_bound_holds: bool

    @property
    def implication_holds(self) -> bool:
        """A short difference on both sides is only allowed when F1 & F2 is not an M-cut."""
        return self.diff_bound_holds or not self.intersection_is_m_cut


def analyze_indistinguishable_pair(g: Graph, f1: Iterable[int], f2: Iterable[int], fault: FaultModelSpec) -> PairAnalysis:
    m1, m2 = g.mask(f1), g.mask(f2)
    inter = m1 & m2
    surv = g.full_mask & ~(m1 | m2)
    iso = 0
    for w in iter_bits(surv):
        if not g.nbr_masks[w] & surv:
            iso |= 1 << w
    d1, d2 = (m1 & ~m2).bit_count(), (m2 & ~m1).bit_count()
    cut = inter != g.full_mask and is_m_cut_mask(g, inter, fault)
    return PairAnalysis(
        survivors_nonempty=bool(surv),
        isolated_survivors=set_of(iso),
        intersection_faulty=is_faulty_mask(g, inter, fault),
        intersection_is_m_cut=cut,
        diff_sizes=(d1, d2),
        diff_bound_holds=max(d1, d2) >= fault.g + 1,
    )


# relation audit ------------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: Optional[int]  # None: unbounded above

    @classmethod
    def of(cls, r: DiagnosabilityResult) -> "Interval":
        return cls(r.t, r.t if r.exhaustive else None)

    @property
    def exact(self) -> bool:
        return self.hi == self.lo

    def __str__(self) -> str:
        return str(self.lo) if self.exact else f">={self.lo}"


@dataclass(frozen=True)
class RelationCheck:
    name: str
    status: str  # pass | fail | inconclusive
    detail: str


def _le(x: Interval, y: Interval) -> str:
    if x.hi is not None and x.hi <= y.lo:
        return "pass"
    if y.hi is not None and x.lo > y.hi:
        return "fail"
    return "inconclusive"


def _eq(x: Interval, y: Interval) -> str:
    if x.exact and y.exact:
        return "pass" if x.lo == y.lo else "fail"
    if (x.hi is not None and x.hi < y.lo) or (y.hi is not None and y.hi < x.lo):
        return "fail"
    return "inconclusive"


@dataclass
class AuditReport:
    diagnostic: DiagnosticModel
    values: dict[str, Interval]
    checks: list[RelationCheck]
    exhaustive: bool

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    @property
    def all_pass(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "diagnostic": self.diagnostic.value,
            "values": {k: {"lo": v.lo, "hi": v.hi} for k, v in self.values.items()},
            "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in self.checks],
            "exhaustive": self.exhaustive,
        }


def relation_audit(
    g: Graph,
    diag: Union[str, DiagnosticModel],
    g_max: int,
    size_cap: int,
    *,
    workers: Optional[int] = None,
) -> AuditReport:
    """Brute-force t, t_g, tbar_g (g <= g_max) and t_c, then test the model-nesting relations."""
    diag = DiagnosticModel.parse(diag)
    if g_max < 0:
        raise InvalidInputError("g_max must be non-negative")
    models = {"t": FaultModelSpec.unrestricted(), "t_c": FaultModelSpec.conditional()}
    for gg in range(g_max + 1):
        models[f"t_{gg}"] = FaultModelSpec.good_neighbor(gg)
        models[f"tbar_{gg}"] = FaultModelSpec.extra(gg)
    values = {
        name: Interval.of(brute_force_diagnosability(g, m, diag, size_cap, workers=workers))
        for name, m in models.items()
    }
    checks: list[RelationCheck] = []

    def add(name: str, status: str, *names: str) -> None:
        checks.append(RelationCheck(name, status, ", ".join(f"{k}={values[k]}" for k in names)))

    t = values["t"]
    for gg in range(g_max + 1):
        for q in (f"t_{gg}", f"tbar_{gg}"):
            add(f"t <= {q}", _le(t, values[q]), "t", q)
    add("t <= t_c", _le(t, values["t_c"]), "t", "t_c")
    for gg in range(g_max):
        for base in ("t", "tbar"):
            a, b = f"{base}_{gg}", f"{base}_{gg + 1}"
            add(f"{a} <= {b}", _le(values[a], values[b]), a, b)
    for gg in range(g_max + 1):
        add(f"tbar_{gg} <= t_{gg}", _le(values[f"tbar_{gg}"], values[f"t_{gg}"]), f"tbar_{gg}", f"t_{gg}")
    if g_max >= 1:
        add("tbar_1 = t_1", _eq(values["tbar_1"], values["t_1"]), "tbar_1", "t_1")
        add("t_1 <= t_c", _le(values["t_1"], values["t_c"]), "t_1", "t_c")
        add("tbar_1 <= t_c", _le(values["tbar_1"], values["t_c"]), "tbar_1", "t_c")
    collapse = _eq(t, values["t_0"])
    if collapse == "pass":
        collapse = _eq(t, values["tbar_0"])
    add("t = t_0 = tbar_0", collapse, "t", "t_0", "tbar_0")
    exhaustive = all(v.exact for v in values.values())
    return AuditReport(diag, values, checks, exhaustive)

