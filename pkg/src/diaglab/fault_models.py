"""Fault-tolerant models, M-cuts and brute-force M-connectivity."""

from __future__ import annotations

import itertools
import os
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidInputError, NoCutExistsError
from .graph import Graph, component_masks, is_connected_mask, iter_bits, set_of

KINDS = ("unrestricted", "conditional", "g_good_neighbor", "g_extra")


@dataclass(frozen=True)
class FaultModelSpec:
    kind: str
    g: int = 0

    def __post_init__(self) -> None:
        kind = self.kind.replace("-", "_")
        object.__setattr__(self, "kind", kind)
        if kind not in KINDS:
            raise InvalidInputError(f"unknown fault model {self.kind!r}")
        if not isinstance(self.g, int) or self.g < 0:
            raise InvalidInputError("g must be a non-negative integer")
        if self.g and kind not in ("g_good_neighbor", "g_extra"):
            raise InvalidInputError(f"{kind} takes no g parameter")

    @classmethod
    def unrestricted(cls) -> "FaultModelSpec":
        return cls("unrestricted")

    @classmethod
    def conditional(cls) -> "FaultModelSpec":
        return cls("conditional")

    @classmethod
    def good_neighbor(cls, g: int) -> "FaultModelSpec":
        return cls("g_good_neighbor", g)

    @classmethod
    def extra(cls, g: int) -> "FaultModelSpec":
        return cls("g_extra", g)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "g": self.g}

    @classmethod
    def from_dict(cls, d: dict) -> "FaultModelSpec":
        return cls(d["kind"], int(d.get("g", 0)))


@dataclass(frozen=True)
class ConnectivityResult:
    kappa: Optional[int]
    witness_cut: Optional[frozenset[int]]
    exhaustive: bool
    cap: int

    def to_dict(self, g: Graph) -> dict:
        return {
            "kappa": self.kappa,
            "witness": None if self.witness_cut is None else g.labels_of(self.witness_cut),
            "exhaustive": self.exhaustive,
        }


def is_faulty_mask(g: Graph, f: int, model: FaultModelSpec) -> bool:
    kind = model.kind
    if kind == "unrestricted":
        return True
    nbrs = g.nbr_masks
    alive = g.full_mask & ~f
    if kind == "conditional":
        return all(m & alive for m in nbrs)
    if kind == "g_good_neighbor":
        need = model.g
        if need == 0:
            return True
        return all((nbrs[v] & alive).bit_count() >= need for v in iter_bits(alive))
    need = model.g + 1
    if need == 1:
        return True
    # g-extra: every component of G - F has at least g + 1 vertices
    rest = alive
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= nbrs[v]
            frontier = reach & rest & ~comp
            comp |= frontier
        if comp.bit_count() < need:
            return False
        rest &= ~comp
    return True


def is_faulty_set(g: Graph, f: Iterable[int], model: FaultModelSpec) -> bool:
    """Membership test for M-faulty sets.

    ``F = V`` is vacuously g-good-neighbor / g-extra faulty but never
    conditional faulty.
    """
    return is_faulty_mask(g, g.mask(f), model)


def is_m_cut_mask(g: Graph, f: int, model: FaultModelSpec) -> bool:
    alive = g.full_mask & ~f
    if not alive or is_connected_mask(g, alive):
        return False
    return is_faulty_mask(g, f, model)


def is_m_cut(g: Graph, f: Iterable[int], model: FaultModelSpec) -> bool:
    m = g.mask(f)
    if m == g.full_mask:
        raise InvalidInputError("F = V(G) leaves an empty survival graph")
    return is_m_cut_mask(g, m, model)


def default_cap(g: Graph, model: FaultModelSpec) -> int:
    """Search bound for :func:`m_connectivity` when the caller gives none."""
    n = g.params.get("n")
    k = g.params.get("k")
    if g.family == "arrangement":
        cap = k * (n - k) + 4
    elif g.family == "nk_star":
        cap = n + model.g * k
    elif g.family == "hypercube":
        cap = (model.g + 1) * (2 * (n - 1) - model.g) // 2 + 1 + 2
    else:
        cap = g.vertex_count - 1
    return max(0, min(cap, g.vertex_count - 1))


def _combos_with_prefix(n: int, size: int, anchor: bool) -> Iterator[tuple[int, ...]]:
    if anchor:
        if size == 0:
            return
        for rest in itertools.combinations(range(1, n), size - 1):
            yield (0,) + rest
    else:
        yield from itertools.combinations(range(n), size)


def _first_cut(g: Graph, model: FaultModelSpec, size: int, anchor: bool, first: Optional[int] = None):
    bits = [1 << i for i in range(g.vertex_count)]
    for combo in _combos_with_prefix(g.vertex_count, size, anchor):
        if first is not None and (combo[1] if anchor else combo[0]) != first:
            continue
        m = 0
        for i in combo:
            m |= bits[i]
        if is_m_cut_mask(g, m, model):
            return combo
    return None


def _first_cut_task(args):
    g, model, size, anchor, first = args
    return _first_cut(g, model, size, anchor, first)


def resolve_workers(workers: Optional[int]) -> int:
    if workers is None:
        workers = int(os.environ.get("DIAGLAB_WORKERS", "1") or 1)
    if workers < 1:
        raise InvalidInputError("workers must be >= 1")
    return workers


def m_connectivity(
    g: Graph,
    model: FaultModelSpec,
    cap: Optional[int] = None,
    *,
    anchor: Optional[bool] = None,
    workers: Optional[int] = None,
) -> ConnectivityResult:
    """Minimum size of an M-cut, by enumeration in ascending size.

    Within a size, subsets are scanned in lexicographic order of their sorted
    index tuples, so the witness is the lexicographically smallest minimum
    cut. On vertex-transitive graphs the scan is restricted to sets containing
    vertex 0; some minimum cut always contains 0 (map any member onto it), and
    the lexicographically smallest one starts with 0, so the result is
    unchanged.
    """
    n = g.vertex_count
    if n == 0 or not is_connected_mask(g, g.full_mask):
        raise InvalidInputError("m_connectivity needs a nonempty connected graph")
    if g.is_complete():
        raise NoCutExistsError("complete graphs have no vertex cut")
    if cap is None:
        cap = default_cap(g, model)
    cap = min(cap, n - 1)
    if anchor is None:
        anchor = g.vertex_transitive
    workers = resolve_workers(workers)
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for size in range(1, cap + 1):
            if pool is None or size < 2:
                hit = _first_cut(g, model, size, anchor)
            else:
                # partition on the first free element; the lexicographically
                # smallest hit comes from the smallest partition key that hits
                keys = range(1, n) if anchor else range(n)
                hits = pool.map(_first_cut_task, [(g, model, size, anchor, key) for key in keys])
                hit = next((h for h in hits if h is not None), None)
            if hit is not None:
                return ConnectivityResult(size, frozenset(hit), True, cap)
    finally:
        if pool is not None:
            pool.shutdown()
    if cap >= n - 1:
        raise NoCutExistsError(f"no {model.kind} cut exists for this graph")
    return ConnectivityResult(None, None, False, cap)


@dataclass(frozen=True)
class SuperConnectivityReport:
    holds: bool
    counterexample: Optional[frozenset[int]]
    checked: int


def super_connected_check(g: Graph, m: int, q: int) -> SuperConnectivityReport:
    """Is ``G`` super m-vertex-connected of order q?

    For every F with |F| <= m the survival graph must be connected, or have a
    unique largest component with at most q vertices outside it. The first
    violating F in (size, lexicographic) order is returned on failure.
    """
    n = g.vertex_count
    if not 0 <= m < n:
        raise InvalidInputError("need 0 <= m < |V|")
    if q < 0:
        raise InvalidInputError("q must be non-negative")
    bits = [1 << i for i in range(n)]
    full = g.full_mask
    checked = 0
    for size in range(m + 1):
        for combo in itertools.combinations(range(n), size):
            f = 0
            for i in combo:
                f |= bits[i]
            checked += 1
            comps = component_masks(g, full & ~f)
            if len(comps) <= 1:
                continue
            sizes = sorted((c.bit_count() for c in comps), reverse=True)
            if sizes[0] == sizes[1] or sum(sizes[1:]) > q:
                return SuperConnectivityReport(False, set_of(f), checked)
    return SuperConnectivityReport(True, None, checked)
