"""Pairwise distinguishability under PMC and MM*.

Two independent routes: the structural deciders (edge / path conditions) and
a syndrome oracle that checks per-test forced outcomes.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Optional, Union

from .errors import InvalidInputError
from .graph import Graph, iter_bits


class DiagnosticModel(str, enum.Enum):
    PMC = "PMC"
    MMSTAR = "MMstar"

    @classmethod
    def parse(cls, value: Union[str, "DiagnosticModel"]) -> "DiagnosticModel":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("*", "star").replace("-", "").replace("_", "")
        if key == "pmc":
            return cls.PMC
        if key == "mmstar":
            return cls.MMSTAR
        raise InvalidInputError(f"unknown diagnostic model {value!r}")


@dataclass(frozen=True)
class DistinguishabilityVerdict:
    distinguishable: bool
    model: DiagnosticModel
    # PMC: (u, v) edge; MM*: (v, w, x) path. Vertex indices.
    witness: Optional[tuple[int, ...]] = None
    condition: Optional[int] = None

    def __bool__(self) -> bool:
        return self.distinguishable

    def to_dict(self, g: Optional[Graph] = None) -> dict:
        wit = None
        if self.witness is not None:
            verts = [g.labels[v] for v in self.witness] if g is not None else list(self.witness)
            if self.model is DiagnosticModel.PMC:
                wit = {"edge": verts}
            else:
                wit = {"path": verts, "condition": self.condition}
        return {"distinguishable": self.distinguishable, "model": self.model.value, "witness": wit}


def _masks(g: Graph, f1: Iterable[int], f2: Iterable[int]) -> tuple[int, int]:
    m1, m2 = g.mask(f1), g.mask(f2)
    if m1 == m2:
        raise InvalidInputError("F1 and F2 must differ")
    return m1, m2


def pmc_witness_mask(g: Graph, m1: int, m2: int) -> Optional[tuple[int, int]]:
    delta = m1 ^ m2
    nbrs = g.nbr_masks
    for u in iter_bits(g.full_mask & ~(m1 | m2)):
        hit = nbrs[u] & delta
        if hit:
            return u, (hit & -hit).bit_length() - 1
    return None


def mmstar_witness_mask(g: Graph, m1: int, m2: int) -> Optional[tuple[tuple[int, int, int], int]]:
    survivors = g.full_mask & ~(m1 | m2)
    delta = m1 ^ m2
    only1 = m1 & ~m2
    only2 = m2 & ~m1
    nbrs = g.nbr_masks
    for w in iter_bits(survivors):
        nw = nbrs[w]
        # cheap rejection: no neighbour in delta means no condition can fire
        if not nw & delta:
            continue
        ordered = list(iter_bits(nw))
        for i, a in enumerate(ordered):
            abit = 1 << a
            for b in ordered[i + 1:]:
                bbit = 1 << b
                if abit & survivors and bbit & delta:
                    return (a, w, b), 1
                if bbit & survivors and abit & delta:
                    return (b, w, a), 1
                if abit & only1 and bbit & only1:
                    return (a, w, b), 2
                if abit & only2 and bbit & only2:
                    return (a, w, b), 3
    return None


def pmc_distinguishable(g: Graph, f1: Iterable[int], f2: Iterable[int]) -> DistinguishabilityVerdict:
    """Distinguishable iff some survivor is adjacent to a vertex of F1 ^ F2."""
    m1, m2 = _masks(g, f1, f2)
    wit = pmc_witness_mask(g, m1, m2)
    return DistinguishabilityVerdict(wit is not None, DiagnosticModel.PMC, wit)


def mmstar_distinguishable(g: Graph, f1: Iterable[int], f2: Iterable[int]) -> DistinguishabilityVerdict:
    """Distinguishable iff a path (v, w, x) with survivor w meets one of three conditions.

    1. v survives and x lies in F1 ^ F2;
    2. v and x both lie in F1 - F2;
    3. v and x both lie in F2 - F1.
    """
    m1, m2 = _masks(g, f1, f2)
    found = mmstar_witness_mask(g, m1, m2)
    if found is None:
        return DistinguishabilityVerdict(False, DiagnosticModel.MMSTAR)
    path, cond = found
    return DistinguishabilityVerdict(True, DiagnosticModel.MMSTAR, path, cond)


def distinguishable_mask(g: Graph, m1: int, m2: int, model: DiagnosticModel) -> bool:
    if model is DiagnosticModel.PMC:
        return pmc_witness_mask(g, m1, m2) is not None
    return mmstar_witness_mask(g, m1, m2) is not None


def distinguishable(g: Graph, f1, f2, model) -> DistinguishabilityVerdict:
    model = DiagnosticModel.parse(model)
    if model is DiagnosticModel.PMC:
        return pmc_distinguishable(g, f1, f2)
    return mmstar_distinguishable(g, f1, f2)


def check_witness(g: Graph, f1: Iterable[int], f2: Iterable[int], verdict: DistinguishabilityVerdict) -> bool:
    """Re-check a returned witness against adjacency and set membership."""
    a, b = frozenset(f1), frozenset(f2)
    union, delta = a | b, a ^ b
    adj = g.adjacency
    if not verdict.distinguishable:
        return verdict.witness is None
    if verdict.model is DiagnosticModel.PMC:
        u, v = verdict.witness
        return v in adj[u] and u not in union and v in delta
    v, w, x = verdict.witness
    if v == x or v not in adj[w] or x not in adj[w] or w in union:
        return False
    if verdict.condition == 1:
        return v not in union and x in delta
    if verdict.condition == 2:
        return v in a - b and x in a - b
    if verdict.condition == 3:
        return v in b - a and x in b - a
    return False


def syndrome_oracle_distinguishable(g: Graph, f1: Iterable[int], f2: Iterable[int], model) -> bool:
    """True iff no single syndrome is compatible with both fault sets.

    Each test has a forced outcome when its tester is fault-free and is free
    otherwise, so a common syndrome exists iff no test is forced to opposite
    outcomes by the two sets.
    """
    model = DiagnosticModel.parse(model)
    a, b = set(f1), set(f2)
    for v in a | b:
        g.check_vertex(v)
    if a == b:
        raise InvalidInputError("F1 and F2 must differ")
    adj = g.adjacency
    for tester in range(g.vertex_count):
        if tester in a or tester in b:
            continue
        nbrs = sorted(adj[tester])
        if model is DiagnosticModel.PMC:
            for tested in nbrs:
                if (tested in a) != (tested in b):
                    return True
        else:
            for i, u in enumerate(nbrs):
                for v in nbrs[i + 1:]:
                    if (u in a or v in a) != (u in b or v in b):
                        return True
    return False
