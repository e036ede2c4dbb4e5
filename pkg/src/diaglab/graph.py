"""Immutable undirected graphs over dense vertex indices.

Vertex sets are exposed as ``frozenset[int]``; internally every set operation
runs on Python ints used as bitsets (bit ``i`` set <=> vertex ``i`` present).
The ``*_mask`` helpers are the hot-path API used by the search modules.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Optional

from .errors import InvalidInputError

VertexSet = frozenset  # frozenset[int] of vertex indices

TRANSITIVE_FAMILIES = frozenset({"hypercube", "nk_star", "arrangement"})


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def set_of(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph with labelled vertices ``0..n-1``.

    ``nbr_masks[v]`` is the bitset of neighbours of ``v``. Construction checks
    symmetry, absence of loops and label uniqueness, so every instance that
    exists is well formed.
    """

    labels: tuple[str, ...]
    nbr_masks: tuple[int, ...]
    family: str = "custom"
    params: Mapping[str, Any] = field(default_factory=dict)
    _index: Mapping[str, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(self.nbr_masks) != n:
            raise InvalidInputError("labels and adjacency have different lengths")
        index = {lab: i for i, lab in enumerate(self.labels)}
        if len(index) != n:
            raise InvalidInputError("vertex labels must be pairwise distinct")
        full = (1 << n) - 1
        for v, m in enumerate(self.nbr_masks):
            if m & ~full:
                raise InvalidInputError(f"neighbour index out of range at vertex {v}")
            if (m >> v) & 1:
                raise InvalidInputError(f"self-loop at vertex {v}")
            for w in iter_bits(m):
                if not (self.nbr_masks[w] >> v) & 1:
                    raise InvalidInputError(f"asymmetric adjacency between {v} and {w}")
        object.__setattr__(self, "params", MappingProxyType(dict(self.params)))
        object.__setattr__(self, "_index", MappingProxyType(index))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.labels, self.nbr_masks, self.family, dict(self.params)) == (
            other.labels, other.nbr_masks, other.family, dict(other.params))

    def __hash__(self) -> int:
        return hash((self.labels, self.nbr_masks, self.family))

    def __reduce__(self):
        # mappingproxy does not pickle; rebuild from plain fields
        return (type(self), (self.labels, self.nbr_masks, self.family, dict(self.params)))

    # construction -----------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        labels: Sequence[str],
        edges: Iterable[tuple[int, int]],
        family: str = "custom",
        params: Optional[Mapping[str, Any]] = None,
    ) -> "Graph":
        n = len(labels)
        nbrs = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            if (nbrs[u] >> v) & 1:
                raise InvalidInputError(f"duplicate edge ({u}, {v})")
            nbrs[u] |= 1 << v
            nbrs[v] |= 1 << u
        return cls(tuple(str(x) for x in labels), tuple(nbrs), family, dict(params or {}))

    # basic queries ----------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(set_of(m) for m in self.nbr_masks)

    @property
    def vertex_transitive(self) -> bool:
        """True for the generated families, all of which are vertex-transitive."""
        return self.family in TRANSITIVE_FAMILIES

    def degree(self, v: int) -> int:
        return self.nbr_masks[self.check_vertex(v)].bit_count()

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.nbr_masks) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u, m in enumerate(self.nbr_masks) for v in iter_bits(m) if v > u]

    def is_complete(self) -> bool:
        n = self.vertex_count
        return all(m.bit_count() == n - 1 for m in self.nbr_masks)

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.vertex_count:
            raise InvalidInputError(f"vertex index {v!r} out of range")
        return v

    def index(self, label: Any) -> int:
        """Index of a vertex given its label (string, or int sequence for permutations)."""
        key = format_label(label) if not isinstance(label, str) else label.replace(" ", "")
        try:
            return self._index[key]
        except KeyError:
            raise InvalidInputError(f"unknown vertex label {label!r}") from None

    def vset(self, *labels: Any) -> frozenset[int]:
        return frozenset(self.index(lab) for lab in labels)

    def labels_of(self, s: Iterable[int]) -> list[str]:
        return [self.labels[i] for i in sorted(s)]

    def mask(self, s: Iterable[int]) -> int:
        """Bitset of a vertex collection, validating every index."""
        m = 0
        n = self.vertex_count
        for i in s:
            if not isinstance(i, int) or not 0 <= i < n:
                raise InvalidInputError(f"vertex index {i!r} out of range")
            m |= 1 << i
        return m

    # serialisation ----------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "params": dict(self.params),
            "labels": list(self.labels),
            "edges": [list(e) for e in self.edges()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Graph":
        try:
            labels = data["labels"]
            edges = [tuple(e) for e in data["edges"]]
        except (KeyError, TypeError) as exc:
            raise InvalidInputError(f"malformed graph document: {exc}") from None
        return cls.from_edges(labels, edges, data.get("family", "custom"), data.get("params", {}))

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))


def format_label(seq: Iterable[int]) -> str:
    """Render a permutation label, e.g. ``(1, 2)`` -> ``"[1,2]"``."""
    return "[" + ",".join(str(int(x)) for x in seq) + "]"


# mask-level primitives ----------------------------------------------------


def neighborhood_mask(g: Graph, s: int) -> int:
    """Open neighbourhood of bitset ``s``."""
    nbrs = g.nbr_masks
    acc = 0
    for v in iter_bits(s):
        acc |= nbrs[v]
    return acc & ~s


def component_masks(g: Graph, alive: int) -> list[int]:
    """Connected components of the subgraph induced by ``alive``.

    Iterative frontier expansion; components come out ordered by their
    smallest vertex.
    """
    nbrs = g.nbr_masks
    comps = []
    rest = alive
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= nbrs[v]
            frontier = reach & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected_mask(g: Graph, alive: int) -> bool:
    if not alive:
        return True
    nbrs = g.nbr_masks
    comp = frontier = alive & -alive
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= nbrs[v]
        frontier = reach & alive & ~comp
        comp |= frontier
    return comp == alive


# set-level operations ------------------------------------------------------


def open_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    return set_of(neighborhood_mask(g, g.mask(s)))


def closed_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    m = g.mask(s)
    return set_of(neighborhood_mask(g, m) | m)


def components(g: Graph, f: Iterable[int]) -> list[frozenset[int]]:
    """Components of ``G - F`` sorted by smallest member."""
    alive = g.full_mask & ~g.mask(f)
    return [set_of(c) for c in component_masks(g, alive)]


def distance(g: Graph, u: int, v: int) -> Optional[int]:
    """Shortest-path length, or ``None`` when ``v`` is unreachable from ``u``."""
    g.check_vertex(u)
    g.check_vertex(v)
    target = 1 << v
    seen = frontier = 1 << u
    d = 0
    while frontier:
        if frontier & target:
            return d
        reach = 0
        for w in iter_bits(frontier):
            reach |= g.nbr_masks[w]
        frontier = reach & ~seen
        seen |= frontier
        d += 1
    return None


def common_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise InvalidInputError("common_neighbors needs two distinct vertices")
    return set_of(g.nbr_masks[u] & g.nbr_masks[v])


def is_vertex_cut(g: Graph, f: Iterable[int]) -> bool:
    removed = g.mask(f)
    if removed == g.full_mask:
        raise InvalidInputError("F = V(G) leaves an empty survival graph")
    return not is_connected_mask(g, g.full_mask & ~removed)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced on ``s``, re-indexed in ascending order of original index."""
    keep = sorted(set(s))
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in g.edges() if u in pos and v in pos]
    return Graph.from_edges([g.labels[v] for v in keep], edges)
