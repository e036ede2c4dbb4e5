"""Generators for hypercubes, (n,k)-star graphs and arrangement graphs.

Permutation families are labelled by k-permutations of ``1..n`` rendered as
``"[p1,...,pk]"``; vertex indices follow lexicographic order of the tuples.
Hypercube labels are n-bit strings whose position 0 is the leftmost
character, and index = integer value of the string.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Optional

from .errors import InvalidInputError
from .graph import Graph, format_label, iter_bits, set_of

FAMILIES = ("hypercube", "nk_star", "arrangement")


@dataclass(frozen=True)
class TopologySpec:
    family: str
    n: int
    k: Optional[int] = None

    def __post_init__(self) -> None:
        fam = self.family.replace("-", "_")
        object.__setattr__(self, "family", fam)
        if fam not in FAMILIES:
            raise InvalidInputError(f"unknown family {self.family!r}")
        if fam == "hypercube":
            if self.k is not None:
                raise InvalidInputError("hypercube takes no k parameter")
            if self.n < 1:
                raise InvalidInputError("hypercube needs n >= 1")
        else:
            if self.k is None:
                raise InvalidInputError(f"{fam} needs a k parameter")
            if self.n < 2 or not 1 <= self.k < self.n:
                raise InvalidInputError(f"{fam} needs n >= 2 and 1 <= k < n")

    def build(self) -> Graph:
        if self.family == "hypercube":
            return hypercube(self.n)
        if self.family == "nk_star":
            return nk_star(self.n, self.k)
        return arrangement(self.n, self.k)

    def to_dict(self) -> dict:
        d = {"family": self.family, "n": self.n}
        if self.k is not None:
            d["k"] = self.k
        return d


def hypercube(n: int) -> Graph:
    if not isinstance(n, int) or n < 1:
        raise InvalidInputError("hypercube needs n >= 1")
    size = 1 << n
    labels = tuple(format(i, f"0{n}b") for i in range(size))
    nbrs = []
    for i in range(size):
        m = 0
        for b in range(n):
            m |= 1 << (i ^ (1 << b))
        nbrs.append(m)
    return Graph(labels, tuple(nbrs), "hypercube", {"n": n})


def _check_perm_params(name: str, n: int, k: int) -> None:
    if not (isinstance(n, int) and isinstance(k, int)) or n < 2 or not 1 <= k < n:
        raise InvalidInputError(f"{name} needs n >= 2 and 1 <= k < n, got n={n}, k={k}")


def _perm_graph(n: int, k: int, family: str, moves) -> Graph:
    perms = list(itertools.permutations(range(1, n + 1), k))
    index = {p: i for i, p in enumerate(perms)}
    nbrs = []
    for p in perms:
        m = 0
        for q in moves(p):
            m |= 1 << index[q]
        nbrs.append(m)
    return Graph(tuple(format_label(p) for p in perms), tuple(nbrs), family, {"n": n, "k": k})


def nk_star(n: int, k: int) -> Graph:
    """(n,k)-star: swap the first symbol with position i, or replace it by an unused symbol."""
    _check_perm_params("nk_star", n, k)
    symbols = range(1, n + 1)

    def moves(p):
        for i in range(1, k):
            q = list(p)
            q[0], q[i] = q[i], q[0]
            yield tuple(q)
        used = set(p)
        for e in symbols:
            if e not in used:
                yield (e,) + p[1:]

    return _perm_graph(n, k, "nk_star", moves)


def arrangement(n: int, k: int) -> Graph:
    """Arrangement graph: k-permutations adjacent iff they differ in exactly one position."""
    _check_perm_params("arrangement", n, k)
    symbols = range(1, n + 1)

    def moves(p):
        used = set(p)
        for i in range(k):
            for e in symbols:
                if e not in used:
                    yield p[:i] + (e,) + p[i + 1:]

    return _perm_graph(n, k, "arrangement", moves)


def perm_of(g: Graph, v: int) -> tuple[int, ...]:
    lab = g.labels[v]
    return tuple(int(x) for x in lab.strip("[]").split(","))


def decompose_by_last_symbol(g: Graph) -> dict[int, frozenset[int]]:
    """Split a permutation-family graph into blocks ``H_i`` by last symbol."""
    if g.family not in ("nk_star", "arrangement"):
        raise InvalidInputError("decompose_by_last_symbol needs an nk_star or arrangement graph")
    n, k = g.params["n"], g.params["k"]
    if k < 2:
        raise InvalidInputError("decomposition by last symbol needs k >= 2")
    blocks: dict[int, set[int]] = {i: set() for i in range(1, n + 1)}
    for v in range(g.vertex_count):
        blocks[perm_of(g, v)[-1]].add(v)
    return {i: frozenset(b) for i, b in blocks.items()}


def cross_edge_count(g: Graph, a: frozenset[int], b: frozenset[int]) -> int:
    bm = 0
    for v in b:
        bm |= 1 << v
    return sum((g.nbr_masks[v] & bm).bit_count() for v in a)


def expected_cross_edges(family: str, n: int, k: int) -> int:
    """Number of edges between two distinct last-symbol blocks."""
    if family == "nk_star":
        return factorial(n - 2) // factorial(n - k)
    if family == "arrangement":
        return factorial(n - 2) // factorial(n - k - 1)
    raise InvalidInputError(f"no block structure for {family!r}")


def hypercube_bit_split(g: Graph, bit: int) -> tuple[frozenset[int], frozenset[int]]:
    """Halves of a hypercube by the value at string position ``bit`` (0 = leftmost)."""
    if g.family != "hypercube":
        raise InvalidInputError("hypercube_bit_split needs a hypercube")
    n = g.params["n"]
    if not 0 <= bit < n:
        raise InvalidInputError(f"bit must lie in [0, {n - 1}]")
    shift = n - 1 - bit
    low = high = 0
    for v in range(g.vertex_count):
        if (v >> shift) & 1:
            high |= 1 << v
        else:
            low |= 1 << v
    return set_of(low), set_of(high)


def expected_counts(family: str, n: int, k: Optional[int] = None) -> tuple[int, int, int]:
    """(vertex count, edge count, degree) for a family member."""
    if family == "hypercube":
        return 1 << n, n << (n - 1), n
    v = factorial(n) // factorial(n - k)
    deg = n - 1 if family == "nk_star" else k * (n - k)
    return v, v * deg // 2, deg


def arrangement_common_neighbor_count(n: int, k: int, d: Optional[int]) -> int:
    """Predicted |N(u) & N(v)| for arrangement-graph vertices at distance ``d``."""
    if d == 1:
        return n - k - 1
    if d == 2:
        return 2 if n >= k + 2 else 1
    return 0


def exact_common_neighbor_count(n: int, p: tuple[int, ...], q: tuple[int, ...]) -> int:
    """|N(p) & N(q)| in ``A_{n,k}`` from the positions where p and q differ.

    A common neighbour agrees with p everywhere except one differing
    position, where it already carries q's symbol; that is only possible
    when q's symbol there is unused in p.
    """
    diff = [i for i in range(len(p)) if p[i] != q[i]]
    if not diff:
        raise InvalidInputError("p and q must differ")
    if len(diff) == 1:
        return n - len(p) - 1
    if len(diff) == 2:
        used = set(p)
        return sum(q[i] not in used for i in diff)
    return 0


def check_exact_common_neighbors(g: Graph) -> list[tuple[int, int, int, int]]:
    """Violations of :func:`exact_common_neighbor_count` over all vertex pairs."""
    n = g.params["n"]
    perms = [perm_of(g, v) for v in range(g.vertex_count)]
    bad = []
    for u in range(g.vertex_count):
        for v in range(u + 1, g.vertex_count):
            got = (g.nbr_masks[u] & g.nbr_masks[v]).bit_count()
            want = exact_common_neighbor_count(n, perms[u], perms[v])
            if got != want:
                bad.append((u, v, got, want))
    return bad


def check_lemma_common_neighbors(g: Graph) -> list[tuple[int, int, int, int]]:
    """Exhaustively compare common-neighbour counts with the distance rule.

    Returns the violating ``(u, v, measured, predicted)`` tuples; an empty list
    means the rule holds on every pair.
    """
    n, k = g.params["n"], g.params["k"]
    bad = []
    for u in range(g.vertex_count):
        dists = _bfs_layers(g, u)
        for v in range(u + 1, g.vertex_count):
            got = (g.nbr_masks[u] & g.nbr_masks[v]).bit_count()
            want = arrangement_common_neighbor_count(n, k, dists.get(v))
            if got != want:
                bad.append((u, v, got, want))
    return bad


def _bfs_layers(g: Graph, src: int) -> dict[int, int]:
    dist = {src: 0}
    seen = frontier = 1 << src
    d = 0
    while frontier:
        d += 1
        reach = 0
        for w in iter_bits(frontier):
            reach |= g.nbr_masks[w]
        frontier = reach & ~seen
        seen |= frontier
        for w in iter_bits(frontier):
            dist[w] = d
    return dist
