"""Seed sets Y whose neighbourhoods give the upper-bound witnesses.

For each construction ``N(Y)`` and ``N^c(Y)`` form an indistinguishable pair
under both diagnostic models, so ``t <= |N^c(Y)| - 1`` whenever ``N(Y)`` is
faulty in the model at hand.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Optional

from .errors import RangeError, VerificationFailedError
from .fault_models import FaultModelSpec, is_faulty_mask
from .graph import Graph, component_masks, neighborhood_mask, set_of
from .topology import arrangement, decompose_by_last_symbol, hypercube, nk_star


@dataclass(frozen=True)
class WitnessPair:
    graph: Graph = field(repr=False)
    y: frozenset[int]
    boundary: frozenset[int]
    closed: frozenset[int]
    predicted_boundary_size: int
    family_tag: str
    g: int
    validation: dict = field(default_factory=dict, compare=False)

    @property
    def measured_boundary_size(self) -> int:
        return len(self.boundary)

    @property
    def matches_prediction(self) -> bool:
        return len(self.boundary) == self.predicted_boundary_size

    def to_dict(self) -> dict:
        g = self.graph
        return {
            "family_tag": self.family_tag,
            "params": dict(g.params),
            "g": self.g,
            "Y": g.labels_of(self.y),
            "boundary": g.labels_of(self.boundary),
            "predicted_boundary_size": self.predicted_boundary_size,
            "measured_boundary_size": len(self.boundary),
            "closed_size": len(self.closed),
            "validation": self.validation,
        }


def validate_witness(g: Graph, y: frozenset[int], gg: int) -> dict:
    """Shape checks on ``G - N(Y)`` used by the upper-bound argument."""
    ym = g.mask(y)
    bnd = neighborhood_mask(g, ym)
    closed = bnd | ym
    comps = component_masks(g, g.full_mask & ~bnd)
    sizes = sorted(c.bit_count() for c in comps)
    return {
        "components": sizes,
        "two_components": len(comps) == 2,
        "all_components_large": all(s >= gg + 1 for s in sizes),
        "outside_closed_nonempty": closed != g.full_mask,
        "boundary_is_g_extra": is_faulty_mask(g, bnd, FaultModelSpec.extra(gg)),
    }


def _validated(v: dict) -> bool:
    return v["two_components"] and v["all_components_large"] and v["outside_closed_nonempty"]


def _build(g: Graph, y: frozenset[int], predicted: int, tag: str, gg: int, strict: bool) -> WitnessPair:
    ym = g.mask(y)
    bnd = neighborhood_mask(g, ym)
    v = validate_witness(g, y, gg)
    wp = WitnessPair(g, frozenset(y), set_of(bnd), set_of(bnd | ym), predicted, tag, gg, v)
    if strict:
        if not wp.matches_prediction:
            raise VerificationFailedError(
                f"{tag}: |N(Y)| = {len(wp.boundary)} but the closed form gives {predicted}"
            )
        if not _validated(v):
            raise VerificationFailedError(f"{tag}: N(Y) fails the two-component shape check {v}")
    return wp


# hypercube -------------------------------------------------------------------


def hypercube_star_boundary_size(n: int, g: int) -> int:
    return (g + 1) * (2 * (n - 1) - g) // 2 + 1


def hypercube_star_closed_size(n: int, g: int) -> int:
    return (g + 1) * (2 * n - g) // 2 + 1


def hypercube_star_witness(
    n: int, g: int, positions: Optional[Sequence[int]] = None, graph: Optional[Graph] = None
) -> WitnessPair:
    """Star ``K_{1,g}`` centred at 0...0 in ``Q_n``.

    Leaf ``u_i`` carries a single 1 at string position ``i`` (0 = leftmost), so
    ``u_1 = 010...0``. ``positions`` picks other leaf positions.
    """
    if n < 4 or not 0 <= g <= n - 3:
        raise RangeError(f"hypercube star witness needs n >= 4 and 0 <= g <= n-3, got n={n}, g={g}")
    if positions is None:
        positions = range(1, g + 1)
    positions = list(positions)
    if len(positions) != g or len(set(positions)) != g or not all(0 <= p < n for p in positions):
        raise RangeError(f"need {g} distinct string positions in [0, {n - 1}]")
    G = graph if graph is not None else hypercube(n)
    ys = {"0" * n} | {"0" * p + "1" + "0" * (n - p - 1) for p in positions}
    y = frozenset(G.index(lab) for lab in ys)
    return _build(G, y, hypercube_star_boundary_size(n, g), "hypercube_star", g, strict=True)


Q4_PAIR_LABELS = (
    ("0000", "0101", "0011", "1100", "1010", "1111"),
    ("0110", "0101", "0011", "1100", "1010", "1001"),
)


def q4_indistinguishable_pair() -> tuple[frozenset[int], frozenset[int]]:
    """A 1-extra pair in ``Q_4`` with no MM* comparator able to separate it."""
    return tuple(frozenset(int(lab, 2) for lab in side) for side in Q4_PAIR_LABELS)


# (n,k)-star ------------------------------------------------------------------


def nk_star_boundary_size(n: int, k: int, g: int) -> int:
    return n + g * (k - 2) - 1


def nk_star_witness(n: int, k: int, g: int, graph: Optional[Graph] = None) -> WitnessPair:
    """``Y = {[j, n-k+2, ..., n] : j = 1..g+1}``, a clique inside the block ending in n.

    k = 2 is built and measured but not held to the closed form.
    """
    if n < 4 or not 2 <= k < n or not 1 <= g <= n - k:
        raise RangeError(f"nk_star witness needs n >= 4, 2 <= k < n, 1 <= g <= n-k; got {(n, k, g)}")
    G = graph if graph is not None else nk_star(n, k)
    tail = list(range(n - k + 2, n + 1))
    y = frozenset(G.index([j] + tail) for j in range(1, g + 2))
    return _build(G, y, nk_star_boundary_size(n, k, g), "nk_star", g, strict=k >= 3)


def nk_star_block_census(wp: WitnessPair) -> dict[int, int]:
    """``|H_j & N(Y)|`` for every last-symbol block ``H_j``."""
    blocks = decompose_by_last_symbol(wp.graph)
    return {j: len(h & wp.boundary) for j, h in blocks.items()}


def nk_star_predicted_census(n: int, k: int, g: int) -> dict[int, int]:
    # each u_j has exactly one neighbour outside the last block: swap the
    # first and last symbols, landing in H_j
    out = {j: (1 if j <= g + 1 else 0) for j in range(1, n)}
    out[n] = nk_star_boundary_size(n, k, g) - (g + 1)
    return out


def nk_star_uncorrected_last_block(n: int, k: int, g: int) -> int:
    """Uncorrected last-block count ``n + g(k-2) - 2``; it does not add up with the other blocks."""
    return n + g * (k - 2) - 2


# arrangement -----------------------------------------------------------------

ARRANGEMENT_SHAPES = ("P3", "C3", "C4", "P4")
_SHAPE_G = {"P3": 2, "C3": 2, "C4": 3, "P4": 3}


def arrangement_boundary_size(n: int, k: int, shape: str) -> int:
    m = n - k
    if shape == "P3":
        return (3 * k - 2) * m - 3
    if shape == "C3":
        return (3 * k - 2) * m - 2
    if shape == "C4":
        return 4 * ((k - 1) * m - 1)
    if shape == "P4":
        return (4 * k - 3) * m - 5
    raise RangeError(f"unknown shape {shape!r}; choose from {ARRANGEMENT_SHAPES}")


def arrangement_uncorrected_boundary_size(n: int, k: int, shape: str) -> int:
    """Uncorrected closed forms; only P4 differs, by the two shared neighbours of its distance-2 pairs."""
    if shape == "P4":
        return (4 * k - 3) * (n - k) - 3
    return arrangement_boundary_size(n, k, shape)


def arrangement_seed(n: int, k: int, shape: str) -> list[tuple[int, ...]]:
    base = tuple(range(1, k + 1))

    def put(changes: dict[int, int]) -> tuple[int, ...]:
        p = list(base)
        for pos, sym in changes.items():
            p[pos] = sym
        return tuple(p)

    a, b = k + 1, k + 2
    if shape == "P3":
        return [base, put({1: a}), put({0: b, 1: a})]
    if shape == "C3":
        return [base, put({0: a}), put({0: b})]
    if shape == "C4":
        return [base, put({0: a}), put({0: a, 1: b}), put({1: b})]
    if shape == "P4":
        return [base, put({0: a}), put({0: a, 1: b}), put({0: a, 1: b, 2: 1})]
    raise RangeError(f"unknown shape {shape!r}; choose from {ARRANGEMENT_SHAPES}")


def arrangement_witness(n: int, k: int, shape: str, graph: Optional[Graph] = None) -> WitnessPair:
    """Path or cycle seeds in ``A_{n,k}``.

    P3 (g=2) and C4 (g=3) are checked as g-extra cuts with two large
    components; C3 and P4 exist for size comparison.
    """
    if shape not in ARRANGEMENT_SHAPES:
        raise RangeError(f"unknown shape {shape!r}; choose from {ARRANGEMENT_SHAPES}")
    if shape in ("P3", "C3"):
        if not 4 <= k <= n - 2:
            raise RangeError(f"{shape} witness needs 4 <= k <= n-2, got n={n}, k={k}")
    elif n < 7 or not 4 <= k <= n - 2:
        raise RangeError(f"{shape} witness needs n >= 7 and 4 <= k <= n-2, got n={n}, k={k}")
    G = graph if graph is not None else arrangement(n, k)
    y = frozenset(G.index(p) for p in arrangement_seed(n, k, shape))
    gg = _SHAPE_G[shape]
    wp = _build(G, y, arrangement_boundary_size(n, k, shape), f"arrangement_{shape}", gg, strict=False)
    if not wp.matches_prediction:
        raise VerificationFailedError(
            f"{shape}: |N(Y)| = {len(wp.boundary)} but the closed form gives {wp.predicted_boundary_size}"
        )
    if shape in ("P3", "C4") and not (_validated(wp.validation) and wp.validation["boundary_is_g_extra"]):
        raise VerificationFailedError(f"{shape}: N(Y) fails the {gg}-extra shape check {wp.validation}")
    return wp
