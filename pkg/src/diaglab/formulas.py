"""Closed-form connectivity and diagnosability values with their validity ranges.

Every entry refuses to evaluate outside its range. Entries that state the
same quantity over different ranges are kept separate and compared on
their overlap by :func:`consistency_checks`.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Union

from .errors import InvalidInputError, RangeError

Value = Union[int, tuple[int, int]]


@dataclass(frozen=True)
class FormulaEntry:
    id: str
    family: str
    quantity: str  # kappa_g | kappa_bar_g | t_g | t_bar_g | t_c | upper_bound_t_g
    diagnostic: str  # PMC | MMstar | both | none
    g_fixed: Optional[int]
    valid: Callable[[int, Optional[int], int], bool]
    range_text: str
    evaluator: Callable[[int, Optional[int], int], Value]
    citation: str
    notes: str = ""
    kappa_partner: Optional[str] = None
    interval: bool = False

    @property
    def uses_k(self) -> bool:
        return self.family != "hypercube"

    def in_range(self, n: int, k: Optional[int] = None, g: Optional[int] = None) -> bool:
        try:
            n, k, g = self._normalize(n, k, g)
        except RangeError:
            return False
        return bool(self.valid(n, k, g))

    def _normalize(self, n, k, g):
        if self.uses_k and k is None:
            raise RangeError(f"{self.id} needs k; valid for {self.range_text}")
        if not self.uses_k and k is not None:
            raise RangeError(f"{self.id} takes no k; valid for {self.range_text}")
        if self.g_fixed is not None:
            if g is not None and g != self.g_fixed:
                raise RangeError(f"{self.id} is stated for g = {self.g_fixed} only")
            g = self.g_fixed
        elif g is None:
            raise RangeError(f"{self.id} needs g; valid for {self.range_text}")
        return n, k, g

    def evaluate(self, n: int, k: Optional[int] = None, g: Optional[int] = None) -> Value:
        n, k, g = self._normalize(n, k, g)
        if not self.valid(n, k, g):
            raise RangeError(f"{self.id} is valid only for {self.range_text}; got n={n}, k={k}, g={g}")
        return self.evaluator(n, k, g)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "quantity": self.quantity,
            "family": self.family,
            "diagnostic": self.diagnostic,
            "range": self.range_text,
            "citation": self.citation,
            "notes": self.notes,
        }


def _hyp_kappa_bar(n: int, g: int) -> int:
    return (g + 1) * (2 * (n - 1) - g) // 2 + 1


def _hyp_ext_branch(n: int, g: int) -> Optional[int]:
    """Branch index (0-4) of the piecewise hypercube formula, or None."""
    if n >= 5 and 0 <= g <= n - 4:
        return 0
    if n >= 5 and n - 3 <= g <= n:
        return 1
    if n >= 7 and n + 1 <= g <= 2 * n - 5:
        return 2
    if n >= 7 and 2 * n - 4 <= g <= 2 * n - 1:
        return 3
    if n >= 9 and 2 * n <= g <= 3 * n - 7:
        return 4
    return None


def _hyp_kappa_bar_ext(n: int, g: int) -> int:
    half = Fraction(1, 2)
    branch = _hyp_ext_branch(n, g)
    if branch in (0, 1):
        x = g + 1 if branch == 0 else n - 2
        val = -half * x * x + (n - half) * x + 1
    elif branch in (2, 3):
        x = g + 1 if branch == 2 else 2 * n - 3
        val = -half * x * x + (2 * n - Fraction(3, 2)) * x - n * n + 2
    else:
        x = g + 1
        val = -half * x * x + (3 * n - Fraction(7, 2)) * x - 3 * n * n + 4 * n + 2
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral value {val} at n={n}, g={g}")
    return int(val)


def _arr_t1_mm_range(n: int, k: int) -> bool:
    return (n >= 6 and 5 <= k < n - 1) or (n >= 11 and 10 <= k < n)


_ENTRIES: list[FormulaEntry] = [
    # (n,k)-star
    FormulaEntry(
        "kappa_g_nkstar", "nk_star", "kappa_g", "none", None,
        lambda n, k, g: n >= 3 and 2 <= k < n and 0 <= g <= n - k,
        "n >= 3, k in [2, n), g in [0, n-k]",
        lambda n, k, g: n + g * (k - 2) - 1,
        "kappa_g(S_{n,k}) = n + g(k-2) - 1",
    ),
    FormulaEntry(
        "t_g_nkstar_pmc", "nk_star", "t_g", "PMC", None,
        lambda n, k, g: n >= 4 and 2 <= k < n and 0 <= g <= n - k,
        "n >= 4, k in [2, n), g in [0, n-k]",
        lambda n, k, g: n + g * (k - 1) - 1,
        "t_g(S_{n,k}, PMC) = n + g(k-1) - 1",
        kappa_partner="kappa_g_nkstar",
    ),
    FormulaEntry(
        "upper_t_g_nkstar", "nk_star", "upper_bound_t_g", "both", None,
        lambda n, k, g: n >= 4 and 2 <= k < n and 0 <= g <= n - k,
        "n >= 4, k in [2, n), g in [0, n-k]",
        lambda n, k, g: n + g * (k - 1) - 1,
        "t_g(S_{n,k}, D) <= n + g(k-1) - 1",
    ),
    FormulaEntry(
        "t_1_nkstar", "nk_star", "t_g", "both", 1,
        lambda n, k, g: n >= 4 and 3 <= k < n,
        "n >= 4, k in [3, n), g = 1",
        lambda n, k, g: n + k - 2,
        "t_1(S_{n,k}, D) = n + k - 2",
    ),
    FormulaEntry(
        "t_c_nkstar", "nk_star", "t_c", "MMstar", 0,
        lambda n, k, g: n >= 4 and 3 <= k < n,
        "n >= 4, k in [3, n)",
        lambda n, k, g: n + 2 * k - 5,
        "t_c(S_{n,k}) = n + 2k - 5",
        notes="model inferred from S_{4,3}: MM* gives 5, PMC gives at least 7",
    ),
    FormulaEntry(
        "t_bar_1_nkstar", "nk_star", "t_bar_g", "both", 1,
        lambda n, k, g: n >= 4 and 3 <= k < n,
        "n >= 4, k in [3, n), g = 1",
        lambda n, k, g: n + k - 2,
        "tbar_1(S_{n,k}, D) = n + k - 2",
        notes="k = 2 is kept for PMC only: tbar_1(S_{4,2}, MM*) = 3 by enumeration",
        kappa_partner="kappa_bar_g_nkstar",
    ),
    FormulaEntry(
        "t_bar_1_nkstar_pmc", "nk_star", "t_bar_g", "PMC", 1,
        lambda n, k, g: n >= 4 and 2 <= k < n,
        "n >= 4, k in [2, n), g = 1",
        lambda n, k, g: n + k - 2,
        "tbar_1(S_{n,k}, PMC) = n + k - 2",
    ),
    FormulaEntry(
        "kappa_bar_g_nkstar", "nk_star", "kappa_bar_g", "none", None,
        lambda n, k, g: n >= 4 and 3 <= k < n and 1 <= g <= n - k,
        "n >= 4, k in [3, n), g in [1, n-k]",
        lambda n, k, g: n + g * (k - 2) - 1,
        "kappa_bar_g(S_{n,k}) = n + g(k-2) - 1",
    ),
    FormulaEntry(
        "t_bar_g_nkstar_pmc", "nk_star", "t_bar_g", "PMC", None,
        lambda n, k, g: n >= 4 and 3 <= k < n and 1 <= g <= n - k,
        "n >= 4, k in [3, n), g in [1, n-k]",
        lambda n, k, g: n + g * (k - 1) - 1,
        "tbar_g(S_{n,k}, PMC) = n + g(k-1) - 1",
        kappa_partner="kappa_bar_g_nkstar",
    ),
    FormulaEntry(
        "t_bar_g_nkstar_mmstar", "nk_star", "t_bar_g", "MMstar", None,
        lambda n, k, g: n >= 4 and 3 <= k < n and 1 <= g <= n - k,
        "n >= 4, k in [3, n), g in [1, n-k]",
        lambda n, k, g: n + g * (k - 1) - 1,
        "tbar_g(S_{n,k}, MM*) = n + g(k-1) - 1",
        kappa_partner="kappa_bar_g_nkstar",
    ),
    # arrangement
    FormulaEntry(
        "upper_t_g_arrangement", "arrangement", "upper_bound_t_g", "both", None,
        lambda n, k, g: n >= 3 and 2 <= k < n and 0 <= g < n - k,
        "n >= 3, k in [2, n), g in [0, n-k)",
        lambda n, k, g: (n - k) * ((g + 1) * (k - 1) + 1),
        "t_g(A_{n,k}, D) <= (n-k)[(g+1)(k-1) + 1]",
    ),
    FormulaEntry(
        "kappa_2_arrangement_k2", "arrangement", "kappa_g", "none", 2,
        lambda n, k, g: n >= 8 and k == 2,
        "n >= 8, k = 2, g = 2",
        lambda n, k, g: 4 * n - 12,
        "kappa_2(A_{n,2}) = 4n - 12",
    ),
    FormulaEntry(
        "kappa_2_arrangement", "arrangement", "kappa_g", "none", 2,
        lambda n, k, g: n >= 8 and 3 <= k < n and (k <= n - 5 or k >= n - 2),
        "n >= 8, k in [3, n-5] or k in {n-2, n-1}, g = 2",
        lambda n, k, g: (3 * k - 2) * (n - k) - 2,
        "kappa_2(A_{n,k}) = (3k-2)(n-k) - 2",
        notes="n >= 8 applies to every k: kappa_2(A_{4,3}) = 6, not 5",
    ),
    FormulaEntry(
        "t_2_arrangement_mmstar", "arrangement", "t_g", "MMstar", 2,
        lambda n, k, g: n >= 7 and 4 <= k < n - 1,
        "n >= 7, k in [4, n-1), g = 2",
        lambda n, k, g: (3 * k - 2) * (n - k),
        "t_2(A_{n,k}, MM*) = (3k-2)(n-k)",
        kappa_partner="kappa_2_arrangement",
    ),
    FormulaEntry(
        "t_2_arrangement", "arrangement", "t_g", "both", 2,
        lambda n, k, g: n >= 7 and 4 <= k < n - 1,
        "n >= 7, k in [4, n-1), g = 2",
        lambda n, k, g: (3 * k - 2) * (n - k),
        "t_2(A_{n,k}, D) = (3k-2)(n-k)",
        kappa_partner="kappa_2_arrangement",
    ),
    FormulaEntry(
        "kappa_1_arrangement", "arrangement", "kappa_g", "none", 1,
        lambda n, k, g: n >= 3 and n != 4 and 2 <= k < n,
        "n >= 3, n != 4, k in [2, n), g = 1",
        lambda n, k, g: (2 * k - 1) * (n - k) - 1,
        "kappa_1(A_{n,k}) = (2k-1)(n-k) - 1",
    ),
    FormulaEntry(
        "kappa_1_arrangement_special", "arrangement", "kappa_g", "none", 1,
        lambda n, k, g: n == 4 and k in (2, 3),
        "n = 4, k in {2, 3}, g = 1",
        lambda n, k, g: 4,
        "kappa_1(A_{4,2}) = kappa_1(A_{4,3}) = 4",
    ),
    FormulaEntry(
        "t_1_arrangement_mmstar", "arrangement", "t_g", "MMstar", 1,
        lambda n, k, g: _arr_t1_mm_range(n, k),
        "n >= 6 with k in [5, n-1), or n >= 11 with k in [10, n); g = 1",
        lambda n, k, g: (2 * k - 1) * (n - k),
        "t_1(A_{n,k}, MM*) = (2k-1)(n-k)",
        kappa_partner="kappa_1_arrangement",
    ),
    FormulaEntry(
        "t_bar_1_arrangement_pmc", "arrangement", "t_bar_g", "PMC", 1,
        lambda n, k, g: n >= 5 and 2 <= k < n,
        "n >= 5, k in [2, n), g = 1",
        lambda n, k, g: (2 * k - 1) * (n - k),
        "tbar_1(A_{n,k}, PMC) = (2k-1)(n-k)",
        kappa_partner="kappa_1_arrangement",
    ),
    FormulaEntry(
        "t_bar_1_arrangement_mmstar", "arrangement", "t_bar_g", "MMstar", 1,
        lambda n, k, g: _arr_t1_mm_range(n, k),
        "n >= 6 with k in [5, n-1), or n >= 11 with k in [10, n); g = 1",
        lambda n, k, g: (2 * k - 1) * (n - k),
        "tbar_1(A_{n,k}, MM*) = (2k-1)(n-k)",
        kappa_partner="kappa_1_arrangement",
    ),
    FormulaEntry(
        "kappa_bar_2_arrangement", "arrangement", "kappa_bar_g", "none", 2,
        lambda n, k, g: n >= 8 and 3 <= k <= n - 5,
        "n >= 8, k in [3, n-5], g = 2",
        lambda n, k, g: (3 * k - 2) * (n - k) - 3,
        "kappa_bar_2(A_{n,k}) = (3k-2)(n-k) - 3",
    ),
    FormulaEntry(
        "t_bar_2_arrangement", "arrangement", "t_bar_g", "both", 2,
        lambda n, k, g: n >= 8 and 3 <= k <= n - 5,
        "n >= 8, k in [3, n-5], g = 2",
        lambda n, k, g: (3 * k - 2) * (n - k) - 1,
        "tbar_2(A_{n,k}, D) = (3k-2)(n-k) - 1",
        notes="the PMC case is also reported for n >= 6, k in [4, n-2]; only the range above is stored",
        kappa_partner="kappa_bar_2_arrangement",
    ),
    FormulaEntry(
        "kappa_bar_3_arrangement", "arrangement", "kappa_bar_g", "none", 3,
        lambda n, k, g: n >= 6 and (3 <= k <= n - 3 or 4 <= k <= n - 2),
        "n >= 6, k in [3, n-3] or k in [4, n-2], g = 3",
        lambda n, k, g: 4 * (k - 1) * (n - k) - 4,
        "kappa_bar_3(A_{n,k}) = 4(k-1)(n-k) - 4",
    ),
    FormulaEntry(
        "t_bar_3_arrangement", "arrangement", "t_bar_g", "both", 3,
        lambda n, k, g: n >= 7 and 4 <= k <= n - 3,
        "n >= 7, k in [4, n-3], g = 3",
        lambda n, k, g: 4 * (k - 1) * (n - k) - 1,
        "tbar_3(A_{n,k}, D) = 4(k-1)(n-k) - 1",
        notes="the PMC case is also reported for n >= 6, k in [3, n-3]; only the range above is stored",
        kappa_partner="kappa_bar_3_arrangement",
    ),
    FormulaEntry(
        "t_3_arrangement_interval", "arrangement", "t_g", "both", 3,
        lambda n, k, g: n >= 6 and 3 <= k <= n - 3,
        "n >= 6, k in [3, n-3], g = 3",
        lambda n, k, g: (4 * (k - 1) * (n - k) - 1, 4 * (k - 1) * (n - k) + n - k),
        "4(k-1)(n-k) - 1 <= t_3(A_{n,k}, D) <= 4(k-1)(n-k) + n - k",
        interval=True,
    ),
    # hypercube
    FormulaEntry(
        "kappa_bar_g_hypercube", "hypercube", "kappa_bar_g", "none", None,
        lambda n, k, g: n >= 4 and 0 <= g <= n - 3,
        "n >= 4, g in [0, n-3]",
        lambda n, k, g: _hyp_kappa_bar(n, g),
        "kappa_bar_g(Q_n) = (g+1)[2(n-1) - g]/2 + 1",
    ),
    FormulaEntry(
        "kappa_bar_g_hypercube_extended", "hypercube", "kappa_bar_g", "none", None,
        lambda n, k, g: _hyp_ext_branch(n, g) is not None,
        "n >= 5, g in [0, n]; n >= 7, g in [n+1, 2n-1]; n >= 9, g in [2n, 3n-7]",
        lambda n, k, g: _hyp_kappa_bar_ext(n, g),
        "kappa_bar_g(Q_n), five-branch piecewise quadratic in g+1",
    ),
    FormulaEntry(
        "t_bar_g_hypercube_pmc", "hypercube", "t_bar_g", "PMC", None,
        lambda n, k, g: n >= 4 and 1 <= g <= n - 3,
        "n >= 4, g in [1, n-3]",
        lambda n, k, g: (g + 1) * (2 * n - g) // 2,
        "tbar_g(Q_n, PMC) = (g+1)(2n - g)/2",
        kappa_partner="kappa_bar_g_hypercube",
    ),
    FormulaEntry(
        "t_bar_g_hypercube_pmc_extended", "hypercube", "t_bar_g", "PMC", None,
        lambda n, k, g: n >= 9 and 0 <= g <= 3 * n - 7,
        "n >= 9, g in [0, 3n-7]",
        lambda n, k, g: _hyp_kappa_bar_ext(n, g) + g,
        "tbar_g(Q_n, PMC) = kappa_bar_g(Q_n) + g",
        kappa_partner="kappa_bar_g_hypercube_extended",
    ),
    FormulaEntry(
        "t_bar_1_hypercube_mmstar_small", "hypercube", "t_bar_g", "MMstar", 1,
        lambda n, k, g: n in (3, 4),
        "n in {3, 4}, g = 1",
        lambda n, k, g: {3: 3, 4: 5}[n],
        "tbar_1(Q_3, MM*) = 3 and tbar_1(Q_4, MM*) = 5",
        notes="below kappa_bar + g: survivors can be isolated at this size",
    ),
    FormulaEntry(
        "t_bar_g_hypercube_mmstar", "hypercube", "t_bar_g", "MMstar", None,
        lambda n, k, g: n >= 5 and 1 <= g <= n - 3,
        "n >= 5, g in [1, n-3]",
        lambda n, k, g: (g + 1) * (2 * n - g) // 2,
        "tbar_g(Q_n, MM*) = (g+1)(2n - g)/2",
        kappa_partner="kappa_bar_g_hypercube",
    ),
    FormulaEntry(
        "t_bar_g_hypercube_mmstar_extended", "hypercube", "t_bar_g", "MMstar", None,
        lambda n, k, g: n >= 5 and 0 <= g <= 3 * n - 7 and _hyp_ext_branch(n, g) is not None,
        "n >= 5, g in [0, 3n-7] where the extended kappa_bar_g is defined",
        lambda n, k, g: _hyp_kappa_bar_ext(n, g) + g,
        "tbar_g(Q_n, MM*) = kappa_bar_g(Q_n) + g",
        kappa_partner="kappa_bar_g_hypercube_extended",
    ),
]

CATALOG: dict[str, FormulaEntry] = {e.id: e for e in _ENTRIES}


def get(entry_id: str) -> FormulaEntry:
    try:
        return CATALOG[entry_id]
    except KeyError:
        raise InvalidInputError(f"unknown formula id {entry_id!r}") from None


def evaluate(entry_id: str, n: int, k: Optional[int] = None, g: Optional[int] = None) -> Value:
    return get(entry_id).evaluate(n, k, g)


def catalog_dump() -> list[dict]:
    return [e.to_dict() for e in _ENTRIES]


# cross-checking ---------------------------------------------------------------


@dataclass(frozen=True)
class CheckReport:
    name: str
    status: str  # pass | fail | inconclusive
    expected: Any
    observed: Any
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "expected": self.expected,
                "observed": self.observed, "detail": self.detail}


def _oracle_interval(oracle: Any) -> tuple[int, Optional[int]]:
    # accepts ints, (lo, hi) pairs and the engine's result objects
    if isinstance(oracle, int):
        return oracle, oracle
    if isinstance(oracle, tuple):
        return oracle
    if hasattr(oracle, "kappa"):
        if oracle.kappa is None:
            return oracle.cap + 1, None
        return oracle.kappa, oracle.kappa
    if hasattr(oracle, "t"):
        return (oracle.t, oracle.t) if oracle.exhaustive else (oracle.t, None)
    raise InvalidInputError(f"cannot interpret oracle value {oracle!r}")


def cross_check(entry_id: str, params: dict, oracle: Any) -> CheckReport:
    """Compare one catalog value with an independently computed one."""
    entry = get(entry_id)
    value = entry.evaluate(params.get("n"), params.get("k"), params.get("g"))
    lo, hi = _oracle_interval(oracle)
    name = f"{entry_id}{sorted(params.items())}"
    if entry.interval:
        f_lo, f_hi = value
        if hi is not None and f_lo <= lo and hi <= f_hi:
            status = "pass"
        elif lo > f_hi or (hi is not None and hi < f_lo):
            status = "fail"
        else:
            status = "inconclusive"
    elif entry.quantity == "upper_bound_t_g":
        if hi is not None and hi <= value:
            status = "pass"
        else:
            status = "fail" if lo > value else "inconclusive"
    elif hi is not None:
        status = "pass" if lo == hi == value else "fail"
    else:
        status = "fail" if value < lo else "inconclusive"
    return CheckReport(name, status, value, [lo, hi])


def overlap_check(n_range=range(5, 13)) -> list[CheckReport]:
    """Standard and extended hypercube kappa_bar agree on n >= 5, g <= n-4."""
    out = []
    for n in n_range:
        for g in range(0, n - 3):
            a = evaluate("kappa_bar_g_hypercube", n, g=g)
            b = evaluate("kappa_bar_g_hypercube_extended", n, g=g)
            out.append(CheckReport(f"overlap n={n} g={g}", "pass" if a == b else "fail", a, b))
    return out


def _grid(entry: FormulaEntry, n_max: int) -> Iterator[tuple[int, Optional[int], Optional[int]]]:
    ks = range(1, n_max) if entry.uses_k else [None]
    gs = [entry.g_fixed] if entry.g_fixed is not None else range(0, 3 * n_max)
    for n in range(1, n_max + 1):
        for k in ks:
            if k is not None and k >= n:
                continue
            for g in gs:
                if entry.in_range(n, k, g):
                    yield n, k, g


def identity_checks(n_max: int = 14) -> list[CheckReport]:
    """Diagnosability entries equal their connectivity partner plus g wherever both apply."""
    out = []
    for e in _ENTRIES:
        if e.kappa_partner is None:
            continue
        partner = CATALOG[e.kappa_partner]
        count = bad = 0
        first_bad = None
        for n, k, g in _grid(e, n_max):
            if not partner.in_range(n, k, g):
                continue
            count += 1
            if e.evaluate(n, k, g) != partner.evaluate(n, k, g) + g:
                bad += 1
                first_bad = first_bad or (n, k, g)
        status = "pass" if count and not bad else ("fail" if bad else "inconclusive")
        out.append(CheckReport(f"{e.id} = {partner.id} + g", status, 0, bad,
                               f"{count} shared points" + (f", first mismatch {first_bad}" if first_bad else "")))
    return out


def monotonicity_checks(n_max: int = 14) -> list[CheckReport]:
    """Values of g-indexed diagnosability entries never decrease as g grows."""
    out = []
    for e in _ENTRIES:
        if e.g_fixed is not None or e.quantity not in ("t_g", "t_bar_g"):
            continue
        bad = 0
        for n, k, g in _grid(e, n_max):
            if e.in_range(n, k, g + 1) and e.evaluate(n, k, g + 1) < e.evaluate(n, k, g):
                bad += 1
        out.append(CheckReport(f"{e.id} monotone in g", "fail" if bad else "pass", 0, bad))
    chain = ["t_bar_1_arrangement_pmc", "t_bar_2_arrangement", "t_bar_3_arrangement"]
    bad = 0
    for n in range(2, n_max + 1):
        for k in range(1, n):
            for lo_id, hi_id in zip(chain, chain[1:]):
                lo_e, hi_e = CATALOG[lo_id], CATALOG[hi_id]
                if lo_e.in_range(n, k) and hi_e.in_range(n, k) and lo_e.evaluate(n, k) > hi_e.evaluate(n, k):
                    bad += 1
    out.append(CheckReport("arrangement tbar_1 <= tbar_2 <= tbar_3", "fail" if bad else "pass", 0, bad))
    return out


def strict_gap_checks(n_max: int = 16) -> list[CheckReport]:
    """2-extra diagnosability of arrangement graphs sits strictly below the 2-good-neighbor one."""
    lo_e, hi_e = CATALOG["t_bar_2_arrangement"], CATALOG["t_2_arrangement"]
    count = bad = 0
    for n in range(2, n_max + 1):
        for k in range(1, n):
            if lo_e.in_range(n, k) and hi_e.in_range(n, k):
                count += 1
                if not lo_e.evaluate(n, k) < hi_e.evaluate(n, k):
                    bad += 1
    status = "fail" if bad else ("pass" if count else "inconclusive")
    return [CheckReport("tbar_2(A) < t_2(A)", status, 0, bad, f"{count} shared points")]


def consistency_checks() -> list[CheckReport]:
    return overlap_check() + identity_checks() + monotonicity_checks() + strict_gap_checks()
