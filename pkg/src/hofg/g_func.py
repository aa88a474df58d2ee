"""The staircase function g and the machinery around it.

g is defined by g(0) = 0 and g(n) = n - g(g(n-1)).  It climbs by 0 or 1 at
each step, hits every natural number, and is tied to Fibonacci structure in
a way this package exploits for independent recomputation: the same values
fall out of

* the defining equation, filled ascending into a memo table,
* a rank-shift on the canonical Fibonacci decomposition of n,
* a one-bit recurrence on successive differences, and
* an exact golden-ratio floor formula.

Keeping all four routes alive (rather than collapsing them into the fastest
one) is the point: they cross-validate each other over large ranges.
"""

from __future__ import annotations

from enum import Enum
from math import isqrt

from .errors import DomainError
from .fibonacci import _FIB, checked_add
from .zeckendorf import Decomposition, _greedy_ranks, low, normalize, sum_of

# A DeltaBit is the difference g(n+1) - g(n): always 0 or 1 (same for the
# mirror function).  Stored as a plain int.
DeltaBit = int

# Domain cap for the closed-form route; the other routes are bounded only by
# memory (dense tables) or rank 91 (decompositions).
PHI_DOMAIN = 1 << 31

_SEEDS = {
    ("g", "defining"): (0,),
    ("g", "delta"): (0, 1),
    ("gbar", "defining"): (0, 1, 1, 2),
    ("gbar", "delta"): (0, 1, 1, 2, 3),
}


class Arity(Enum):
    UNARY = 1
    BINARY = 2


class MemoTable:
    """Dense prefix of g or gbar values, indexed from 0, grown on demand.

    Invariants: values[0] == 0; consecutive values step by 0 or 1; the prefix
    is complete (no holes).  Entries never change once written, so one writer
    may extend the table while readers use the already-populated prefix; two
    concurrent writers are the caller's bug.

    which selects the function ("g" or "gbar"); rule selects the fill
    algorithm ("defining" for the function's own equation, "delta" for the
    difference-bit recurrence).  Both rules produce the same values; they
    exist separately so equivalence checks compare genuinely different code
    paths.
    """

    def __init__(self, which: str = "g", rule: str = "defining"):
        try:
            seeds = _SEEDS[(which, rule)]
        except KeyError:
            raise DomainError(f"no table flavor ({which!r}, {rule!r})") from None
        self.which = which
        self.rule = rule
        self._values: list[int] = list(seeds)
        self._fill = getattr(self, f"_fill_{which}_{rule}")

    def __len__(self) -> int:
        return len(self._values)

    def ensure(self, n: int) -> None:
        """Extend the table so that index n is populated."""
        if n >= len(self._values):
            self._fill(n)

    def value(self, n: int) -> int:
        if n < 0:
            raise DomainError(f"table index must be >= 0, got {n}")
        self.ensure(n)
        return self._values[n]

    def prefix(self, count: int) -> list[int]:
        """First count values as a fresh list (bulk-read API)."""
        if count < 0:
            raise DomainError(f"prefix count must be >= 0, got {count}")
        if count:
            self.ensure(count - 1)
        return self._values[:count]

    def _fill_g_defining(self, n: int) -> None:
        v = self._values
        append = v.append
        m = len(v)
        while m <= n:
            append(m - v[v[m - 1]])
            m += 1

    def _fill_gbar_defining(self, n: int) -> None:
        v = self._values
        append = v.append
        m = len(v)
        while m <= n:
            append(m + 1 - v[1 + v[m - 1]])
            m += 1

    def _fill_g_delta(self, n: int) -> None:
        # step bit: d(m+1) = 1 - d(m) * d(g(m)), with d(m) = g(m+1) - g(m)
        v = self._values
        append = v.append
        m = len(v)
        while m <= n:
            k = m - 2
            j = v[k]
            append(v[k + 1] + 1 - (v[k + 1] - v[k]) * (v[j + 1] - v[j]))
            m += 1

    def _fill_gbar_delta(self, n: int) -> None:
        # mirror step bit: d(m+1) = 1 - d(m) * d(gbar(m+1)), valid for m > 2,
        # hence the longer seed run (indices 0..4).
        v = self._values
        append = v.append
        m = len(v)
        while m <= n:
            k = m - 2
            q = v[k + 1]
            append(v[k + 1] + 1 - (v[k + 1] - v[k]) * (v[q + 1] - v[q]))
            m += 1


_G = MemoTable("g")
_G_DELTA = MemoTable("g", rule="delta")


def g(n: int, table: MemoTable | None = None) -> int:
    """g(n) via the defining equation and the shared memo table.

    Pass a fresh MemoTable("g") as table to avoid the shared module-level
    cache (pure mode for tests).
    """
    if n < 0:
        raise DomainError(f"g: n must be >= 0, got {n}")
    return (_G if table is None else table).value(n)


def g_values(count: int) -> list[int]:
    """Bulk form of g: the first count values as a list."""
    return _G.prefix(count)


def g_via_decomposition(n: int) -> int:
    """g(n) by rank arithmetic, no recursion.

    Shift every rank of the canonical decomposition of n down by one; a rank
    that lands on 1 is repaired to 2 (F(1) = F(2), value unchanged); if the
    repair produced the consecutive pair 2,3 the result is folded back to
    canonical form.  The represented value is g(n).
    """
    if n < 0:
        raise DomainError(f"g_via_decomposition: n must be >= 0, got {n}")
    if n == 0:
        return 0
    shifted = [k - 1 for k in _greedy_ranks(n)]
    if shifted[0] == 1:
        shifted[0] = 2
        if len(shifted) > 1 and shifted[1] == 3:
            # the only spot where the shifted form leaves canonical shape
            return sum_of(normalize(Decomposition(tuple(shifted), gap=1)))
    return sum(_FIB[k] for k in shifted)


def g_via_delta(n: int, table: MemoTable | None = None) -> int:
    """g(n) by accumulating difference bits (see MemoTable rule "delta")."""
    if n < 0:
        raise DomainError(f"g_via_delta: n must be >= 0, got {n}")
    return (_G_DELTA if table is None else table).value(n)


def g_via_phi(n: int) -> int:
    """g(n) = floor((n+1)/phi), evaluated in exact integer arithmetic.

    With m = n+1: floor(m/phi) = floor(m*phi) - m and
    floor(m*phi) = (m + isqrt(5*m*m)) // 2.  No floats anywhere, so there is
    no precision cliff; the domain cap below is a documented contract, not a
    numeric necessity.  Note the +1: the variant floor(n/phi) is wrong
    already at n = 1.
    """
    if n < 0:
        raise DomainError(f"g_via_phi: n must be >= 0, got {n}")
    if n >= PHI_DOMAIN:
        raise DomainError(f"g_via_phi: n must be < 2**31, got {n}")
    m = n + 1
    return (m + isqrt(5 * m * m)) // 2 - m


def g_max_antecedent(n: int) -> int:
    """Largest m with g(m) = n, namely n + g(n)."""
    if n < 0:
        raise DomainError(f"g_max_antecedent: n must be >= 0, got {n}")
    return checked_add(n, g(n))


def g_arity(n: int) -> Arity:
    """Number of children of node n in the g tree (as an Arity tag).

    Unary iff low(n) is odd, except the root: node 1 has low(1) = 2 but only
    the single child 2 (its other antecedent is 1 itself, which the tree does
    not count as a child).
    """
    if n < 1:
        raise DomainError(f"g_arity: n must be >= 1, got {n}")
    if n == 1:
        return Arity.UNARY
    return Arity.UNARY if low(n) & 1 else Arity.BINARY
