"""Fibonacci-sum decompositions of natural numbers.

A decomposition is a strictly increasing list of ranks >= 2, stored
lowest-rank-first, standing for the sum of the Fibonacci numbers at those
ranks.  The empty list stands for 0.  Two flavors appear throughout:

* canonical (gap 2): consecutive ranks differ by at least 2.  Every n has
  exactly one such form, found greedily from the largest Fibonacci number.
* relaxed (gap 1): consecutive ranks merely distinct.  Many forms can share
  a value; `normalize` folds any of them back to the canonical one.

Ranks start at 2 because F(1) = F(2) = 1 would otherwise make even the
canonical form ambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, RankOverflow, ValueOverflow
from .fibonacci import _FIB, _INV_LIMIT, RANK_MAX, VALUE_LIMIT, fib, fib_inv


@dataclass(frozen=True)
class Decomposition:
    """Ranks of a Fibonacci-sum form, lowest first.

    gap = 2 marks a canonical form, gap = 1 a relaxed one.  Every canonical
    form is also a valid relaxed form, but not the other way around.
    """

    ranks: tuple[int, ...]
    gap: int = 2

    def __post_init__(self) -> None:
        if self.gap not in (1, 2):
            raise DomainError(f"gap must be 1 or 2, got {self.gap}")
        prev = None
        for k in self.ranks:
            if k < 2 or k > RANK_MAX:
                raise DomainError(f"rank {k} outside [2, {RANK_MAX}]")
            if prev is not None and k - prev < self.gap:
                raise DomainError(
                    f"ranks {prev},{k} violate the minimum gap {self.gap}")
            prev = k

    def __len__(self) -> int:
        return len(self.ranks)


class RankClass(Enum):
    """Classification of n by the low end of its canonical decomposition.

    TWO:        lowest rank is 2
    THREE_ODD:  lowest rank is 3, second-lowest rank odd
    THREE_EVEN: lowest rank is 3, second-lowest rank even
    THREE_BARE: lowest rank is 3 and there is no second term (only n = 2)
    HIGH_EVEN:  lowest rank is >= 4 and even
    HIGH_ODD:   lowest rank is >= 4 and odd
    """

    TWO = "Two"
    THREE_ODD = "ThreeOdd"
    THREE_EVEN = "ThreeEven"
    THREE_BARE = "ThreeBare"
    HIGH_EVEN = "HighEven"
    HIGH_ODD = "HighOdd"


def _greedy_ranks(n: int) -> list[int]:
    """Canonical ranks of n, ascending.  Internal fast path, no wrapping."""
    ranks: list[int] = []
    m = n
    while m:
        k = fib_inv(m)
        ranks.append(k)
        m -= _FIB[k]
    ranks.reverse()
    return ranks


def decompose(n: int) -> Decomposition:
    """Canonical decomposition of n >= 0, greedily from the top.

    The greedy choice (always peel off the largest Fibonacci number <= the
    remainder) is what forces gaps >= 2: after removing F(k) the remainder is
    below F(k-1), so rank k-1 can never follow rank k.
    """
    if n < 0:
        raise DomainError(f"decompose: n must be >= 0, got {n}")
    return Decomposition(tuple(_greedy_ranks(n)))


def sum_of(d: Decomposition) -> int:
    """Value represented by d, with overflow checked.

    Relaxed forms over high ranks can exceed the value range even though
    every term individually fits, hence the running check.
    """
    total = 0
    for k in d.ranks:
        total += _FIB[k]
        if total >= VALUE_LIMIT:
            raise ValueOverflow("decomposition sums past the value range")
    return total


def normalize(d: Decomposition) -> Decomposition:
    """Fold a relaxed decomposition into the canonical one, same value.

    Repeatedly merges the highest consecutive pair: F(m) + F(m+1) = F(m+2).
    Taking the highest pair first means the merged rank m+2 is never already
    present (that would put a consecutive pair above the chosen one), so the
    list stays duplicate-free without any further case analysis.  Term count
    never increases.
    """
    ranks = list(d.ranks)
    while True:
        hi = -1
        for i in range(len(ranks) - 1):
            if ranks[i + 1] == ranks[i] + 1:
                hi = i
        if hi < 0:
            break
        m = ranks[hi]
        if m + 2 > RANK_MAX:
            raise RankOverflow(f"normalize: merged rank {m + 2} exceeds {RANK_MAX}")
        ranks[hi:hi + 2] = [m + 2]
    return Decomposition(tuple(ranks))


def low(n: int) -> int:
    """Lowest rank in the canonical decomposition of n >= 1."""
    if n < 1:
        raise DomainError(f"low: n must be >= 1, got {n}")
    m = n
    k = fib_inv(m)
    while True:
        m -= _FIB[k]
        if not m:
            return k
        k = fib_inv(m)


def classify(n: int) -> RankClass:
    """RankClass of n >= 1; see RankClass for the tag definitions."""
    if n < 1:
        raise DomainError(f"classify: n must be >= 1, got {n}")
    ranks = _greedy_ranks(n)
    lo = ranks[0]
    if lo == 2:
        return RankClass.TWO
    if lo == 3:
        if len(ranks) == 1:
            return RankClass.THREE_BARE
        return RankClass.THREE_ODD if ranks[1] & 1 else RankClass.THREE_EVEN
    return RankClass.HIGH_ODD if lo & 1 else RankClass.HIGH_EVEN


def next_three_odd(n: int) -> int:
    """Smallest m > n with classify(m) == THREE_ODD.

    Spacing fact: starting from a three-odd number the next one is 5 or 8
    away, and the first one overall is 7, so the scan below is short.
    """
    m = n + 1
    while True:
        if m >= _INV_LIMIT:
            raise ValueOverflow("next_three_odd: search left the value range")
        if m >= 1 and classify(m) is RankClass.THREE_ODD:
            return m
        m += 1


def relax(d: Decomposition) -> Decomposition:
    """A relaxed variant of d with the same value, if one exists.

    Splits the lowest rank k into (k-2, k-1) while that stays legal.  When
    the lowest rank is 2 or 3 no split is possible and d itself is returned
    (restamped gap=1 if it had more than the canonical slack already).
    """
    ranks = list(d.ranks)
    while ranks and ranks[0] >= 4:
        k = ranks.pop(0)
        ranks[0:0] = [k - 2, k - 1]
    return Decomposition(tuple(ranks), gap=1)


def fib_sum_text(d: Decomposition) -> str:
    """Render d as 'F_4+F_6' (or '0' for the empty decomposition)."""
    if not d.ranks:
        return "0"
    return "+".join(f"F_{k}" for k in d.ranks)
