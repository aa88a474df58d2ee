"""Fibonacci numbers over a fixed, checked range.

The sequence is F(0) = 0, F(1) = 1, F(k+2) = F(k) + F(k+1).  Everything in
this package works with values below 2**63, and ranks are capped at 91: the
table is computed once, ascending, and never extended.  Requests outside the
table are reported as errors, never approximated.
"""

from __future__ import annotations

from bisect import bisect_right

from .errors import DomainError, RankOverflow, ValueOverflow

RANK_MAX = 91
VALUE_LIMIT = 1 << 63


def _build_table() -> tuple[int, ...]:
    t = [0, 1]
    while len(t) <= RANK_MAX:
        t.append(t[-2] + t[-1])
    return tuple(t)


_FIB: tuple[int, ...] = _build_table()

# Largest value with an in-table rank.  Values from here up to 2**63 would
# need rank 92, which the fixed table deliberately does not carry.
_INV_LIMIT = _FIB[RANK_MAX] + _FIB[RANK_MAX - 1]


def fib(k: int) -> int:
    """Return F(k) for 0 <= k <= 91."""
    if k < 0:
        raise DomainError(f"fib: negative rank {k}")
    if k > RANK_MAX:
        raise RankOverflow(f"fib: rank {k} exceeds table maximum {RANK_MAX}")
    return _FIB[k]


def fib_inv(n: int) -> int:
    """Return the largest rank k with F(k) <= n, for n >= 1.

    Because F(1) = F(2) = 1, the answer is never 1: fib_inv(1) == 2.  This is
    the rank the greedy decomposition peels off first, so n = 0 (which would
    admit rank 0 and break the rank >= 2 convention) is a domain error.
    """
    if n < 1:
        raise DomainError(f"fib_inv: n must be >= 1, got {n}")
    if n >= _INV_LIMIT:
        raise RankOverflow(f"fib_inv: n = {n} needs a rank beyond {RANK_MAX}")
    return bisect_right(_FIB, n) - 1


def checked_add(a: int, b: int) -> int:
    """Add two in-range values; error instead of leaving the value domain."""
    s = a + b
    if s >= VALUE_LIMIT:
        raise ValueOverflow(f"{a} + {b} leaves the supported range")
    return s
