"""Shared fixtures.

The exhaustive sweeps share one set of session-scoped arrays: function
prefixes and lowest-rank/class tables over the full checked range.  They are
built through the public bulk APIs, so a bug there fails loudly rather than
silently shrinking coverage.  Timed checks in test_acceptance.py do their
own in-window work and only use these for untimed criteria.
"""

from __future__ import annotations

import pytest

from hofg import classify, g_values, gbar_values, low

SWEEP_LIMIT = 1_000_000


@pytest.fixture(scope="session")
def g_seq() -> list[int]:
    return g_values(SWEEP_LIMIT + 3)


@pytest.fixture(scope="session")
def gbar_seq() -> list[int]:
    return gbar_values(SWEEP_LIMIT + 3)


@pytest.fixture(scope="session")
def lows() -> list[int]:
    # index 0 is padding; low(0) is a domain error by design
    return [0] + [low(n) for n in range(1, SWEEP_LIMIT + 3)]


@pytest.fixture(scope="session")
def classes() -> list:
    return [None] + [classify(n) for n in range(1, SWEEP_LIMIT + 3)]
