"""The staircase function: four routes, its equation laws, the memo table."""

from concurrent.futures import ThreadPoolExecutor

import pytest

from hofg import (
    PHI_DOMAIN,
    Arity,
    MemoTable,
    RankClass,
    classify,
    fib,
    g,
    g_arity,
    g_max_antecedent,
    g_values,
    g_via_decomposition,
    g_via_delta,
    g_via_phi,
    low,
)
from hofg.errors import DomainError

N = 20_000


def test_initial_values():
    assert [g(n) for n in range(6)] == [0, 1, 1, 2, 3, 3]


def test_shift_example():
    # 12 = F_2+F_4+F_6 maps to F_1+F_3+F_5 = 8 under the rank shift
    assert g(12) == 8
    assert g_via_decomposition(12) == 8


def test_every_route_rejects_negatives():
    for fn in (g, g_via_decomposition, g_via_delta, g_via_phi):
        with pytest.raises(DomainError):
            fn(-1)


def test_four_way_equivalence():
    expected = g_values(N + 1)
    assert [g_via_decomposition(n) for n in range(N + 1)] == expected
    assert MemoTable("g", rule="delta").prefix(N + 1) == expected
    assert [g_via_phi(n) for n in range(N + 1)] == expected


def test_phi_route_offset_discriminator():
    # the closed form divides n+1, not n: at n=1 the latter floors to 0
    assert g_via_phi(1) == 1


def test_phi_route_domain_cap():
    assert g_via_phi(PHI_DOMAIN - 1) >= 0
    with pytest.raises(DomainError):
        g_via_phi(PHI_DOMAIN)


def test_steps_are_zero_or_one_and_onto():
    values = g_values(N)
    assert values[0] == 0
    assert all(values[n + 1] - values[n] in (0, 1) for n in range(N - 1))
    assert set(values) == set(range(values[-1] + 1))


def test_stagnation_forces_a_step():
    values = g_values(N)
    for n in range(1, N - 1):
        if values[n] == values[n - 1]:
            assert values[n + 1] == values[n] + 1


def test_largest_antecedent_round_trip():
    for n in range(N):
        m = n + g(n)
        assert g(m) == n
        assert g(m + 1) == n + 1


def test_alternative_equation():
    for n in range(N):
        assert g(n) + g(g(n + 1) - 1) == n


def test_delta_recurrence_identity():
    values = g_values(N + 2)
    for n in range(N):
        d_next = values[n + 2] - values[n + 1]
        d_here = values[n + 1] - values[n]
        d_at_g = values[values[n] + 1] - values[values[n]]
        assert d_next == 1 - d_here * d_at_g


def test_fibonacci_fixed_points_dense():
    for k in range(2, 31):
        assert g(fib(k)) == fib(k - 1)
        if k > 2:  # 1 + F(2) = 2 is F(3), already covered by the first law
            assert g(1 + fib(k)) == 1 + fib(k - 1)


def test_fibonacci_fixed_points_full_rank_range():
    # the dense table stops being practical long before rank 91; the rank
    # arithmetic route has no such limit
    for k in range(2, 92):
        assert g_via_decomposition(fib(k)) == fib(k - 1)
        if k > 2:
            assert g_via_decomposition(1 + fib(k)) == 1 + fib(k - 1)


def test_fibonacci_fixed_points_phi_route():
    k = 2
    while fib(k) + 1 < PHI_DOMAIN:
        assert g_via_phi(fib(k)) == fib(k - 1)
        assert g_via_phi(1 + fib(k)) == (1 + fib(k - 1) if k > 2 else 1)
        k += 1
    assert k == 47  # F(46) is the last Fibonacci number under the cap


def test_plateau_iff_lowest_rank_two():
    for n in range(1, N):
        assert (g(n + 1) == g(n)) == (low(n) == 2)


def test_step_down_by_lowest_rank_parity():
    for n in range(1, N):
        if low(n) % 2 == 1:
            assert g(n - 1) == g(n)
        else:
            assert g(n - 1) == g(n) - 1


def test_lowest_rank_shifts_down_through_g():
    for n in range(1, N):
        if low(n) > 2:
            assert low(g(n)) == low(n) - 1


def test_lowest_rank_of_image_by_class():
    for n in range(1, N):
        lo = low(n)
        if lo == 2:
            assert low(g(n)) % 2 == 0
        elif lo == 3:
            assert low(g(n)) == 2
        else:
            assert low(g(n)) > 2
            assert low(g(n) + 1) % 2 == 0


def test_three_class_transport():
    for n in range(1, N):
        c = classify(n)
        if c is RankClass.THREE_EVEN:
            assert classify(g(n) + 1) is RankClass.THREE_ODD
        elif c is RankClass.THREE_ODD:
            img = classify(g(n) + 1)
            assert img is RankClass.THREE_EVEN or low(g(n) + 1) > 3


def test_antecedents_by_brute_force():
    values = g_values(4 * 1000)
    antecedents = {}
    for m, v in enumerate(values):
        antecedents.setdefault(v, []).append(m)
    for n in range(1, 1000):
        assert max(antecedents[n]) == g_max_antecedent(n)
        if n >= 2:
            expect = 1 if g_arity(n) is Arity.UNARY else 2
            assert len(antecedents[n]) == expect


def test_arity_examples():
    assert g_arity(5) is Arity.UNARY
    assert g_arity(3) is Arity.BINARY
    assert g_arity(1) is Arity.UNARY  # root: its second antecedent is itself
    with pytest.raises(DomainError):
        g_arity(0)


def test_memo_table_contracts():
    t = MemoTable("g")
    assert t.value(0) == 0
    assert len(t) >= 1
    t.ensure(500)
    assert len(t) >= 501
    vals = t.prefix(501)
    assert len(vals) == 501
    assert all(b - a in (0, 1) for a, b in zip(vals, vals[1:]))
    with pytest.raises(DomainError):
        t.value(-1)
    with pytest.raises(DomainError):
        t.prefix(-1)
    assert t.prefix(0) == []


def test_memo_table_flavors():
    with pytest.raises(DomainError):
        MemoTable("g", rule="magic")
    with pytest.raises(DomainError):
        MemoTable("h")
    fresh = MemoTable("g")
    assert fresh.prefix(100) == g_values(100)


def test_memo_table_concurrent_readers():
    t = MemoTable("g")
    t.ensure(50_000)
    expected = t.prefix(50_001)

    def read_slice(seed):
        return [t.value((seed * 7919 + i) % 50_001) for i in range(2_000)]

    with ThreadPoolExecutor(max_workers=8) as pool:
        for seed, got in enumerate(pool.map(read_slice, range(8))):
            assert got == [expected[(seed * 7919 + i) % 50_001]
                           for i in range(2_000)]


def test_pure_mode_uses_the_given_table():
    mine = MemoTable("g")
    assert g(1000, table=mine) == g(1000)
    assert len(mine) >= 1001
