from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from charvar.exact import LaurentPoly, RationalFn, UsageError
from charvar.partitions import partition_count
from charvar.plethys import (
    TruncSeries,
    exp_pleth,
    log_pleth,
    log_raw,
    log_to_power_sums,
    mobius,
    power_sums_to_log,
)

from conftest import Q, polys, q_series, series_mul

q = LaurentPoly.gen(Q, "q")
one = LaurentPoly.one(Q)
zero = LaurentPoly.zero(Q)


def const_series(values):
    return TruncSeries([LaurentPoly.const(Q, v) for v in values])


def test_mobius():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_exp_of_zero():
    assert exp_pleth(const_series([0] * 5)) == const_series([1, 0, 0, 0, 0])


def test_euler_partition_series():
    N = 10
    got = exp_pleth(const_series([0] + [1] * N))
    assert got == const_series([partition_count(n) for n in range(N + 1)])
    assert log_pleth(got) == const_series([0] + [1] * N)


def test_log_of_geometric_series():
    F = const_series([1] * 5)
    assert log_pleth(F) == const_series([0, 1, 0, 0, 0])


def test_log_raw_examples():
    assert all(u.is_zero() for u in log_raw(const_series([1, 0, 0, 0])))
    x = 2 * q ** 3 - q ** -1
    U = log_raw(exp_pleth(TruncSeries([zero, x, zero, zero])))
    # hand expansion: U_n = adams_n(x)
    assert U[1:] == [x, x.adams(2), x.adams(3)]


def test_constant_term_guards():
    with pytest.raises(UsageError):
        exp_pleth(const_series([1, 1]))
    with pytest.raises(UsageError):
        log_pleth(const_series([2, 1]))


def test_exp_geometric_matches_product():
    N = 4
    one_ = RationalFn(one)
    V = TruncSeries([one_ * 0, RationalFn.from_factors(one, [one - q])] + [one_ * 0] * (N - 1))
    F = exp_pleth(V)
    # prod_{n>=0} (1 - q^n T)^{-1} expanded as a q-series, factor by factor
    M = 12
    prod = [[Fraction(int(i == 0 and k == 0)) for k in range(M + 1)] for i in range(N + 1)]
    for n in range(M + 1):
        new = [[Fraction(0)] * (M + 1) for _ in range(N + 1)]
        for i in range(N + 1):
            for j in range(i + 1):
                shift = [Fraction(0)] * (M + 1)
                if n * j <= M:
                    shift[n * j] = Fraction(1)
                term = series_mul(prod[i - j], shift, M)
                new[i] = [a + b for a, b in zip(new[i], term)]
        prod = new
    for i in range(N + 1):
        assert q_series(F[i], M) == prod[i]


def test_power_sum_round_trip():
    V = [zero, q, one + q ** 2, 3 * q, q ** -2]
    U = log_to_power_sums(V)
    assert power_sums_to_log(U)[1:] == V[1:]


def test_json_round_trip():
    F = TruncSeries([one, q - 1, Fraction(1, 2) * q ** 2])
    assert TruncSeries.from_json_obj(F.to_json_obj()) == F


def series_strategy(order=None):
    orders = st.integers(1, 6) if order is None else st.just(order)
    return orders.flatmap(
        lambda N: st.lists(polys(Q, max_terms=2, lo=-2, hi=2), min_size=N, max_size=N).map(
            lambda cs: TruncSeries([zero] + cs)
        )
    )


@given(series_strategy())
def test_log_exp_inverse(V):
    assert log_pleth(exp_pleth(V)) == V


@given(st.integers(0, 3), st.integers(1, 3), st.integers(1, 6))
def test_exp_monomial_is_geometric(m, n, N):
    V = TruncSeries([q ** m if k == n else zero for k in range(N + 1)])
    expect = TruncSeries([q ** (m * (k // n)) if k % n == 0 else zero for k in range(N + 1)])
    assert exp_pleth(V) == expect
