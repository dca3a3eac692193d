from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from charvar.exact import LaurentPoly, UsageError
from charvar.partitions import (
    Partition,
    enumerate_partitions,
    parse_partition,
    partition_count,
    partitions_up_to,
    stats,
)

ALL10 = list(partitions_up_to(10))


def brute_partitions(n):
    """All multisets of positive integers summing to n, by a different recursion."""
    if n == 0:
        return {()}
    out = set()
    for first in range(1, n + 1):
        for rest in brute_partitions(n - first):
            out.add(tuple(sorted((first,) + rest, reverse=True)))
    return out


def test_counts():
    assert partition_count(4) == 5
    assert partition_count(6) == 11
    assert enumerate_partitions(0) == (Partition(()),)


@pytest.mark.parametrize("n", range(9))
def test_enumeration_matches_brute_force(n):
    got = [lam.parts for lam in enumerate_partitions(n)]
    assert len(got) == len(set(got))
    assert set(got) == brute_partitions(n)
    assert got == sorted(got, reverse=True)


def test_invalid_partitions():
    with pytest.raises(UsageError):
        Partition((1, 2))
    with pytest.raises(UsageError):
        Partition((2, 0))


def test_figure_box():
    lam = Partition.of(5, 5, 4, 3, 1)
    b = lam.box(2, 2)
    assert (b.arm, b.leg) == (3, 2)
    assert lam.conjugate == Partition.of(5, 4, 4, 3, 2)


def test_stats_bundle():
    lam = Partition.of(3, 1, 1)
    st_ = stats(lam)
    assert st_["n_lambda"] == 3
    assert st_["conjugate"] == Partition.of(3, 1, 1)
    assert st_["pairing"](Partition.of(2)) == 3 * 1 + 1 * 1
    one = LaurentPoly.one(("q",))
    q = LaurentPoly.gen(("q",), "q")
    assert st_["b_lambda"] == (one - q) * (one - q) * (one - q ** 2)


def test_hooks_of_staircase():
    assert sorted(Partition.of(3, 2, 1).hooks()) == [1, 1, 1, 3, 3, 5]


@pytest.mark.parametrize("lam", ALL10, ids=str)
def test_partition_laws(lam):
    assert lam.conjugate.conjugate == lam
    assert lam.pairing(lam) == 2 * lam.n + lam.size
    assert sum(lam.hooks()) == lam.n + lam.conjugate.n + lam.size
    assert Counter((b.arm, b.leg) for b in lam.conjugate.boxes) == Counter(
        (b.leg, b.arm) for b in lam.boxes
    )
    assert all(b.hook == b.arm + b.leg + 1 for b in lam.boxes)
    assert len(lam.boxes) == lam.size


@given(st.sampled_from(ALL10), st.sampled_from(ALL10))
def test_pairing_symmetric(lam, mu):
    assert lam.pairing(mu) == mu.pairing(lam)


def test_json():
    assert parse_partition([5, 5, 4, 3, 1]).to_json_obj() == [5, 5, 4, 3, 1]
