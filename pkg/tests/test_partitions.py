from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from plethy.partitions import (
    Partition,
    cycle_type,
    enumerate_cycle_types,
    enumerate_partitions,
    parse_partition,
    partitions_of,
    permutation_sign,
    staircase,
    staircase_action,
    z_factor,
)


def brute_partition_count(d: int, n: int, largest: int | None = None) -> int:
    # Plain recursive descent on the largest part, no memoization.
    if largest is None:
        largest = d
    if d == 0:
        return 1
    if n == 0:
        return 0
    return sum(brute_partition_count(d - part, n - 1, part) for part in range(1, min(d, largest) + 1))


def test_enumerate_examples():
    assert enumerate_partitions(4, 2) == [Partition((4,)), Partition((3, 1)), Partition((2, 2))]
    assert enumerate_partitions(0, 3) == [Partition()]
    assert len(enumerate_partitions(6, 3)) == brute_partition_count(6, 3) == 7


def test_enumeration_is_reverse_lexicographic():
    parts = enumerate_partitions(7, 7)
    assert parts == sorted(parts, reverse=True)
    assert len(set(parts)) == len(parts)


@pytest.mark.parametrize("d", range(0, 9))
@pytest.mark.parametrize("n", range(0, 9))
def test_partition_counts_match_brute_force(d, n):
    got = enumerate_partitions(d, n)
    if n == 0:
        assert got == ([Partition()] if d == 0 else [])
        return
    assert len(got) == brute_partition_count(d, n)
    assert all(p.weight() == d and len(p) <= n for p in got)


def test_partition_validation():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))
    assert Partition((3, 1)).pad_to(4) == (3, 1, 0, 0)
    with pytest.raises(ValueError):
        Partition((1, 1, 1)).pad_to(2)
    assert parse_partition("3,1,1") == Partition((3, 1, 1))
    assert parse_partition("") == Partition()


@pytest.mark.parametrize("nu, z", [((1, 1, 1), 6), ((3,), 3), ((2, 1), 2), ((), 1), ((2, 2), 8)])
def test_z_factor(nu, z):
    assert z_factor(nu) == z


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes_sum_to_group_order(n):
    assert sum(factorial(n) // z_factor(nu) for nu in partitions_of(n)) == factorial(n)


def test_cycle_types_small():
    assert enumerate_cycle_types(3) == [
        (Partition((3,)), 2), (Partition((2, 1)), 3), (Partition((1, 1, 1)), 1)
    ]
    assert dict(enumerate_cycle_types(2)) == {Partition((2,)): 1, Partition((1, 1)): 1}


def test_cycle_types_s4_against_enumeration():
    counts = {}
    for w in permutations(range(1, 5)):
        ct = cycle_type(w)
        counts[ct] = counts.get(ct, 0) + 1
    assert dict(enumerate_cycle_types(4)) == counts
    assert len(counts) == 5 and sum(counts.values()) == 24


def test_staircase_action_examples():
    assert staircase_action((1, 2, 3)) == (2, 1, 0) == staircase(3)
    assert staircase_action((2, 1, 3)) == (1, 2, 0)
    # w(1)=2, w(2)=3, w(3)=1
    assert staircase_action((2, 3, 1)) == (1, 0, 2)
    with pytest.raises(ValueError):
        staircase_action((1, 1, 2))


@pytest.mark.parametrize("n", range(1, 6))
def test_staircase_action_permutes_delta(n):
    delta = sorted(staircase(n))
    for w in permutations(range(1, n + 1)):
        assert sorted(staircase_action(w)) == delta


def test_permutation_sign_matches_inversions():
    for w in permutations(range(1, 6)):
        inversions = sum(1 for i in range(5) for j in range(i + 1, 5) if w[i] > w[j])
        assert permutation_sign(w) == (-1) ** inversions


@given(st.lists(st.integers(1, 6), max_size=6))
def test_conjugation_is_involution(parts):
    lam = Partition(sorted(parts, reverse=True))
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().weight() == lam.weight()


@pytest.mark.parametrize("d", range(0, 11))
def test_conjugation_bijective_on_all_partitions(d):
    parts = partitions_of(d)
    assert sorted(p.conjugate() for p in parts) == sorted(parts)
