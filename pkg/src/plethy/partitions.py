"""Partitions, cycle types and the staircase vector.

Partitions are stored without trailing zeros. ``Partition.pad_to(n)`` gives the
length-``n`` view ``(l_1, ..., l_n)`` used whenever a partition is read as an
exponent vector.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros in the input are dropped, so ``Partition((2, 1, 0)) == Partition((2, 1))``.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    def weight(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def pad_to(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))


# A cycle type of a permutation of n letters is just a partition of n.
CycleType = Partition


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1,1"`` (or ``""`` / ``"0"`` for the empty partition)."""
    text = text.strip().strip("()[]")
    if not text:
        return Partition()
    return Partition(int(tok) for tok in text.split(","))


def enumerate_partitions(d: int, max_parts: int | None = None) -> list[Partition]:
    """Partitions of ``d`` with at most ``max_parts`` parts, in reverse lexicographic order.

    >>> enumerate_partitions(4, 2)
    [Partition((4,)), Partition((3, 1)), Partition((2, 2))]
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    if max_parts is None:
        max_parts = d
    return [Partition(p) for p in _partitions(d, max_parts, d)]


@lru_cache(maxsize=None)
def _partitions(d: int, max_parts: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if d == 0:
        return ((),)
    if max_parts == 0:
        return ()
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in _partitions(d - first, max_parts - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    return enumerate_partitions(n, n)


def z_factor(nu: Sequence[int]) -> int:
    """Centralizer order ``prod_i i^{m_i} m_i!``; ``n!/z`` is the size of the class."""
    return prod(i**m * factorial(m) for i, m in Counter(nu).items())


def class_size(nu: Sequence[int]) -> int:
    return factorial(sum(nu)) // z_factor(nu)


def enumerate_cycle_types(n: int) -> list[tuple[Partition, int]]:
    """Conjugacy classes of S_n as ``(cycle type, class size)`` pairs."""
    if n < 1:
        raise ValueError("n must be positive")
    return [(nu, class_size(nu)) for nu in partitions_of(n)]


def staircase(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def staircase_action(w: Sequence[int]) -> tuple[int, ...]:
    """``w . delta = (n - w(1), ..., n - w(n))`` for a permutation given in one-line notation (1-based)."""
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {tuple(w)}")
    return tuple(n - wi for wi in w)


def permutation_sign(w: Sequence[int]) -> int:
    """Sign of a permutation in one-line notation, via its cycle decomposition."""
    return -1 if (len(w) - len(cycle_type(w))) % 2 else 1


def cycle_type(w: Sequence[int]) -> Partition:
    """Cycle type of a permutation in one-line notation (1-based)."""
    seen = [False] * len(w)
    lengths = []
    for start in range(len(w)):
        if seen[start]:
            continue
        length, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = w[j] - 1
            length += 1
        lengths.append(length)
    return Partition(sorted(lengths, reverse=True))


@lru_cache(maxsize=None)
def signed_permutations(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All ``(w, sgn(w))`` for ``w`` in S_n, one-line notation, lexicographic order."""
    return tuple((w, permutation_sign(w)) for w in permutations(range(1, n + 1)))


def iter_compositions(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``length`` parts, lexicographically decreasing."""
    if length == 0:
        if total == 0:
            yield ()
        return
    if length == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in iter_compositions(total - first, length - 1):
            yield (first,) + rest


def vectors_up_to_degree(n: int, d: int) -> list[tuple[int, ...]]:
    """All exponent vectors in N^n of total degree at most ``d``, lexicographically increasing."""
    out = [x for k in range(d + 1) for x in iter_compositions(k, n)]
    out.sort()
    return out
