"""Vector (multipartite) partition counts.

``count_pk(x, k)`` is the number of ways to write ``x`` as an unordered sum of
at most ``k`` nonzero vectors in N^n. ``count_qk(x, k)`` counts sums of
exactly ``k`` or ``k - 1`` pairwise distinct nonzero vectors, which is the
coefficient of ``t^x u^k`` in ``prod_{x in N^n} (1 + t^x u)`` (the factor at
``x = 0`` supplies the ``k - 1`` case). Both vanish when ``x`` has a negative
coordinate.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

Vector = tuple[int, ...]


@lru_cache(maxsize=None)
def candidate_parts(x: Vector) -> tuple[Vector, ...]:
    """Nonzero vectors ``y <= x`` (coordinatewise), lexicographically increasing."""
    return tuple(y for y in product(*(range(v + 1) for v in x)) if any(y))


def _leq(y: Vector, x: Vector) -> bool:
    return all(a <= b for a, b in zip(y, x))


def _sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def _make_counter(x: Vector, distinct: bool):
    parts = candidate_parts(x)
    step = 1 if distinct else 0

    @lru_cache(maxsize=None)
    def count(rem: Vector, start: int, parts_left: int, exact: bool) -> int:
        # Multisets (sets when distinct) of parts[start:] summing to rem, using
        # at most (or exactly) parts_left parts. Parts are drawn in index order.
        if not any(rem):
            return int(parts_left == 0 or not exact)
        if parts_left == 0:
            return 0
        total = 0
        for i in range(start, len(parts)):
            y = parts[i]
            if _leq(y, rem):
                total += count(_sub(rem, y), i + step, parts_left - 1, exact)
        return total

    return count


@lru_cache(maxsize=None)
def _counter(x: Vector, distinct: bool):
    return _make_counter(x, distinct)


def _as_vector(x: Sequence[int]) -> Vector:
    return tuple(int(v) for v in x)


def count_pk(x: Sequence[int], k: int) -> int:
    """Vector partitions of ``x`` with at most ``k`` parts; 0 if ``x`` leaves N^n."""
    x = _as_vector(x)
    if k < 0 or any(v < 0 for v in x):
        return 0
    return _counter(x, False)(x, 0, k, False)


def count_distinct_exact(x: Sequence[int], j: int) -> int:
    """Sets of exactly ``j`` distinct nonzero vectors summing to ``x``."""
    x = _as_vector(x)
    if j < 0 or any(v < 0 for v in x):
        return 0
    return _counter(x, True)(x, 0, j, True)


def count_qk(x: Sequence[int], k: int) -> int:
    """Vector partitions of ``x`` into exactly ``k`` or ``k - 1`` distinct parts; 0 off N^n."""
    return count_distinct_exact(x, k) + count_distinct_exact(x, k - 1)


def enumerate_vector_partitions(x: Sequence[int], distinct: bool = False) -> list[tuple[Vector, ...]]:
    """Every vector partition of ``x``, each listed once as a lexicographically sorted tuple of parts.

    Parts are generated largest-first by plain recursion, without memoization,
    so this serves as a reference for the counting functions.
    """
    x = _as_vector(x)
    if any(v < 0 for v in x):
        raise ValueError(f"cannot enumerate partitions of {x}: negative coordinate")
    return [tuple(reversed(parts)) for parts in _descend(x, None, distinct)]


def _descend(rem: Vector, bound: Vector | None, distinct: bool) -> Iterator[tuple[Vector, ...]]:
    if not any(rem):
        yield ()
        return
    for y in reversed(candidate_parts(rem)):
        if bound is not None and (y > bound or (distinct and y == bound)):
            continue
        for tail in _descend(_sub(rem, y), y, distinct):
            yield (y,) + tail
