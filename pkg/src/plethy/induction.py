"""Characters of polynomially induced representations.

Closed forms come from vector partition counts and from plethysm with H. The
matrix-orbit functions are the independent check: a basis of the induced
permutation module is indexed by orbits of n x n nonnegative integer matrices
with entry sum d under row permutations inside the blocks of a Young
subgroup, and each orbit has weight ``t^(column sums)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .partitions import Partition, iter_compositions, vectors_up_to_degree
from .plethysm import h_series, plethysm_into_series
from .polyring import Poly, multiply
from .symfn import frobenius_characteristic
from .vecpart import count_pk, count_qk


@dataclass(frozen=True)
class InducedCharacter:
    n: int
    d: int
    character: Poly
    source: str

    def __post_init__(self):
        if not self.character.is_homogeneous(self.d):
            raise ValueError(f"character of {self.source} is not homogeneous of degree {self.d}")

    def is_genuine(self) -> bool:
        return all(isinstance(c, int) and c >= 0 for c in self.character.terms.values())


def _slice(n: int, d: int, coeff) -> Poly:
    return Poly(n, ((x, coeff(x)) for x in iter_compositions(d, n)))


def ch_ind_trivial(n: int, d: int) -> InducedCharacter:
    return InducedCharacter(n, d, _slice(n, d, lambda x: count_pk(x, n)), "trivial")


def ch_ind_sign(n: int, d: int) -> InducedCharacter:
    return InducedCharacter(n, d, _slice(n, d, lambda x: count_qk(x, n)), "sign")


def _pk_series(k: int, n: int, d: int) -> Poly:
    return Poly(n, ((x, count_pk(x, k)) for x in vectors_up_to_degree(n, d)), d)


def ch_ind_permutation_module(mu, d: int) -> InducedCharacter:
    """Degree-``d`` slice of ``prod_i sum_x p_{mu_i}(x) t^x``."""
    mu = Partition(mu)
    n = mu.weight()
    total = Poly.one(n, d)
    for part in mu:
        total = multiply(total, _pk_series(part, n, d), d)
    return InducedCharacter(n, d, total.homogeneous_part(d), f"permutation module {mu}")


def _rows(n: int, d: int) -> list[tuple[int, ...]]:
    return vectors_up_to_degree(n, d)


def _block_sorted_matrices(
    blocks: tuple[int, ...], n: int, d: int, strict: bool
) -> Iterator[tuple[int, ...]]:
    # Yields column-sum vectors of canonical representatives: rows are
    # nondecreasing (strictly increasing when strict) inside each block.
    rows = _rows(n, d)
    row_deg = [sum(r) for r in rows]
    step = 1 if strict else 0

    def fill(block: int, left_in_block: int, start: int, budget: int, colsum: tuple[int, ...]):
        if left_in_block == 0:
            if block + 1 == len(blocks):
                if budget == 0:
                    yield colsum
                return
            yield from fill(block + 1, blocks[block + 1], 0, budget, colsum)
            return
        for i in range(start, len(rows)):
            if row_deg[i] > budget:
                continue
            r = rows[i]
            yield from fill(
                block, left_in_block - 1, i + step, budget - row_deg[i],
                tuple(a + b for a, b in zip(colsum, r)),
            )

    if not blocks:
        if d == 0:
            yield (0,) * n
        return
    yield from fill(0, blocks[0], 0, d, (0,) * n)


def _orbit_poly(blocks: tuple[int, ...], n: int, d: int, strict: bool) -> Poly:
    acc: dict[tuple[int, ...], int] = {}
    for x in _block_sorted_matrices(blocks, n, d, strict):
        acc[x] = acc.get(x, 0) + 1
    return Poly(n, acc)


def matrix_orbit_character(mu, d: int) -> InducedCharacter:
    """Count S_mu-orbits on M(d, n) by canonical (block-sorted) representatives."""
    mu = Partition(mu)
    n = mu.weight()
    return InducedCharacter(n, d, _orbit_poly(tuple(mu), n, d, False), f"orbits of S_{mu}")


def matrix_orbit_sign_character(n: int, d: int) -> InducedCharacter:
    """S_n-orbits on M(d, n) of matrices whose rows are pairwise distinct."""
    return InducedCharacter(n, d, _orbit_poly((n,), n, d, True), "distinct-row orbits")


def ch_ind_general(class_function: Mapping, d: int, n: int | None = None, route: str = "p") -> InducedCharacter:
    """Degree-``d`` character of the induced (virtual) representation: ``F(V)[H]``.

    ``class_function`` maps cycle types of S_n to integer values.
    """
    if n is None:
        n = Partition(next(iter(class_function))).weight()
    for nu, v in class_function.items():
        if Partition(nu).weight() != n:
            raise ValueError(f"cycle type {nu} is not a partition of {n}")
        if Fraction(v).denominator != 1:
            raise ValueError(f"class function value {v} at {nu} is not an integer")
    fv = frobenius_characteristic(class_function)
    poly = plethysm_into_series(fv, h_series(n, d), d, route=route).homogeneous_part(d)
    return InducedCharacter(n, d, poly, "class function")
