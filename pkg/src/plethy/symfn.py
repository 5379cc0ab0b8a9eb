"""Symmetric functions in the h, e, p, m and s bases.

A ``SymFn`` is a basis tag plus a finite map from partitions to exact
rationals. Changes of basis go through the power sums, which is also where the
Hall inner product lives. Schur functions expand into the h basis by
Jacobi-Trudi (integer coefficients) or into the p basis through the
character table of the symmetric group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from numbers import Rational
from typing import Mapping

from .partitions import (
    Partition,
    enumerate_partitions,
    iter_compositions,
    partitions_of,
    signed_permutations,
    z_factor,
)
from .polyring import Poly, multiply

BASES = ("h", "e", "p", "m", "s")


def _merge(a: Partition, b: Partition) -> Partition:
    return Partition(sorted(a + b, reverse=True))


class SymFn:
    """Exact linear combination of basis elements ``b_lambda`` for one basis ``b``."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping = ()):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, Rational] = {}
        for lam, c in items:
            lam = Partition(lam)
            acc[lam] = acc.get(lam, 0) + c
        self.basis = basis
        self.terms = {
            lam: (c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c)
            for lam, c in sorted(acc.items(), key=lambda kv: (kv[0].weight(), kv[0]), reverse=True)
            if c != 0
        }

    @classmethod
    def basis_element(cls, basis: str, lam) -> "SymFn":
        return cls(basis, {Partition(lam): 1})

    def __repr__(self) -> str:
        if not self.terms:
            return f"SymFn({self.basis!r}, 0)"
        body = " + ".join(f"{c}*{self.basis}{lam}" for lam, c in self.terms.items())
        return f"SymFn({body})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFn):
            return NotImplemented
        if self.basis == other.basis:
            return self.terms == other.terms
        return to_p(self).terms == to_p(other).terms

    __hash__ = None

    def degrees(self) -> set[int]:
        return {lam.weight() for lam in self.terms}

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def __add__(self, other: "SymFn") -> "SymFn":
        if other.basis != self.basis:
            return to_p(self) + to_p(other)
        acc = dict(self.terms)
        for lam, c in other.terms.items():
            acc[lam] = acc.get(lam, 0) + c
        return SymFn(self.basis, acc)

    def __neg__(self) -> "SymFn":
        return self.scale(-1)

    def __sub__(self, other: "SymFn") -> "SymFn":
        return self + (-other)

    def scale(self, c: Rational) -> "SymFn":
        return SymFn(self.basis, {lam: v * c for lam, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.basis == other.basis and self.basis in "hep":
            acc: dict[Partition, Rational] = {}
            for a, c in self.terms.items():
                for b, e in other.terms.items():
                    ab = _merge(a, b)
                    acc[ab] = acc.get(ab, 0) + c * e
            return SymFn(self.basis, acc)
        return to_p(self) * to_p(other)

    __rmul__ = __mul__


def h(*parts: int) -> SymFn:
    return SymFn.basis_element("h", parts)


def e(*parts: int) -> SymFn:
    return SymFn.basis_element("e", parts)


def p(*parts: int) -> SymFn:
    return SymFn.basis_element("p", parts)


def m(*parts: int) -> SymFn:
    return SymFn.basis_element("m", parts)


def s(*parts: int) -> SymFn:
    return SymFn.basis_element("s", parts)


# -- characters of the symmetric group ---------------------------------------


@lru_cache(maxsize=None)
def _mn_beta(beta: tuple[int, ...], rho: tuple[int, ...]) -> int:
    # Border-strip recursion on a beta-set: removing a k-strip moves one bead
    # from b to b-k; the sign counts beads jumped over.
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in beads:
            continue
        jumped = sum(1 for c in beta if target < c < b)
        new_beta = tuple(sorted((beads - {b}) | {target}, reverse=True))
        total += (-1) ** jumped * _mn_beta(new_beta, rest)
    return total


def murnaghan_nakayama(lam, nu) -> int:
    """Irreducible character value ``chi^lam`` on the class of cycle type ``nu``."""
    lam, nu = Partition(lam), Partition(nu)
    if lam.weight() != nu.weight():
        raise ValueError(f"{lam} and {nu} have different weights")
    ell = len(lam)
    beta = tuple(lam[i] + ell - 1 - i for i in range(ell))
    return _mn_beta(beta, tuple(nu))


@dataclass(frozen=True)
class CharacterTable:
    n: int
    partitions: tuple[Partition, ...]
    values: dict = field(repr=False)
    class_sizes: dict = field(repr=False)
    z_factors: dict = field(repr=False)

    def __call__(self, lam, nu) -> int:
        return self.values[Partition(lam), Partition(nu)]

    def dimension(self, lam) -> int:
        return self.values[Partition(lam), Partition((1,) * self.n)]


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    parts = tuple(partitions_of(n))
    values = {(lam, nu): murnaghan_nakayama(lam, nu) for lam in parts for nu in parts}
    z = {nu: z_factor(nu) for nu in parts}
    sizes = {nu: factorial(n) // z[nu] for nu in parts}
    return CharacterTable(n, parts, values, sizes, z)


def power_sum_at_cycle_type(k: int, rho) -> int:
    """``p_k`` at the eigenvalues of a permutation matrix of cycle type ``rho``.

    An r-cycle contributes its r eigenvalues (the r-th roots of unity), whose
    k-th powers sum to r when r divides k and to 0 otherwise.
    """
    if k < 1:
        raise ValueError("k must be positive")
    return sum(r for r in rho if k % r == 0)


# -- basis changes -----------------------------------------------------------


@lru_cache(maxsize=None)
def _schur_in_p(lam: Partition) -> dict[Partition, Fraction]:
    d = lam.weight()
    table = character_table(d) if d else None
    if d == 0:
        return {Partition(): Fraction(1)}
    return {nu: Fraction(table(lam, nu), table.z_factors[nu]) for nu in table.partitions}


@lru_cache(maxsize=None)
def _h_in_p(k: int) -> dict[Partition, Fraction]:
    return {nu: Fraction(1, z_factor(nu)) for nu in partitions_of(k)}


@lru_cache(maxsize=None)
def _e_in_p(k: int) -> dict[Partition, Fraction]:
    return {nu: Fraction((-1) ** (k - len(nu)), z_factor(nu)) for nu in partitions_of(k)}


def _product_expansion(lam: Partition, single) -> dict[Partition, Fraction]:
    acc: dict[Partition, Fraction] = {Partition(): Fraction(1)}
    for part in lam:
        nxt: dict[Partition, Fraction] = {}
        for a, c in acc.items():
            for b, v in single(part).items():
                ab = _merge(a, b)
                nxt[ab] = nxt.get(ab, 0) + c * v
        acc = nxt
    return acc


@lru_cache(maxsize=None)
def _m_in_p(d: int) -> dict[Partition, dict[Partition, Fraction]]:
    # Invert the p -> m transition matrix. The coefficient of m_lam in p_nu is
    # read off as the coefficient of t^lam in p_nu with d variables.
    parts = partitions_of(d)
    index = {lam: i for i, lam in enumerate(parts)}
    size = len(parts)
    rows = []
    for nu in parts:
        poly = expand_in_variables(SymFn.basis_element("p", nu), max(d, 1))
        rows.append([Fraction(poly.terms.get(lam.pad_to(max(d, 1)), 0)) for lam in parts])
    # Solve X * P = I, i.e. m_lam = sum_nu X[lam][nu] p_nu, by Gauss-Jordan on P^T.
    aug = [[rows[j][i] for j in range(size)] + [Fraction(int(i == k)) for k in range(size)]
           for i in range(size)]
    for col in range(size):
        pivot = next(r for r in range(col, size) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    # aug[:, size:] = (P^T)^{-1}; row lam of P^{-1} is column lam of (P^T)^{-1}.
    inv_t = [row[size:] for row in aug]
    return {
        lam: {nu: inv_t[index[nu]][index[lam]] for nu in parts if inv_t[index[nu]][index[lam]] != 0}
        for lam in parts
    }


def to_p(f: SymFn) -> SymFn:
    """Rewrite ``f`` in the power-sum basis."""
    if f.basis == "p":
        return f
    acc: dict[Partition, Rational] = {}
    for lam, c in f.terms.items():
        if f.basis == "s":
            expansion = _schur_in_p(lam)
        elif f.basis == "h":
            expansion = _product_expansion(lam, _h_in_p)
        elif f.basis == "e":
            expansion = _product_expansion(lam, _e_in_p)
        else:
            expansion = _m_in_p(lam.weight())[lam]
        for nu, v in expansion.items():
            acc[nu] = acc.get(nu, 0) + c * v
    return SymFn("p", acc)


def _jacobi_trudi(lam: Partition, basis: str) -> SymFn:
    ell = len(lam)
    acc: dict[Partition, int] = {}
    for w, sign in signed_permutations(ell):
        idx = [lam[i] - (i + 1) + w[i] for i in range(ell)]
        if any(k < 0 for k in idx):
            continue
        key = Partition(sorted((k for k in idx if k > 0), reverse=True))
        acc[key] = acc.get(key, 0) + sign
    return SymFn(basis, acc)


@lru_cache(maxsize=None)
def _schur_to_h_cached(lam: Partition) -> SymFn:
    return _jacobi_trudi(lam, "h")


def schur_to_h(lam) -> SymFn:
    """``s_lam = det(h_{lam_i - i + j})`` with ``h_0 = 1`` and ``h_{<0} = 0``."""
    return _schur_to_h_cached(Partition(lam))


@lru_cache(maxsize=None)
def _schur_to_e_cached(lam: Partition) -> SymFn:
    return _jacobi_trudi(lam.conjugate(), "e")


def schur_to_e(lam) -> SymFn:
    """Dual Jacobi-Trudi: ``s_lam = det(e_{lam'_i - i + j})``."""
    return _schur_to_e_cached(Partition(lam))


def schur_to_p(lam) -> SymFn:
    """``s_lam = sum_nu chi^lam(nu) / z_nu * p_nu``."""
    return SymFn("p", _schur_in_p(Partition(lam)))


def frobenius_characteristic(class_function: Mapping) -> SymFn:
    """Frobenius characteristic of a class function given as ``{cycle type: value}``."""
    return SymFn(
        "p", {Partition(nu): Fraction(v, 1) / z_factor(nu) for nu, v in class_function.items()}
    )


def frobenius_characteristic_of_permutation_module(mu) -> SymFn:
    """The permutation module on ordered set partitions of shape ``mu`` has characteristic ``h_mu``."""
    return SymFn.basis_element("h", mu)


def permutation_module_character(mu) -> dict[Partition, int]:
    """Character of C[X_mu]: the number of ordered set partitions of shape ``mu`` fixed by a class."""
    mu = Partition(mu)
    n = mu.weight()
    return {
        nu: _fixed_set_partitions(tuple(nu), tuple(mu)) for nu in partitions_of(n)
    }


@lru_cache(maxsize=None)
def _fixed_set_partitions(cycles: tuple[int, ...], blocks: tuple[int, ...]) -> int:
    # A fixed ordered set partition is a union of whole cycles per block:
    # count ways to distribute cycles into blocks with the right sizes.
    if not cycles:
        return int(all(b == 0 for b in blocks))
    first, rest = cycles[0], cycles[1:]
    total = 0
    for i, b in enumerate(blocks):
        if b >= first:
            nb = blocks[:i] + (b - first,) + blocks[i + 1:]
            total += _fixed_set_partitions(rest, nb)
    return total


def hall_inner_product(f: SymFn, g: SymFn) -> Rational:
    """``<p_nu, p_rho> = z_nu [nu = rho]``, extended bilinearly; Schur functions are orthonormal."""
    fp, gp = to_p(f), to_p(g)
    total = Fraction(0)
    for nu, c in fp.terms.items():
        other = gp.terms.get(nu)
        if other is not None:
            total += c * other * z_factor(nu)
    return total.numerator if total.denominator == 1 else total


# -- concrete polynomials ----------------------------------------------------


@lru_cache(maxsize=None)
def _single_poly(basis: str, k: int, n: int) -> Poly:
    if basis == "h":
        return Poly(n, ((x, 1) for x in iter_compositions(k, n)))
    if basis == "e":
        return Poly(n, ((x, 1) for x in iter_compositions(k, n) if max(x, default=0) <= 1))
    if basis == "p":
        return Poly(n, (((k if j == i else 0 for j in range(n)), 1) for i in range(n)))
    raise ValueError(basis)


def _monomial_symmetric(lam: Partition, n: int) -> Poly:
    if len(lam) > n:
        return Poly.zero(n)
    padded = lam.pad_to(n)
    return Poly(n, ((x, 1) for x in iter_compositions(lam.weight(), n) if sorted(x, reverse=True) == list(padded)))


def expand_in_variables(f: SymFn, n: int, truncate_at: int | None = None) -> Poly:
    """The polynomial ``f(t_1, ..., t_n)``."""
    out = Poly.zero(n, truncate_at)
    for lam, c in f.terms.items():
        if truncate_at is not None and lam.weight() > truncate_at:
            continue
        if f.basis == "m":
            term = _monomial_symmetric(lam, n)
        elif f.basis == "s":
            term = expand_in_variables(schur_to_h(lam), n, truncate_at)
        else:
            term = Poly.one(n)
            for part in lam:
                term = multiply(term, _single_poly(f.basis, part, n), truncate_at)
        out = out + term.scale(c)
    return out


def all_schur(d: int, max_parts: int | None = None) -> list[tuple[Partition, SymFn]]:
    return [(lam, s(*lam)) for lam in enumerate_partitions(d, max_parts)]
