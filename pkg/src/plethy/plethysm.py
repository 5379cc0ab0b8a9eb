"""Plethystic substitution ``f[g]`` into truncated sums of monic monomials.

``g`` is a ``MonomialSeries``: a multiset of monomials ``t^x`` (a monomial with
multiplicity ``c`` stands for ``c`` separate variables). ``f[g]`` substitutes
those monomials for the variables of ``f``. The central series is
``H(t) = sum_{x in N^n} t^x``, truncated by total degree; its constant
monomial ``t^0 = 1`` is a genuine variable and must not be dropped.

Two independent routes are provided:

* the p-route rewrites ``f`` in power sums and uses ``p_k[g] = g(t^k)``;
* the h-route builds ``h_k[g]`` (or ``e_k[g]``) by a multiset convolution over
  the monomials of ``g`` in lexicographic order, staying in integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .partitions import Partition, vectors_up_to_degree
from .polyring import Poly, multiply
from .symfn import SymFn, schur_to_e, schur_to_h, to_p


@dataclass(frozen=True)
class MonomialSeries:
    n_vars: int
    truncation_degree: int
    terms: dict = field(hash=False, compare=True)

    def __post_init__(self):
        for x, c in self.terms.items():
            if len(x) != self.n_vars or any(v < 0 for v in x):
                raise ValueError(f"bad exponent {x}")
            if not isinstance(c, int) or c <= 0:
                raise ValueError(f"multiplicities must be positive integers, got {c} at {x}")
            if sum(x) > self.truncation_degree:
                raise ValueError(f"term {x} exceeds truncation degree {self.truncation_degree}")

    @classmethod
    def from_poly(cls, g: Poly, truncation_degree: int) -> "MonomialSeries":
        return cls(g.n_vars, truncation_degree, {x: c for x, c in g.terms.items() if sum(x) <= truncation_degree})

    def as_poly(self) -> Poly:
        return Poly(self.n_vars, self.terms, self.truncation_degree)

    def variables(self) -> list[tuple[int, ...]]:
        """The monomials of the series, repeated by multiplicity, in lexicographic order."""
        return [x for x in sorted(self.terms) for _ in range(self.terms[x])]


@lru_cache(maxsize=None)
def h_series(n: int, d: int) -> MonomialSeries:
    """``H(t_1..t_n)`` through total degree ``d``: every ``x`` with ``|x| <= d``, coefficient 1."""
    return MonomialSeries(n, d, {x: 1 for x in vectors_up_to_degree(n, d)})


def power_plethysm(k: int, g: MonomialSeries) -> MonomialSeries:
    """``p_k[g]``: every monomial ``t^x`` becomes ``t^{kx}``."""
    if k < 1:
        raise ValueError("k must be positive")
    acc: dict[tuple[int, ...], int] = {}
    for x, c in g.terms.items():
        y = tuple(k * v for v in x)
        if sum(y) <= g.truncation_degree:
            acc[y] = acc.get(y, 0) + c
    return MonomialSeries(g.n_vars, g.truncation_degree, acc)


def _check_bound(g: MonomialSeries, d: int) -> None:
    if d > g.truncation_degree:
        raise ValueError(
            f"degree bound {d} exceeds the series truncation {g.truncation_degree}"
        )


def _series_key(g: MonomialSeries):
    return g.n_vars, g.truncation_degree, tuple(sorted(g.terms.items()))


@lru_cache(maxsize=64)
def _graded_table(key, d: int, kmax: int, distinct: bool) -> tuple[Poly, ...]:
    # Coefficient of u^k in prod_x 1/(1 - u t^x) (or prod_x (1 + u t^x)),
    # built one monomial of g at a time, in lexicographic order.
    n, _, items = key
    table: list[dict] = [dict() for _ in range(kmax + 1)]
    table[0][(0,) * n] = 1
    for x, mult in items:
        dx = sum(x)
        for _ in range(mult):
            if distinct:
                # Each variable is used at most once: k descends so we read old values.
                for k in range(kmax, 0, -1):
                    src = table[k - 1]
                    dst = table[k]
                    for y, c in src.items():
                        if sum(y) + dx <= d:
                            z = tuple(a + b for a, b in zip(x, y))
                            dst[z] = dst.get(z, 0) + c
            else:
                # Unbounded repetition: k ascends so updates compound.
                for k in range(1, kmax + 1):
                    src = table[k - 1]
                    dst = table[k]
                    for y, c in list(src.items()):
                        if sum(y) + dx <= d:
                            z = tuple(a + b for a, b in zip(x, y))
                            dst[z] = dst.get(z, 0) + c
    return tuple(Poly(n, t, d) for t in table)


def h_plethysm_table(g: MonomialSeries, d: int, kmax: int) -> tuple[Poly, ...]:
    """``(h_0[g], ..., h_kmax[g])`` through degree ``d`` by multiset convolution."""
    _check_bound(g, d)
    return _graded_table(_series_key(g), d, kmax, False)


def e_plethysm_table(g: MonomialSeries, d: int, kmax: int) -> tuple[Poly, ...]:
    """``(e_0[g], ..., e_kmax[g])`` through degree ``d``."""
    _check_bound(g, d)
    return _graded_table(_series_key(g), d, kmax, True)


def _multiplicative_route(f: SymFn, g: MonomialSeries, d: int) -> Poly:
    kmax = max((max(lam, default=0) for lam in f.terms), default=0)
    table = (h_plethysm_table if f.basis == "h" else e_plethysm_table)(g, d, kmax)
    out = Poly.zero(g.n_vars, d)
    for lam, c in f.terms.items():
        term = Poly.one(g.n_vars, d)
        for part in lam:
            term = multiply(term, table[part], d)
        out = out + term.scale(c)
    return out


def _p_route(f: SymFn, g: MonomialSeries, d: int) -> Poly:
    fp = to_p(f)
    powers: dict[int, Poly] = {}
    out = Poly.zero(g.n_vars, d)
    for nu, c in fp.terms.items():
        term = Poly.one(g.n_vars, d)
        for part in nu:
            if part not in powers:
                powers[part] = power_plethysm(part, g).as_poly().truncate(d)
            term = multiply(term, powers[part], d)
        out = out + term.scale(c)
    return out


def plethysm_into_series(f: SymFn, g: MonomialSeries, d: int, route: str = "auto") -> Poly:
    """``f[g]`` through total degree ``d``.

    ``route`` is ``"p"`` (power sums, exact rationals), ``"h"`` (convolution
    in the h or e basis, integers) or ``"auto"``, which uses the h-route for
    inputs in the h, e or s basis and the p-route otherwise. Schur inputs on
    the h-route go through whichever Jacobi-Trudi determinant is smaller.
    """
    _check_bound(g, d)
    if route == "auto":
        route = "h" if f.basis in "hes" else "p"
    if route == "p":
        return _p_route(f, g, d)
    if route != "h":
        raise ValueError(f"unknown route {route!r}")
    if f.basis in "he":
        return _multiplicative_route(f, g, d)
    if f.basis == "s":
        out = Poly.zero(g.n_vars, d)
        for lam, c in f.terms.items():
            jt = schur_to_h(lam) if len(lam) <= max(lam, default=0) else schur_to_e(lam)
            out = out + _multiplicative_route(jt, g, d).scale(c)
        return out
    raise ValueError(f"the h-route needs an h, e or s basis input, got {f.basis!r}")


@lru_cache(maxsize=None)
def schur_plethysm_H(mu: Partition, n: int, d: int) -> Poly:
    """``s_mu[H]`` in ``n`` variables through degree ``d`` (integer h-route)."""
    return plethysm_into_series(SymFn.basis_element("s", mu), h_series(n, d), d, route="h")
