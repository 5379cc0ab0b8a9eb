"""Sparse polynomials in ``n`` commuting variables with exact coefficients.

Coefficients are Python ``int`` or ``fractions.Fraction``; nothing is ever
converted to floating point. Terms iterate in lexicographic order of their
exponent vectors.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .partitions import signed_permutations, staircase_action

Exponent = tuple[int, ...]


def _normalize(c: Rational) -> int | Fraction:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Poly:
    """Finite sum of terms ``c * t^x``.

    ``truncation`` (optional) is a total-degree bound: terms above it are
    discarded on construction and by every arithmetic operation.
    """

    __slots__ = ("n_vars", "terms", "truncation")

    def __init__(
        self,
        n_vars: int,
        terms: Mapping[Exponent, Rational] | Iterable[tuple[Exponent, Rational]] = (),
        truncation: int | None = None,
    ):
        if n_vars < 0:
            raise ValueError("n_vars must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Rational] = {}
        for x, c in items:
            x = tuple(x)
            if len(x) != n_vars:
                raise ValueError(f"exponent {x} does not have length {n_vars}")
            if any(e < 0 for e in x):
                raise ValueError(f"negative exponent {x}")
            if truncation is not None and sum(x) > truncation:
                continue
            acc[x] = acc.get(x, 0) + c
        self.n_vars = n_vars
        self.truncation = truncation
        self.terms = {x: _normalize(acc[x]) for x in sorted(acc) if acc[x] != 0}

    @classmethod
    def _raw(cls, n_vars: int, terms: dict, truncation: int | None) -> "Poly":
        # Trusted constructor: terms already validated, caller drops zeros.
        p = cls.__new__(cls)
        p.n_vars = n_vars
        p.truncation = truncation
        p.terms = {x: _normalize(terms[x]) for x in sorted(terms) if terms[x] != 0}
        return p

    @classmethod
    def zero(cls, n_vars: int, truncation: int | None = None) -> "Poly":
        return cls._raw(n_vars, {}, truncation)

    @classmethod
    def one(cls, n_vars: int, truncation: int | None = None) -> "Poly":
        return cls._raw(n_vars, {(0,) * n_vars: 1}, truncation)

    @classmethod
    def variable(cls, i: int, n_vars: int) -> "Poly":
        x = [0] * n_vars
        x[i] = 1
        return cls._raw(n_vars, {tuple(x): 1}, None)

    @classmethod
    def monomial(cls, x: Exponent, coeff: Rational = 1) -> "Poly":
        return cls(len(x), {tuple(x): coeff})

    # -- inspection --------------------------------------------------------

    def __repr__(self) -> str:
        return f"Poly({self.n_vars}, {self.terms!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for x, c in self.terms.items():
            mono = "*".join(
                f"t{i + 1}" if e == 1 else f"t{i + 1}^{e}" for i, e in enumerate(x) if e
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.n_vars == other.n_vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly(self.n_vars, {(0,) * self.n_vars: other})
        return NotImplemented

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def degree(self) -> int:
        return max((sum(x) for x in self.terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degrees = {sum(x) for x in self.terms}
        if d is not None:
            return degrees <= {d}
        return len(degrees) <= 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly._raw(
            self.n_vars, {x: c for x, c in self.terms.items() if sum(x) == d}, self.truncation
        )

    def truncate(self, d: int) -> "Poly":
        return Poly._raw(self.n_vars, {x: c for x, c in self.terms.items() if sum(x) <= d}, d)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.n_vars != other.n_vars:
            raise ValueError(f"variable count mismatch: {self.n_vars} vs {other.n_vars}")

    def _combined_truncation(self, other: "Poly") -> int | None:
        bounds = [b for b in (self.truncation, other.truncation) if b is not None]
        return min(bounds) if bounds else None

    def __add__(self, other: "Poly") -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.one(self.n_vars).scale(other)
        self._check(other)
        acc = dict(self.terms)
        for x, c in other.terms.items():
            acc[x] = acc.get(x, 0) + c
        trunc = self._combined_truncation(other)
        if trunc is not None:
            acc = {x: c for x, c in acc.items() if sum(x) <= trunc}
        return Poly._raw(self.n_vars, acc, trunc)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return self.scale(-1)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c: Rational) -> "Poly":
        if c == 0:
            return Poly.zero(self.n_vars, self.truncation)
        return Poly._raw(self.n_vars, {x: v * c for x, v in self.terms.items()}, self.truncation)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "Poly":
        out = Poly.one(self.n_vars, self.truncation)
        for _ in range(k):
            out = out * self
        return out

    def swap_variables(self, i: int, j: int) -> "Poly":
        def sw(x):
            x = list(x)
            x[i], x[j] = x[j], x[i]
            return tuple(x)

        return Poly._raw(self.n_vars, {sw(x): c for x, c in self.terms.items()}, self.truncation)


def multiply(a: Poly, b: Poly, truncate_at: int | None = None) -> Poly:
    """Exact product, dropping every term of total degree above ``truncate_at``.

    The bound defaults to the tighter of the operands' own truncations.
    """
    a._check(b)
    bounds = [t for t in (truncate_at, a.truncation, b.truncation) if t is not None]
    bound = min(bounds) if bounds else None
    # Sort one side by degree so the inner loop can stop early.
    bterms = sorted(((sum(y), y, c) for y, c in b.terms.items()), key=lambda t: t[0])
    acc: dict[Exponent, Rational] = {}
    get = acc.get
    for x, c in a.terms.items():
        room = None if bound is None else bound - sum(x)
        if room is not None and room < 0:
            continue
        for dy, y, e in bterms:
            if room is not None and dy > room:
                break
            z = tuple(map(int.__add__, x, y))
            acc[z] = get(z, 0) + c * e
    return Poly._raw(a.n_vars, acc, bound)


def vandermonde_alternant(n: int) -> Poly:
    """``a_delta = sum_w sgn(w) t^{w . delta}``, the n x n Vandermonde determinant."""
    if n < 1:
        raise ValueError("n must be positive")
    return Poly(n, ((staircase_action(w), s) for w, s in signed_permutations(n)))


def coefficient_of(p: Poly, x: Exponent) -> int | Fraction:
    x = tuple(x)
    if len(x) != p.n_vars:
        raise ValueError(f"exponent {x} does not have length {p.n_vars}")
    return p.terms.get(x, 0)


def evaluate_all_ones(p: Poly) -> int | Fraction:
    """Value at ``t = (1, ..., 1)``; for a character this is the dimension."""
    return _normalize(sum(p.terms.values(), Fraction(0)))
