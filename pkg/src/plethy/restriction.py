"""Restriction coefficients ``r[lam, mu]``: multiplicity of the Specht module
``V_mu`` in the polynomial GL_n irreducible ``W_lam`` restricted to S_n.

Three routes:

* ``littlewood_restriction``: ``<s_lam, s_mu[H]>`` with ``s_mu[H]`` built from
  ``h_k[H]`` (or ``e_k[H]``) by Jacobi-Trudi;
* ``corollary_*_multiplicity``: signed sums of vector partition counts over
  the staircase orbit, for the trivial and sign modules;
* ``brute_force_restriction``: average the character ``s_lam(eigenvalues)``
  against the irreducible characters of S_n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import Partition, enumerate_partitions, partitions_of, signed_permutations, staircase, staircase_action
from .plethysm import schur_plethysm_H
from .polyring import Poly, coefficient_of, evaluate_all_ones, multiply, vandermonde_alternant
from .symfn import character_table, expand_in_variables, power_sum_at_cycle_type, s, schur_to_p
from .vecpart import count_pk, count_qk


class ArithmeticInconsistency(RuntimeError):
    """A quantity that must be a nonnegative integer came out otherwise."""


def _check_lambda(lam, n: int) -> Partition:
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    return lam


def _check_mu(mu, n: int) -> Partition:
    mu = Partition(mu)
    if mu.weight() != n:
        raise ValueError(f"{mu} is not a partition of {n}")
    return mu


@lru_cache(maxsize=None)
def _alternant_product(f_key, n: int) -> Poly:
    f = Poly(n, dict(f_key))
    return multiply(vandermonde_alternant(n), f)


def schur_coefficients(f: Poly, d: int | None = None) -> dict[Partition, int | Fraction]:
    """``<f, s_lam>`` for every ``lam`` in Lambda(d, n): coefficients of ``t^(lam + delta)`` in ``a_delta f``."""
    n = f.n_vars
    if d is None:
        d = max(f.degree(), 0)
    if not f.is_homogeneous(d):
        raise ValueError(f"polynomial is not homogeneous of degree {d}")
    prod = _alternant_product(tuple(f.terms.items()), n)
    delta = staircase(n)
    return {
        lam: coefficient_of(prod, tuple(a + b for a, b in zip(lam.pad_to(n), delta)))
        for lam in enumerate_partitions(d, n)
    }


def schur_coefficient_extraction(f: Poly, lam) -> int | Fraction:
    """``<f, s_lam>`` for a symmetric polynomial ``f`` homogeneous of degree ``|lam|``."""
    n = f.n_vars
    lam = _check_lambda(lam, n)
    if not f.is_homogeneous(lam.weight()):
        raise ValueError(f"polynomial is not homogeneous of degree {lam.weight()}")
    prod = _alternant_product(tuple(f.terms.items()), n)
    return coefficient_of(prod, tuple(a + b for a, b in zip(lam.pad_to(n), staircase(n))))


def _as_count(value, what: str) -> int:
    if Fraction(value).denominator != 1 or value < 0:
        raise ArithmeticInconsistency(f"{what} = {value} is not a nonnegative integer")
    return int(value)


@lru_cache(maxsize=None)
def _littlewood_row(mu: Partition, n: int, d: int) -> dict[Partition, int]:
    slice_ = schur_plethysm_H(mu, n, d).homogeneous_part(d)
    return {lam: _as_count(v, f"<s_{lam}, s_{mu}[H]>") for lam, v in schur_coefficients(slice_, d).items()}


def littlewood_restriction(lam, mu, n: int | None = None) -> int:
    """``r[lam, mu] = <s_lam, s_mu[H]>``; ``n`` defaults to ``|mu|``."""
    mu = Partition(mu)
    if n is None:
        n = mu.weight()
    mu = _check_mu(mu, n)
    lam = _check_lambda(lam, n)
    return _littlewood_row(mu, n, lam.weight())[lam]


def _corollary_sum(lam, n: int, counter) -> int:
    lam = _check_lambda(lam, n)
    shifted = tuple(a + b for a, b in zip(lam.pad_to(n), staircase(n)))
    total = 0
    for w, sign in signed_permutations(n):
        x = tuple(a - b for a, b in zip(shifted, staircase_action(w)))
        total += sign * counter(x, n)
    return total


def corollary_trivial_multiplicity(lam, n: int) -> int:
    """``sum_w sgn(w) p_n(lam + delta - w.delta)``."""
    return _corollary_sum(lam, n, count_pk)


def corollary_sign_multiplicity(lam, n: int) -> int:
    """``sum_w sgn(w) q_n(lam + delta - w.delta)``."""
    return _corollary_sum(lam, n, count_qk)


def two_row_shortcut(l1: int, l2: int, n: int, variant: str = "p") -> int:
    """``c_n(l1, l2) - c_n(l1 + 1, l2 - 1)`` with ``c`` = p or q."""
    counter = count_pk if variant == "p" else count_qk
    return counter((l1, l2), n) - counter((l1 + 1, l2 - 1), n)


def restricted_character(lam, n: int) -> dict[Partition, int]:
    """``s_lam`` evaluated at the eigenvalues of each conjugacy class of S_n."""
    lam = _check_lambda(lam, n)
    expansion = schur_to_p(lam)
    values = {}
    for rho in partitions_of(n):
        v = Fraction(0)
        for nu, c in expansion.terms.items():
            term = c
            for part in nu:
                term *= power_sum_at_cycle_type(part, rho)
            v += term
        if v.denominator != 1:
            raise ArithmeticInconsistency(f"s_{lam} at class {rho} is {v}, not an integer")
        values[rho] = int(v)
    return values


def brute_force_restriction(lam, n: int) -> dict[Partition, int]:
    """Decompose the restricted character with the character table of S_n."""
    table = character_table(n)
    chi = restricted_character(lam, n)
    out = {}
    for mu in table.partitions:
        total = sum(table.class_sizes[rho] * chi[rho] * table(mu, rho) for rho in table.partitions)
        out[mu] = _as_count(Fraction(total, factorial(n)), f"brute-force r[{lam}, {mu}]")
    return out


def schur_dimension(lam, n: int) -> int:
    return int(evaluate_all_ones(expand_in_variables(s(*Partition(lam)), n)))


# -- tables ------------------------------------------------------------------

ROUTES = ("littlewood", "corollary", "brute")


@dataclass
class RestrictionCell:
    lam: Partition
    mu: Partition
    routes: dict = field(default_factory=dict)

    @property
    def value(self) -> int:
        return next(v for v in self.routes.values() if v is not None)

    @property
    def agree(self) -> bool:
        vals = {v for v in self.routes.values() if v is not None}
        return len(vals) <= 1


@dataclass
class RestrictionTable:
    n: int
    d: int
    cells: list[RestrictionCell]

    def get(self, lam, mu) -> int:
        lam, mu = Partition(lam), Partition(mu)
        for cell in self.cells:
            if cell.lam == lam and cell.mu == mu:
                return cell.value
        raise KeyError((lam, mu))

    def disagreements(self) -> list[RestrictionCell]:
        return [c for c in self.cells if not c.agree]

    def dimension_check(self) -> dict[Partition, tuple[int, int]]:
        """``lam -> (sum_mu r[lam, mu] f^mu, s_lam(1, ..., 1))``."""
        table = character_table(self.n)
        out: dict[Partition, list[int]] = {}
        for cell in self.cells:
            acc = out.setdefault(cell.lam, [0, schur_dimension(cell.lam, self.n)])
            acc[0] += cell.value * table.dimension(cell.mu)
        return {lam: tuple(v) for lam, v in out.items()}


def corollary_value(lam, mu, n: int) -> int | None:
    """Corollary route where it applies (``mu`` trivial or sign), else ``None``."""
    mu = Partition(mu)
    if mu == Partition((n,)):
        return corollary_trivial_multiplicity(lam, n)
    if mu == Partition((1,) * n):
        return corollary_sign_multiplicity(lam, n)
    return None


def build_table(
    n: int,
    d: int,
    routes=("littlewood",),
    lambdas=None,
    mus=None,
) -> RestrictionTable:
    lambdas = [Partition(l) for l in lambdas] if lambdas is not None else enumerate_partitions(d, n)
    mus = [Partition(u) for u in mus] if mus is not None else partitions_of(n)
    cells = []
    for lam in lambdas:
        _check_lambda(lam, n)
        if lam.weight() != d:
            raise ValueError(f"{lam} is not a partition of {d}")
        brute = brute_force_restriction(lam, n) if "brute" in routes else None
        for mu in mus:
            mu = _check_mu(mu, n)
            cell = RestrictionCell(lam, mu)
            for route in ROUTES:
                if route not in routes:
                    continue
                if route == "littlewood":
                    cell.routes[route] = littlewood_restriction(lam, mu, n)
                elif route == "corollary":
                    cell.routes[route] = corollary_value(lam, mu, n)
                else:
                    cell.routes[route] = brute[mu]
            cells.append(cell)
    return RestrictionTable(n, d, cells)


# -- unimodality ---------------------------------------------------------------


@dataclass(frozen=True)
class UnimodalityRow:
    x1: int
    x2: int
    n: int
    p_diff: int
    q_diff: int
    r_trivial: int | None
    r_sign: int | None

    @property
    def ok(self) -> bool:
        if self.p_diff < 0 or self.q_diff < 0:
            return False
        if self.r_trivial is not None and self.r_trivial != self.p_diff:
            return False
        if self.r_sign is not None and self.r_sign != self.q_diff:
            return False
        return True


@dataclass
class UnimodalityReport:
    rows: list[UnimodalityRow]

    @property
    def failures(self) -> list[UnimodalityRow]:
        return [r for r in self.rows if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.failures


def unimodality_sweep(max_sum: int, max_n: int) -> UnimodalityReport:
    """Check ``p_n(x1, x2) >= p_n(x1+1, x2-1)`` and the same for ``q_n``.

    For ``n >= 2`` each difference is also compared with the trivial or sign
    multiplicity in ``W_(x1, x2)``; for ``n < 2`` the shape has too many rows
    to index a GL_n irreducible and only the inequality is checked.
    """
    rows = []
    for total in range(2, max_sum + 1):
        for x2 in range(1, total // 2 + 1):
            x1 = total - x2
            for n in range(0, max_n + 1):
                pd = two_row_shortcut(x1, x2, n, "p")
                qd = two_row_shortcut(x1, x2, n, "q")
                rt = rs = None
                if n >= 2:
                    rt = corollary_trivial_multiplicity((x1, x2), n)
                    rs = corollary_sign_multiplicity((x1, x2), n)
                rows.append(UnimodalityRow(x1, x2, n, pd, qd, rt, rs))
    return UnimodalityReport(rows)
