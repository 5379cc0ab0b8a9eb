import random

import pytest
from hypothesis import given, settings, strategies as st

from plethy.partitions import partitions_of, vectors_up_to_degree
from plethy.plethysm import (
    MonomialSeries,
    h_series,
    plethysm_into_series,
    power_plethysm,
    schur_plethysm_H,
)
from plethy.polyring import Poly, multiply
from plethy.symfn import SymFn, e, expand_in_variables, h, p, s
from plethy.vecpart import count_pk, count_qk


def substitute(f_poly: Poly, monomials: list[tuple[int, ...]], n: int) -> Poly:
    """Evaluate a polynomial in len(monomials) variables at those monomials of t_1..t_n."""
    out = Poly.zero(n)
    for x, c in f_poly.terms.items():
        y = [0] * n
        for power_, mono in zip(x, monomials):
            for i, v in enumerate(mono):
                y[i] += power_ * v
        out = out + Poly(n, {tuple(y): c})
    return out


def test_h_series_examples():
    assert h_series(1, 3).terms == {(0,): 1, (1,): 1, (2,): 1, (3,): 1}
    assert h_series(2, 1).terms == {(0, 0): 1, (0, 1): 1, (1, 0): 1}
    assert len(h_series(2, 2).terms) == 6


def test_series_validation():
    with pytest.raises(ValueError):
        MonomialSeries(2, 1, {(1, 1): 1})
    with pytest.raises(ValueError):
        MonomialSeries(2, 3, {(1, 1): 0})


def test_power_plethysm_examples():
    g = h_series(2, 4)
    doubled = power_plethysm(2, g)
    assert doubled.terms == {x: 1 for x in vectors_up_to_degree(2, 4) if all(v % 2 == 0 for v in x)}
    assert power_plethysm(1, g) == g
    # p_k[p_l] = p_{kl}: the monomials of p_l in 3 variables are t_i^l.
    for k in range(1, 4):
        for l in range(1, 4):
            pl = MonomialSeries(3, 12, {tuple(l if j == i else 0 for j in range(3)): 1 for i in range(3)})
            pkl = MonomialSeries(3, 12, {tuple(k * l if j == i else 0 for j in range(3)): 1 for i in range(3)})
            assert power_plethysm(k, pl) == pkl


def test_plethysm_into_square_of_linear_form():
    # (t1 + t2)^2 = t1^2 + t2^2 + t1 t2 + t1 t2, so f[g] = f(t1^2, t2^2, t1 t2, t1 t2).
    g = MonomialSeries(2, 6, {(2, 0): 1, (0, 2): 1, (1, 1): 2})
    monomials = [(2, 0), (0, 2), (1, 1), (1, 1)]
    for f in (s(2, 1), h(3), e(2), p(2, 1), s(1, 1, 1)):
        expected = substitute(expand_in_variables(f, 4), monomials, 2)
        for route in ("p", "auto"):
            assert plethysm_into_series(f, g, 6, route=route) == expected


@pytest.mark.parametrize("n", [1, 2, 3])
def test_h_and_e_of_H_count_vector_partitions(n):
    d = 5
    g = h_series(n, d)
    for k in range(0, 5):
        hk = plethysm_into_series(h(k) if k else SymFn("h", {(): 1}), g, d)
        ek = plethysm_into_series(e(k) if k else SymFn("e", {(): 1}), g, d)
        for x in vectors_up_to_degree(n, d):
            assert hk.terms.get(x, 0) == count_pk(x, k)
            assert ek.terms.get(x, 0) == count_qk(x, k)


def test_degree_bound_beyond_truncation_is_an_error():
    with pytest.raises(ValueError):
        plethysm_into_series(h(2), h_series(2, 3), 4)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_h_route_and_p_route_agree(n):
    for d in range(0, 6):
        g = h_series(n, d)
        for size in range(0, 5):
            for mu in partitions_of(size):
                f = SymFn.basis_element("h", mu)
                assert plethysm_into_series(f, g, d, route="h") == plethysm_into_series(f, g, d, route="p")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_schur_of_H_is_schur_positive_integral(n):
    for size in range(1, 5):
        for mu in partitions_of(size):
            poly = schur_plethysm_H(mu, n, 5)
            assert all(isinstance(c, int) and c >= 0 for c in poly.terms.values())


def _random_symfn(rng: random.Random, max_deg: int) -> SymFn:
    basis = rng.choice("hepms")
    terms = {}
    for _ in range(rng.randint(1, 3)):
        lam = rng.choice(partitions_of(rng.randint(0, max_deg)))
        terms[lam] = rng.randint(-3, 3)
    return SymFn(basis, terms)


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_additive_and_multiplicative(rng):
    g = h_series(3, 4)
    f1, f2 = _random_symfn(rng, 3), _random_symfn(rng, 3)
    left = plethysm_into_series(f1 + f2, g, 4)
    right = plethysm_into_series(f1, g, 4) + plethysm_into_series(f2, g, 4)
    assert left == right
    prod = plethysm_into_series(f1 * f2, g, 4)
    assert prod == multiply(plethysm_into_series(f1, g, 4), plethysm_into_series(f2, g, 4), 4)


@settings(max_examples=30, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(1, 2), min_size=1, max_size=4))
def test_p1_is_identity(terms):
    g = MonomialSeries(2, 4, terms)
    assert plethysm_into_series(p(1), g, 4) == g.as_poly()
