from math import factorial

import pytest

from plethy.induction import (
    InducedCharacter,
    ch_ind_general,
    ch_ind_permutation_module,
    ch_ind_sign,
    ch_ind_trivial,
    matrix_orbit_character,
    matrix_orbit_sign_character,
)
from plethy.partitions import Partition, iter_compositions, partitions_of
from plethy.plethysm import schur_plethysm_H
from plethy.polyring import Poly, evaluate_all_ones
from plethy.symfn import character_table, permutation_module_character


def brute_orbits(mu, d, distinct_rows=False) -> Poly:
    """Enumerate every n x n matrix with entry sum d; identify by sorting rows inside blocks."""
    mu = Partition(mu)
    n = mu.weight()
    seen = set()
    for entries in iter_compositions(d, n * n):
        rows = [entries[i * n:(i + 1) * n] for i in range(n)]
        if distinct_rows and len(set(rows)) < n:
            continue
        canon, start = [], 0
        for b in mu:
            canon.extend(sorted(rows[start:start + b]))
            start += b
        seen.add(tuple(canon))
    acc = {}
    for m in seen:
        x = tuple(sum(col) for col in zip(*m))
        acc[x] = acc.get(x, 0) + 1
    return Poly(n, acc)


def P(n, terms):
    return Poly(n, terms)


def test_trivial_examples():
    assert ch_ind_trivial(2, 1).character == P(2, {(1, 0): 1, (0, 1): 1})
    for d in range(4):
        assert ch_ind_trivial(1, d).character == P(1, {(d,): 1})
    assert ch_ind_trivial(2, 2).character == P(2, {(2, 0): 2, (1, 1): 2, (0, 2): 2})


def test_sign_examples():
    assert ch_ind_sign(2, 2).character == P(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert ch_ind_sign(1, 1).character == P(1, {(1,): 1})
    # No nonzero constant is sign-equivariant: Ind^0 of the sign module of S_2 is 0.
    assert ch_ind_sign(2, 0).character == Poly.zero(2)
    assert ch_ind_sign(1, 0).character == P(1, {(0,): 1})


def test_permutation_module_examples():
    for n in range(1, 4):
        for d in range(4):
            assert ch_ind_permutation_module((n,), d).character == ch_ind_trivial(n, d).character
    assert ch_ind_permutation_module((1, 1), 1).character == P(2, {(1, 0): 2, (0, 1): 2})
    assert ch_ind_permutation_module((2, 1), 1).character == P(3, {(1, 0, 0): 2, (0, 1, 0): 2, (0, 0, 1): 2})


def test_orbit_examples():
    assert matrix_orbit_character((2,), 1).character == P(2, {(1, 0): 1, (0, 1): 1})
    assert matrix_orbit_character((1,), 2).character == P(1, {(2,): 1})
    assert matrix_orbit_character((1, 1), 1).character == P(2, {(1, 0): 2, (0, 1): 2})
    assert matrix_orbit_sign_character(2, 2).character == P(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert matrix_orbit_sign_character(2, 0).character == Poly.zero(2)
    assert matrix_orbit_sign_character(1, 3).character == P(1, {(3,): 1})


@pytest.mark.parametrize("n", [1, 2, 3])
def test_orbit_generator_matches_brute_enumeration(n):
    for d in range(0, 4 if n == 3 else 5):
        for mu in partitions_of(n):
            assert matrix_orbit_character(mu, d).character == brute_orbits(mu, d)
        assert matrix_orbit_sign_character(n, d).character == brute_orbits((n,), d, distinct_rows=True)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_orbits_match_closed_forms(n):
    for d in range(0, 6):
        for mu in partitions_of(n):
            assert matrix_orbit_character(mu, d).character == ch_ind_permutation_module(mu, d).character
        if d >= 1:
            assert matrix_orbit_sign_character(n, d).character == ch_ind_sign(n, d).character


@pytest.mark.parametrize("n", [1, 2, 3])
def test_general_matches_special_cases(n):
    table = character_table(n)
    triv = {nu: 1 for nu in table.partitions}
    sign = {nu: (-1) ** (n - len(nu)) for nu in table.partitions}
    for d in range(0, 5):
        assert ch_ind_general(triv, d, n).character == ch_ind_trivial(n, d).character
        assert ch_ind_general(sign, d, n).character == ch_ind_sign(n, d).character
        for mu in table.partitions:
            chi = permutation_module_character(mu)
            assert ch_ind_general(chi, d, n).character == ch_ind_permutation_module(mu, d).character


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_induced_irreducibles_are_schur_plethysms(n):
    table = character_table(n)
    for mu in table.partitions:
        chi = {nu: table(mu, nu) for nu in table.partitions}
        for d in range(0, 6):
            ind = ch_ind_general(chi, d, n)
            assert ind.is_genuine()
            assert ind.character == schur_plethysm_H(mu, n, 5).homogeneous_part(d)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_regular_dimension_bookkeeping(n):
    table = character_table(n)
    identity = Partition((1,) * n)
    regular = {nu: factorial(n) if nu == identity else 0 for nu in table.partitions}
    for d in range(0, 5):
        total = evaluate_all_ones(ch_ind_general(regular, d, n).character)
        parts = sum(
            table.dimension(mu)
            * evaluate_all_ones(ch_ind_general({nu: table(mu, nu) for nu in table.partitions}, d, n).character)
            for mu in table.partitions
        )
        assert total == parts


def test_virtual_characters_are_additive():
    table = character_table(3)
    a = {nu: table((2, 1), nu) for nu in table.partitions}
    b = {nu: table((1, 1, 1), nu) for nu in table.partitions}
    diff = {nu: a[nu] - 2 * b[nu] for nu in table.partitions}
    for d in range(4):
        lhs = ch_ind_general(diff, d, 3).character
        rhs = ch_ind_general(a, d, 3).character - ch_ind_general(b, d, 3).character.scale(2)
        assert lhs == rhs


def test_class_function_validation():
    with pytest.raises(ValueError):
        ch_ind_general({(2,): 1, (1, 1, 1): 1}, 1, 2)
    with pytest.raises(ValueError):
        InducedCharacter(2, 2, P(2, {(1, 0): 1}), "bad")
