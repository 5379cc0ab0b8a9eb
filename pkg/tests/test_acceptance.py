"""Exit criteria. Every identity is exact (zero tolerance); runtime limits are
measured from cold caches. One PASS/FAIL line per criterion is printed in the
terminal summary."""

import random
import time

from conftest import ACCEPTANCE_LINES
from plethy import clear_caches
from plethy.partitions import Partition, enumerate_partitions, partitions_of
from plethy.plethysm import MonomialSeries, h_series, plethysm_into_series, power_plethysm
from plethy.polyring import multiply
from plethy.restriction import (
    brute_force_restriction,
    corollary_sign_multiplicity,
    corollary_trivial_multiplicity,
    littlewood_restriction,
    schur_dimension,
)
from plethy.symfn import SymFn, character_table, expand_in_variables, p
from plethy.verify import (
    SuiteResult,
    check_adjunction,
    check_ehH,
    check_orbits,
    check_two_row,
    check_unimodality,
)


def record(number: int, title: str, result: SuiteResult, elapsed: float, limit: float | None):
    within = limit is None or elapsed <= limit
    status = "PASS" if result.ok and within else "FAIL"
    budget = f" (limit {limit:.0f}s)" if limit is not None else ""
    ACCEPTANCE_LINES.append(
        f"{status} [{number}] {title}: {result.checked} identities, "
        f"{len(result.counterexamples)} failures, {elapsed:.2f}s{budget}"
    )
    print(ACCEPTANCE_LINES[-1])
    assert result.ok, result.counterexamples[:5]
    assert within, f"took {elapsed:.1f}s, limit {limit}s"


def timed(fn):
    clear_caches()
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def littlewood_vs_brute(max_n: int, max_deg: int) -> SuiteResult:
    res = SuiteResult("littlewood")
    for n in range(1, max_n + 1):
        for d in range(0, max_deg + 1):
            for lam in enumerate_partitions(d, n):
                brute = brute_force_restriction(lam, n)
                for mu in partitions_of(n):
                    lw = littlewood_restriction(lam, mu, n)
                    res.check(lw == brute[mu], lambda: f"n={n} lam={lam} mu={mu}: {lw} != {brute[mu]}")
    return res


def corollaries_vs_littlewood(max_n: int, max_deg: int) -> SuiteResult:
    res = SuiteResult("corollary")
    for n in range(1, max_n + 1):
        triv, sign = Partition((n,)), Partition((1,) * n)
        for d in range(0, max_deg + 1):
            for lam in enumerate_partitions(d, n):
                ct, lt = corollary_trivial_multiplicity(lam, n), littlewood_restriction(lam, triv, n)
                cs, ls = corollary_sign_multiplicity(lam, n), littlewood_restriction(lam, sign, n)
                res.check(ct == lt, lambda: f"n={n} lam={lam} trivial: {ct} != {lt}")
                res.check(cs == ls, lambda: f"n={n} lam={lam} sign: {cs} != {ls}")
    return res


def plethysm_algebra(cases: int, seed: int = 20261019) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("plethysm algebra")

    def random_symfn(max_deg):
        basis = rng.choice("hepms")
        terms = {}
        for _ in range(rng.randint(1, 3)):
            terms[rng.choice(partitions_of(rng.randint(0, max_deg)))] = rng.randint(-4, 4)
        return SymFn(basis, terms)

    def random_series(n, trunc):
        terms = {}
        for _ in range(rng.randint(1, 5)):
            x = tuple(rng.randint(0, 2) for _ in range(n))
            if sum(x) <= trunc:
                terms[x] = rng.randint(1, 2)
        return MonomialSeries(n, trunc, terms)

    for case in range(cases):
        n = rng.randint(1, 3)
        d = rng.randint(2, 4)
        g = h_series(n, d) if rng.random() < 0.5 else random_series(n, d)
        f1, f2 = random_symfn(3), random_symfn(3)
        lhs = plethysm_into_series(f1 + f2, g, d)
        rhs = plethysm_into_series(f1, g, d) + plethysm_into_series(f2, g, d)
        res.check(lhs == rhs, lambda: f"case {case}: additivity fails for {f1}, {f2}")
        lhs = plethysm_into_series(f1 * f2, g, d)
        rhs = multiply(plethysm_into_series(f1, g, d), plethysm_into_series(f2, g, d), d)
        res.check(lhs == rhs, lambda: f"case {case}: multiplicativity fails for {f1}, {f2}")
        res.check(
            plethysm_into_series(p(1), g, d) == g.as_poly(),
            lambda: f"case {case}: p_1[g] != g",
        )
        k, l = rng.randint(1, 3), rng.randint(1, 3)
        pl = MonomialSeries(n, k * l, {tuple(l if j == i else 0 for j in range(n)): 1 for i in range(n)})
        res.check(
            plethysm_into_series(p(k), pl, k * l) == expand_in_variables(p(k * l), n),
            lambda: f"case {case}: p_{k}[p_{l}] != p_{k * l} in {n} variables",
        )
        res.check(
            power_plethysm(k, pl).as_poly() == expand_in_variables(p(k * l), n, k * l),
            lambda: f"case {case}: power_plethysm({k}, p_{l}) != p_{k * l}",
        )
    return res


def dimension_bookkeeping(max_n: int, max_deg: int) -> SuiteResult:
    res = SuiteResult("dimension")
    for n in range(1, max_n + 1):
        table = character_table(n)
        for d in range(0, max_deg + 1):
            for lam in enumerate_partitions(d, n):
                total = sum(littlewood_restriction(lam, mu, n) * table.dimension(mu) for mu in table.partitions)
                dim = schur_dimension(lam, n)
                res.check(total == dim, lambda: f"n={n} lam={lam}: sum r f = {total} != {dim}")
    return res


def test_criterion_1_littlewood_equals_brute_force():
    result, elapsed = timed(lambda: littlewood_vs_brute(5, 6))
    record(1, "Littlewood = brute force, n<=5, d<=6", result, elapsed, 300)


def test_criterion_2_corollary_formulas():
    result, elapsed = timed(lambda: corollaries_vs_littlewood(5, 6))
    record(2, "corollary trivial/sign sums = Littlewood, n<=5, d<=6", result, elapsed, 60)


def test_criterion_3_h_and_e_of_H():
    result, elapsed = timed(lambda: check_ehH(4, 6, 5, enumerate_check=True))
    record(3, "h_k[H] = p_k, e_k[H] = q_k, counts = enumeration, n<=4, |x|<=6, k<=5", result, elapsed, 60)


def test_criterion_4_matrix_orbits():
    result, elapsed = timed(lambda: check_orbits(4, 5))
    record(4, "matrix orbits = closed forms, n<=4, d<=5 (sign: d>=1)", result, elapsed, 120)


def test_criterion_5_two_row_example():
    result, elapsed = timed(lambda: check_two_row(8, 5))
    record(5, "two-row shortcut = corollary = Littlewood, l1+l2<=8, n<=5", result, elapsed, None)


def test_criterion_6_unimodality():
    result, elapsed = timed(lambda: check_unimodality(10, 6))
    record(6, "unimodality, differences = multiplicities, x1+x2<=10, n<=6", result, elapsed, None)


def test_criterion_7_plethysm_algebra():
    result, elapsed = timed(lambda: plethysm_algebra(200))
    record(7, "plethysm algebra on 200 random cases", result, elapsed, None)


def test_criterion_8_adjunction():
    result, elapsed = timed(lambda: check_adjunction(3, 4))
    record(8, "[Ind^d V_mu : W_lam] = r, n<=3, d<=4", result, elapsed, None)


def test_criterion_9_dimension_bookkeeping():
    result, elapsed = timed(lambda: dimension_bookkeeping(5, 6))
    record(9, "sum_mu r f^mu = s_lam(1..1), n<=5, d<=6", result, elapsed, None)

