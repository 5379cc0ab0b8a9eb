"""Identity checks shared by the ``verify`` subcommand and the acceptance tests.

Every suite returns a ``SuiteResult`` counting the identities checked and
listing counterexamples as readable strings.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .induction import (
    ch_ind_general,
    ch_ind_permutation_module,
    ch_ind_sign,
    matrix_orbit_character,
    matrix_orbit_sign_character,
)
from .partitions import Partition, enumerate_partitions, partitions_of, vectors_up_to_degree
from .plethysm import e_plethysm_table, h_plethysm_table, h_series
from .polyring import coefficient_of
from .restriction import (
    brute_force_restriction,
    corollary_sign_multiplicity,
    corollary_trivial_multiplicity,
    littlewood_restriction,
    schur_coefficient_extraction,
    schur_dimension,
    two_row_shortcut,
    unimodality_sweep,
)
from .symfn import character_table
from .vecpart import count_pk, count_qk, enumerate_vector_partitions

SUITES = ("ehH", "orbit", "littlewood", "unimodality", "adjunction")

DEFAULTS = {"n": 3, "d": 5, "k": 4, "max_sum": 8, "max_n": 5}


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def check(self, condition: bool, describe) -> None:
        self.checked += 1
        if not condition:
            self.counterexamples.append(describe())

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.checked} identities, {len(self.counterexamples)} failures"


def resolve_ranges(args) -> dict:
    ranges = dict(DEFAULTS)
    for key, attr in (("n", "n"), ("d", "d"), ("k", "k"), ("max_sum", "max_sum"), ("max_n", "max_n_sweep")):
        value = getattr(args, attr, None)
        if value is not None:
            ranges[key] = value
    return ranges


def _fp(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def check_ehH(max_n: int, max_deg: int, max_k: int, enumerate_check: bool = True) -> SuiteResult:
    """Coefficients of h_k[H], e_k[H] against p_k, q_k, and those against enumeration."""
    res = SuiteResult("ehH")
    for n in range(1, max_n + 1):
        g = h_series(n, max_deg)
        htab = h_plethysm_table(g, max_deg, max_k)
        etab = e_plethysm_table(g, max_deg, max_k)
        for x in vectors_up_to_degree(n, max_deg):
            parts = enumerate_vector_partitions(x) if enumerate_check else None
            dparts = enumerate_vector_partitions(x, distinct=True) if enumerate_check else None
            for k in range(max_k + 1):
                pk, qk = count_pk(x, k), count_qk(x, k)
                hc, ec = coefficient_of(htab[k], x), coefficient_of(etab[k], x)
                res.check(hc == pk, lambda: f"n={n} x={_fp(x)} k={k}: h_k[H] coeff {hc} != p_k {pk}")
                res.check(ec == qk, lambda: f"n={n} x={_fp(x)} k={k}: e_k[H] coeff {ec} != q_k {qk}")
                if enumerate_check:
                    pe = sum(1 for pt in parts if len(pt) <= k)
                    qe = sum(1 for pt in dparts if len(pt) in (k, k - 1))
                    res.check(pe == pk, lambda: f"n={n} x={_fp(x)} k={k}: enumeration {pe} != p_k {pk}")
                    res.check(qe == qk, lambda: f"n={n} x={_fp(x)} k={k}: enumeration {qe} != q_k {qk}")
    return res


def check_orbits(max_n: int, max_deg: int) -> SuiteResult:
    """Matrix-orbit characters against the vector-partition closed forms."""
    res = SuiteResult("orbit")
    for n in range(1, max_n + 1):
        for d in range(0, max_deg + 1):
            for mu in partitions_of(n):
                a = matrix_orbit_character(mu, d).character
                b = ch_ind_permutation_module(mu, d).character
                res.check(a == b, lambda: f"n={n} d={d} mu={_fp(mu)}: orbits {a} != closed form {b}")
            if d >= 1:
                a = matrix_orbit_sign_character(n, d).character
                b = ch_ind_sign(n, d).character
                res.check(a == b, lambda: f"n={n} d={d} sign: orbits {a} != closed form {b}")
    return res


def check_littlewood(max_n: int, max_deg: int) -> SuiteResult:
    """Littlewood route against brute force, the corollary sums, and dimensions."""
    res = SuiteResult("littlewood")
    for n in range(1, max_n + 1):
        table = character_table(n)
        triv, sign = Partition((n,)), Partition((1,) * n)
        for d in range(0, max_deg + 1):
            for lam in enumerate_partitions(d, n):
                brute = brute_force_restriction(lam, n)
                dim = 0
                for mu in table.partitions:
                    lw = littlewood_restriction(lam, mu, n)
                    res.check(
                        lw == brute[mu],
                        lambda: f"n={n} d={d} lambda={_fp(lam)} mu={_fp(mu)}: littlewood {lw} != brute {brute[mu]}",
                    )
                    dim += lw * table.dimension(mu)
                ct, cs = corollary_trivial_multiplicity(lam, n), corollary_sign_multiplicity(lam, n)
                res.check(ct == brute[triv], lambda: f"n={n} lambda={_fp(lam)}: corollary trivial {ct} != {brute[triv]}")
                res.check(cs == brute[sign], lambda: f"n={n} lambda={_fp(lam)}: corollary sign {cs} != {brute[sign]}")
                sd = schur_dimension(lam, n)
                res.check(dim == sd, lambda: f"n={n} lambda={_fp(lam)}: sum r*f = {dim} != dim W = {sd}")
    return res


def check_two_row(max_sum: int, max_n: int) -> SuiteResult:
    res = SuiteResult("two-row")
    for total in range(0, max_sum + 1):
        for l2 in range(0, total // 2 + 1):
            l1 = total - l2
            for n in range(2, max_n + 1):
                lam = (l1, l2)
                for variant, corollary, mu in (
                    ("p", corollary_trivial_multiplicity, (n,)),
                    ("q", corollary_sign_multiplicity, (1,) * n),
                ):
                    short = two_row_shortcut(l1, l2, n, variant)
                    full = corollary(lam, n)
                    lw = littlewood_restriction(lam, mu, n)
                    res.check(
                        short == full == lw,
                        lambda: f"lambda=({l1},{l2}) n={n} {variant}: shortcut {short}, corollary {full}, littlewood {lw}",
                    )
    return res


def check_unimodality(max_sum: int, max_n: int) -> SuiteResult:
    res = SuiteResult("unimodality")
    for row in unimodality_sweep(max_sum, max_n).rows:
        res.check(
            row.ok,
            lambda: f"x=({row.x1},{row.x2}) n={row.n}: p diff {row.p_diff} (r={row.r_trivial}), "
            f"q diff {row.q_diff} (r={row.r_sign})",
        )
    return res


def check_adjunction(max_n: int, max_deg: int) -> SuiteResult:
    """Multiplicity of W_lam in the induced V_mu equals r[lam, mu]."""
    res = SuiteResult("adjunction")
    for n in range(1, max_n + 1):
        table = character_table(n)
        for mu in table.partitions:
            chi = {nu: table(mu, nu) for nu in table.partitions}
            for d in range(0, max_deg + 1):
                ind = ch_ind_general(chi, d, n).character
                res.check(
                    ind.is_integral() and all(c >= 0 for c in ind.terms.values()),
                    lambda: f"n={n} d={d} mu={_fp(mu)}: induced character not a genuine character",
                )
                for lam in enumerate_partitions(d, n):
                    mult = schur_coefficient_extraction(ind, lam)
                    r = littlewood_restriction(lam, mu, n)
                    res.check(mult == r, lambda: f"n={n} lambda={_fp(lam)} mu={_fp(mu)}: [Ind : W] = {mult} != r = {r}")
    return res


def run_suite(name: str, ranges: dict) -> SuiteResult:
    if name == "ehH":
        return check_ehH(ranges["n"], ranges["d"], ranges["k"])
    if name == "orbit":
        return check_orbits(ranges["n"], ranges["d"])
    if name == "littlewood":
        return check_littlewood(ranges["n"], ranges["d"])
    if name == "unimodality":
        return check_unimodality(ranges["max_sum"], ranges["max_n"])
    if name == "adjunction":
        return check_adjunction(ranges["n"], ranges["d"])
    raise ValueError(f"unknown suite {name!r}")
