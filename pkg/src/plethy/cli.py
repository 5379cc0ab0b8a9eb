"""Command-line interface: ``plethy {restrict,vecpart,plethysm,ch-ind,verify}``.

Exit codes: 0 success, 1 invalid input, 2 verification failure, 3 resource cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from math import comb

from .partitions import Partition, parse_partition
from .plethysm import h_series, plethysm_into_series
from .symfn import BASES, SymFn, character_table
from .induction import (
    ch_ind_general,
    ch_ind_permutation_module,
    ch_ind_sign,
    ch_ind_trivial,
    matrix_orbit_character,
    matrix_orbit_sign_character,
)
from .restriction import ROUTES, build_table
from .vecpart import count_pk, count_qk, enumerate_vector_partitions
from . import verify as verify_mod

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_CAP = 0, 1, 2, 3

DEFAULT_MAX_DEGREE = 12
DEFAULT_MAX_N = 8
DEFAULT_MAX_MEM = 2 * 1024**3
# Rough cost of one stored term of a series table (tuple key + int + dict slot).
BYTES_PER_TERM = 256


class InputError(ValueError):
    pass


class ResourceCap(RuntimeError):
    pass


@dataclass(frozen=True)
class JobConfig:
    n: int
    d: int
    lambdas: tuple[Partition, ...] | None = None
    mus: tuple[Partition, ...] | None = None
    route: str = "littlewood"
    fmt: str = "pretty"
    max_degree: int = DEFAULT_MAX_DEGREE
    max_n: int = DEFAULT_MAX_N
    max_mem: int = DEFAULT_MAX_MEM

    def __post_init__(self):
        if self.n < 1:
            raise InputError("n must be at least 1")
        if self.d < 0:
            raise InputError("d must be nonnegative")

    def check_caps(self, kmax: int | None = None) -> None:
        check_caps(self.n, self.d, self.max_degree, self.max_n, self.max_mem, kmax)


def check_caps(n: int, d: int, max_degree: int, max_n: int, max_mem: int, kmax: int | None = None) -> None:
    if d > max_degree:
        raise ResourceCap(f"degree {d} exceeds the cap {max_degree} (raise with --max-degree)")
    if n > max_n:
        raise ResourceCap(f"n = {n} exceeds the cap {max_n} (raise with --max-n)")
    terms = comb(n + d, n) * ((kmax if kmax is not None else n) + 1)
    need = terms * BYTES_PER_TERM
    if need > max_mem:
        raise ResourceCap(
            f"estimated table memory {need} bytes exceeds the cap {max_mem} "
            "(raise with --max-mem or PLETHY_MAX_MEM)"
        )


def _parse_int_list(text: str, allow_negative: bool = False) -> tuple[int, ...]:
    try:
        vals = tuple(int(tok) for tok in text.strip().strip("()[]").split(",") if tok.strip())
    except ValueError:
        raise InputError(f"malformed integer list: {text!r}") from None
    if not allow_negative and any(v < 0 for v in vals):
        raise InputError(f"negative entries are not allowed here: {text!r}")
    return vals


def _parse_partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _parse_mem(text: str | None) -> int:
    if text is None:
        return DEFAULT_MAX_MEM
    units = {"k": 1024, "m": 1024**2, "g": 1024**3}
    t = text.strip().lower().rstrip("ib")
    try:
        if t and t[-1] in units:
            return int(float(t[:-1]) * units[t[-1]])
        return int(t)
    except ValueError:
        raise InputError(f"malformed memory size: {text!r}") from None


def _fmt_partition(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


class Emitter:
    """Buffers records and renders them in one of the output formats."""

    def __init__(self, fmt: str, columns: list[str]):
        self.fmt = fmt
        self.columns = columns
        self.records: list[dict] = []

    def add(self, record: dict) -> None:
        self.records.append(record)

    def render(self) -> str:
        if self.fmt == "json":
            return "".join(json.dumps(r, separators=(", ", ": ")) + "\n" for r in self.records)
        rows = [[self._cell(r.get(c)) for c in self.columns] for r in self.records]
        if self.fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(self.columns)
            writer.writerows(rows)
            return buf.getvalue()
        widths = [max([len(c)] + [len(r[i]) for r in rows]) for i, c in enumerate(self.columns)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(self.columns, widths)).rstrip()]
        lines.append("  ".join("-" * w for w in widths))
        lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in rows]
        return "\n".join(lines) + "\n"

    @staticmethod
    def _cell(v) -> str:
        if v is None:
            return "-"
        if isinstance(v, bool):
            return "yes" if v else "NO"
        if isinstance(v, list):
            return _fmt_partition(v)
        return str(v)


# -- subcommands ---------------------------------------------------------------


def cmd_restrict(config: JobConfig, out) -> int:
    routes = ROUTES if config.route == "all" else (config.route,)
    config.check_caps()
    table = build_table(config.n, config.d, routes, config.lambdas, config.mus)
    columns = ["n", "d", "lambda", "mu", "littlewood", "corollary", "brute", "agree"]
    em = Emitter(config.fmt, columns)
    for cell in table.cells:
        record = {
            "n": config.n,
            "d": config.d,
            "lambda": list(cell.lam),
            "mu": list(cell.mu),
            "routes": {r: cell.routes.get(r) for r in ROUTES},
            "agree": cell.agree,
        }
        if config.fmt == "json":
            em.add(record)
        else:
            em.add({**{k: v for k, v in record.items() if k != "routes"}, **record["routes"]})
    out.write(em.render())
    bad = table.disagreements()
    for cell in bad:
        print(
            f"route disagreement at n={config.n} d={config.d} lambda={_fmt_partition(cell.lam)} "
            f"mu={_fmt_partition(cell.mu)}: {cell.routes}",
            file=sys.stderr,
        )
    return EXIT_VERIFY if bad else EXIT_OK


def cmd_vecpart(x: tuple[int, ...], k: int, variant: str, enumerate_: bool, fmt: str, out) -> int:
    if k < 0:
        raise InputError("k must be nonnegative")
    value = count_pk(x, k) if variant == "p" else count_qk(x, k)
    record = {"x": list(x), "k": k, "variant": variant, "value": value}
    listing = None
    if enumerate_:
        if any(v < 0 for v in x):
            listing = []
        else:
            allp = enumerate_vector_partitions(x, distinct=(variant == "q"))
            if variant == "p":
                listing = [pt for pt in allp if len(pt) <= k]
            else:
                listing = [pt for pt in allp if len(pt) in (k, k - 1)]
        record["partitions"] = [[list(v) for v in pt] for pt in listing]
    if fmt == "json":
        out.write(json.dumps(record) + "\n")
    elif fmt == "csv":
        out.write("x,k,variant,value\n")
        out.write(f"\"{','.join(map(str, x))}\",{k},{variant},{value}\n")
    else:
        out.write(f"{variant}_{k}{_fmt_partition(x)} = {value}\n")
        for pt in listing or []:
            out.write("  " + " + ".join(_fmt_partition(v) for v in pt) if pt else "  (empty)")
            out.write("\n")
    return EXIT_OK


def _poly_records(poly, **extra) -> list[dict]:
    return [{**extra, "exponent": list(x), "coefficient": str(c) if not isinstance(c, int) else c}
            for x, c in poly.terms.items()]


def _emit_poly(poly, fmt: str, out, **extra) -> None:
    if fmt == "pretty":
        label = " ".join(f"{k}={v}" for k, v in extra.items())
        out.write(f"{label}: {poly}\n")
        return
    em = Emitter(fmt, list(extra) + ["exponent", "coefficient"])
    for r in _poly_records(poly, **extra):
        em.add(r)
    out.write(em.render())


def cmd_plethysm(basis: str, index: Partition, n: int, d: int, route: str, homogeneous: bool, fmt: str, out) -> int:
    f = SymFn.basis_element(basis, index)
    poly = plethysm_into_series(f, h_series(n, d), d, route=route)
    if homogeneous:
        poly = poly.homogeneous_part(d)
    _emit_poly(poly, fmt, out, f=f"{basis}{_fmt_partition(index)}", n=n, d=d)
    return EXIT_OK


def cmd_ch_ind(source: str, n: int, d: int, mu: Partition | None, fmt: str, out) -> int:
    if source in ("permutation", "orbit", "irreducible") and mu is None:
        raise InputError(f"--mu is required for source {source!r}")
    if mu is not None and mu.weight() != n:
        raise InputError(f"{_fmt_partition(mu)} is not a partition of n={n}")
    if source == "trivial":
        ch = ch_ind_trivial(n, d)
    elif source == "sign":
        ch = ch_ind_sign(n, d)
    elif source == "permutation":
        ch = ch_ind_permutation_module(mu, d)
    elif source == "orbit":
        ch = matrix_orbit_character(mu, d)
    elif source == "orbit-sign":
        ch = matrix_orbit_sign_character(n, d)
    else:
        table = character_table(n)
        ch = ch_ind_general({nu: table(mu, nu) for nu in table.partitions}, d, n)
    _emit_poly(ch.character, fmt, out, source=source, n=n, d=d)
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plethy", description=__doc__.splitlines()[0])
    parser.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    parser.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    parser.add_argument("--max-mem", default=None, help="table memory cap, e.g. 2G (env PLETHY_MAX_MEM)")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")

    r = sub.add_parser("restrict", parents=[fmt], help="restriction coefficients r[lambda, mu]")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--d", type=int, required=True)
    r.add_argument("--lambda", dest="lam", action="append", help="restrict to this lambda (repeatable)")
    r.add_argument("--mu", action="append", help="restrict to this mu (repeatable)")
    r.add_argument("--route", choices=ROUTES + ("all",), default="littlewood")

    v = sub.add_parser("vecpart", parents=[fmt], help="vector partition counts p_k(x), q_k(x)")
    v.add_argument("--x", required=True, help="comma-separated vector, negatives allowed")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--variant", choices=("p", "q"), default="p")
    v.add_argument("--enumerate", action="store_true")

    p = sub.add_parser("plethysm", parents=[fmt], help="f[H] through degree d in n variables")
    p.add_argument("--basis", choices=BASES, default="s")
    p.add_argument("--index", required=True, help="partition indexing the basis element")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--route", choices=("auto", "p", "h"), default="auto")
    p.add_argument("--homogeneous", action="store_true", help="print only the degree-d slice")

    c = sub.add_parser("ch-ind", parents=[fmt], help="degree-d characters of induced representations")
    c.add_argument("--source", required=True,
                   choices=("trivial", "sign", "permutation", "orbit", "orbit-sign", "irreducible"))
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--mu")

    w = sub.add_parser("verify", help="run identity checks")
    w.add_argument("--suite", choices=verify_mod.SUITES + ("all",), default="all")
    w.add_argument("--n", type=int, default=None)
    w.add_argument("--d", type=int, default=None)
    w.add_argument("--k", type=int, default=None)
    w.add_argument("--max-sum", type=int, default=None)
    w.add_argument("--max-n", dest="max_n_sweep", type=int, default=None,
                   help="largest n for the unimodality sweep")
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        max_mem = _parse_mem(args.max_mem or os.environ.get("PLETHY_MAX_MEM"))
        caps = dict(max_degree=args.max_degree, max_n=args.max_n, max_mem=max_mem)
        if args.command == "restrict":
            config = JobConfig(
                n=args.n,
                d=args.d,
                lambdas=tuple(_parse_partition(t) for t in args.lam) if args.lam else None,
                mus=tuple(_parse_partition(t) for t in args.mu) if args.mu else None,
                route=args.route,
                fmt=args.format,
                **caps,
            )
            for lam in config.lambdas or ():
                if lam.weight() != config.d or len(lam) > config.n:
                    raise InputError(f"{_fmt_partition(lam)} is not in Lambda({config.d}, {config.n})")
            for mu in config.mus or ():
                if mu.weight() != config.n:
                    raise InputError(f"{_fmt_partition(mu)} is not a partition of n={config.n}")
            return cmd_restrict(config, out)
        if args.command == "vecpart":
            x = _parse_int_list(args.x, allow_negative=True)
            if not x:
                raise InputError("empty vector")
            check_caps(len(x), max(sum(v for v in x if v > 0), 0), **caps, kmax=args.k)
            return cmd_vecpart(x, args.k, args.variant, args.enumerate, args.format, out)
        if args.command == "plethysm":
            if args.n < 1 or args.d < 0:
                raise InputError("need n >= 1 and d >= 0")
            index = _parse_partition(args.index)
            check_caps(args.n, args.d, **caps, kmax=max(index, default=0))
            return cmd_plethysm(args.basis, index, args.n, args.d, args.route, args.homogeneous, args.format, out)
        if args.command == "ch-ind":
            if args.n < 1 or args.d < 0:
                raise InputError("need n >= 1 and d >= 0")
            check_caps(args.n, args.d, **caps)
            mu = _parse_partition(args.mu) if args.mu else None
            return cmd_ch_ind(args.source, args.n, args.d, mu, args.format, out)
        if args.command == "verify":
            suites = verify_mod.SUITES if args.suite == "all" else (args.suite,)
            ranges = verify_mod.resolve_ranges(args)
            check_caps(ranges["n"], ranges["d"], **caps)
            failed = False
            for suite in suites:
                result = verify_mod.run_suite(suite, ranges)
                out.write(result.summary() + "\n")
                for line in result.counterexamples[:5]:
                    out.write("  counterexample: " + line + "\n")
                failed |= not result.ok
            return EXIT_VERIFY if failed else EXIT_OK
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceCap as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
