"""Print restriction tables r[lambda, mu] for a range of n and d, one block per (n, d).

    python3 scripts/restriction_tables.py --max-n 4 --max-d 4 --routes littlewood,brute
"""

import argparse
from dataclasses import dataclass

from plethy.restriction import ROUTES, build_table
from plethy.symfn import character_table


@dataclass
class TableConfig:
    max_n: int = 4
    max_d: int = 4
    routes: tuple[str, ...] = ("littlewood", "corollary", "brute")


def fmt(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def render(n: int, d: int, routes) -> tuple[str, int]:
    table = build_table(n, d, routes=routes)
    mus = character_table(n).partitions
    lambdas = []
    for cell in table.cells:
        if cell.lam not in lambdas:
            lambdas.append(cell.lam)
    width = max([len(fmt(l)) for l in lambdas] + [6])
    header = " " * width + " | " + " ".join(f"{fmt(m):>9}" for m in mus) + " |   dim"
    lines = [f"n={n} d={d}", header, "-" * len(header)]
    dims = table.dimension_check()
    for lam in lambdas:
        row = [f"{table.get(lam, mu):>9}" for mu in mus]
        total, dim = dims[lam]
        mark = "" if total == dim else "  (!)"
        lines.append(f"{fmt(lam):>{width}} | " + " ".join(row) + f" | {dim:>5}{mark}")
    return "\n".join(lines), len(table.disagreements())


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=TableConfig.max_n)
    ap.add_argument("--max-d", type=int, default=TableConfig.max_d)
    ap.add_argument("--routes", default=",".join(TableConfig.routes))
    args = ap.parse_args(argv)
    cfg = TableConfig(args.max_n, args.max_d, tuple(r for r in args.routes.split(",") if r))
    unknown = set(cfg.routes) - set(ROUTES)
    if unknown:
        ap.error(f"unknown routes: {sorted(unknown)}")

    bad = 0
    for n in range(1, cfg.max_n + 1):
        for d in range(0, cfg.max_d + 1):
            text, disagreements = render(n, d, cfg.routes)
            print(text, end="\n\n")
            bad += disagreements
    print(f"route disagreements: {bad}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
