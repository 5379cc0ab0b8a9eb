"""Two-row unimodality sweep: p_n and q_n differences against trivial/sign multiplicities."""

import argparse
import csv
import sys
from dataclasses import asdict, dataclass

from plethy.restriction import unimodality_sweep


@dataclass
class SweepConfig:
    max_sum: int = 12
    max_n: int = 6
    csv_path: str | None = None


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-sum", type=int, default=SweepConfig.max_sum)
    ap.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    ap.add_argument("--csv", dest="csv_path", help="write every row to this file ('-' for stdout)")
    cfg = SweepConfig(**vars(ap.parse_args(argv)))

    report = unimodality_sweep(cfg.max_sum, cfg.max_n)
    if cfg.csv_path:
        fields = ["x1", "x2", "n", "p_diff", "q_diff", "r_trivial", "r_sign"]
        handle = sys.stdout if cfg.csv_path == "-" else open(cfg.csv_path, "w", newline="")
        writer = csv.DictWriter(handle, fieldnames=fields)
        writer.writeheader()
        writer.writerows(asdict(row) for row in report.rows)
        if handle is not sys.stdout:
            handle.close()

    by_n = {}
    for row in report.rows:
        stats = by_n.setdefault(row.n, [0, 0, 0])
        stats[0] += 1
        stats[1] += row.p_diff
        stats[2] += row.q_diff
    print(f"{'n':>3} {'rows':>5} {'sum p diff':>11} {'sum q diff':>11}")
    for n, (count, ps, qs) in sorted(by_n.items()):
        print(f"{n:>3} {count:>5} {ps:>11} {qs:>11}")
    print(f"{len(report.rows)} rows, {len(report.failures)} failures")
    for row in report.failures[:10]:
        print("  FAIL", row)
    return 1 if report.failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
