"""Time the three restriction routes from cold caches over a grid of (n, d)."""

import argparse
import time
from dataclasses import dataclass

from plethy import clear_caches
from plethy.partitions import Partition, enumerate_partitions, partitions_of
from plethy.restriction import (
    brute_force_restriction,
    corollary_sign_multiplicity,
    corollary_trivial_multiplicity,
    littlewood_restriction,
)


@dataclass
class TimingConfig:
    max_n: int = 5
    max_d: int = 6


def littlewood(n, d):
    for lam in enumerate_partitions(d, n):
        for mu in partitions_of(n):
            littlewood_restriction(lam, mu, n)


def corollary(n, d):
    for lam in enumerate_partitions(d, n):
        corollary_trivial_multiplicity(lam, n)
        corollary_sign_multiplicity(lam, n)


def brute(n, d):
    for lam in enumerate_partitions(d, n):
        brute_force_restriction(Partition(lam), n)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=TimingConfig.max_n)
    ap.add_argument("--max-d", type=int, default=TimingConfig.max_d)
    cfg = TimingConfig(**vars(ap.parse_args(argv)))

    routes = {"littlewood": littlewood, "corollary": corollary, "brute": brute}
    print(f"{'n':>2} {'d':>2} " + " ".join(f"{r:>11}" for r in routes))
    for n in range(1, cfg.max_n + 1):
        for d in range(0, cfg.max_d + 1):
            cols = []
            for fn in routes.values():
                clear_caches()
                t0 = time.perf_counter()
                fn(n, d)
                cols.append(f"{time.perf_counter() - t0:>10.3f}s")
            print(f"{n:>2} {d:>2} " + " ".join(cols))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
