"""Print the bi-infinite matching counts M(m, n) and the census tables.

    python scripts/reproduce_values.py --m 1 2 3 --lo -8 --hi 8
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from mdrecip.enumeration import signed_census
from mdrecip.signed_graph import build_rectangle, path
from mdrecip.transfer import bi_infinite_counts


@dataclass
class ReproduceConfig:
    ms: list[int] = field(default_factory=lambda: [1, 2, 3])
    lo: int = -8
    hi: int = 8
    census_m: int = 2
    census_range: tuple[int, int] = (-7, -3)


def run(cfg: ReproduceConfig) -> None:
    for m in cfg.ms:
        rec, w = bi_infinite_counts(path(m), cfg.lo, cfg.hi)
        print(f"m={m}  recurrence {rec.as_strings()}")
        print("   " + " ".join(f"{n}:{v}" for n, v in w.items()))
    lo, hi = cfg.census_range
    print(f"census of G({cfg.census_m}, n) as positive - negative")
    for n in range(hi, lo - 1, -1):
        c = signed_census(build_rectangle(path(cfg.census_m), n))
        print(f"   n={n}: {c.positive} - {c.negative} = {c.signed}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--m", type=int, nargs="+", default=[1, 2, 3])
    p.add_argument("--lo", type=int, default=-8)
    p.add_argument("--hi", type=int, default=8)
    args = p.parse_args()
    run(ReproduceConfig(ms=args.m, lo=args.lo, hi=args.hi))


if __name__ == "__main__":
    main()
