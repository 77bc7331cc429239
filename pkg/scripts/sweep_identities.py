"""Sweep every identity check over a grid of bases and sizes; print a table.

    python scripts/sweep_identities.py --nmax 4 --stanley-m 1 2 3 4 6
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from mdrecip import reciprocity as rc
from mdrecip.signed_graph import parse_base_spec


@dataclass
class SweepConfig:
    bases: list[str] = field(default_factory=lambda: ["path:1", "path:2", "path:3", "cycle:3"])
    nmax: int = 4
    adjoin_range: int = 3
    stanley_m: list[int] = field(default_factory=lambda: [1, 2, 3, 4])
    genfunc_bases: list[str] = field(default_factory=lambda: ["path:1", "path:2", "cycle:3"])


def _row(name: str, verdicts: list[rc.Verdict], seconds: float) -> str:
    failed = [v.params for v in verdicts if not v.passed]
    status = "ok" if not failed else f"FAILED {failed}"
    return f"{name:<14} {len(verdicts):>4} checks  {seconds:6.2f}s  {status}"


def run(cfg: SweepConfig) -> bool:
    bases = [parse_base_spec(b) for b in cfg.bases]
    k = cfg.adjoin_range
    sweeps = {
        "reciprocity1": lambda: [rc.check_reciprocity_I(G, n) for G in bases for n in range(cfg.nmax + 1)],
        "census": lambda: [rc.check_census_pairing(G, n) for G in bases[:2] for n in range(cfg.nmax + 1)],
        "adjunction": lambda: [
            rc.check_adjunction(G, [a, b]) for G in bases[:2] for a in range(-k, k + 1) for b in range(-k, k + 1)
        ],
        "eq1": lambda: [rc.check_eq1(m, n) for m in (1, 2) for n in range(cfg.nmax + 1)],
        "reciprocity2": lambda: [rc.check_reciprocity_II(parse_base_spec(b)) for b in cfg.genfunc_bases],
        "stanley": lambda: [rc.check_stanley_sign(m, n) for m in cfg.stanley_m for n in range(cfg.nmax + 1)],
        "mod2": lambda: [rc.check_mod2(m, cfg.nmax + 1) for m in (1, 2, 3)],
    }
    ok = True
    for name, sweep in sweeps.items():
        start = time.perf_counter()
        verdicts = sweep()
        print(_row(name, verdicts, time.perf_counter() - start))
        ok &= all(v.passed for v in verdicts)
    return ok


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--adjoin-range", type=int, default=3)
    p.add_argument("--stanley-m", type=int, nargs="+", default=[1, 2, 3, 4])
    args = p.parse_args()
    cfg = SweepConfig(nmax=args.nmax, adjoin_range=args.adjoin_range, stanley_m=args.stanley_m)
    return 0 if run(cfg) else 1


if __name__ == "__main__":
    raise SystemExit(main())
