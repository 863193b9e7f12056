"""Run the exact identity sweep and write a JSON report.

    python3 scripts/run_sweep.py --m-max 40 --n-max 10 --out results/sweep.json
"""

import argparse
import json
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from dirlambda import __version__
from dirlambda.exact import precompute
from dirlambda.identities import DEFAULT_ALPHAS, SuiteConfig, report_to_record, run_suite


@dataclass
class SweepConfig:
    m_max: int = 40
    n_max: int = 10
    alphas: tuple = DEFAULT_ALPHAS
    out: Path = Path("results/sweep.json")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--m-max", type=int, default=SweepConfig.m_max)
    p.add_argument("--n-max", type=int, default=SweepConfig.n_max)
    p.add_argument("--alpha", default=None, help="comma-separated rationals")
    p.add_argument("--out", type=Path, default=SweepConfig.out)
    args = p.parse_args()
    alphas = tuple(Fraction(a) for a in args.alpha.split(",")) if args.alpha else DEFAULT_ALPHAS
    cfg = SweepConfig(args.m_max, args.n_max, alphas, args.out)

    start = time.perf_counter()
    precompute()
    result = run_suite(SuiteConfig(m_max=cfg.m_max, n_max=cfg.n_max, alphas=cfg.alphas))
    wall = time.perf_counter() - start

    per_id = Counter(r.identity_id for r in result)
    for identity_id, count in sorted(per_id.items()):
        failed = sum(1 for r in result if r.identity_id == identity_id and not r.passed)
        print(f"{identity_id:22s} {count:5d} cells  {failed} failed")
    print(f"total {len(result)} cells, {len(result.failures)} failed, "
          f"{len(result.excluded)} excluded, {wall:.1f}s")

    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    cfg.out.write_text(json.dumps({
        "meta": {"version": __version__, "m_max": cfg.m_max, "n_max": cfg.n_max,
                 "alphas": [str(a) for a in cfg.alphas], "wall_s": wall},
        "reports": [report_to_record(r) for r in result],
    }, indent=1))
    print(f"wrote {cfg.out}")


if __name__ == "__main__":
    main()
