#!/usr/bin/env python3
"""Run the whole identity-check battery at the configured bounds.

Writes one JSON line per (check, n) to ``<out>/verification.jsonl`` and a
per-check summary table to stdout. Exit status is 0 iff everything passed.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from collections import defaultdict
from dataclasses import asdict, dataclass, field
from pathlib import Path

from permstat.theorems import Bounds, check_ids, check_tier, verify


@dataclass
class RunConfig:
    out: Path = Path("results")
    n_max: int = 12
    checks: list[str] = field(default_factory=check_ids)
    bounds: Bounds = field(default_factory=Bounds.from_env)


def run(cfg: RunConfig) -> bool:
    cfg.out.mkdir(parents=True, exist_ok=True)
    per_check = defaultdict(lambda: [0, 0, 0.0])
    ok = True
    with open(cfg.out / "verification.jsonl", "w") as fh:
        for cid in cfg.checks:
            top = min(cfg.n_max, cfg.bounds.limit(check_tier(cid)))
            for n in range(1, top + 1):
                t0 = time.perf_counter()
                r = verify(cid, n, cfg.bounds)
                dt = time.perf_counter() - t0
                row = r.as_dict() | {"seconds": round(dt, 4), "detail": r.detail}
                fh.write(json.dumps(row) + "\n")
                stats = per_check[cid]
                stats[0 if r.passed else 1] += 1
                stats[2] += dt
                ok = ok and r.passed
            passed, failed, secs = per_check[cid]
            print(f"{cid:<24} n<={top:<3} pass={passed:<3} fail={failed:<3} {secs:8.2f}s", flush=True)
    (cfg.out / "config.json").write_text(json.dumps(asdict(cfg), default=str, indent=1))
    return ok


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=RunConfig.out)
    ap.add_argument("--n-max", type=int, default=RunConfig.n_max)
    ap.add_argument("--check", action="append", help="restrict to these ids (repeatable)")
    args = ap.parse_args()
    cfg = RunConfig(out=args.out, n_max=args.n_max)
    if args.check:
        cfg.checks = args.check
    return 0 if run(cfg) else 1


if __name__ == "__main__":
    sys.exit(main())
