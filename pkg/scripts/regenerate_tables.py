#!/usr/bin/env python3
"""Regenerate every figure and coefficient table in all three output formats."""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from permstat.tables import TABLES


@dataclass(frozen=True)
class TableConfig:
    out: Path = Path("results/tables")
    formats: tuple[str, ...] = ("text", "csv", "json")


SUFFIX = {"text": "tex", "csv": "csv", "json": "json"}


def regenerate(cfg: TableConfig) -> list[Path]:
    cfg.out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, make in TABLES.items():
        table = make()
        for fmt in cfg.formats:
            path = cfg.out / f"{name}.{SUFFIX[fmt]}"
            path.write_text(table.render(fmt))
            written.append(path)
    return written


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=TableConfig.out)
    for p in regenerate(TableConfig(out=ap.parse_args().out)):
        print(p)
