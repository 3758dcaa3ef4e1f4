#!/usr/bin/env python3
"""Gamma vectors of the descent polynomial of involutions.

I_n(t) is palindromic of degree n-1, so it has a gamma vector in the basis
t^k (1+t)^(n-1-2k). Whether all entries are nonnegative is open in general;
this prints the vectors and flags any negative entry.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from permstat.families import involution_descent_poly
from permstat.poly import gamma_expand


@dataclass(frozen=True)
class GammaConfig:
    n_min: int = 1
    n_max: int = 14


def main(cfg: GammaConfig) -> None:
    for n in range(cfg.n_min, cfg.n_max + 1):
        gv = gamma_expand(involution_descent_poly(n), n - 1)
        entries = [g.constant_value() for g in gv.gammas]
        flag = "" if gv.is_nonnegative() else "   <- negative entry"
        print(f"n={n:2d}  gamma={entries}{flag}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=GammaConfig.n_max)
    main(GammaConfig(n_max=ap.parse_args().n_max))
