"""Regenerate the S_4 bijection figures and the coefficient tables from scratch."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .bijections import _phi_word, _psi_word
from .families import coeff_table
from .perm import (
    _classify_linear,
    _des,
    _fmax,
    _les_vector,
    _res_vector,
    _ress_vector,
    all_permutations,
)


@dataclass(frozen=True)
class Table:
    header: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    def render(self, fmt: str = "text") -> str:
        if fmt == "text":
            return "".join(" & ".join(r) + " \\\\\n" for r in self.rows)
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(self.header)
            writer.writerows(self.rows)
            return buf.getvalue()
        if fmt == "json":
            return json.dumps([dict(zip(self.header, r)) for r in self.rows], indent=1) + "\n"
        raise ValueError(f"unknown format {fmt!r}")


def _word(w) -> str:
    return "".join(map(str, w))


FIGURE_1_HEADER = ("sigma", "tau=Phi(sigma)", "des", "les", "ress", "da-fmax", "dd", "valley", "fmax")
FIGURE_2_HEADER = ("sigma", "tau=Psi(sigma)", "tau*", "des", "les", "res", "da*", "dd*", "valley*")


def figure_1(n: int = 4) -> Table:
    """Phi on S_n with the linear statistics it transfers (boundary 0, n+1)."""
    rows = []
    for s in all_permutations(n):
        w = s.word
        _, vl, da, dd = _classify_linear(w, 0, n + 1)
        fm = _fmax(w)
        stats = (_des(w), sum(_les_vector(w)), sum(_ress_vector(w)), da - fm, dd, vl, fm)
        rows.append((_word(w), _word(_phi_word(w))) + tuple(map(str, stats)))
    return Table(FIGURE_1_HEADER, tuple(rows))


def figure_2(n: int = 4) -> Table:
    """Psi on S_n, the star word of the image, and the transferred statistics (boundary 0, 0)."""
    rows = []
    for s in all_permutations(n):
        w = s.word
        tau = _psi_word(w)
        _, vl, da, dd = _classify_linear(w, 0, 0)
        stats = (_des(w), sum(_les_vector(w)), sum(_res_vector(w)), da, dd, vl)
        rows.append((_word(w), _word(tau), _word(x - 1 for x in tau)) + tuple(map(str, stats)))
    return Table(FIGURE_2_HEADER, tuple(rows))


APPENDIX_RANGES = {"a": 5, "b": 6, "c": 7, "d": 7}


def appendix(family: str, n_max: int | None = None) -> Table:
    """Every nonzero coefficient polynomial for 1 <= n <= n_max, ordered by (n, k, j)."""
    family = family.lower()
    n_max = APPENDIX_RANGES[family] if n_max is None else n_max
    rows = []
    for n in range(1, n_max + 1):
        for key, poly in coeff_table(family, n).items():
            if family == "b":
                k, j = key
                rows.append((str(n), str(k), str(j), str(poly)))
            else:
                rows.append((str(n), str(key), str(poly)))
    header = ("n", "k", "j", f"{family}_nkj") if family == "b" else ("n", "k", f"{family}_nk")
    return Table(header, tuple(rows))


TABLES = {
    "figure-1": figure_1,
    "figure-2": figure_2,
    "appendix-a": lambda: appendix("a"),
    "appendix-b": lambda: appendix("b"),
    "appendix-c": lambda: appendix("c"),
    "appendix-d": lambda: appendix("d"),
}
