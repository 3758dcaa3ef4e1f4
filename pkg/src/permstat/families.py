"""Exhaustive builders for the generating polynomials and coefficient families.

Every builder is a plain sum over S_n (or a subset) of a monomial whose
exponents are permutation statistics. Sums are accumulated as Counters of
short exponent tuples and lifted to MultiPoly once at the end. S_n is split
by first letter so the work can be farmed out to processes; the partial
Counters are added, so the result does not depend on the worker count.
"""
from __future__ import annotations

import enum
import itertools
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

from .perm import (
    _classify_linear,
    _cros_nest,
    _cyclic_classes,
    _des,
    _fmax,
    _les_vector,
    _less_vector,
    _num_cycles,
    _res_vector,
    _ress_vector,
)
from .poly import MultiPoly, monomial_counter_to_poly
from .star import _star_counts


class Family(enum.Enum):
    A = "A"
    B_CYCLIC = "B_CYCLIC"
    B_LINEAR = "B_LINEAR"
    C = "C"
    D_STAR = "D_STAR"
    # auxiliary sums used by the corollaries
    TANGENT = "TANGENT"        # p^nest q^cros t^wex over S_n
    SECANT = "SECANT"          # p^nest q^cros t^exc over D_n
    BRANDEN = "BRANDEN"        # p^less q^ress w^peak_B over S_n


_VARS = {
    Family.A: ("p", "q", "t", "u", "v", "w"),
    Family.B_CYCLIC: ("p", "q", "t", "u", "v", "w", "y"),
    Family.B_LINEAR: ("p", "q", "t", "u", "v", "w", "y"),
    Family.C: ("beta", "t", "u", "v", "w"),
    Family.D_STAR: ("beta", "t", "u", "v", "w"),
    Family.TANGENT: ("p", "q", "t"),
    Family.SECANT: ("p", "q", "t"),
    Family.BRANDEN: ("p", "q", "w"),
}


def _monomial(family: Family, w):
    """Exponent tuple of one permutation, or None if it is outside the sum."""
    n = len(w)
    if family is Family.A:
        _, vl, da, dd = _classify_linear(w, 0, 0)
        return (sum(_res_vector(w)), sum(_les_vector(w)), _des(w), da, dd, vl)
    if family is Family.B_CYCLIC:
        _, vl, da, dd, fx = _cyclic_classes(w)
        cros, nest = _cros_nest(w)
        defi = sum(1 for i, x in enumerate(w, 1) if x < i)
        return (nest, cros, defi, da, dd, vl, fx)
    if family is Family.B_LINEAR:
        _, vl, da, dd = _classify_linear(w, 0, n + 1)
        fm = _fmax(w)
        return (sum(_ress_vector(w)), sum(_les_vector(w)), _des(w), da - fm, dd, vl, fm)
    if family is Family.C:
        if any(x == i for i, x in enumerate(w, 1)):
            return None
        _, vl, da, dd, _ = _cyclic_classes(w)
        exc = sum(1 for i, x in enumerate(w, 1) if x > i)
        return (_num_cycles(w), exc, da, dd, vl)
    if family is Family.D_STAR:
        fix, wex, _, _, _, cda, cdd, cvl, cyc = _star_counts(tuple(x - 1 for x in w))
        return (cyc - fix, wex, cda + fix, cdd, cvl)
    if family is Family.TANGENT:
        cros, nest = _cros_nest(w)
        return (nest, cros, sum(1 for i, x in enumerate(w, 1) if x >= i))
    if family is Family.SECANT:
        if any(x == i for i, x in enumerate(w, 1)):
            return None
        cros, nest = _cros_nest(w)
        return (nest, cros, sum(1 for i, x in enumerate(w, 1) if x > i))
    if family is Family.BRANDEN:
        pk, _, _, _ = _classify_linear(w, n + 1, n + 1)
        return (sum(_less_vector(w)), sum(_ress_vector(w)), pk)
    raise ValueError(family)


def _perms_with_first(n: int, first: int):
    rest = [x for x in range(1, n + 1) if x != first]
    for tail in itertools.permutations(rest):
        yield (first,) + tail


def _partial_sum(family_value: str, n: int, first: int) -> Counter:
    family = Family(family_value)
    counts: Counter = Counter()
    for w in _perms_with_first(n, first):
        e = _monomial(family, w)
        if e is not None:
            counts[e] += 1
    return counts


def _resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        jobs = int(os.environ.get("PERMSTAT_JOBS", "1"))
    return max(1, jobs)


def enumerate_sum(family: Family, n: int, jobs: int | None = None) -> Counter:
    family = Family(family)
    if n == 0:
        e = _monomial(family, ())
        return Counter({e: 1}) if e is not None else Counter()
    jobs = _resolve_jobs(jobs)
    firsts = range(1, n + 1)
    total: Counter = Counter()
    if jobs == 1 or n < 7:
        for a in firsts:
            total.update(_partial_sum(family.value, n, a))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_partial_sum, [family.value] * n, [n] * n, firsts):
                total.update(part)
    return total


_BUILD_CACHE: dict = {}


def build_polynomial(family, n: int, jobs: int | None = None) -> MultiPoly:
    """Exact sum over S_n (D_n for C) of the family's defining monomial.

    A       p^res q^les t^des u^da* v^dd* w^valley*
    B_CYCLIC p^nest q^cros t^defi u^cda v^cdd w^cvalley y^fix
    B_LINEAR p^ress q^les t^des u^(da-fmax) v^dd w^valley y^fmax
    C       beta^cyc t^exc u^cda v^cdd w^cvalley, derangements only
    D_STAR  beta^(cyc*-fix*) t^wex* u^(cda*+fix*) v^cdd* w^cvalley*
    """
    family = Family(family)
    if n < 0:
        raise ValueError("n must be nonnegative")
    key = (family, n)
    if key not in _BUILD_CACHE:
        counts = enumerate_sum(family, n, jobs)
        _BUILD_CACHE[key] = monomial_counter_to_poly(counts, _VARS[family])
    return _BUILD_CACHE[key]


# -- coefficient families ----------------------------------------------------

def _coeff_key(family: str, w):
    """(index, exponent tuple) of one permutation in a coefficient family, or None."""
    if family == "a":
        _, vl, _, dd = _classify_linear(w, 0, 0)
        if dd:
            return None
        return vl, (sum(_res_vector(w)), sum(_les_vector(w)))
    if family == "b":
        _, vl, da, _, fx = _cyclic_classes(w)
        if da:
            return None
        cros, nest = _cros_nest(w)
        return (vl, fx), (nest, cros)
    if family == "c":
        if any(x == i for i, x in enumerate(w, 1)):
            return None
        _, vl, _, dd, _ = _cyclic_classes(w)
        if dd:
            return None
        return vl, (_num_cycles(w),)
    if family == "d":
        fix, _, _, _, _, _, cdd, cvl, cyc = _star_counts(tuple(x - 1 for x in w))
        if cdd:
            return None
        return cvl, (cyc - fix,)
    raise ValueError(f"unknown coefficient family {family!r}")


_COEFF_VARS = {"a": ("p", "q"), "b": ("p", "q"), "c": ("beta",), "d": ("beta",)}


def _coeff_partial(family: str, n: int, first: int) -> dict:
    out: dict = {}
    for w in _perms_with_first(n, first):
        r = _coeff_key(family, w)
        if r is None:
            continue
        idx, e = r
        out.setdefault(idx, Counter())[e] += 1
    return out


@lru_cache(maxsize=None)
def coeff_table(family: str, n: int, jobs: int | None = None) -> dict:
    """All nonzero members of a coefficient family at size n.

    Keys are k (families a, c, d) or (k, j) (family b).
    """
    family = family.lower()
    if family not in _COEFF_VARS:
        raise ValueError(f"unknown coefficient family {family!r}")
    buckets: dict = {}
    if n == 0:
        r = _coeff_key(family, ())
        if r is not None:
            buckets[r[0]] = Counter({r[1]: 1})
    else:
        jobs = _resolve_jobs(jobs)
        if jobs == 1 or n < 7:
            parts = [_coeff_partial(family, n, a) for a in range(1, n + 1)]
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(_coeff_partial, [family] * n, [n] * n, range(1, n + 1)))
        for part in parts:
            for idx, cnt in part.items():
                buckets.setdefault(idx, Counter()).update(cnt)
    names = _COEFF_VARS[family]
    return {idx: monomial_counter_to_poly(cnt, names) for idx, cnt in sorted(buckets.items())}


def coeff_family(family: str, n: int, k: int, j: int | None = None) -> MultiPoly:
    """a_{n,k}(p,q), b_{n,k,j}(p,q), c_{n,k}(beta) or d_{n,k}(beta)."""
    family = family.lower()
    if family == "b":
        if j is None:
            raise ValueError("family b needs j")
        key = (k, j)
    else:
        if j is not None:
            raise ValueError(f"family {family} takes no j")
        key = k
    return coeff_table(family, n).get(key, MultiPoly())


# -- involutions -------------------------------------------------------------

def involutions(n: int):
    """All involutions of [n] as one-line tuples, generated directly."""
    def rec(free: list, w: list):
        if not free:
            yield tuple(w)
            return
        a = free[0]
        rest = free[1:]
        w[a - 1] = a
        yield from rec(rest, w)
        for i, b in enumerate(rest):
            w[a - 1], w[b - 1] = b, a
            yield from rec(rest[:i] + rest[i + 1:], w)
        w[a - 1] = 0
    yield from rec(list(range(1, n + 1)), [0] * n)


def involution_descent_poly(n: int) -> MultiPoly:
    counts: Counter = Counter()
    for w in involutions(n):
        counts[(_des(w),)] += 1
    return monomial_counter_to_poly(counts, ("t",))
