"""Exhaustive verification of the expansion identities, bijections and
continued fractions, one named check at a time.

Each check is a function ``n -> (passed, witness, detail)`` registered under
its id. :func:`verify` wraps it in a :class:`VerificationReport`; a failure
always carries a witness (a nonzero polynomial difference or an offending
permutation).
"""
from __future__ import annotations

import enum
import itertools
import math
import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from . import paths
from .bijections import _phi_word, _psi_word
from .families import (
    _resolve_jobs,
    Family,
    build_polynomial,
    coeff_table,
    involution_descent_poly,
)
from .perm import (
    _classify_linear,
    _cros_nest_vectors,
    _cyclic_classes,
    _des,
    _fmax,
    _les_vector,
    _res_vector,
    _ress_vector,
    _is_alternating,
    all_permutations,
)
from .poly import (
    BETA,
    ONE,
    MultiPoly,
    NotDivisible,
    P,
    Q,
    T,
    U,
    V,
    W,
    Y,
    coefficient_of,
    euler_number,
    exact_divide,
    gamma_expand,
    monomial_counter_to_poly,
    pq_integer,
    specialize,
)
from .series import TruncatedSeries
from .star import _star_counts


class Status(enum.Enum):
    PASS = "pass"
    FAIL = "fail"


class UnknownCheckId(KeyError):
    pass


class BoundExceeded(ValueError):
    pass


@dataclass(frozen=True)
class VerificationReport:
    check: str
    n: int
    status: Status
    witness: Optional[str] = None
    detail: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if self.status is Status.FAIL and not self.witness:
            raise ValueError("a failing report needs a witness")

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def as_dict(self) -> dict:
        return {"check": self.check, "n": self.n, "status": self.status.value,
                "witness": self.witness}


@dataclass(frozen=True)
class Bounds:
    """Largest n each tier of checks may be run at.

    ``single``: enumerations carrying only a couple of variables;
    ``multi``: the six/seven-variable generating polynomials;
    ``bvar``: the full eight-variable B_n identity;
    ``series``: truncation order of series-only checks.
    """

    single: int = 9
    multi: int = 8
    bvar: int = 7
    series: int = 12

    @classmethod
    def from_env(cls) -> "Bounds":
        raw = os.environ.get("PERMSTAT_NMAX")
        if not raw:
            return cls()
        cap = int(raw)
        return cls(single=cap, multi=cap, bvar=cap, series=max(cap, 12))

    def limit(self, tier: str) -> int:
        return getattr(self, tier)


Outcome = tuple  # (passed, witness, detail)
_CHECKS: dict[str, tuple[Callable[[int], Outcome], str]] = {}


def check(check_id: str, tier: str = "multi"):
    def deco(fn):
        _CHECKS[check_id] = (fn, tier)
        return fn
    return deco


def check_ids() -> list[str]:
    return list(_CHECKS)


def check_tier(check_id: str) -> str:
    try:
        return _CHECKS[check_id][1]
    except KeyError:
        raise UnknownCheckId(check_id) from None


def verify(check_id: str, n: int, bounds: Optional[Bounds] = None) -> VerificationReport:
    if check_id not in _CHECKS:
        raise UnknownCheckId(check_id)
    fn, tier = _CHECKS[check_id]
    bounds = bounds or Bounds.from_env()
    if n > bounds.limit(tier):
        raise BoundExceeded(f"{check_id} is limited to n <= {bounds.limit(tier)} ({tier} tier)")
    if n < 0:
        raise ValueError("n must be nonnegative")
    ok, witness, detail = fn(n)
    if ok:
        return VerificationReport(check_id, n, Status.PASS, None, detail)
    return VerificationReport(check_id, n, Status.FAIL, witness or "mismatch", detail)


def _compare(lhs: MultiPoly, rhs: MultiPoly, detail: Optional[str] = None) -> Outcome:
    if lhs == rhs:
        return True, None, detail
    return False, f"lhs - rhs = {lhs - rhs}", detail


# -- shared pieces -----------------------------------------------------------

def A_poly(n: int) -> MultiPoly:
    return build_polynomial(Family.A, n)


def B_poly(n: int) -> MultiPoly:
    return build_polynomial(Family.B_CYCLIC, n)


def a_coeffs(n: int) -> dict:
    return coeff_table("a", n)


def gamma_sum(coeffs: dict, base_x: MultiPoly, base_one: MultiPoly, d: int) -> MultiPoly:
    """sum_k coeffs[k] * base_x^k * base_one^(d - 2k)."""
    total = MultiPoly()
    for k, c in coeffs.items():
        if d - 2 * k < 0:
            if c:
                raise ValueError(f"coefficient at k={k} beyond degree {d}")
            continue
        total = total + c * base_x ** k * base_one ** (d - 2 * k)
    return total


# -- Theorem: expansion of A_n ----------------------------------------------

@check("THM_A_IDENTITY", "multi")
def _thm_a_identity(n):
    lhs = A_poly(n)
    if n == 0:
        return _compare(lhs, ONE)
    rhs = gamma_sum(a_coeffs(n), T * W, U + V * T, n - 1)
    return _compare(lhs, rhs)


@check("THM_A_DIVISIBILITY", "single")
def _thm_a_divisibility(n):
    notes = []
    for k, a in a_coeffs(n).items():
        cur = a
        for step in range(k):
            try:
                cur = exact_divide(cur, P + Q)
            except NotDivisible:
                return False, f"(p+q)^{step + 1} does not divide a_{{{n},{k}}} = {a}", None
        notes.append(f"a_{{{n},{k}}}/(p+q)^{k} = {cur}")
    return True, None, "; ".join(notes)


@check("BRANDEN_51", "multi")
def _branden(n):
    if n == 0:
        return True, None, None
    side = build_polynomial(Family.BRANDEN, n)
    for k, a in a_coeffs(n).items():
        block = coefficient_of(side, "w", k)
        scale = 2 ** (n - 1 - 2 * k)
        if block != a * scale:
            return False, f"k={k}: sum = {block}, 2^{n - 1 - 2 * k} a_{{{n},{k}}} = {a * scale}", None
    top = (n - 1) // 2
    extra = [k for k in range(top + 1, n + 1) if coefficient_of(side, "w", k)]
    if extra:
        return False, f"peak_B values {extra} beyond floor((n-1)/2)", None
    return True, None, None


@check("GAMMA_ROUNDTRIP", "single")
def _gamma_roundtrip(n):
    if n == 0:
        return True, None, None
    eulerian = _eulerian_des(n)
    gv = gamma_expand(eulerian, n - 1)
    if gv.recompose() != eulerian:
        return False, "recomposition differs", None
    expected = [specialize(a_coeffs(n).get(k, MultiPoly()), dict(p=1, q=1)) for k in range(len(gv))]
    if list(gv.gammas) != expected:
        return False, f"gamma {list(map(str, gv.gammas))} vs a_(n,k)(1,1) {list(map(str, expected))}", None
    return True, None, f"gamma = {[str(g) for g in gv.gammas]}"


@lru_cache(maxsize=None)
def _eulerian_des(n):
    c = Counter()
    for w in itertools.permutations(range(1, n + 1)):
        c[(_des(w),)] += 1
    return monomial_counter_to_poly(c, ("t",))


# -- Phi ---------------------------------------------------------------------

def _phi_linear(w):
    n = len(w)
    _, vl, da, dd = _classify_linear(w, 0, n + 1)
    fm = _fmax(w)
    return (_des(w), sum(_les_vector(w)), sum(_ress_vector(w)), da - fm, dd, vl, fm)


def _phi_cyclic(t):
    _, vl, da, dd, fx = _cyclic_classes(t)
    cros, nest = _cros_nest_vectors(t)
    defi = sum(1 for i, x in enumerate(t, 1) if x < i)
    return (defi, sum(cros), sum(nest), da, dd, vl, fx)


@check("PHI_TRANSFER", "multi")
def _phi_transfer(n):
    seen = set()
    for s in all_permutations(n):
        w = s.word
        t = _phi_word(w)
        if t in seen:
            return False, f"phi not injective at {w}", None
        seen.add(t)
        if _phi_linear(w) != _phi_cyclic(t):
            return False, f"sigma={w} tau={t}: {_phi_linear(w)} != {_phi_cyclic(t)}", None
        if tuple(_ress_vector(w)) != tuple(_cros_nest_vectors(t)[1]):
            return False, f"ress_k != nest_k at sigma={w}", None
    if len(seen) != math.factorial(n):
        return False, f"image has {len(seen)} elements", None
    return True, None, None


# -- Corollaries from Phi ----------------------------------------------------

@check("COR_TANGENT", "multi")
def _cor_tangent(n):
    lhs = build_polynomial(Family.TANGENT, n)
    if n == 0:
        return _compare(lhs, ONE)
    rhs = gamma_sum(a_coeffs(n), T, ONE + T, n - 1) * T
    return _compare(lhs, rhs)


def b_coeffs(n: int) -> dict:
    return coeff_table("b", n)


@check("THM_B_IDENTITY", "bvar")
def _thm_b_identity(n):
    lhs = B_poly(n)
    rhs = MultiPoly()
    base = Q * U + T * V
    for (k, j), b in b_coeffs(n).items():
        rhs = rhs + b * Y ** j * (T * W) ** k * base ** (n - j - 2 * k)
    return _compare(lhs, rhs)


@check("B_LINEAR_EQUALS_CYCLIC", "multi")
def _b_linear(n):
    return _compare(build_polynomial(Family.B_LINEAR, n), B_poly(n))


@check("COR_SECANT", "multi")
def _cor_secant(n):
    lhs = build_polynomial(Family.SECANT, n)
    rhs = MultiPoly()
    for (k, j), b in b_coeffs(n).items():
        if j == 0:
            rhs = rhs + b * T ** k * (ONE + Q * T) ** (n - 2 * k)
    return _compare(lhs, rhs)


@check("B_Y_ZERO", "multi")
def _b_y_zero(n):
    """y = 0 in B_n leaves exactly the derangements."""
    lhs = specialize(B_poly(n), {"y": 0})
    rhs = build_polynomial(Family.SECANT, n)
    # SECANT uses t^exc; B uses t^defi. For derangements exc = n - defi.
    flipped = MultiPoly()
    for e, c in rhs.items():
        e = list(e)
        e[2] = n - e[2]
        flipped = flipped + MultiPoly({tuple(e): c})
    return _compare(specialize(lhs, dict(u=1, v=1, w=1)), flipped)


# -- A_n(p,q,t) = B_n(p,q,t) and the S-fraction --------------------------------

def sfraction_cs(N: int) -> list[MultiPoly]:
    """c_{2i-1} = [i]_{p,q}, c_{2i} = t [i]_{p,q}."""
    out = []
    for m in range(1, N + 1):
        i = (m + 1) // 2
        out.append(pq_integer(i) if m % 2 else T * pq_integer(i))
    return out


@lru_cache(maxsize=None)
def _contraction(N: int):
    return paths.contraction_check(sfraction_cs(max(2 * N, 2)), N)


@check("AB_EQUAL", "multi")
def _ab_equal(n):
    a = specialize(A_poly(n), dict(u=1, v=1, w=1))
    b = specialize(B_poly(n), dict(u=1, v=1, w=1, y=1))
    if a != b:
        return False, f"A_n - B_n = {a - b}", None
    rep = _contraction(n)
    if not rep.passed:
        return False, "contraction forms disagree", None
    return _compare(a, rep.sfraction[n], f"A_{n}(p,q,t) = {a}")


# -- (-1)-evaluations ------------------------------------------------------

def alternating_distribution(n: int) -> MultiPoly:
    """Joint (res, les) distribution over falling alternating permutations, as p^res q^les."""
    total = MultiPoly()
    for s in all_permutations(n):
        if _is_alternating(s.word):
            total = total + MultiPoly.monomial(
                1, p=sum(_res_vector(s.word)), q=sum(_les_vector(s.word)))
    return total


@check("FH_TANGENT", "multi")
def _fh_tangent(n):
    if n == 0:
        return True, None, None
    lhs = specialize(build_polynomial(Family.TANGENT, n), {"t": -1})
    if n % 2 == 0:
        rhs = MultiPoly()
    else:
        rhs = a_coeffs(n).get((n - 1) // 2, MultiPoly()) * (-1) ** ((n + 1) // 2)
    at1 = specialize(lhs, dict(p=1, q=1)).constant_value()
    detail = f"p=q=1 value {at1}; alternating (res,les): {alternating_distribution(n)}"
    if n % 2 and abs(at1) != euler_number(n):
        return False, f"|value at p=q=1| = {abs(at1)} != E_{n} = {euler_number(n)}", detail
    return _compare(lhs, rhs, detail)


@check("FH_SECANT", "multi")
def _fh_secant(n):
    if n == 0:
        return True, None, None
    minus_inv_q = -MultiPoly.var("q", -1)
    lhs = specialize(build_polynomial(Family.SECANT, n), {"t": minus_inv_q})
    if n % 2:
        rhs = MultiPoly()
    else:
        b = b_coeffs(n).get((n // 2, 0), MultiPoly())
        rhs = b * minus_inv_q ** (n // 2)
    at1 = specialize(lhs, dict(p=1, q=1)).constant_value()
    detail = f"p=q=1 value {at1}"
    if n % 2 == 0 and at1 != (-1) ** (n // 2) * euler_number(n):
        return False, f"value at p=q=1 is {at1}, expected {(-1) ** (n // 2) * euler_number(n)}", detail
    return _compare(lhs, rhs, detail)


# -- cycles ------------------------------------------------------------------

@check("DCYCLE", "multi")
def _dcycle(n):
    C = build_polynomial(Family.C, n)
    cs = coeff_table("c", n)
    if n == 0:
        return _compare(C, ONE)
    # full form: C_n = sum_k c_{n,k} t^k (tu+v)^{n-2k} w^k
    full = gamma_sum(cs, T * W, T * U + V, n)
    ok, wit, _ = _compare(C, full)
    if not ok:
        return ok, wit, None
    lhs = specialize(C, dict(u=1, v=1, w=1))
    rhs = gamma_sum(cs, T, ONE + T, n)
    if n >= 1 and cs.get(0):
        return False, f"c_{{{n},0}} = {cs[0]} is nonzero", None
    return _compare(lhs, rhs)


@check("STAR_EXPANSION", "multi")
def _star_expansion(n):
    if n == 0:
        return True, None, None
    D = build_polynomial(Family.D_STAR, n)
    ds = coeff_table("d", n)
    full = gamma_sum(ds, T * W, T * U + V, n - 1)
    ok, wit, _ = _compare(D, full)
    if not ok:
        return ok, wit, None
    lhs = specialize(D, dict(u=1, v=1, w=1))
    ok, wit, _ = _compare(lhs, gamma_sum(ds, T, ONE + T, n - 1))
    if not ok:
        return ok, wit, None
    for k, d in ds.items():
        if k >= 1:
            try:
                exact_divide(d, BETA + 1)
            except NotDivisible:
                return False, f"beta+1 does not divide d_{{{n},{k}}} = {d}", None
    return True, None, None


@check("PSI_TRANSFER", "multi")
def _psi_transfer(n):
    seen = set()
    for s in all_permutations(n):
        w = s.word
        t = _psi_word(w)
        if t in seen:
            return False, f"psi not injective at {w}", None
        seen.add(t)
        _, vl, da, dd = _classify_linear(w, 0, 0)
        left = (sum(_res_vector(w)), sum(_les_vector(w)), _des(w), da, dd, vl)
        fix, _, defi, cros, nest, cda, cdd, cvl, _ = _star_counts(tuple(x - 1 for x in t))
        right = (nest, cros, defi - 1, cda + fix, cdd, cvl)
        if left != right:
            return False, f"sigma={w} psi={t}: {left} != {right}", None
    if len(seen) != math.factorial(n):
        return False, f"image has {len(seen)} elements", None
    return True, None, None


# -- Laguerre histories ------------------------------------------------------

@check("FV_BIJECTIVITY", "multi")
def _fv_bijectivity(n):
    if n == 0:
        return True, None, None
    image = set()
    total = MultiPoly()
    for s in all_permutations(n):
        h = paths.fv_map(s)
        image.add(h)
        total = total + paths.history_weight(h, "FV")
    every = paths.enumerate_histories(n - 1, paths.Flavor.FV)
    if len(image) != math.factorial(n) or len(every) != math.factorial(n):
        return False, f"|image| = {len(image)}, |H_{n - 1}| = {len(every)}, n! = {math.factorial(n)}", None
    if image != set(every):
        return False, "image differs from the history set", None
    return _compare(total, A_poly(n))


@check("FZ_WEIGHT", "multi")
def _fz_weight(n):
    image = set()
    total = MultiPoly()
    for s in all_permutations(n):
        h = paths.fz_map(s)
        image.add(h)
        total = total + paths.history_weight(h, "FZ")
    if len(image) != math.factorial(n):
        return False, f"fz_map image has {len(image)} elements", None
    every = paths.enumerate_histories(n, paths.Flavor.FZ)
    if image != set(every):
        return False, "fz image is not the FZ history set", None
    ok, wit, _ = _compare(total, B_poly(n))
    if not ok:
        return ok, wit, None
    return _compare(paths.weighted_path_sum(n, paths.fz_weights()), B_poly(n))


# -- continued fractions -------------------------------------------------------

def spec_A() -> paths.JFractionSpec:
    return paths.JFractionSpec(lambda h: (U + T * V) * pq_integer(h + 1),
                               lambda h: T * W * pq_integer(h) * pq_integer(h + 1), "A")


def spec_A_sub() -> paths.JFractionSpec:
    return paths.JFractionSpec(lambda h: pq_integer(h + 1),
                               lambda h: W * pq_integer(h) * pq_integer(h + 1), "A_sub")


def spec_B() -> paths.JFractionSpec:
    return paths.JFractionSpec(lambda h: Y * P ** h + (Q * U + T * V) * pq_integer(h),
                               lambda h: T * W * pq_integer(h) ** 2, "B")


def spec_B_sub() -> paths.JFractionSpec:
    return paths.JFractionSpec(lambda h: Y * P ** h + pq_integer(h),
                               lambda h: W * pq_integer(h) ** 2, "B_sub")


def spec_C() -> paths.JFractionSpec:
    return paths.JFractionSpec(lambda k: (T * U + V) * k,
                               lambda k: T * W * k * (BETA + (k - 1)), "C")


def spec_C_sub() -> paths.JFractionSpec:
    return paths.JFractionSpec(lambda k: MultiPoly.const(k),
                               lambda k: W * k * (BETA + (k - 1)), "C_sub")


def spec_D() -> paths.JFractionSpec:
    return paths.JFractionSpec(lambda k: (T * U + V) * (k + 1),
                               lambda k: T * W * k * (BETA + k), "D")


def spec_D_sub() -> paths.JFractionSpec:
    return paths.JFractionSpec(lambda k: MultiPoly.const(k + 1),
                               lambda k: W * k * (BETA + k), "D_sub")


def spec_cfrac1_inner() -> paths.JFractionSpec:
    return paths.JFractionSpec(lambda h: (ONE + T) * pq_integer(h + 1),
                               lambda h: T * pq_integer(h) * pq_integer(h + 1), "cfrac1")


def spec_cfrac2() -> paths.JFractionSpec:
    return paths.JFractionSpec(lambda h: T * pq_integer(h) + pq_integer(h + 1),
                               lambda h: T * pq_integer(h) ** 2, "cfrac2")


PAPER_SPECS = {
    "A": spec_A, "A_sub": spec_A_sub, "B": spec_B, "B_sub": spec_B_sub,
    "C": spec_C, "C_sub": spec_C_sub, "D": spec_D, "D_sub": spec_D_sub,
    "cfrac1": spec_cfrac1_inner, "cfrac2": spec_cfrac2,
}


@lru_cache(maxsize=None)
def cf_series(name: str, N: int) -> TruncatedSeries:
    return paths.jfraction_series(PAPER_SPECS[name](), N)


def _scaled_block(coeffs: dict, key_fn) -> MultiPoly:
    total = MultiPoly()
    for key, c in coeffs.items():
        total = total + c * W ** key_fn(key)
    return total


@check("CF_MATCH_A", "multi")
def _cf_a(n):
    if n == 0:
        return True, None, None
    ok, wit, _ = _compare(cf_series("A", n)[n - 1], A_poly(n))
    if not ok:
        return ok, wit, None
    # after x -> x/(u+tv), w -> w(u+tv)^2/t the fraction is free of t, u, v
    return _compare(cf_series("A_sub", n)[n - 1], _scaled_block(a_coeffs(n), lambda k: k))


@check("CF_MATCH_B", "multi")
def _cf_b(n):
    ok, wit, _ = _compare(cf_series("B", n)[n], B_poly(n))
    if not ok:
        return ok, wit, None
    sub = MultiPoly()
    for (k, j), b in b_coeffs(n).items():
        sub = sub + b * W ** k * Y ** j
    return _compare(cf_series("B_sub", n)[n], sub)


@check("CF_MATCH_C", "multi")
def _cf_c(n):
    C = build_polynomial(Family.C, n)
    ok, wit, _ = _compare(cf_series("C", n)[n], C)
    if not ok:
        return ok, wit, None
    return _compare(cf_series("C_sub", n)[n], _scaled_block(coeff_table("c", n), lambda k: k)
                    if n else ONE)


@check("CF_MATCH_D", "multi")
def _cf_d(n):
    if n == 0:
        return True, None, None
    ok, wit, _ = _compare(cf_series("D", n)[n - 1], build_polynomial(Family.D_STAR, n))
    if not ok:
        return ok, wit, None
    return _compare(cf_series("D_sub", n)[n - 1], _scaled_block(coeff_table("d", n), lambda k: k))


@check("CF_ENGINE", "series")
def _cf_engine(N):
    """Height DP, literal finite fraction and (small orders) brute path sums agree."""
    for name, make in PAPER_SPECS.items():
        spec = make()
        dp = paths.jfraction_series(spec, N)
        lit = paths.jfraction_literal(spec, N)
        if dp != lit:
            return False, f"{name}: DP and literal fraction differ at order {N}", None
        if N <= 8:
            brute = paths.brute_path_sum(N, spec.as_path_weights())
            if brute != dp[N]:
                return False, f"{name}: brute path sum differs at length {N}", None
    return True, None, None


@check("CONTRACTION", "series")
def _contraction_check(N):
    rep = _contraction(N)
    if not rep.passed:
        return False, "S-fraction and contracted J-fractions disagree", None
    first = paths.jfraction_series(spec_cfrac1_inner(), N)
    cfrac1 = 1 + first.shift(1) * pq_integer(1)
    cfrac2 = paths.jfraction_series(spec_cfrac2(), N)
    if cfrac1 != rep.sfraction or cfrac2 != rep.sfraction:
        return False, "the two displayed fractions differ from the S-fraction", None
    return True, None, None


# -- exponential generating functions ------------------------------------------

def _egf_from_denominator(dens: list, N: int) -> TruncatedSeries:
    """(1-t)/D(x) where D(0) = 1-t; each coefficient of D - D(0) is divided by 1-t exactly."""
    one_minus_t = ONE - T
    scaled = [ONE] + [exact_divide(d, one_minus_t) for d in dens[1:]]
    return TruncatedSeries(tuple(scaled)).inverse()


@lru_cache(maxsize=None)
def egf_eulerian(N: int) -> TruncatedSeries:
    """Coefficients of (1-t)/(e^{(t-1)x} - t) up to x^N (rational in x^n/n!)."""
    dens = [ONE - T] + [(T - 1) ** m * Fraction(1, math.factorial(m)) for m in range(1, N + 1)]
    return _egf_from_denominator(dens, N)


@lru_cache(maxsize=None)
def egf_derangement(N: int) -> TruncatedSeries:
    """Coefficients of (1-t)/(e^{tx} - t e^x) up to x^N."""
    dens = [ONE - T] + [(T ** m - T) * Fraction(1, math.factorial(m)) for m in range(1, N + 1)]
    return _egf_from_denominator(dens, N)


@check("EGF_A", "multi")
def _egf_a(n):
    lhs = egf_eulerian(max(n, 1))[n] * math.factorial(n)
    rhs = specialize(A_poly(n), dict(p=1, q=1, u=1, v=1, w=1))
    return _compare(lhs, rhs)


@check("EGF_B", "multi")
def _egf_b(n):
    lhs = egf_derangement(max(n, 1))[n] * math.factorial(n)
    rhs = specialize(build_polynomial(Family.SECANT, n), dict(p=1, q=1))
    ok, wit, _ = _compare(lhs, rhs)
    if not ok:
        return ok, wit, None
    # B_n(1,1,t,1,1,1,0) counts derangements by drops; symmetric, so equal too
    return _compare(lhs, specialize(B_poly(n), dict(p=1, q=1, u=1, v=1, w=1, y=0)))


# -- involutions ---------------------------------------------------------------

@check("INVOLUTION_GAMMA", "single")
def _involution_gamma(n):
    if n == 0:
        return True, None, None
    poly = involution_descent_poly(n)
    gv = gamma_expand(poly, n - 1)
    if gv.recompose() != poly:
        return False, "recomposition differs", None
    sign = "nonnegative" if gv.is_nonnegative() else "HAS NEGATIVE ENTRIES"
    return True, None, f"I_{n}(t) = {poly}; gamma = {[str(g) for g in gv.gammas]} ({sign})"


def run_checks(ids: list[str], n_max: int, jobs: Optional[int] = None,
               bounds: Optional[Bounds] = None) -> list[VerificationReport]:
    """Run every (check, n) for 1 <= n <= min(n_max, tier bound), in a fixed order."""
    bounds = bounds or Bounds.from_env()
    tasks = []
    for cid in ids:
        tier = check_tier(cid)
        top = min(n_max, bounds.limit(tier))
        tasks.extend((cid, n) for n in range(1, top + 1))
    jobs = _resolve_jobs(jobs)
    if jobs == 1:
        return [verify(cid, n, bounds) for cid, n in tasks]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_task, tasks, [bounds] * len(tasks)))


def _verify_task(task, bounds):
    cid, n = task
    return verify(cid, n, bounds)
