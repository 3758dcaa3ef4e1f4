"""Sparse exact polynomials in the fixed variables p, q, t, u, v, w, y, beta.

Coefficients are Python ints (arbitrary precision); ``Fraction`` coefficients
are tolerated so exponential generating functions can be handled with the
same type. Negative powers are allowed for ``q`` only, through a single
global factor ``q**-q_shift``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

VARS = ("p", "q", "t", "u", "v", "w", "y", "beta")
NVARS = len(VARS)
_INDEX = {name: i for i, name in enumerate(VARS)}
_ALIASES = {"b": "beta", "β": "beta"}
_Q = _INDEX["q"]
_ZERO_EXP = (0,) * NVARS

Number = Union[int, Fraction]


class NotDivisible(ArithmeticError):
    pass


class NotSymmetric(ValueError):
    pass


def var_index(name: str) -> int:
    name = _ALIASES.get(name, name)
    try:
        return _INDEX[name]
    except KeyError:
        raise ValueError(f"unknown variable {name!r}; expected one of {VARS}") from None


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` maps exponent 8-tuples to coefficients."""

    __slots__ = ("terms", "q_shift", "_hash")

    def __init__(self, terms: Mapping[tuple, Number] | None = None, q_shift: int = 0):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[tuple(e)] = _clean(c)
        if q_shift < 0:
            raise ValueError("q_shift must be nonnegative")
        if not clean:
            q_shift = 0
        elif q_shift:
            low = min(e[_Q] for e in clean)
            drop = min(low, q_shift)
            if drop:
                clean = {_shift_q(e, -drop): c for e, c in clean.items()}
                q_shift -= drop
        self.terms = clean
        self.q_shift = q_shift
        self._hash = None

    # -- construction ------------------------------------------------------
    @classmethod
    def const(cls, c: Number) -> "MultiPoly":
        return cls({_ZERO_EXP: c})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        idx = var_index(name)
        if power < 0:
            if idx != _Q:
                raise ValueError("negative powers are only supported for q")
            return cls({_ZERO_EXP: 1}, q_shift=-power)
        e = [0] * NVARS
        e[idx] = power
        return cls({tuple(e): 1})

    @classmethod
    def monomial(cls, coeff: Number = 1, **powers: int) -> "MultiPoly":
        e = [0] * NVARS
        for name, k in powers.items():
            e[var_index(name)] = k
        return cls({tuple(e): coeff})

    @classmethod
    def from_counter(cls, counts: Mapping[tuple, Number]) -> "MultiPoly":
        return cls(counts)

    @classmethod
    def coerce(cls, x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        if isinstance(x, str):
            return cls.var(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to MultiPoly")

    # -- basic queries -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (self.q_shift == 0 and set(self.terms) == {_ZERO_EXP})

    def constant_value(self) -> Number:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.terms.get(_ZERO_EXP, 0)

    def degree(self, name: str) -> int:
        """Degree in one variable (-1 for the zero polynomial)."""
        idx = var_index(name)
        if not self.terms:
            return -1
        d = max(e[idx] for e in self.terms)
        return d - self.q_shift if idx == _Q else d

    def variables(self) -> tuple[str, ...]:
        used = set()
        for e in self.terms:
            used.update(i for i, k in enumerate(e) if k)
        if self.q_shift:
            used.add(_Q)
        return tuple(VARS[i] for i in sorted(used))

    def items(self):
        """(effective exponent tuple, coefficient) pairs; q exponents may be negative."""
        s = self.q_shift
        for e, c in self.terms.items():
            yield (_shift_q(e, -s) if s else e), c

    # -- arithmetic --------------------------------------------------------
    def _aligned(self, other: "MultiPoly"):
        s = max(self.q_shift, other.q_shift)
        a = self.terms if self.q_shift == s else {_shift_q(e, s - self.q_shift): c for e, c in self.terms.items()}
        b = other.terms if other.q_shift == s else {_shift_q(e, s - other.q_shift): c for e, c in other.terms.items()}
        return a, b, s

    def __add__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, s = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(out, s)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()}, self.q_shift)

    def __sub__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return MultiPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly({e: c * other for e, c in self.terms.items()}, self.q_shift)
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(out, self.q_shift + other.q_shift)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of polynomials are not supported")
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.q_shift == other.q_shift and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.terms.items()), self.q_shift))
        return self._hash

    # -- structural operations ---------------------------------------------
    def coefficient_of(self, name: str, k: int) -> "MultiPoly":
        return coefficient_of(self, name, k)

    def specialize(self, assignment: Mapping[str, object]) -> "MultiPoly":
        return specialize(self, assignment)

    def exact_divide(self, g) -> "MultiPoly":
        return exact_divide(self, g)

    def evaluate(self, assignment: Mapping[str, Number]) -> Number:
        """Full numeric evaluation; every variable in use must be assigned."""
        return specialize(self, assignment).constant_value()

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"MultiPoly({render(self)!r})"


def _shift_q(e, d):
    e = list(e)
    e[_Q] += d
    return tuple(e)


def _grlex_key(item):
    e, _ = item
    return (sum(e), e)


def render(f: MultiPoly) -> str:
    """Expanded text form, terms by descending total degree then descending lex.

    Example: ``p^2+2*p*q+q^2+2*p+2*q``.
    """
    if f.is_zero():
        return "0"
    parts = []
    for e, c in sorted(f.items(), key=_grlex_key, reverse=True):
        mono = "*".join(
            VARS[i] if k == 1 else f"{VARS[i]}^{k}" for i, k in enumerate(e) if k
        )
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    return "+".join(parts).replace("+-", "-")


def parse_poly(text: str) -> MultiPoly:
    """Inverse of :func:`render` for its own output (sums of coeff*monomial)."""
    text = text.replace(" ", "")
    if text in ("", "0"):
        return MultiPoly()
    out = MultiPoly()
    # split on + / - that start a term (not the sign of an exponent)
    terms = []
    cur = ""
    for i, ch in enumerate(text):
        if ch in "+-" and i > 0 and text[i - 1] != "^":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    for term in terms:
        sign = 1
        if term.startswith("+"):
            term = term[1:]
        elif term.startswith("-"):
            sign, term = -1, term[1:]
        piece = MultiPoly.const(sign)
        for factor in term.split("*"):
            if "^" in factor:
                name, k = factor.split("^")
                piece = piece * MultiPoly.var(name, int(k))
            elif factor and (factor[0].isdigit()):
                piece = piece * Fraction(factor)
            else:
                piece = piece * MultiPoly.var(factor)
        out = out + piece
    return out


# -- named operations ---------------------------------------------------------

def pq_integer(n: int) -> MultiPoly:
    """[n]_{p,q} = p^{n-1} + p^{n-2} q + ... + q^{n-1}; zero for n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    terms = {}
    ip, iq = _INDEX["p"], _INDEX["q"]
    for i in range(n):
        e = [0] * NVARS
        e[ip] = n - 1 - i
        e[iq] = i
        terms[tuple(e)] = 1
    return MultiPoly(terms)


def coefficient_of(f: MultiPoly, name: str, k: int) -> MultiPoly:
    """Coefficient of ``name**k`` as a polynomial in the remaining variables."""
    idx = var_index(name)
    if idx == _Q:
        k += f.q_shift
        out = {}
        for e, c in f.terms.items():
            if e[idx] == k:
                out[e[:idx] + (0,) + e[idx + 1:]] = c
        return MultiPoly(out)
    out = {}
    for e, c in f.terms.items():
        if e[idx] == k:
            out[e[:idx] + (0,) + e[idx + 1:]] = c
    return MultiPoly(out, f.q_shift)


def specialize(f: MultiPoly, assignment: Mapping[str, object]) -> MultiPoly:
    """Substitute numbers, variable names or polynomials for variables.

    Unassigned variables are left alone. A negative-power ``q`` can only be
    sent to a nonzero number or another variable name.
    """
    subs: dict[int, object] = {}
    for name, val in assignment.items():
        subs[var_index(name)] = val
    if not subs:
        return f

    numeric = {i: v for i, v in subs.items() if isinstance(v, (int, Fraction))}
    renames = {i: var_index(v) for i, v in subs.items() if isinstance(v, str)}
    polys = {i: v for i, v in subs.items() if isinstance(v, MultiPoly)}
    unknown = set(subs) - set(numeric) - set(renames) - set(polys)
    if unknown:
        raise TypeError("assignment values must be numbers, variable names or MultiPoly")

    shift = f.q_shift
    prefactor = MultiPoly.const(1)
    if shift and _Q in subs:
        val = subs[_Q]
        if isinstance(val, (int, Fraction)):
            if val == 0:
                raise ZeroDivisionError("q has a negative power")
            prefactor = MultiPoly.const(Fraction(1, 1) / Fraction(val) ** shift)
        elif isinstance(val, str):
            prefactor = _laurent_var(var_index(val), shift)
        else:
            raise TypeError("cannot substitute a polynomial into a negative power of q")
        shift = 0

    acc: dict = {}
    poly_terms: list = []
    for e, c in f.terms.items():
        e = list(e)
        coeff = c
        for i, val in numeric.items():
            if e[i]:
                coeff = coeff * val ** e[i]
                e[i] = 0
        if not coeff:
            continue
        moved = [(j, e[i]) for i, j in renames.items() if e[i]]
        for i in renames:
            e[i] = 0
        for j, k in moved:
            e[j] += k
        if polys and any(e[i] for i in polys):
            pw = {i: e[i] for i in polys if e[i]}
            for i in pw:
                e[i] = 0
            poly_terms.append((tuple(e), coeff, pw))
        else:
            t = tuple(e)
            acc[t] = acc.get(t, 0) + coeff
    result = MultiPoly(acc, shift)
    if poly_terms:
        cache: dict = {}
        extra = MultiPoly()
        for e, coeff, pw in poly_terms:
            piece = MultiPoly({e: coeff}, shift)
            for i, k in pw.items():
                key = (i, k)
                if key not in cache:
                    cache[key] = polys[i] ** k
                piece = piece * cache[key]
            extra = extra + piece
        result = result + extra
    return result * prefactor


def _laurent_var(idx: int, power: int) -> MultiPoly:
    # x^{-power} for a renamed q; only q itself may carry negative powers
    if idx == _Q:
        return MultiPoly({_ZERO_EXP: 1}, q_shift=power)
    raise ValueError("negative powers are only supported for q")


def exact_divide(f, g) -> MultiPoly:
    """Return ``h`` with ``g*h == f`` or raise :class:`NotDivisible`.

    Leading-term division in lexicographic order: over an integral domain the
    leading term of a product is the product of leading terms, so the
    quotient is recovered term by term whenever it exists.
    """
    f = MultiPoly.coerce(f)
    g = MultiPoly.coerce(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return MultiPoly()
    # peel a pure q-power off g so that Laurent quotients come out right
    gq = min(e[_Q] for e in g.terms)
    G = {_shift_q(e, -gq): c for e, c in g.terms.items()} if gq else dict(g.terms)
    shift = f.q_shift - g.q_shift + gq

    lead = max(G)
    lc = G[lead]
    R = dict(f.terms)
    H: dict = {}
    while R:
        m = max(R)
        c = R[m]
        diff = tuple(a - b for a, b in zip(m, lead))
        if min(diff) < 0:
            raise NotDivisible(f"{g} does not divide {f}")
        if isinstance(c, int) and isinstance(lc, int):
            if c % lc:
                raise NotDivisible(f"{g} does not divide {f} over the integers")
            qc = c // lc
        else:
            qc = _clean(Fraction(c) / Fraction(lc))
        H[diff] = H.get(diff, 0) + qc
        for e, gc in G.items():
            key = tuple(a + b for a, b in zip(e, diff))
            val = R.get(key, 0) - qc * gc
            if val:
                R[key] = val
            else:
                R.pop(key, None)
    if shift >= 0:
        return MultiPoly(H, shift)
    return MultiPoly({_shift_q(e, -shift): c for e, c in H.items()})


def divides(g, f) -> bool:
    try:
        exact_divide(f, g)
    except NotDivisible:
        return False
    return True


@dataclass(frozen=True)
class GammaVector:
    """Coefficients of ``sum_k gammas[k] * x^k (1+x)^(d-2k)``."""

    gammas: tuple[MultiPoly, ...]
    d: int
    var: str = "t"

    def recompose(self) -> MultiPoly:
        x = MultiPoly.var(self.var)
        one_plus = 1 + x
        total = MultiPoly()
        for k, g in enumerate(self.gammas):
            total = total + g * x ** k * one_plus ** (self.d - 2 * k)
        return total

    def __len__(self):
        return len(self.gammas)

    def __getitem__(self, k):
        return self.gammas[k]

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for g in self.gammas for c in g.terms.values())


def gamma_expand(h: MultiPoly, d: int, var: str = "t") -> GammaVector:
    """Peel off ``gamma_k x^k (1+x)^{d-2k}`` for k = 0, 1, ..., floor(d/2).

    Each gamma_k is read off as the coefficient of ``x^k`` in what is left;
    a nonzero leftover means ``h`` is not palindromic about ``d/2``.
    """
    h = MultiPoly.coerce(h)
    if h.degree(var) > d:
        raise NotSymmetric(f"degree {h.degree(var)} in {var} exceeds {d}")
    x = MultiPoly.var(var)
    one_plus = 1 + x
    residual = h
    gammas = []
    for k in range(d // 2 + 1):
        g = coefficient_of(residual, var, k)
        gammas.append(g)
        if g:
            residual = residual - g * x ** k * one_plus ** (d - 2 * k)
    if residual:
        raise NotSymmetric(f"not palindromic of degree {d} in {var}: leftover {residual}")
    return GammaVector(tuple(gammas), d, var)


def euler_number(n: int) -> int:
    """E_n, the coefficients of tan x + sec x, from the Seidel-Entringer triangle."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = [1]
    for m in range(1, n + 1):
        new = [0]
        for k in range(1, m + 1):
            new.append(new[k - 1] + row[m - k])
        row = new
    return row[-1]


def monomial_counter_to_poly(counts: Counter, names: Iterable[str]) -> MultiPoly:
    """Lift a Counter over short exponent tuples (in ``names`` order) to a MultiPoly."""
    idx = [var_index(nm) for nm in names]
    terms = {}
    for short, c in counts.items():
        e = [0] * NVARS
        for i, k in zip(idx, short):
            e[i] = k
        terms[tuple(e)] = c
    return MultiPoly(terms)


P = MultiPoly.var("p")
Q = MultiPoly.var("q")
T = MultiPoly.var("t")
U = MultiPoly.var("u")
V = MultiPoly.var("v")
W = MultiPoly.var("w")
Y = MultiPoly.var("y")
BETA = MultiPoly.var("beta")
ONE = MultiPoly.const(1)
ZERO = MultiPoly()
