"""Motzkin paths, Laguerre histories and J-/S-fraction series.

Flajolet's correspondence: the x^n coefficient of the J-fraction
``1/(1 - b_0 x - lam_1 x^2/(1 - b_1 x - lam_2 x^2/ ...))`` is the sum over
Motzkin paths of length n of the product of step weights, where a level
step at height h weighs ``b_h`` and each up/down pair between heights
h-1 and h contributes ``lam_h``.

Permutations enter through two Laguerre-history encodings: the modified
Francon-Viennot map (linear statistics, history of length n-1) and the
Foata-Zeilberger map (cyclic statistics, history of length n).
"""
from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .perm import (
    Permutation,
    PermLike,
    _cros_nest_vectors,
    _inverse,
    _res_vector,
    all_permutations,
    as_word,
)
from .poly import MultiPoly, P, Q, T, U, V, W, Y, pq_integer
from .series import TruncatedSeries

WeightFn = Callable[[int], MultiPoly]


class Step(enum.Enum):
    NORTH_EAST = "U"
    SOUTH_EAST = "D"
    EAST = "E"
    EAST_BLUE = "B"
    EAST_RED = "R"

    @property
    def rise(self) -> int:
        return {"U": 1, "D": -1}.get(self.value, 0)


NE, SE, EAST, EB, ER = Step.NORTH_EAST, Step.SOUTH_EAST, Step.EAST, Step.EAST_BLUE, Step.EAST_RED


class InvalidPath(ValueError):
    pass


class FlavorMismatch(ValueError):
    pass


@dataclass(frozen=True)
class ColoredMotzkinPath:
    steps: tuple[Step, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(Step(s) for s in self.steps))
        h = 0
        for s in self.steps:
            h += s.rise
            if h < 0:
                raise InvalidPath(f"path {self} dips below the axis")
        if h != 0:
            raise InvalidPath(f"path {self} ends at height {h}")

    @classmethod
    def parse(cls, text: str) -> "ColoredMotzkinPath":
        return cls(tuple(Step(ch) for ch in text))

    @property
    def heights(self) -> tuple[int, ...]:
        """Ordinate before each step."""
        out = []
        h = 0
        for s in self.steps:
            out.append(h)
            h += s.rise
        return tuple(out)

    def count(self, kind: Step) -> int:
        return sum(1 for s in self.steps if s is kind)

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return "".join(s.value for s in self.steps)


class Flavor(enum.Enum):
    FV = "FV"
    FZ = "FZ"


def choice_bound(step: Step, height: int, flavor: Flavor) -> int:
    """Largest admissible choice p_i for a step of this kind at this height."""
    if flavor is Flavor.FZ and step in (SE, ER):
        return height - 1
    return height


@dataclass(frozen=True)
class LaguerreHistory:
    path: ColoredMotzkinPath
    choices: tuple[int, ...]
    flavor: Flavor = Flavor.FV

    def __post_init__(self):
        object.__setattr__(self, "choices", tuple(self.choices))
        object.__setattr__(self, "flavor", Flavor(self.flavor))
        if len(self.choices) != len(self.path):
            raise InvalidPath("one choice per step is required")
        for s, h, c in zip(self.path.steps, self.path.heights, self.choices):
            if s is EAST:
                raise InvalidPath("Laguerre histories use colored level steps")
            if not 0 <= c <= choice_bound(s, h, self.flavor):
                raise InvalidPath(f"choice {c} out of range for {s.name} at height {h}")

    def __len__(self):
        return len(self.choices)

    def __str__(self):
        return f"{self.path} [{','.join(map(str, self.choices))}]"


# -- enumeration -------------------------------------------------------------

def motzkin_enumerate(n: int, colored: bool = False) -> list[ColoredMotzkinPath]:
    """All Motzkin paths of length n (two level colours if ``colored``)."""
    levels = (EB, ER) if colored else (EAST,)
    out: list[tuple[Step, ...]] = []

    def grow(prefix: list, h: int):
        left = n - len(prefix)
        if left == 0:
            if h == 0:
                out.append(tuple(prefix))
            return
        if h + 1 <= left - 1:
            prefix.append(NE)
            grow(prefix, h + 1)
            prefix.pop()
        if h > 0:
            prefix.append(SE)
            grow(prefix, h - 1)
            prefix.pop()
        if h <= left - 1:
            for lv in levels:
                prefix.append(lv)
                grow(prefix, h)
                prefix.pop()

    grow([], 0)
    return [ColoredMotzkinPath(s) for s in out]


def enumerate_histories(n: int, flavor: Flavor = Flavor.FV) -> list[LaguerreHistory]:
    flavor = Flavor(flavor)
    out = []
    for path in motzkin_enumerate(n, colored=True):
        ranges = [
            range(choice_bound(s, h, flavor) + 1) for s, h in zip(path.steps, path.heights)
        ]
        for ch in itertools.product(*ranges):
            out.append(LaguerreHistory(path, ch, flavor))
    return out


# -- weighted sums -----------------------------------------------------------

@dataclass(frozen=True)
class PathWeights:
    """Step weights as functions of the height before the step.

    ``level`` weighs plain level steps; ``blue``/``red`` override it for
    coloured paths when given.
    """

    up: WeightFn
    level: WeightFn
    down: WeightFn
    blue: Optional[WeightFn] = None
    red: Optional[WeightFn] = None

    def step_weight(self, s: Step, h: int) -> MultiPoly:
        if s is NE:
            return self.up(h)
        if s is SE:
            return self.down(h)
        if s is EB and self.blue is not None:
            return self.blue(h)
        if s is ER and self.red is not None:
            return self.red(h)
        if s in (EB, ER):
            raise ValueError("coloured step without a colour weight")
        return self.level(h)


def weighted_path_sum(n: int, weights: PathWeights) -> MultiPoly:
    """Sum over Motzkin paths of length n of the step-weight product (height DP)."""
    up = functools.lru_cache(None)(weights.up)
    level = functools.lru_cache(None)(weights.level)
    down = functools.lru_cache(None)(weights.down)
    row = {0: MultiPoly.const(1)}
    for pos in range(n):
        left = n - pos - 1
        nxt: dict[int, MultiPoly] = {}
        for h, val in row.items():
            for dh, fn in ((1, up), (0, level), (-1, down)):
                h2 = h + dh
                if h2 < 0 or h2 > left:
                    continue
                wgt = fn(h)
                if not wgt:
                    continue
                nxt[h2] = nxt.get(h2, MultiPoly()) + val * wgt
        row = nxt
    return row.get(0, MultiPoly())


def brute_path_sum(n: int, weights: PathWeights, colored: bool = False) -> MultiPoly:
    """Same sum by explicit enumeration; the independent check for the DP."""
    total = MultiPoly()
    for path in motzkin_enumerate(n, colored=colored):
        prod = MultiPoly.const(1)
        for s, h in zip(path.steps, path.heights):
            prod = prod * weights.step_weight(s, h)
            if not prod:
                break
        total = total + prod
    return total


@dataclass(frozen=True)
class JFractionSpec:
    """``level_weight(h)`` is b_h, ``product_weight(h)`` is lam_h = a_{h-1} c_h (h >= 1)."""

    level_weight: WeightFn
    product_weight: WeightFn
    name: str = field(default="", compare=False)

    @classmethod
    def from_path_weights(cls, weights: PathWeights, name: str = "") -> "JFractionSpec":
        return cls(weights.level, lambda h: weights.up(h - 1) * weights.down(h), name)

    def as_path_weights(self) -> PathWeights:
        one = MultiPoly.const(1)
        return PathWeights(
            up=lambda h: self.product_weight(h + 1),
            level=self.level_weight,
            down=lambda h: one,
        )


def jfraction_series(spec: JFractionSpec, N: int) -> TruncatedSeries:
    """Coefficients of x^0..x^N via the Motzkin-path height DP."""
    pw = spec.as_path_weights()
    up = functools.lru_cache(None)(pw.up)
    level = functools.lru_cache(None)(pw.level)
    coeffs = []
    # one forward sweep collects every length at once
    row = {0: MultiPoly.const(1)}
    for n in range(N + 1):
        coeffs.append(row.get(0, MultiPoly()))
        if n == N:
            break
        nxt: dict[int, MultiPoly] = {}
        for h, val in row.items():
            if h + 1 <= N - n - 1:
                a = up(h)
                if a:
                    nxt[h + 1] = nxt.get(h + 1, MultiPoly()) + val * a
            b = level(h)
            if b:
                nxt[h] = nxt.get(h, MultiPoly()) + val * b
            if h > 0:
                nxt[h - 1] = nxt.get(h - 1, MultiPoly()) + val
        row = nxt
    return TruncatedSeries(tuple(coeffs))


def jfraction_depth(N: int) -> int:
    """Levels needed for exactness to order N: level k first shows up at x^{2k}."""
    return N // 2 + 1 + (N % 2)


def jfraction_literal(spec: JFractionSpec, N: int, depth: Optional[int] = None) -> TruncatedSeries:
    """Evaluate the finite fraction bottom-up with truncated series arithmetic.

    The tail below level k is multiplied by x^(2k) overall, so it is only
    carried to order N - 2k.
    """
    if depth is None:
        depth = jfraction_depth(N)
    tail = TruncatedSeries.constant(1, 0)
    for k in range(depth - 1, -1, -1):
        m = max(N - 2 * k, 0)
        x = TruncatedSeries.monomial(1, 1, m)
        denom = (1 - x * spec.level_weight(k)
                 - (x * x) * spec.product_weight(k + 1) * tail.truncate(m))
        tail = denom.inverse()
    return tail


def sfraction_literal(c: Sequence[MultiPoly], N: int) -> TruncatedSeries:
    """``1/(1 - c_1 x/(1 - c_2 x/ ...))`` to order N; ``c[i-1]`` is c_i."""
    tail = TruncatedSeries.constant(1, 0)
    for i in range(N, 0, -1):
        m = N - i + 1
        ci = c[i - 1] if i - 1 < len(c) else MultiPoly()
        x = TruncatedSeries.monomial(1, 1, m)
        tail = (1 - x * ci * tail.truncate(m)).inverse()
    return tail.truncate(N)


@dataclass(frozen=True)
class ContractionReport:
    sfraction: TruncatedSeries
    even_form: TruncatedSeries
    odd_form: TruncatedSeries

    @property
    def passed(self) -> bool:
        return self.sfraction == self.even_form == self.odd_form


def _c_getter(c: Sequence) -> Callable[[int], MultiPoly]:
    def get(i: int) -> MultiPoly:
        if 1 <= i <= len(c):
            return MultiPoly.coerce(c[i - 1])
        return MultiPoly()
    return get


def contraction_check(c: Sequence, N: int) -> ContractionReport:
    """Compare an S-fraction with both of its contracted J-fractions.

    ``even_form`` is ``1 + c_1 x J(x)`` with b_k = c_{2k+1}+c_{2k+2},
    lam_k = c_{2k} c_{2k+1}; ``odd_form`` is the J-fraction with
    b_0 = c_1, b_k = c_{2k}+c_{2k+1}, lam_k = c_{2k-1} c_{2k}.
    """
    cc = _c_getter(c)
    s = sfraction_literal([cc(i) for i in range(1, N + 1)], N)
    even_spec = JFractionSpec(lambda k: cc(2 * k + 1) + cc(2 * k + 2),
                              lambda k: cc(2 * k) * cc(2 * k + 1))
    inner = jfraction_series(even_spec, N)
    even = 1 + inner.shift(1) * cc(1)
    odd_spec = JFractionSpec(lambda k: cc(2 * k) + cc(2 * k + 1),
                             lambda k: cc(2 * k - 1) * cc(2 * k))
    odd = jfraction_series(odd_spec, N)
    return ContractionReport(s, even, odd)


# -- permutation encodings ---------------------------------------------------

def fv_map(sigma: PermLike) -> LaguerreHistory:
    """Modified Francon-Viennot encoding of sigma in S_n as a history of length n-1.

    Step i describes the value i: valley / peak / double ascent / double
    descent (boundary values 0 on both sides) give U / D / B / R, and the
    choice is res_i.
    """
    w = as_word(sigma)
    n = len(w)
    if n < 1:
        raise ValueError("fv_map needs n >= 1")
    inv = _inverse(w)
    ext = (0,) + w + (0,)
    res = _res_vector(w)
    steps = []
    for i in range(1, n):
        pos = inv[i - 1]
        a, b = ext[pos - 1], ext[pos + 1]
        if a > i < b:
            steps.append(NE)
        elif a < i > b:
            steps.append(SE)
        elif a < i < b:
            steps.append(EB)
        else:
            steps.append(ER)
    return LaguerreHistory(ColoredMotzkinPath(tuple(steps)), tuple(res[: n - 1]), Flavor.FV)


def fz_map(sigma: PermLike) -> LaguerreHistory:
    """Foata-Zeilberger encoding: step i is the cyclic type of i, choice nest_i."""
    w = as_word(sigma)
    n = len(w)
    inv = _inverse(w)
    _, nest = _cros_nest_vectors(w)
    steps = []
    for x in range(1, n + 1):
        pre, post = inv[x - 1], w[x - 1]
        if post == x:
            steps.append(EB)
        elif pre > x < post:
            steps.append(NE)
        elif pre < x > post:
            steps.append(SE)
        elif pre < x < post:
            steps.append(EB)
        else:
            steps.append(ER)
    return LaguerreHistory(ColoredMotzkinPath(tuple(steps)), tuple(nest), Flavor.FZ)


class Scheme(enum.Enum):
    FV = "FV"
    FZ = "FZ"


def history_weight(hist: LaguerreHistory, scheme) -> MultiPoly:
    """Monomial weight of a history; FV pairs with A_n, FZ with B_n."""
    scheme = Scheme(scheme.value if isinstance(scheme, (Flavor, Scheme)) else scheme)
    if scheme.value != hist.flavor.value:
        raise FlavorMismatch(f"{scheme.name} weights on a {hist.flavor.name} history")
    e = dict(p=0, q=0, t=0, u=0, v=0, w=0, y=0)
    for s, h, c in zip(hist.path.steps, hist.path.heights, hist.choices):
        e["p"] += c
        if scheme is Scheme.FV:
            e["q"] += h - c
            if s is NE:
                e["t"] += 1
                e["w"] += 1
            elif s is EB:
                e["u"] += 1
            elif s is ER:
                e["t"] += 1
                e["v"] += 1
        else:
            if s is NE:
                e["t"] += 1
                e["w"] += 1
                e["q"] += h - c
            elif s is SE:
                e["q"] += h - 1 - c
            elif s is EB:
                if c == h:
                    e["y"] += 1
                else:
                    e["u"] += 1
                    e["q"] += h - c
            else:
                e["t"] += 1
                e["v"] += 1
                e["q"] += h - 1 - c
    return MultiPoly.monomial(1, **e)


@functools.lru_cache(maxsize=None)
def _inverse_table(kind: str, n: int) -> dict:
    fn = fv_map if kind == "fv" else fz_map
    return {fn(s): s for s in all_permutations(n)}


INVERSE_CACHE_BOUND = 8


def fv_inverse(hist: LaguerreHistory) -> Permutation:
    """Cached lookup; the history has length n-1 for sigma in S_n."""
    n = len(hist) + 1
    if n > INVERSE_CACHE_BOUND:
        raise ValueError(f"inverse lookup limited to n <= {INVERSE_CACHE_BOUND}")
    return _inverse_table("fv", n)[hist]


def fz_inverse(hist: LaguerreHistory) -> Permutation:
    n = len(hist)
    if n > INVERSE_CACHE_BOUND:
        raise ValueError(f"inverse lookup limited to n <= {INVERSE_CACHE_BOUND}")
    return _inverse_table("fz", n)[hist]


# -- the paper's weight schemes ----------------------------------------------

def fv_weights() -> PathWeights:
    """Step weights whose length-(n-1) path sum is A_n(p,q,t,u,v,w)."""
    return PathWeights(
        up=lambda h: T * W * pq_integer(h + 1),
        level=lambda h: (U + T * V) * pq_integer(h + 1),
        down=lambda h: pq_integer(h + 1),
        blue=lambda h: U * pq_integer(h + 1),
        red=lambda h: T * V * pq_integer(h + 1),
    )


def fz_weights() -> PathWeights:
    """Step weights whose length-n path sum is B_n(p,q,t,u,v,w,y)."""
    return PathWeights(
        up=lambda h: T * W * pq_integer(h + 1),
        level=lambda h: Y * P ** h + (Q * U + T * V) * pq_integer(h),
        down=lambda h: pq_integer(h),
        blue=lambda h: Y * P ** h + Q * U * pq_integer(h),
        red=lambda h: T * V * pq_integer(h),
    )
