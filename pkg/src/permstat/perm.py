"""Permutations in one-line notation and their statistics.

A permutation of ``[n]`` is stored as the tuple ``(sigma(1), ..., sigma(n))``.
Every statistic below is computed straight from its positional definition
with an O(n^2) scan; at the sizes we enumerate (n <= 9) clarity wins.

The raw ``_``-prefixed helpers take plain tuples so the exhaustive builders
in :mod:`permstat.theorems` can skip object construction in hot loops.
"""
from __future__ import annotations

import enum
import itertools
import re
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from typing import Sequence, Union


class PermutationError(ValueError):
    pass


class DuplicateValue(PermutationError):
    pass


class OutOfRange(PermutationError):
    pass


class EmptyInput(PermutationError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        object.__setattr__(self, "word", word)
        n = len(word)
        seen = set()
        for x in word:
            if not 1 <= x <= n:
                raise OutOfRange(f"value {x} outside 1..{n}")
            if x in seen:
                raise DuplicateValue(f"value {x} repeated")
            seen.add(x)

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __call__(self, i: int) -> int:
        """Image of ``i`` (1-based)."""
        return self.word[i - 1]

    def __str__(self) -> str:
        if self.n < 10:
            return "".join(map(str, self.word))
        return " ".join(map(str, self.word))

    def inverse(self) -> "Permutation":
        return Permutation(_inverse(self.word))

    def compose(self, other: "Permutation") -> "Permutation":
        """``self o other``, i.e. ``i -> self(other(i))``."""
        return Permutation(tuple(self.word[x - 1] for x in other.word))

    def cycles(self) -> list[tuple[int, ...]]:
        return _cycles(self.word)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def _trusted(cls, word: tuple[int, ...]) -> "Permutation":
        # skips validation; only for words produced by itertools.permutations
        obj = object.__new__(cls)
        object.__setattr__(obj, "word", word)
        return obj


PermLike = Union[Permutation, Sequence[int], str]


def as_word(sigma: PermLike) -> tuple[int, ...]:
    if isinstance(sigma, Permutation):
        return sigma.word
    if isinstance(sigma, str):
        return parse_permutation(sigma).word
    return Permutation(tuple(sigma)).word


def parse_permutation(text: str) -> Permutation:
    """Parse ``"3 7 6 2 1 5 4"``, ``"3,7,6"`` or the compact ``"3762154"``.

    The compact form (a single run of digits) is only accepted for n <= 9.
    """
    tokens = [tok for tok in re.split(r"[\s,]+", text.strip()) if tok]
    if not tokens:
        raise EmptyInput("no values given")
    if len(tokens) == 1 and len(tokens[0]) > 1 and tokens[0].isdigit():
        tokens = list(tokens[0])
    try:
        values = [int(tok) for tok in tokens]
    except ValueError as exc:
        raise PermutationError(f"not an integer: {exc}") from None
    return Permutation(tuple(values))


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order."""
    for w in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(w)


class Convention(enum.Enum):
    """Values assigned to the phantom entries sigma(0) and sigma(n+1)."""

    ZERO_ZERO = "zz"
    ZERO_TOP = "zt"
    TOP_TOP = "tt"

    def boundary(self, n: int) -> tuple[int, int]:
        if self is Convention.ZERO_ZERO:
            return 0, 0
        if self is Convention.ZERO_TOP:
            return 0, n + 1
        return n + 1, n + 1


_SUFFIX = {Convention.ZERO_ZERO: "*", Convention.ZERO_TOP: "", Convention.TOP_TOP: "_B"}


class StatRecord(Mapping):
    """Read-only bag of named statistics.

    Aggregates are ints, per-value refinements (``les_k`` and friends) are
    length-n tuples whose entry ``k-1`` belongs to value ``k``. Asking for a
    statistic the producer did not compute raises ``KeyError``.
    """

    __slots__ = ("_data",)

    def __init__(self, data=None, **kwargs):
        d = dict(data or {})
        d.update(kwargs)
        for key, val in d.items():
            if isinstance(val, list):
                d[key] = tuple(val)
        self._data = d

    def __getitem__(self, key):
        return self._data[key]

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __repr__(self):
        body = ", ".join(f"{k}={v!r}" for k, v in self._data.items())
        return f"StatRecord({body})"

    def __or__(self, other: "StatRecord") -> "StatRecord":
        return StatRecord({**self._data, **dict(other)})

    def __hash__(self):
        return hash(tuple(sorted(self._data.items())))

    def __eq__(self, other):
        if isinstance(other, StatRecord):
            return self._data == other._data
        return NotImplemented


# -- raw tuple helpers -------------------------------------------------------

def _inverse(w):
    inv = [0] * len(w)
    for i, x in enumerate(w, 1):
        inv[x - 1] = i
    return tuple(inv)


def _cycles(w):
    n = len(w)
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = w[x - 1]
        out.append(tuple(cyc))
    return out


def _num_cycles(w):
    return len(_cycles(w))


def _des(w):
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def _classify_linear(w, left, right):
    """Counts (peak, valley, da, dd) of entries of ``left + w + right``."""
    ext = (left,) + tuple(w) + (right,)
    pk = vl = da = dd = 0
    for i in range(1, len(ext) - 1):
        a, b, c = ext[i - 1], ext[i], ext[i + 1]
        if a < b > c:
            pk += 1
        elif a > b < c:
            vl += 1
        elif a < b < c:
            da += 1
        else:
            dd += 1
    return pk, vl, da, dd


def _fmax(w):
    """Double ascents (0 ... n+1 boundary) that are left-to-right maxima."""
    n = len(w)
    ext = (0,) + tuple(w) + (n + 1,)
    count = 0
    best = 0
    for i in range(1, n + 1):
        x = ext[i]
        if x > best:
            if ext[i - 1] < x < ext[i + 1]:
                count += 1
            best = x
    return count


def _les_vector(w):
    """les_k: k = w[j] with an earlier adjacent pair w[i-1] > k > w[i]."""
    n = len(w)
    vec = [0] * n
    for j in range(n):
        k = w[j]
        for i in range(1, j):
            if w[i - 1] > k > w[i]:
                vec[k - 1] += 1
    return vec


def _less_vector(w):
    """less_k: k = w[j] with an earlier adjacent pair w[i-1] < k < w[i]."""
    n = len(w)
    vec = [0] * n
    for j in range(n):
        k = w[j]
        for i in range(1, j):
            if w[i - 1] < k < w[i]:
                vec[k - 1] += 1
    return vec


def _res_vector(w):
    """res_k: k = w[i] with a later adjacent pair w[j] < k < w[j+1]."""
    n = len(w)
    vec = [0] * n
    for i in range(n):
        k = w[i]
        for j in range(i + 1, n - 1):
            if w[j] < k < w[j + 1]:
                vec[k - 1] += 1
    return vec


def _ress_vector(w):
    """ress_k: k = w[i] with a later adjacent pair w[j] > k > w[j+1]."""
    n = len(w)
    vec = [0] * n
    for i in range(n):
        k = w[i]
        for j in range(i + 1, n - 1):
            if w[j] > k > w[j + 1]:
                vec[k - 1] += 1
    return vec


def _cros_nest_vectors(w):
    """Per-position crossing/nesting counts; position k owns arc k -> w(k)."""
    n = len(w)
    cros = [0] * n
    nest = [0] * n
    for k in range(1, n + 1):
        sk = w[k - 1]
        c = s = 0
        for i in range(1, n + 1):
            si = w[i - 1]
            if i < k:
                if k <= si < sk:
                    c += 1
                if k <= sk < si:
                    s += 1
            elif i > k:
                if k > si > sk:
                    c += 1
                if k > sk > si:
                    s += 1
        cros[k - 1] = c
        nest[k - 1] = s
    return cros, nest


def _cros_nest(w):
    c, s = _cros_nest_vectors(w)
    return sum(c), sum(s)


def _cyclic_classes(w):
    """(cpeak, cvalley, cda, cdd, fix) counted over values x."""
    inv = _inverse(w)
    pk = vl = da = dd = fx = 0
    for x in range(1, len(w) + 1):
        pre, post = inv[x - 1], w[x - 1]
        if post == x:
            fx += 1
        elif pre < x > post:
            pk += 1
        elif pre > x < post:
            vl += 1
        elif pre < x < post:
            da += 1
        else:
            dd += 1
    return pk, vl, da, dd, fx


def _exc(w):
    return sum(1 for i, x in enumerate(w, 1) if x > i)


def _defi(w):
    return sum(1 for i, x in enumerate(w, 1) if x < i)


def _fix(w):
    return sum(1 for i, x in enumerate(w, 1) if x == i)


# -- public operations -------------------------------------------------------

def linear_stats(sigma: PermLike, conv: Convention = Convention.ZERO_TOP) -> StatRecord:
    """des plus peak/valley/double ascent/double descent counts under ``conv``.

    Keys carry the convention: ``peak`` (ZERO_TOP), ``peak*`` (ZERO_ZERO),
    ``peak_B`` (TOP_TOP). ``fmax`` exists only for ZERO_TOP.
    """
    w = as_word(sigma)
    conv = Convention(conv)
    left, right = conv.boundary(len(w))
    pk, vl, da, dd = _classify_linear(w, left, right)
    sfx = _SUFFIX[conv]
    data = {"des": _des(w), "peak" + sfx: pk, "valley" + sfx: vl,
            "da" + sfx: da, "dd" + sfx: dd}
    if conv is Convention.ZERO_TOP:
        data["fmax"] = _fmax(w)
    return StatRecord(data)


def cyclic_stats(sigma: PermLike) -> StatRecord:
    w = as_word(sigma)
    pk, vl, da, dd, fx = _cyclic_classes(w)
    exc = _exc(w)
    return StatRecord(
        exc=exc, wex=exc + fx, defi=_defi(w), fix=fx, cyc=_num_cycles(w),
        cpeak=pk, cvalley=vl, cda=da, cdd=dd,
    )


def pattern_stats(sigma: PermLike) -> StatRecord:
    """The vincular pattern counts les (31-2), less (13-2), res (2-13),
    ress (2-31) and their refinements by the value playing the role of 2."""
    w = as_word(sigma)
    les_k = _les_vector(w)
    less_k = _less_vector(w)
    res_k = _res_vector(w)
    ress_k = _ress_vector(w)
    return StatRecord(
        les=sum(les_k), less=sum(less_k), res=sum(res_k), ress=sum(ress_k),
        les_k=les_k, less_k=less_k, res_k=res_k, ress_k=ress_k,
    )


def crossing_nesting(sigma: PermLike) -> StatRecord:
    w = as_word(sigma)
    c, s = _cros_nest_vectors(w)
    return StatRecord(cros=sum(c), nest=sum(s), cros_k=c, nest_k=s)


def all_stats(sigma: PermLike) -> StatRecord:
    """Every family at once (all three linear conventions included)."""
    rec = cyclic_stats(sigma) | pattern_stats(sigma) | crossing_nesting(sigma)
    for conv in Convention:
        rec = rec | linear_stats(sigma, conv)
    return rec


class Transform(enum.Enum):
    REVERSE = "reverse"
    COMPLEMENT = "complement"
    REVERSE_COMPLEMENT = "reverse_complement"


def transform(sigma: PermLike, kind: Union[Transform, str]) -> Permutation:
    w = as_word(sigma)
    kind = Transform(kind)
    n = len(w)
    if kind is Transform.REVERSE:
        return Permutation(w[::-1])
    if kind is Transform.COMPLEMENT:
        return Permutation(tuple(n + 1 - x for x in w))
    return Permutation(tuple(n + 1 - x for x in reversed(w)))


@dataclass(frozen=True)
class Flags:
    is_derangement: bool
    is_coderangement: bool
    is_alternating: bool
    is_involution: bool


def _is_alternating(w):
    """Falling alternating: w1 > w2 < w3 > ..."""
    for i in range(len(w) - 1):
        if (w[i] > w[i + 1]) != (i % 2 == 0):
            return False
    return True


def _is_involution(w):
    return all(w[x - 1] == i for i, x in enumerate(w, 1))


def predicates(sigma: PermLike) -> Flags:
    w = as_word(sigma)
    return Flags(
        is_derangement=_fix(w) == 0,
        is_coderangement=_fmax(w) == 0,
        is_alternating=_is_alternating(w),
        is_involution=_is_involution(w),
    )
