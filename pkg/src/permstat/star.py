"""The star transformation sigma -> sigma* = (sigma(1)-1)...(sigma(n)-1).

sigma* maps [n] onto {0, ..., n-1}. Its functional graph splits into
genuine cycles inside [n-1] and a single path n -> ... -> 0. The cyclic
statistics of sigma* only look at points 1..n-1, where both sigma*(i) and
its preimage exist.
"""
from __future__ import annotations

from dataclasses import dataclass

from .perm import PermLike, StatRecord, _cros_nest, as_word


class InvalidStarMap(ValueError):
    pass


@dataclass(frozen=True)
class StarMap:
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        object.__setattr__(self, "word", word)
        if sorted(word) != list(range(len(word))):
            raise InvalidStarMap(f"{word} is not a bijection [n] -> {{0..n-1}}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __str__(self):
        sep = "" if self.n <= 10 else " "
        return sep.join(map(str, self.word))

    def preimage(self, x: int) -> int:
        return self.word.index(x) + 1

    def decompose(self) -> tuple[list[tuple[int, ...]], tuple[int, ...]]:
        """(cycles, path): the cycles of the diagram and the path from n down to 0."""
        n = self.n
        path = [n]
        x = n
        while x != 0:
            x = self.word[x - 1]
            path.append(x)
        seen = set(path)
        cycles = []
        for start in range(1, n):
            if start in seen:
                continue
            cyc = []
            x = start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self.word[x - 1]
            cycles.append(tuple(cyc))
        return cycles, tuple(path)


def star_map(sigma: PermLike) -> StarMap:
    return StarMap(tuple(x - 1 for x in as_word(sigma)))


def unstar(m: StarMap) -> tuple[int, ...]:
    return tuple(x + 1 for x in m.word)


def _star_counts(m):
    """Raw star statistics of a star word (tuple with values 0..n-1)."""
    n = len(m)
    pre = [0] * n  # pre[x] = position i with m(i) = x
    for i, x in enumerate(m, 1):
        pre[x] = i
    fix = wex = cda = cdd = cvl = 0
    for i in range(1, n):
        post = m[i - 1]
        if post == i:
            fix += 1
        if i <= post:
            wex += 1
        before = pre[i]
        if before > i > post:
            cdd += 1
        elif before < i < post:
            cda += 1
        elif before > i < post:
            cvl += 1
    defi = sum(1 for i, x in enumerate(m, 1) if x < i)
    cros, nest = _cros_nest(m)
    # genuine cycles: walk from every point not on the n -> 0 path
    on_path = [False] * (n + 1)
    x = n
    while x:
        on_path[x] = True
        x = m[x - 1]
    seen = on_path[:]
    cyc = 0
    for s in range(1, n):
        if seen[s]:
            continue
        cyc += 1
        x = s
        while not seen[x]:
            seen[x] = True
            x = m[x - 1]
    return fix, wex, defi, cros, nest, cda, cdd, cvl, cyc


def star_stats(m: StarMap | PermLike) -> StatRecord:
    """fix*, wex*, defi*, cros*, nest*, cda*, cdd*, cvalley*, cyc*.

    Accepts a StarMap or the permutation itself. ``cyc*`` counts genuine
    cycles only; ``components*`` adds the path to 0.
    """
    if not isinstance(m, StarMap):
        m = star_map(m)
    fix, wex, defi, cros, nest, cda, cdd, cvl, cyc = _star_counts(m.word)
    return StatRecord({
        "fix*": fix, "wex*": wex, "defi*": defi, "cros*": cros, "nest*": nest,
        "cda*": cda, "cdd*": cdd, "cvalley*": cvl, "cyc*": cyc,
        "components*": cyc + 1,
    })
