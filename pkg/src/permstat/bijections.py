"""The biword bijection Phi and the derived bijection Psi on S_n.

Phi sends linear statistics of sigma (boundary 0 on the left, n+1 on the
right) to cyclic statistics of Phi(sigma):

    (des, les, ress, da - fmax, dd, valley, fmax) sigma
        = (defi, cros, nest, cda, cdd, cvalley, fix) Phi(sigma)

and refines ress_k sigma = nest_k Phi(sigma) for every value k.
"""
from __future__ import annotations

import enum
import functools
from typing import Mapping, Sequence

from .perm import Permutation, PermLike, _ress_vector, all_permutations, as_word


class EmbracingOutOfRange(ValueError):
    pass


class CacheBoundExceeded(ValueError):
    pass


class InternalAssertion(AssertionError):
    pass


class InsertionMode(enum.Enum):
    INVERSION_BOTTOM = "bottom"
    INVERSION_TOP = "top"


def word_from_embracings(letters: Sequence[int], emb: Mapping[int, int],
                         mode: InsertionMode) -> tuple[int, ...]:
    """Arrange ``letters`` so each letter has a prescribed inversion number.

    INVERSION_BOTTOM: letter a ends up with exactly emb[a] larger letters to
    its left (insert largest first). INVERSION_TOP: letter b ends up with
    exactly emb[b] smaller letters to its right (insert smallest first).
    """
    mode = InsertionMode(mode)
    word: list[int] = []
    if mode is InsertionMode.INVERSION_BOTTOM:
        for a in sorted(letters, reverse=True):
            k = emb[a]
            if not 0 <= k <= len(word):
                raise EmbracingOutOfRange(f"letter {a}: {k} larger letters requested, {len(word)} available")
            word.insert(k, a)
    else:
        for b in sorted(letters):
            k = emb[b]
            if not 0 <= k <= len(word):
                raise EmbracingOutOfRange(f"letter {b}: {k} smaller letters requested, {len(word)} available")
            word.insert(len(word) - k, b)
    return tuple(word)


def _phi_word(w: tuple[int, ...]) -> tuple[int, ...]:
    n = len(w)
    ress = _ress_vector(w)
    emb = {k: ress[k - 1] for k in range(1, n + 1)}
    tops, bottoms = set(), set()
    for i in range(n - 1):
        if w[i] > w[i + 1]:
            tops.add(w[i])
            bottoms.add(w[i + 1])
    everything = set(range(1, n + 1))
    f = sorted(bottoms)
    g = sorted(everything - bottoms)
    f_prime = word_from_embracings(sorted(tops), emb, InsertionMode.INVERSION_BOTTOM)
    g_prime = word_from_embracings(sorted(everything - tops), emb, InsertionMode.INVERSION_TOP)
    tau = [0] * n
    for top, bottom in zip(f + g, f_prime + g_prime):
        tau[bottom - 1] = top
    return tuple(tau)


def phi(sigma: PermLike) -> Permutation:
    return Permutation(_phi_word(as_word(sigma)))


PHI_CACHE_BOUND = 9


@functools.lru_cache(maxsize=None)
def _phi_table(n: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    table = {}
    for s in all_permutations(n):
        table[_phi_word(s.word)] = s.word
    if len(table) != len(set(table.values())):
        raise InternalAssertion("phi is not injective")
    return table


def phi_inverse(tau: PermLike, bound: int = PHI_CACHE_BOUND) -> Permutation:
    """The unique sigma with phi(sigma) == tau, from a table of the forward map."""
    w = as_word(tau)
    if len(w) > bound:
        raise CacheBoundExceeded(f"n = {len(w)} exceeds the cache bound {bound}")
    return Permutation(_phi_table(len(w))[w])


def _psi_word(w: tuple[int, ...]) -> tuple[int, ...]:
    n = len(w)
    hat = tuple(x + 1 for x in w) + (1,)
    tau = _phi_word(hat)
    if tau[0] != n + 1:
        raise InternalAssertion(f"Phi({hat}) starts with {tau[0]}, expected {n + 1}")
    return tau[1:]


def psi(sigma: PermLike) -> Permutation:
    """Psi(sigma) = Phi(sigma+1 followed by 1) with the leading n+1 removed."""
    return Permutation(_psi_word(as_word(sigma)))
