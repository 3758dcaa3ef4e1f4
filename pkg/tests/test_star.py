import pytest

import oracle
from permstat.perm import Permutation, all_permutations, cyclic_stats, parse_permutation
from permstat.star import InvalidStarMap, StarMap, star_map, star_stats, unstar


def test_example_word():
    assert str(star_map(parse_permutation("3762154"))) == "2651043"


def test_identity():
    assert star_map(Permutation.identity(3)).word == (0, 1, 2)


def test_injective_on_s5():
    assert len({star_map(s) for s in all_permutations(5)}) == 120


def test_unstar_round_trip():
    for s in all_permutations(4):
        assert unstar(star_map(s)) == s.word


def test_rejects_non_bijection():
    with pytest.raises(InvalidStarMap):
        StarMap((1, 1, 0))


def test_crossings_of_example():
    rec = star_stats(parse_permutation("3762154"))
    assert (rec["cros*"], rec["nest*"]) == (4, 3)


def test_components_of_example():
    # one genuine cycle 1 -> 2 -> 6 -> 4 and the path 7 -> 3 -> 5 -> 0
    m = star_map(parse_permutation("3762154"))
    cycles, path = m.decompose()
    assert cycles == [(1, 2, 6, 4)]
    assert path == (7, 3, 5, 0)
    rec = star_stats(m)
    assert rec["cyc*"] == 1
    assert rec["components*"] == 2


def test_fix_star():
    assert star_stats(parse_permutation("231"))["fix*"] == 2


@pytest.mark.parametrize("n", range(1, 8))
def test_wex_star_is_exc(n):
    for s in all_permutations(n):
        assert star_stats(s)["wex*"] == cyclic_stats(s)["exc"]


@pytest.mark.parametrize("n", range(1, 8))
def test_decomposition_covers_every_point(n):
    for s in all_permutations(n):
        m = star_map(s)
        cycles, path = m.decompose()
        assert path[0] == n and path[-1] == 0
        points = [x for c in cycles for x in c] + list(path[:-1])
        assert sorted(points) == list(range(1, n + 1))
        assert len(cycles) == star_stats(m)["cyc*"]


@pytest.mark.parametrize("n", range(1, 7))
def test_cycle_count_matches_oracle(n):
    for s in all_permutations(n):
        assert star_stats(s)["cyc*"] == oracle.star_cycles(s.word)

