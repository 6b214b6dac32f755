import random

import pytest
from hypothesis import given, settings, strategies as st

from aqcube.cube_cat import cube_poset
from aqcube.posets import (FinitePoset, Interval, NotAPosetError, NotGradedError, chain_poset,
                           check_graded, cover_extensions, intervals_of_length, product_poset,
                           twisted_arrow_poset)


def test_chain_lengths():
    P = chain_poset(2)
    assert P.length(0, 2) == 2
    assert P.max_length == 2


def test_cube_length_is_hamming_gap():
    P = cube_poset(3)
    assert P.length((0, 0, 0), (1, 1, 1)) == 3
    for x in P.elements:
        for y in P.elements:
            if P.leq(x, y):
                assert P.length(x, y) == sum(b - a for a, b in zip(x, y))


def test_ungraded_witness():
    elems = ["a", "b", "c1", "c2", "d"]
    covers = [("a", "b"), ("b", "d"), ("a", "c1"), ("c1", "c2"), ("c2", "d")]
    with pytest.raises(NotGradedError) as exc:
        check_graded(FinitePoset(elems, covers))
    assert exc.value.witness == ("a", "d")
    short, long_ = exc.value.chains
    assert (len(short), len(long_)) == (3, 4)
    assert short[0] == long_[0] == "a" and short[-1] == long_[-1] == "d"


def test_cycle_is_not_a_poset():
    with pytest.raises(NotAPosetError):
        FinitePoset("xy", [("x", "y"), ("y", "x")])


def test_unknown_element_in_relation():
    with pytest.raises(NotAPosetError, match="unknown"):
        FinitePoset("xy", [("x", "z")])


def test_intervals_of_length_square():
    P = cube_poset(2)
    assert [(I.low, I.high) for I in intervals_of_length(P, 0)] == [(x, x) for x in P.elements]
    assert len(intervals_of_length(P, 1)) == 4
    assert [(I.low, I.high) for I in intervals_of_length(P, 2)] == [((0, 0), (1, 1))]


def test_twisted_arrow_small():
    pt = twisted_arrow_poset(FinitePoset([0]))
    assert len(pt) == 1
    T = twisted_arrow_poset(chain_poset(1).poset)
    assert len(T) == 3
    I00, I01, I11 = Interval(0, 0), Interval(0, 1), Interval(1, 1)
    assert T.leq(I00, I01) and T.leq(I11, I01)
    assert not T.leq(I00, I11) and not T.leq(I11, I00)
    assert len(twisted_arrow_poset(cube_poset(2).poset)) == 9


@pytest.mark.parametrize("k", range(6))
def test_twisted_arrow_of_chain_counts(k):
    assert len(twisted_arrow_poset(chain_poset(k).poset)) == (k + 1) * (k + 2) // 2


def test_cover_extensions_examples():
    C = chain_poset(1)
    t, s = cover_extensions(C, C.interval(0, 0))
    assert [J.key for J in t] == [(0, 1)] and s == []
    Q = cube_poset(2)
    t, s = cover_extensions(Q, Q.interval((0, 0), (0, 1)))
    assert [J.key for J in t] == [((0, 0), (1, 1))] and s == []
    assert cover_extensions(Q, Q.interval((0, 0), (1, 1))) == ([], [])


def test_cover_extensions_in_middle_of_chain():
    C = chain_poset(2)
    t, s = cover_extensions(C, C.interval(1, 1))
    assert [J.key for J in t] == [(1, 2)]
    assert [J.key for J in s] == [(0, 1)]
    assert all(J.length == 1 for J in t + s)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=3))
def test_product_lengths_add(sizes):
    P = product_poset(*sizes)
    for x in P.elements:
        for y in P.elements:
            if P.leq(x, y):
                assert P.length(x, y) == sum(b - a for a, b in zip(x, y))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_cover_pairs_generate_order(seed):
    # the covering relation of a random subposet of a cube regenerates its order
    rng = random.Random(seed)
    Q = cube_poset(3)
    elems = rng.sample(Q.elements, rng.randint(1, 8))
    sub = Q.poset.subposet(elems)
    again = FinitePoset(sub.elements, sub.cover_pairs)
    assert all(again.leq(x, y) == sub.leq(x, y) for x in elems for y in elems)


def test_maximal_chains_of_square():
    Q = cube_poset(2)
    chains = Q.poset.maximal_chains((0, 0), (1, 1))
    assert sorted(chains) == [[(0, 0), (0, 1), (1, 1)], [(0, 0), (1, 0), (1, 1)]]


def test_not_an_interval():
    with pytest.raises(ValueError, match="not below"):
        cube_poset(2).length((0, 1), (1, 0))
