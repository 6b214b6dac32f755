import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from aqcube.abgrp import FGAbelianGroup, cohomology
from aqcube.aq_complex import build_cube_cphi
from aqcube.cube_cat import cube_poset
from aqcube.cubical_complex import (Cell, CubicalComplex, boundary_cube, build_limit_complex,
                                    cell_system, equalizer_oracle, full_cube, nd_cube_poset,
                                    random_subcomplex, system_on, validate_complex)

from helpers import random_system


def canon(C):
    return {k: G.canonical() for k, G in cohomology(C).items()}


@pytest.mark.parametrize("code", ["", "0", "*", "0*1", "**1*", "1101"])
def test_cell_code_round_trip(code):
    c = Cell.parse(code)
    assert c.code == code
    assert c.dim == code.count("*")


def test_cell_rejects_bad_code():
    with pytest.raises(ValueError):
        Cell.parse("0x1")


def test_cell_interval_and_facets():
    c = Cell.parse("0*1")
    assert c.interval == ((0, 0, 1), (0, 1, 1))
    assert sorted(f.code for f in c.facets()) == ["001", "011"]
    assert len(Cell.parse("***").faces()) == 27


def test_lone_square_reports_missing_faces():
    K = CubicalComplex(2, ["**"])
    rep = validate_complex(K)
    assert not rep.ok
    assert [c.dim for c in rep.missing].count(1) == 4
    assert [c.dim for c in rep.missing].count(0) == 4
    assert all(rep.missing_from[f] == [Cell.parse("**")] for f in rep.missing)
    assert validate_complex(CubicalComplex.closure(2, ["**"])).ok


def test_shared_intervals_on_boundary():
    rep = validate_complex(boundary_cube(2))
    assert rep.ok
    # each corner lies in two edges
    assert sorted(c.code for c, owners in rep.shared_intervals) == ["00", "01", "10", "11"]


@pytest.mark.parametrize("n,count", [(1, 2), (2, 8), (3, 26)])
def test_boundary_sizes(n, count):
    assert len(boundary_cube(n)) == count


@pytest.mark.parametrize("n", range(1, 7))
def test_boundary_counts_binomial(n):
    assert boundary_cube(n).cell_counts() == [comb(n, k) * 2 ** (n - k) for k in range(n)]
    assert full_cube(n).cell_counts()[-1] == 1


def test_nd_cube_poset_examples():
    P = nd_cube_poset(boundary_cube(2))
    assert len(P.elements) == 8
    assert len(P.poset.maximal_elements()) == 4
    Q = nd_cube_poset(full_cube(3))
    assert len(Q.elements) == 27
    assert len(Q.poset.maximal_elements()) == 1


@pytest.mark.parametrize("m", range(4))
def test_full_cube_matches_cube_complex(m):
    P = cube_poset(m)
    S = random_system(P, random.Random(m))
    L = build_limit_complex(full_cube(m), S, m)
    C = build_cube_cphi(m, S, m)
    assert L.offset == C.offset and list(L.degrees) == list(C.degrees)
    for k in list(C.degrees)[:-1]:
        assert L.differential(k).matrix == C.differential(k).matrix


def test_square_boundary_cohomology():
    K = boundary_cube(2)
    C = build_limit_complex(K, cell_system(K), 2)
    assert canon(C) == {-2: (1, ()), -1: (1, ())}


def test_square_boundary_torsion():
    K = boundary_cube(2)
    C = build_limit_complex(K, cell_system(K, FGAbelianGroup.cyclic(4)), 0)
    assert canon(C) == {0: (0, (4,)), 1: (0, (4,))}


@pytest.mark.parametrize("K", [full_cube(1), full_cube(2), boundary_cube(2), boundary_cube(3)],
                         ids=["I", "I2", "dI2", "dI3"])
def test_equalizer_oracle_constant(K):
    S = cell_system(K, FGAbelianGroup.from_invariants(1, [2]))
    n = K.ambient_dim
    assert canon(build_limit_complex(K, S, n)) == canon(equalizer_oracle(K, S, n))


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10_000))
def test_equalizer_oracle_random_3cube(seed):
    rng = random.Random(seed)
    K = random_subcomplex(3, rng, max_cells=20)
    S = random_system(cube_poset(3), rng)
    n = rng.randint(0, 3)
    assert canon(build_limit_complex(K, S, n)) == canon(equalizer_oracle(K, S, n))


def test_system_on_names_missing_interval():
    K = boundary_cube(2)
    S = cell_system(CubicalComplex.closure(2, ["*0"]))
    with pytest.raises(ValueError, match=r"cell 0\*|cell 1\*|cell \*1"):
        system_on(K, S)


def test_random_subcomplex_is_closed():
    rng = random.Random(7)
    for _ in range(20):
        K = random_subcomplex(4, rng, max_cells=30)
        assert len(K) <= 30 and validate_complex(K).ok
