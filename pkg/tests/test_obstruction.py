import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from aqcube.abgrp import FGAbelianGroup, GroupHom, IntMatrix
from aqcube.cube_cat import cube_poset
from aqcube.cubical_complex import boundary_cube, cell_system
from aqcube.local_system import constant_system
from aqcube.obstruction import (HEXAGON_FACETS, FacetClasses, ObstructionInputError,
                                TransportData, UnsupportedCaseError, assemble_cocycle,
                                decide_vanishing, default_orientation, facet_id, facets,
                                identity_transports, lifting_obstruction, obstruction_complex,
                                parse_facet_id, samelson_fixture, toda_fixture, total_class,
                                total_class_vanishes, transports_from_system)

from helpers import coboundary_instance, facet_classes_of, random_system

Z = FGAbelianGroup.free(1)


def classes(n, values):
    return FacetClasses(n, {facet_id(f): (v,) for f, v in zip(facets(n), values)})


def test_facet_ids():
    assert [facet_id(f) for f in facets(2)] == ["x1=0", "x1=1", "x2=0", "x2=1"]
    assert parse_facet_id(3, "x2=1").code == "*1*"
    with pytest.raises(ObstructionInputError, match="x4=0"):
        parse_facet_id(3, "x4=0")
    assert sorted(HEXAGON_FACETS) == sorted(facet_id(f) for f in facets(3))


@pytest.mark.parametrize("n", range(2, 6))
def test_orientation_table(n):
    o = default_orientation(n)
    assert sorted(o.values()) == [-1] * n + [1] * n
    fs = facets(n)
    assert all(o[fs[2 * j]] == -o[fs[2 * j + 1]] for j in range(n))


def test_zero_classes_lift():
    S = cell_system(boundary_cube(3))
    r = lifting_obstruction(3, S, FacetClasses.zero(3, S))
    assert r.verdict == "LIFTS"
    assert not any(r.certificate)
    assert r.cohomology == (1, ())


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_coboundaries_lift_with_certificate(seed):
    rng = random.Random(seed)
    S = random_system(cube_poset(3), rng)
    C = obstruction_complex(3, S)
    _, F = coboundary_instance(C, 3, rng)
    r = decide_vanishing(C, assemble_cocycle(C, F))
    assert r.vanishes
    d0 = C.differential(0)
    assert C.group(1).contains_relation([a - b for a, b in zip(d0(r.certificate), r.cocycle)])


def test_square_generator_obstructed():
    S = cell_system(boundary_cube(2))
    r = lifting_obstruction(2, S, classes(2, [1, 0, 0, 0]), linear=True)
    assert r.verdict == "OBSTRUCTED" and r.certificate is None
    assert r.cohomology == (1, ())
    assert r.class_coordinates == ((1,), ())


def test_square_needs_linear_flag():
    with pytest.raises(UnsupportedCaseError, match="linear"):
        lifting_obstruction(2, cell_system(boundary_cube(2)), classes(2, [0] * 4))


def test_coboundary_perturbed_by_generator_flips():
    rng = random.Random(3)
    S = cell_system(boundary_cube(3))
    C = obstruction_complex(3, S)
    for _ in range(20):
        c, F = coboundary_instance(C, 3, rng)
        assert decide_vanishing(C, assemble_cocycle(C, F)).vanishes
        j = rng.randrange(6)
        bumped = F + classes(3, [int(i == j) for i in range(6)])
        assert not decide_vanishing(C, assemble_cocycle(C, bumped)).vanishes


def test_total_class_additive_and_flips():
    rng = random.Random(11)
    T = identity_transports(3, Z)
    for _ in range(30):
        F = classes(3, [rng.randint(-4, 4) for _ in range(6)])
        G = classes(3, [rng.randint(-4, 4) for _ in range(6)])
        assert total_class(F + G, T) == tuple(a + b for a, b in zip(total_class(F, T),
                                                                      total_class(G, T)))
        assert total_class(F, T.flipped()) == tuple(-a for a in total_class(F, T))


@pytest.mark.parametrize("q", [2, 3])
def test_hexagon_exhaustive(q):
    G = FGAbelianGroup.cyclic(q)
    C = obstruction_complex(3, cell_system(boundary_cube(3), G))
    T = identity_transports(3, G)
    for vals in itertools.product(range(q), repeat=6):
        F = classes(3, vals)
        assert decide_vanishing(C, assemble_cocycle(C, F)).vanishes == total_class_vanishes(F, T)


def test_hexagon_class_is_total():
    # over Z the class coordinate is the signed sum itself
    C = obstruction_complex(3, cell_system(boundary_cube(3)))
    T = identity_transports(3, Z)
    rng = random.Random(5)
    for _ in range(50):
        F = classes(3, [rng.randint(-3, 3) for _ in range(6)])
        r = decide_vanishing(C, assemble_cocycle(C, F))
        assert r.class_coordinates == (total_class(F, T), ())


def test_transports_from_constant_system():
    T = transports_from_system(3, constant_system(cube_poset(3), Z))
    assert T.signs == default_orientation(3)
    assert all(t.matrix == IntMatrix.identity(1) for t in T.maps.values())


def test_bad_signs_and_missing_facets():
    with pytest.raises(ObstructionInputError, match="x1=0"):
        TransportData(Z, {facets(2)[0]: GroupHom.identity(Z)}, {facets(2)[0]: 2})
    with pytest.raises(ObstructionInputError, match="x3=1"):
        FacetClasses(3, {facet_id(f): (0,) for f in facets(3)[:-1]})


def test_wrong_width_names_facet():
    C = obstruction_complex(3, cell_system(boundary_cube(3)))
    F = FacetClasses(3, {facet_id(f): (0, 0) if facet_id(f) == "x2=1" else (0,)
                         for f in facets(3)})
    with pytest.raises(ObstructionInputError, match="x2=1"):
        assemble_cocycle(C, F)


def test_round_trip_through_cochain():
    C = obstruction_complex(3, cell_system(boundary_cube(3)))
    F = classes(3, [1, -2, 3, 0, 5, 7])
    assert facet_classes_of(C, 3, assemble_cocycle(C, F)) == F


def test_toda_fixture():
    fx = toda_fixture()
    r = lifting_obstruction(3, fx.system, fx.classes)
    assert r.verdict == "LIFTS" and total_class(fx.classes, fx.transports) == (0,)
    fx = toda_fixture(gf=1)
    r = lifting_obstruction(3, fx.system, fx.classes)
    assert r.verdict == "OBSTRUCTED"
    assert r.class_coordinates[0] == total_class(fx.classes, fx.transports) != (0,)
    # opposite nullhomotopies on the two faces cancel when their signs agree
    signs = default_orientation(3)
    x20, x11 = parse_facet_id(3, "x2=0"), parse_facet_id(3, "x1=1")
    fx = toda_fixture(gf=1, hg=-signs[x20] * signs[x11])
    assert lifting_obstruction(3, fx.system, fx.classes).verdict == "LIFTS"
    with pytest.raises(ObstructionInputError):
        toda_fixture(others={"x2=0": 1})


@pytest.mark.parametrize("abc", [(0, 0, 0), (1, 2, 3), (-4, 0, 9)])
def test_samelson_fixture_lifts(abc):
    fx = samelson_fixture(*abc)
    assert lifting_obstruction(3, fx.system, fx.classes).verdict == "LIFTS"
    assert total_class_vanishes(fx.classes, fx.transports)
