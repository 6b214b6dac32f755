"""Random inputs shared by the test modules."""

from __future__ import annotations

import random
from math import gcd

from aqcube.abgrp import FGAbelianGroup, GroupHom, IntMatrix
from aqcube.local_system import CoefficientSystem
from aqcube.posets import GradedPoset, chain_poset, product_poset
from aqcube.cube_cat import cube_poset


def random_group(rng: random.Random, max_gens: int = 3) -> FGAbelianGroup:
    while True:
        rank = rng.randint(0, 3)
        torsion = [rng.randint(2, 12) for _ in range(rng.randint(0, 2))]
        if 1 <= rank + len(torsion) <= max_gens:
            return FGAbelianGroup.from_invariants(rank, torsion)


def random_endomorphism(G: FGAbelianGroup, rng: random.Random, bound: int = 2) -> IntMatrix:
    """A well-defined endomorphism of a group built by ``from_invariants``.

    Torsion generators come first, so the matrix is block upper triangular:
    free generators never map into torsion-to-free positions.
    """
    g = G.generators
    orders = [G.relations[i, i] if i < G.relations.cols else 0 for i in range(g)]
    M = [[0] * g for _ in range(g)]
    for i in range(g):
        for j in range(g):
            ti, tj = orders[i], orders[j]
            if ti == 0 and tj > 0:
                continue  # torsion cannot hit a free generator
            step = ti // gcd(ti, tj) if ti and tj else 1
            M[i][j] = step * rng.randint(-bound, bound)
    return IntMatrix(M, g, g)


def _poly(A: IntMatrix, coeffs) -> IntMatrix:
    out = IntMatrix.zeros(A.rows, A.cols)
    P = IntMatrix.identity(A.rows)
    for c in coeffs:
        out = out + P.scale(c)
        P = P @ A
    return out


def random_system(P: GradedPoset, rng: random.Random, domain=None,
                  G: FGAbelianGroup | None = None, per_axis: bool | None = None) -> CoefficientSystem:
    """A valid system with one group everywhere and maps drawn from polynomials in
    one endomorphism, so every square commutes.

    On cubes written in coordinates the polynomial may depend on the axis of
    the extension; elsewhere target extensions share one polynomial and source
    extensions another.
    """
    G = G or random_group(rng)
    A = random_endomorphism(G, rng)
    coords = isinstance(P.elements[0], tuple) and all(v in (0, 1) for v in P.elements[0])
    per_axis = coords if per_axis is None else per_axis
    nax = len(P.elements[0]) if coords else 1
    polys = {}
    for kind in ("t", "s"):
        for j in range(nax if per_axis else 1):
            coeffs = [rng.randint(-2, 2) for _ in range(rng.randint(1, 2))]
            polys[(kind, j)] = GroupHom(G, G, _poly(A, coeffs))

    def cover_map(I, J):
        kind = "t" if I.low == J.low else "s"
        if not per_axis:
            return polys[(kind, 0)]
        a, b = (I.high, J.high) if kind == "t" else (I.low, J.low)
        j = next(i for i, (x, y) in enumerate(zip(a, b)) if x != y)
        return polys[(kind, j)]

    return CoefficientSystem.from_functions(P, lambda I: G, cover_map, domain)


def random_graded_poset(rng: random.Random, max_elements: int = 30) -> GradedPoset:
    while True:
        kind = rng.choice(["chain", "cube", "product"])
        if kind == "chain":
            return chain_poset(rng.randint(0, max_elements - 1))
        if kind == "cube":
            n = rng.randint(0, 4)
            if 2 ** n <= max_elements:
                return cube_poset(n)
        else:
            sizes = [rng.randint(1, 3) for _ in range(rng.randint(2, 3))]
            total = 1
            for s in sizes:
                total *= s + 1
            if total <= max_elements:
                return product_poset(*sizes)


def split_cochain(C, degree, v):
    """Cut a cochain into its per-interval pieces, keyed by ``(low, high)``."""
    out, pos = {}, 0
    for s in C.summands(degree):
        k = s.group.generators
        out[(s.label.low, s.label.high)] = tuple(v[pos:pos + k])
        pos += k
    return out


def facet_classes_of(C, n, v):
    """Read a degree-1 cochain on a cube boundary back as facet classes."""
    from aqcube.obstruction import FacetClasses, facets
    pieces = split_cochain(C, 1, v)
    return FacetClasses(n, {f: pieces[f.interval] for f in facets(n)})


def coboundary_instance(C, n, rng, bound=3):
    """Facet classes given by ``d`` of a random degree-0 cochain."""
    c = [rng.randint(-bound, bound) for _ in range(C.group(0).generators)]
    return c, facet_classes_of(C, n, C.differential(0)(c))
