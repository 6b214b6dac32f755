"""Lifting obstruction for the boundary of a cube.

For ``∂[1]^n`` with coefficients in degree ``n - 2`` the facets of the cube
sit in degree 1 of the limit complex. Facet classes assemble into a degree-1
cocycle; it is a coboundary exactly when the lift exists. The same data can
be pushed into the group of the long interval ``[0...0, 1...1]`` and summed
with signs, which for ``n = 3`` is the hexagon assembly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .abgrp import (CochainComplex, FGAbelianGroup, GroupHom, cohomology_presentation,
                    write_in_image)
from .aq_complex import koszul_sign
from .cubical_complex import Cell, CubicalComplex, boundary_cube, build_limit_complex, cell_system
from .local_system import CoefficientSystem, fmt_interval
from .posets import Interval


class ObstructionInputError(ValueError):
    pass


class UnsupportedCaseError(ValueError):
    """The requested obstruction has nonabelian values."""


def facets(n: int) -> list[Cell]:
    """The ``2n`` facets of ``[1]^n``: axis ascending, the 0-side before the 1-side."""
    out = []
    for j in range(n):
        for eps in (0, 1):
            base = tuple(eps if i == j else 0 for i in range(n))
            out.append(Cell(base, frozenset(range(n)) - {j}))
    return out


def facet_id(f: Cell) -> str:
    """``"x2=1"`` for the facet where coordinate 2 (1-based) is fixed at 1."""
    j = next(i for i in range(f.ambient_dim) if i not in f.axes)
    return f"x{j + 1}={f.base[j]}"


def parse_facet_id(n: int, ident: str) -> Cell:
    for f in facets(n):
        if facet_id(f) == ident:
            return f
    raise ObstructionInputError(f"unknown facet {ident!r} for the {n}-cube")


def default_orientation(n: int) -> dict[Cell, int]:
    """Sign of each facet inside the top cell, matching the complex's coboundary.

    Opposite facets get opposite signs and each sign occurs ``n`` times.
    """
    top = Interval((0,) * n, (1,) * n)
    return {f: koszul_sign(Interval(f.low, f.high), top) for f in facets(n)}


# counterclockwise around the hexagon of the 3-cube, starting at the top edge
HEXAGON_FACETS = ("x3=0", "x2=1", "x3=1", "x1=0", "x2=0", "x1=1")


@dataclass(frozen=True)
class FacetClasses:
    """One element per facet, written in the generators of that facet's long-interval group."""

    n: int
    classes: Mapping[Cell, tuple[int, ...]]

    def __post_init__(self):
        cl = {}
        for f, v in self.classes.items():
            f = f if isinstance(f, Cell) else parse_facet_id(self.n, f)
            cl[f] = tuple(int(x) for x in v)
        missing = [facet_id(f) for f in facets(self.n) if f not in cl]
        if missing:
            raise ObstructionInputError(f"no facet class for {', '.join(missing)}")
        extra = [str(f) for f in cl if f not in facets(self.n)]
        if extra:
            raise ObstructionInputError(f"{', '.join(extra)} are not facets of the {self.n}-cube")
        object.__setattr__(self, "classes", cl)

    def __getitem__(self, f) -> tuple[int, ...]:
        return self.classes[f if isinstance(f, Cell) else parse_facet_id(self.n, f)]

    def __add__(self, other: FacetClasses) -> FacetClasses:
        return FacetClasses(self.n, {f: tuple(a + b for a, b in zip(v, other[f]))
                                     for f, v in self.classes.items()})

    @classmethod
    def zero(cls, n: int, S: CoefficientSystem) -> FacetClasses:
        return cls(n, {f: (0,) * S.group(f.interval).generators for f in facets(n)})


@dataclass(frozen=True)
class TransportData:
    """Maps from each facet group into the long-interval group, with signs."""

    target: FGAbelianGroup
    maps: Mapping[Cell, GroupHom]
    signs: Mapping[Cell, int]

    def __post_init__(self):
        if set(self.maps) != set(self.signs):
            raise ObstructionInputError("transports and signs must name the same facets")
        for f, s in self.signs.items():
            if s not in (1, -1):
                raise ObstructionInputError(f"sign of {facet_id(f)} must be +1 or -1, got {s}")
        for f, t in self.maps.items():
            if t.target.generators != self.target.generators:
                raise ObstructionInputError(f"transport of {facet_id(f)} does not land in the target group")

    def flipped(self) -> TransportData:
        return TransportData(self.target, self.maps, {f: -s for f, s in self.signs.items()})


def identity_transports(n: int, G: FGAbelianGroup) -> TransportData:
    ident = GroupHom.identity(G)
    return TransportData(G, {f: ident for f in facets(n)}, default_orientation(n))


def transports_from_system(n: int, S: CoefficientSystem) -> TransportData:
    """Transports read off a system that also covers the whole ``n``-cube."""
    top = ((0,) * n, (1,) * n)
    M = S.group(top)
    return TransportData(M, {f: S.map(f.interval, top) for f in facets(n)}, default_orientation(n))


@dataclass(frozen=True)
class ObstructionResult:
    """Verdict on one obstruction cocycle.

    ``certificate`` is a degree-0 cochain with ``d(certificate) = cocycle``
    when the obstruction vanishes. ``cohomology`` is the canonical form of
    ``H^1`` and ``class_coordinates`` the cocycle's (free, torsion) coordinates
    in it.
    """

    cocycle: tuple[int, ...]
    vanishes: bool
    certificate: tuple[int, ...] | None
    cohomology: tuple[int, tuple[int, ...]]
    class_coordinates: tuple[tuple[int, ...], tuple[int, ...]]

    @property
    def verdict(self) -> str:
        return "LIFTS" if self.vanishes else "OBSTRUCTED"


def obstruction_complex(n: int, S: CoefficientSystem, linear: bool = False) -> CochainComplex:
    """``C*(∂[1]^n)`` with coefficients in degree ``n - 2`` (facets in degree 1)."""
    if n < 2:
        raise ObstructionInputError("the boundary obstruction needs a cube of dimension >= 2")
    if n == 2 and not linear:
        raise UnsupportedCaseError(
            "for the 2-cube the obstruction lives in a fundamental group, which need not be "
            "abelian; declare the target linear to use abelian coefficients")
    return build_limit_complex(boundary_cube(n), S, n - 2)


def assemble_cocycle(C: CochainComplex, F: FacetClasses, degree: int = 1) -> tuple[int, ...]:
    """Degree-1 cochain whose component on each facet interval is that facet's class."""
    by_label = {}
    for s in C.summands(degree):
        by_label[(s.label.low, s.label.high)] = s
    out: list[int] = []
    fac = {f.interval: f for f in facets(F.n)}
    for key, s in by_label.items():
        if key in fac:
            f = fac[key]
            v = F[f]
            if len(v) != s.group.generators:
                raise ObstructionInputError(
                    f"class on facet {facet_id(f)} has {len(v)} entries but the group on "
                    f"{fmt_interval(key)} has {s.group.generators} generators")
            out.extend(v)
        else:
            out.extend([0] * s.group.generators)
    for key, f in fac.items():
        if key not in by_label:
            raise ObstructionInputError(f"facet {facet_id(f)} is not a summand in degree {degree}")
    return tuple(out)


def decide_vanishing(C: CochainComplex, cocycle: Sequence[int], degree: int = 1) -> ObstructionResult:
    """Decide exactly whether ``cocycle`` is a coboundary."""
    cocycle = tuple(cocycle)
    G = C.group(degree)
    if len(cocycle) != G.generators:
        raise ObstructionInputError(
            f"cochain has {len(cocycle)} entries; degree {degree} has {G.generators} generators")
    d_out = C.differential(degree)
    if not d_out.target.contains_relation(d_out(cocycle)):
        raise ObstructionInputError("cochain is not closed: the facet data are inconsistent")
    pres = cohomology_presentation(C, degree)
    cert = write_in_image(C.differential(degree - 1), cocycle)
    return ObstructionResult(cocycle, cert is not None, cert, pres.canonical(),
                             pres.coordinates(cocycle))


def lifting_obstruction(n: int, S: CoefficientSystem, F: FacetClasses,
                        linear: bool = False) -> ObstructionResult:
    C = obstruction_complex(n, S, linear)
    return decide_vanishing(C, assemble_cocycle(C, F))


def total_class(F: FacetClasses, T: TransportData) -> tuple[int, ...]:
    """Signed sum of the transported facet classes, as a vector in ``T.target``."""
    total = [0] * T.target.generators
    for f in facets(F.n):
        if f not in T.maps:
            raise ObstructionInputError(f"no transport for facet {facet_id(f)}")
        t = T.maps[f]
        v = F[f]
        if len(v) != t.source.generators:
            raise ObstructionInputError(
                f"transport of {facet_id(f)} expects {t.source.generators} entries, got {len(v)}")
        tv = t(v)
        s = T.signs[f]
        total = [a + s * b for a, b in zip(total, tv)]
    return tuple(total)


def total_class_vanishes(F: FacetClasses, T: TransportData) -> bool:
    return T.target.contains_relation(total_class(F, T))


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Fixture:
    complex: CubicalComplex
    system: CoefficientSystem
    classes: FacetClasses
    transports: TransportData
    description: str = field(default="", compare=False)


def toda_fixture(gf: int = 0, hg: int = 0, others: Mapping[str, int] | None = None) -> Fixture:
    """Boundary of the 3-cube carrying a secondary Toda bracket.

    Vertices: ``X = 000``, ``Y = 100``, ``Z = 101``, ``W = 111``; ``f: X -> Y``
    runs along axis 1, ``g: Y -> Z`` along axis 3 and ``h: Z -> W`` along axis 2.
    All other vertices are the zero object. Every interval carries ``Z`` (one
    generator of ``π_1`` of the long mapping space) with identity maps. The
    facet ``x2=0`` contains ``g∘f`` and carries the class ``gf`` of its
    nullhomotopy; ``x1=1`` contains ``h∘g`` and carries ``hg``. The four
    remaining facets factor through a zero object and default to 0.
    """
    K = boundary_cube(3)
    Z = FGAbelianGroup.free(1)
    S = cell_system(K, Z)
    classes = {f: 0 for f in ("x1=0", "x1=1", "x2=0", "x2=1", "x3=0", "x3=1")}
    classes["x2=0"] = gf
    classes["x1=1"] = hg
    for k, v in (others or {}).items():
        if k in ("x2=0", "x1=1"):
            raise ObstructionInputError(f"{k} is set through gf/hg")
        classes[k] = v
    F = FacetClasses(3, {k: (v,) for k, v in classes.items()})
    return Fixture(K, S, F, identity_transports(3, Z), "secondary Toda bracket <h, g, f>")


def samelson_fixture(a: int = 0, b: int = 0, c: int = 0) -> Fixture:
    """Boundary of the 3-cube of commutators of three loops.

    Parallel facets carry the same class (``a`` on the x1 pair, ``b`` on x2,
    ``c`` on x3) with constant ``Z`` coefficients and identity transports.
    """
    K = boundary_cube(3)
    Z = FGAbelianGroup.free(1)
    S = cell_system(K, Z)
    vals = {"x1": a, "x2": b, "x3": c}
    F = FacetClasses(3, {f"{x}={e}": (v,) for x, v in vals.items() for e in (0, 1)})
    return Fixture(K, S, F, identity_transports(3, Z), "secondary Samelson product cube")
