"""Finite cubical complexes inside an ambient cube and their limit complexes.

A cell is a face of ``[1]^N`` written as ``(base, axes)``: ``axes`` is the set
of free coordinates (0-based) and ``base`` has zeros there. The interval
spanned by a cell runs from its base to the vertex with all free coordinates
raised to 1, so a face-closed complex has exactly one interval per cell.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product

from .abgrp import (CochainComplex, FGAbelianGroup, GroupHom, IntMatrix, Summand,
                    direct_sum, integer_kernel, lattice_basis, solve_integer)
from .aq_complex import build_cube_cphi, build_dphi
from .cube_cat import cube_poset
from .local_system import CoefficientSystem, constant_system, fmt_interval, restrict
from .posets import FinitePoset, GradedPoset, check_graded


@dataclass(frozen=True)
class Cell:
    base: tuple[int, ...]
    axes: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "axes", frozenset(self.axes))
        if any(v not in (0, 1) for v in self.base):
            raise ValueError(f"cell base {self.base} is not a cube vertex")
        if any(not 0 <= a < len(self.base) for a in self.axes):
            raise ValueError(f"cell axes {sorted(self.axes)} outside 0..{len(self.base) - 1}")
        if any(self.base[a] for a in self.axes):
            object.__setattr__(self, "base", tuple(
                0 if i in self.axes else v for i, v in enumerate(self.base)))

    @classmethod
    def parse(cls, code: str) -> Cell:
        """``"0*1"`` is the edge ``{0} x [1] x {1}``."""
        if any(ch not in "01*" for ch in code):
            raise ValueError(f"cell code {code!r} may only use 0, 1 and *")
        return cls(tuple(0 if ch == "*" else int(ch) for ch in code),
                   frozenset(i for i, ch in enumerate(code) if ch == "*"))

    @property
    def code(self) -> str:
        return "".join("*" if i in self.axes else str(v) for i, v in enumerate(self.base))

    def __str__(self) -> str:
        return self.code

    @property
    def dim(self) -> int:
        return len(self.axes)

    @property
    def ambient_dim(self) -> int:
        return len(self.base)

    @property
    def sorted_axes(self) -> list[int]:
        return sorted(self.axes)

    @property
    def low(self) -> tuple[int, ...]:
        return self.base

    @property
    def high(self) -> tuple[int, ...]:
        return tuple(1 if i in self.axes else v for i, v in enumerate(self.base))

    @property
    def interval(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.low, self.high)

    def embed(self, x) -> tuple[int, ...]:
        """Image of a vertex of ``[1]^dim`` under the face inclusion (axis order kept)."""
        out = list(self.base)
        for a, v in zip(self.sorted_axes, x):
            out[a] = v
        return tuple(out)

    def vertices(self) -> list[tuple[int, ...]]:
        return [self.embed(x) for x in product((0, 1), repeat=self.dim)]

    def facets(self) -> list[Cell]:
        """Codimension-one faces."""
        out = []
        for a in self.sorted_axes:
            for eps in (0, 1):
                b = list(self.base)
                b[a] = eps
                out.append(Cell(tuple(b), self.axes - {a}))
        return out

    def faces(self) -> list[Cell]:
        """All faces, the cell included."""
        out = []
        ax = self.sorted_axes
        for k in range(len(ax) + 1):
            for fixed in combinations(ax, k):
                for vals in product((0, 1), repeat=k):
                    b = list(self.base)
                    for a, v in zip(fixed, vals):
                        b[a] = v
                    out.append(Cell(tuple(b), self.axes - set(fixed)))
        return out

    def contains(self, other: Cell) -> bool:
        if not other.axes <= self.axes:
            return False
        return all(other.base[i] == self.base[i] for i in range(len(self.base)) if i not in self.axes)


def cell_from_interval(low, high) -> Cell:
    axes = frozenset(i for i, (a, b) in enumerate(zip(low, high)) if a != b)
    if any(a > b for a, b in zip(low, high)):
        raise ValueError(f"{low} is not below {high}")
    return Cell(tuple(low), axes)


def _cell_key(c: Cell):
    return (c.low, c.high)


class CubicalComplex:
    """A set of faces of ``[1]^N``; see :func:`validate_complex` for closure."""

    def __init__(self, ambient_dim: int, cells):
        self.ambient_dim = ambient_dim
        cs = {c if isinstance(c, Cell) else Cell.parse(c) for c in cells}
        for c in cs:
            if c.ambient_dim != ambient_dim:
                raise ValueError(f"cell {c} does not live in [1]^{ambient_dim}")
        # vertex-index (lexicographic) order on intervals, matching cube_poset
        self.cells: tuple[Cell, ...] = tuple(sorted(cs, key=lambda c: (_vidx(c.low), _vidx(c.high))))

    @classmethod
    def closure(cls, ambient_dim: int, cells) -> CubicalComplex:
        cs = [c if isinstance(c, Cell) else Cell.parse(c) for c in cells]
        return cls(ambient_dim, {f for c in cs for f in c.faces()})

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, c) -> bool:
        return (c if isinstance(c, Cell) else Cell.parse(c)) in self._set

    def __repr__(self) -> str:
        return f"CubicalComplex(N={self.ambient_dim}, {len(self)} cells)"

    @property
    def _set(self) -> frozenset:
        s = getattr(self, "_cellset", None)
        if s is None:
            s = frozenset(self.cells)
            self._cellset = s
        return s

    @property
    def dim(self) -> int:
        return max((c.dim for c in self.cells), default=-1)

    def cells_of_dim(self, k: int) -> list[Cell]:
        return [c for c in self.cells if c.dim == k]

    def cell_counts(self) -> list[int]:
        return [len(self.cells_of_dim(k)) for k in range(self.dim + 1)]

    def maximal_cells(self) -> list[Cell]:
        return [c for c in self.cells
                if not any(d != c and d.contains(c) for d in self.cells)]

    def intervals(self) -> list[tuple]:
        return [c.interval for c in self.cells]

    def vertex_set(self) -> list[tuple[int, ...]]:
        return sorted({v for c in self.cells for v in c.vertices()}, key=_vidx)


def _vidx(v) -> int:
    i = 0
    for b in v:
        i = 2 * i + b
    return i


@dataclass
class ComplexReport:
    """Result of :func:`validate_complex`.

    ``missing`` lists absent faces (each once); ``missing_from`` says which
    cell needs them. ``shared_intervals`` lists intervals lying in two or more
    maximal cells, for auditing coefficient data on overlaps.
    """

    missing: list[Cell]
    missing_from: dict
    shared_intervals: list[tuple[Cell, list[Cell]]]

    @property
    def ok(self) -> bool:
        return not self.missing

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        lines = [f"{len(self.missing)} missing faces:"]
        for f in self.missing:
            lines.append(f"  {f} (face of {', '.join(map(str, self.missing_from[f]))})")
        return "\n".join(lines)


def validate_complex(K: CubicalComplex) -> ComplexReport:
    missing_from: dict[Cell, list[Cell]] = {}
    for c in K.cells:
        for f in c.faces():
            if f not in K._set:
                missing_from.setdefault(f, []).append(c)
    missing = sorted(missing_from, key=lambda c: (-c.dim, _vidx(c.low), _vidx(c.high)))
    maximal = K.maximal_cells()
    shared = []
    for c in K.cells:
        owners = [m for m in maximal if m.contains(c)]
        if len(owners) > 1:
            shared.append((c, owners))
    return ComplexReport(missing, missing_from, shared)


def full_cube(n: int) -> CubicalComplex:
    return CubicalComplex.closure(n, [Cell((0,) * n, frozenset(range(n)))])


def boundary_cube(n: int) -> CubicalComplex:
    """All proper faces of ``[1]^n``."""
    if n < 1:
        raise ValueError("the boundary needs n >= 1")
    top = Cell((0,) * n, frozenset(range(n)))
    return CubicalComplex(n, [f for f in top.faces() if f != top])


def random_subcomplex(n: int, rng: random.Random, max_cells: int = 50,
                      generators: int | None = None) -> CubicalComplex:
    """Face closure of a few random faces of ``[1]^n``, capped at ``max_cells`` cells."""
    top = Cell((0,) * n, frozenset(range(n)))
    pool = top.faces()
    k = generators or rng.randint(1, 4)
    while True:
        K = CubicalComplex.closure(n, rng.sample(pool, k))
        if len(K) <= max_cells:
            return K
        k = max(1, k - 1)


def nd_cube_poset(K: CubicalComplex) -> GradedPoset:
    """Cells of ``K`` ordered by face containment."""
    return check_graded(FinitePoset(K.cells, leq=lambda a, b: b.contains(a)))


def cell_system(K: CubicalComplex, group: FGAbelianGroup | None = None) -> CoefficientSystem:
    """Constant system on the cell intervals of ``K`` (base ``cube_poset(N)``)."""
    G = FGAbelianGroup.free(1) if group is None else group
    return constant_system(cube_poset(K.ambient_dim), G, domain=K.intervals())


def system_on(K: CubicalComplex, S: CoefficientSystem) -> CoefficientSystem:
    """Cut ``S`` down to the cell intervals of ``K``; raises naming a missing interval."""
    P = cube_poset(K.ambient_dim)
    if S.base.elements != P.elements:
        raise ValueError(f"coefficient system must live on the vertex poset of [1]^{K.ambient_dim}")
    keys = set(K.intervals())
    for k in K.intervals():
        if k not in S.groups:
            raise ValueError(f"coefficient system has no group on cell interval {fmt_interval(k)} "
                             f"(cell {cell_from_interval(*k)})")
    groups = {k: S.groups[k] for k in K.intervals()}
    maps = {(a, b): h for (a, b), h in S.maps.items() if a in keys and b in keys}
    return CoefficientSystem(P, groups, maps)


def build_limit_complex(K: CubicalComplex, S: CoefficientSystem, n: int) -> CochainComplex:
    """One summand per cell interval, coboundaries along covers inside cells,
    length-``k`` term in degree ``k - n``."""
    SK = system_on(K, S)
    return build_dphi(SK.base, SK, offset=-n, signs="koszul")


def cell_complex(c: Cell, S: CoefficientSystem, n: int) -> CochainComplex:
    """The cube complex of one cell, pulled back along its face inclusion."""
    Sc = restrict(S, cube_poset(c.dim), c.embed)
    return build_cube_cphi(c.dim, Sc, n, signs="koszul")


def equalizer_oracle(K: CubicalComplex, S: CoefficientSystem, n: int) -> CochainComplex:
    """The limit over the face diagram of ``K``, computed literally.

    Takes the product of the cube complexes of all cells and cuts out, degree
    by degree, the tuples whose face projections agree. Intended for small
    complexes only (the product grows like ``3^dim`` per cell).
    """
    SK = system_on(K, S)
    cells = list(K.cells)
    comps = {c: cell_complex(c, SK, n) for c in cells}
    pairs = [(c, f) for c in cells for f in c.facets()]
    top = max((c.dim for c in cells), default=0)
    degrees = range(-n, top - n + 1)

    def ambient_label(c: Cell, I):
        return (c.embed(I.low), c.embed(I.high))

    lattices = {}
    for deg in degrees:
        prod_groups = [comps[c].group(deg) for c in cells]
        G = direct_sum(prod_groups)
        starts = _starts(prod_groups)
        face_groups = [comps[f].group(deg) for _, f in pairs]
        H = direct_sum(face_groups)
        hstarts = _starts(face_groups)
        cidx = {c: i for i, c in enumerate(cells)}
        E = [[0] * G.generators for _ in range(H.generators)]
        for p, (c, f) in enumerate(pairs):
            r0 = hstarts[p]
            # +projection of the c-component
            fblocks = {ambient_label(f, s.label): rng for s, rng in
                       zip(comps[f].summands(deg), comps[f].block_offsets(deg).values())}
            c0 = starts[cidx[c]]
            for s, (a, b) in zip(comps[c].summands(deg), comps[c].block_offsets(deg).values()):
                lab = ambient_label(c, s.label)
                if lab in fblocks:
                    fa, _ = fblocks[lab]
                    for i in range(b - a):
                        E[r0 + fa + i][c0 + a + i] += 1
            # -identity on the f-component
            f0 = starts[cidx[f]]
            for i in range(comps[f].group(deg).generators):
                E[r0 + i][f0 + i] -= 1
        Em = IntMatrix(E, H.generators, G.generators)
        ker = integer_kernel(IntMatrix.hstack([Em, H.relations], rows=H.generators))
        Z = ker.submatrix(range(G.generators), range(ker.cols))
        B = lattice_basis(Z)
        rel = _coords(B, G.relations)
        lattices[deg] = (G, B, FGAbelianGroup(B.cols, rel))

    terms, diffs = [], []
    for deg in degrees:
        G, B, L = lattices[deg]
        terms.append((Summand(("limit", deg), L),))
        if deg + 1 in lattices:
            D = IntMatrix.block_diagonal([comps[c].differential(deg).matrix for c in cells])
            G1, B1, L1 = lattices[deg + 1]
            Y = _coords(B1, D @ B)
            diffs.append(GroupHom(L, L1, Y))
    return CochainComplex(-n, tuple(terms), tuple(diffs))


def _starts(groups) -> list[int]:
    out, pos = [], 0
    for g in groups:
        out.append(pos)
        pos += g.generators
    return out


def _coords(B: IntMatrix, cols: IntMatrix) -> IntMatrix:
    """Coordinates of each column of ``cols`` in the lattice basis ``B``."""
    ys = []
    for col in cols.columns():
        y = solve_integer(B, col)
        if y is None:
            raise ArithmeticError("vector outside the equalizer lattice")
        ys.append(y)
    if not ys:
        return IntMatrix.zeros(B.cols, 0)
    return IntMatrix([list(r) for r in zip(*ys)], B.cols, len(ys))
