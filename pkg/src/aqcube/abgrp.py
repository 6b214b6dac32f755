"""Exact integer linear algebra: matrices, Smith normal form, finitely
generated abelian groups and the cohomology of integer cochain complexes.

Everything here works over Python ints; there is no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence


class MalformedComplexError(ValueError):
    """A cochain complex whose consecutive differentials do not compose to zero."""


class DimensionError(ValueError):
    """Matrix or vector dimensions do not fit together."""


# ---------------------------------------------------------------------------
# IntMatrix
# ---------------------------------------------------------------------------

class IntMatrix:
    """Immutable dense integer matrix.

    Entries are stored row-major as a tuple of tuples of Python ints. Shapes
    with zero rows or zero columns are allowed and keep their other dimension.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable[int]] = (), rows: int | None = None,
                 cols: int | None = None):
        data = tuple(tuple(int(x) for x in row) for row in data)
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows:
            if data or rows and cols:
                raise DimensionError(f"expected {rows} rows, got {len(data)}")
            data = tuple(() for _ in range(rows))
        for r in data:
            if len(r) != cols:
                raise DimensionError(f"ragged matrix: row of length {len(r)}, expected {cols}")
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None,
                 cols: int | None = None) -> IntMatrix:
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        m = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            m[i][i] = d
        return cls(m, rows, cols)

    @classmethod
    def column(cls, vec: Sequence[int]) -> IntMatrix:
        return cls([[v] for v in vec], len(vec), 1)

    @classmethod
    def hstack(cls, mats: Sequence[IntMatrix], rows: int | None = None) -> IntMatrix:
        if not mats:
            return cls.zeros(rows or 0, 0)
        r = mats[0].rows
        if any(m.rows != r for m in mats):
            raise DimensionError("hstack: row counts differ")
        data = [sum((m._data[i] for m in mats), ()) for i in range(r)]
        return cls(data, r, sum(m.cols for m in mats))

    @classmethod
    def vstack(cls, mats: Sequence[IntMatrix], cols: int | None = None) -> IntMatrix:
        if not mats:
            return cls.zeros(0, cols or 0)
        c = mats[0].cols
        if any(m.cols != c for m in mats):
            raise DimensionError("vstack: column counts differ")
        return cls([row for m in mats for row in m._data], sum(m.rows for m in mats), c)

    @classmethod
    def block_diagonal(cls, mats: Sequence[IntMatrix]) -> IntMatrix:
        rows = sum(m.rows for m in mats)
        cols = sum(m.cols for m in mats)
        out = [[0] * cols for _ in range(rows)]
        r0 = c0 = 0
        for m in mats:
            for i in range(m.rows):
                out[r0 + i][c0:c0 + m.cols] = m._data[i]
            r0 += m.rows
            c0 += m.cols
        return cls(out, rows, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._data)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.col(j) for j in range(self.cols)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._data[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r}, rows={self.rows}, cols={self.cols})"

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        data = [[sum(a * b for a, b in zip(r, c)) for c in ocols] for r in self._data]
        return IntMatrix(data, self.rows, other.cols)

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
                         self.rows, self.cols)

    def __neg__(self) -> IntMatrix:
        return self.scale(-1)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + (-other)

    def scale(self, k: int) -> IntMatrix:
        return IntMatrix([[k * a for a in r] for r in self._data], self.rows, self.cols)

    def transpose(self) -> IntMatrix:
        return IntMatrix([self.col(j) for j in range(self.cols)], self.cols, self.rows)

    @property
    def T(self) -> IntMatrix:
        return self.transpose()

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise DimensionError(f"vector of length {len(vec)} for matrix with {self.cols} columns")
        return tuple(sum(a * v for a, v in zip(r, vec)) for r in self._data)

    def is_zero(self) -> bool:
        return all(a == 0 for r in self._data for a in r)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> IntMatrix:
        return IntMatrix([[self._data[i][j] for j in cols] for i in rows], len(rows), len(cols))

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise DimensionError("determinant of a non-square matrix")
        n = self.rows
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular; inverses kept alongside."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix
    V_inv: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i, i] for i in range(min(self.D.rows, self.D.cols))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


@lru_cache(maxsize=1024)
def smith_decomposition(A: IntMatrix) -> SmithDecomposition:
    """Smith normal form with transforms and their inverses.

    Pivots are chosen with minimal absolute value among the remaining
    entries, which keeps coefficient growth small on the desk-scale matrices
    this package produces. Results are memoized; matrices are immutable.
    """
    m, n = A.shape
    a = A.tolist()
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    Ui = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    Vi = [[int(i == j) for j in range(n)] for i in range(n)]

    # Row op "row_i += k*row_j" acts as U <- E U and U_inv <- U_inv E^-1.
    def row_add(i, j, k):
        a[i] = [x + k * y for x, y in zip(a[i], a[j])]
        U[i] = [x + k * y for x, y in zip(U[i], U[j])]
        for r in Ui:
            r[j] -= k * r[i]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]
        for r in Ui:
            r[i], r[j] = r[j], r[i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        U[i] = [-x for x in U[i]]
        for r in Ui:
            r[i] = -r[i]

    # Column op "col_i += k*col_j" acts as V <- V E and V_inv <- E^-1 V_inv.
    def col_add(i, j, k):
        for r in a:
            r[i] += k * r[j]
        for r in V:
            r[i] += k * r[j]
        Vi[j] = [x - k * y for x, y in zip(Vi[j], Vi[i])]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    t = 0
    while t < min(m, n):
        pivot, best = None, 0
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                x = row[j]
                if x and (pivot is None or abs(x) < best):
                    pivot, best = (i, j), abs(x)
                    if best == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        row_swap(t, pivot[0])
        col_swap(t, pivot[1])
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    row_add(i, t, -(a[i][t] // p))
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    col_add(j, t, -(a[t][j] // p))
                    if a[t][j]:
                        done = False
            if done:
                if abs(p) == 1:
                    break
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                # enforce divisibility: pull the offending row into row t
                row_add(t, bad[0], 1)
                continue
            # a remainder survived: move the smallest entry of row/col t to the pivot
            best, where = abs(p), None
            for i in range(t + 1, m):
                if a[i][t] and abs(a[i][t]) < best:
                    best, where = abs(a[i][t]), ("r", i)
            for j in range(t + 1, n):
                if a[t][j] and abs(a[t][j]) < best:
                    best, where = abs(a[t][j]), ("c", j)
            if where is not None:
                if where[0] == "r":
                    row_swap(t, where[1])
                else:
                    col_swap(t, where[1])
        if a[t][t] < 0:
            row_neg(t)
        t += 1

    return SmithDecomposition(
        U=IntMatrix(U, m, m), D=IntMatrix(a, m, n), V=IntMatrix(V, n, n),
        U_inv=IntMatrix(Ui, m, m), V_inv=IntMatrix(Vi, n, n),
    )


def snf(A: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``U @ A @ V == D`` in Smith normal form.

    >>> U, D, V = snf(IntMatrix([[2, 4], [6, 8]]))
    >>> D.tolist()
    [[2, 0], [0, 4]]
    """
    s = smith_decomposition(A)
    return s.U, s.D, s.V


def is_smith_form(D: IntMatrix) -> bool:
    diag = []
    for i in range(D.rows):
        for j in range(D.cols):
            if i != j and D[i, j]:
                return False
    diag = [D[i, i] for i in range(min(D.shape))]
    if any(d < 0 for d in diag):
        return False
    for d, e in zip(diag, diag[1:]):
        if d == 0 and e != 0:
            return False
        if d and e % d:
            return False
    return True


def solve_integer(A: IntMatrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """Some integer ``x`` with ``A x = b``, or ``None`` if there is none."""
    if len(b) != A.rows:
        raise DimensionError(f"right-hand side of length {len(b)} for {A.rows} rows")
    s = smith_decomposition(A)
    c = s.U.apply(b)
    y = [0] * A.cols
    for i, ci in enumerate(c):
        d = s.D[i, i] if i < A.cols else 0
        if d == 0:
            if ci:
                return None
        else:
            if ci % d:
                return None
            y[i] = ci // d
    return s.V.apply(y)


def integer_kernel(A: IntMatrix) -> IntMatrix:
    """Columns form a basis of ``{x in Z^n : A x = 0}``."""
    s = smith_decomposition(A)
    r = s.rank
    return s.V.submatrix(range(A.cols), range(r, A.cols))


def lattice_basis(gens: IntMatrix) -> IntMatrix:
    """A basis (full column rank) of the lattice spanned by the columns."""
    s = smith_decomposition(gens)
    r = s.rank
    scaled = IntMatrix.diagonal([s.D[i, i] for i in range(r)], gens.rows, r)
    return s.U_inv @ scaled


# ---------------------------------------------------------------------------
# Abelian groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FGAbelianGroup:
    """``Z^generators`` modulo the column span of ``relations``."""

    generators: int
    relations: IntMatrix = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.relations is None:
            object.__setattr__(self, "relations", IntMatrix.zeros(self.generators, 0))
        if self.relations.rows != self.generators:
            raise DimensionError(
                f"relation matrix has {self.relations.rows} rows for {self.generators} generators")

    @classmethod
    def zero(cls) -> FGAbelianGroup:
        return cls(0)

    @classmethod
    def free(cls, rank: int) -> FGAbelianGroup:
        return cls(rank)

    @classmethod
    def cyclic(cls, order: int) -> FGAbelianGroup:
        """``Z/order``; order 0 gives ``Z``."""
        return cls(1, IntMatrix([[order]], 1, 1))

    @classmethod
    def from_invariants(cls, rank: int = 0, torsion: Sequence[int] = ()) -> FGAbelianGroup:
        """Group ``Z^rank + Z/t1 + ...`` with torsion generators listed first."""
        torsion = [int(t) for t in torsion]
        if any(t < 1 for t in torsion):
            raise ValueError(f"torsion coefficients must be positive, got {torsion}")
        g = len(torsion) + rank
        rel = IntMatrix.diagonal(torsion, g, len(torsion))
        return cls(g, rel)

    def canonical(self) -> tuple[int, tuple[int, ...]]:
        """``(free rank, torsion coefficients)`` with torsion ascending by divisibility."""
        diag = smith_decomposition(self.relations).diagonal
        nonzero = [d for d in diag if d]
        return self.generators - len(nonzero), tuple(d for d in nonzero if d > 1)

    @property
    def rank(self) -> int:
        return self.canonical()[0]

    @property
    def torsion(self) -> tuple[int, ...]:
        return self.canonical()[1]

    def is_trivial(self) -> bool:
        return self.canonical() == (0, ())

    def isomorphic(self, other: FGAbelianGroup) -> bool:
        return self.canonical() == other.canonical()

    def canonical_group(self) -> FGAbelianGroup:
        r, t = self.canonical()
        return FGAbelianGroup.from_invariants(r, t)

    def contains_relation(self, vec: Sequence[int]) -> bool:
        """True when ``vec`` represents zero in the group."""
        if len(vec) != self.generators:
            raise DimensionError(f"element of length {len(vec)} in a group on {self.generators} generators")
        if not any(vec):
            return True
        return solve_integer(self.relations, vec) is not None

    is_zero_element = contains_relation

    def equal_elements(self, x: Sequence[int], y: Sequence[int]) -> bool:
        return self.contains_relation([a - b for a, b in zip(x, y)])

    def direct_sum(self, *others: FGAbelianGroup) -> FGAbelianGroup:
        return direct_sum([self, *others])

    def __str__(self) -> str:
        return format_group(*self.canonical())


def direct_sum(groups: Sequence[FGAbelianGroup]) -> FGAbelianGroup:
    if not groups:
        return FGAbelianGroup.zero()
    g = sum(x.generators for x in groups)
    return FGAbelianGroup(g, IntMatrix.block_diagonal([x.relations for x in groups]))


def format_group(rank: int, torsion: Sequence[int], ascii: bool = False) -> str:
    z = "Z" if ascii else "ℤ"
    parts = []
    if rank == 1:
        parts.append(z)
    elif rank > 1:
        parts.append(f"{z}^{rank}")
    parts += [f"{z}/{t}" for t in torsion]
    return (" + " if ascii else " ⊕ ").join(parts) if parts else "0"


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given by its action on generators (``target.generators x source.generators``)."""

    source: FGAbelianGroup
    target: FGAbelianGroup
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.generators, self.source.generators):
            raise DimensionError(
                f"matrix of shape {self.matrix.shape} for a map "
                f"Z^{self.source.generators} -> Z^{self.target.generators}")

    @classmethod
    def identity(cls, G: FGAbelianGroup) -> GroupHom:
        return cls(G, G, IntMatrix.identity(G.generators))

    @classmethod
    def zero(cls, source: FGAbelianGroup, target: FGAbelianGroup) -> GroupHom:
        return cls(source, target, IntMatrix.zeros(target.generators, source.generators))

    def is_well_defined(self) -> bool:
        image = self.matrix @ self.source.relations
        return all(self.target.contains_relation(c) for c in image.columns())

    def __call__(self, vec: Sequence[int]) -> tuple[int, ...]:
        return self.matrix.apply(vec)

    def compose(self, first: GroupHom) -> GroupHom:
        """``self ∘ first``."""
        if first.target.generators != self.source.generators:
            raise DimensionError("composing homomorphisms with mismatched groups")
        return GroupHom(first.source, self.target, self.matrix @ first.matrix)

    def __matmul__(self, first: GroupHom) -> GroupHom:
        return self.compose(first)

    def equals(self, other: GroupHom) -> bool:
        """Equality as homomorphisms: generator images agree modulo target relations."""
        if self.matrix.shape != other.matrix.shape:
            return False
        diff = self.matrix - other.matrix
        return all(self.target.contains_relation(c) for c in diff.columns())

    def is_zero(self) -> bool:
        return all(self.target.contains_relation(c) for c in self.matrix.columns())


def write_in_image(d: GroupHom, target: Sequence[int]) -> tuple[int, ...] | None:
    """A preimage of ``target`` under ``d`` modulo target relations, or ``None``.

    The decision is exact: ``None`` means no integer solution exists.
    """
    if len(target) != d.target.generators:
        raise DimensionError(
            f"element of length {len(target)} for a group on {d.target.generators} generators")
    combined = IntMatrix.hstack([d.matrix, d.target.relations], rows=d.target.generators)
    sol = solve_integer(combined, target)
    if sol is None:
        return None
    return tuple(sol[:d.source.generators])


# ---------------------------------------------------------------------------
# Cochain complexes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Summand:
    label: object
    group: FGAbelianGroup


@dataclass(frozen=True)
class CochainComplex:
    """Finite cochain complex of finitely generated abelian groups.

    ``terms[k]`` is a list of labelled summands sitting in degree ``k + offset``;
    ``differentials[k]`` maps ``terms[k]`` to ``terms[k + 1]``.
    """

    offset: int
    terms: tuple[tuple[Summand, ...], ...]
    differentials: tuple[GroupHom, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(tuple(t) for t in self.terms))
        object.__setattr__(self, "differentials", tuple(self.differentials))
        if len(self.differentials) != max(len(self.terms) - 1, 0):
            raise DimensionError(
                f"{len(self.terms)} terms need {max(len(self.terms) - 1, 0)} differentials, "
                f"got {len(self.differentials)}")
        for k, d in enumerate(self.differentials):
            if (d.source.generators != self.group(k + self.offset).generators
                    or d.target.generators != self.group(k + 1 + self.offset).generators):
                raise DimensionError(f"differential {k + self.offset} does not match its terms")

    @property
    def degrees(self) -> range:
        return range(self.offset, self.offset + len(self.terms))

    def summands(self, degree: int) -> tuple[Summand, ...]:
        k = degree - self.offset
        if 0 <= k < len(self.terms):
            return self.terms[k]
        return ()

    def group(self, degree: int) -> FGAbelianGroup:
        return direct_sum([s.group for s in self.summands(degree)])

    def differential(self, degree: int) -> GroupHom:
        """The map out of ``degree``; zero maps outside the stored range."""
        k = degree - self.offset
        if 0 <= k < len(self.differentials):
            return self.differentials[k]
        return GroupHom.zero(self.group(degree), self.group(degree + 1))

    def support(self) -> list[int]:
        """Degrees carrying a nontrivial term."""
        return [deg for deg in self.degrees if not self.group(deg).is_trivial()]

    def block_offsets(self, degree: int) -> dict[object, tuple[int, int]]:
        """Label -> (start, stop) generator range inside the direct sum."""
        out, pos = {}, 0
        for s in self.summands(degree):
            out[s.label] = (pos, pos + s.group.generators)
            pos += s.group.generators
        return out

    def composition_defects(self) -> list[int]:
        """Degrees ``k`` where ``d^{k+1} ∘ d^k`` is not the zero homomorphism."""
        bad = []
        for k in range(len(self.differentials) - 1):
            dd = self.differentials[k + 1] @ self.differentials[k]
            if not dd.is_zero():
                bad.append(k + self.offset)
        return bad

    def is_complex(self) -> bool:
        return not self.composition_defects()


@dataclass(frozen=True)
class CohomologyPresentation:
    """``H = Z^basis.cols / span(relations)`` with cocycle lattice basis ``basis``."""

    basis: IntMatrix
    relations: IntMatrix
    smith: SmithDecomposition

    def group(self) -> FGAbelianGroup:
        return FGAbelianGroup(self.basis.cols, self.relations)

    def canonical(self) -> tuple[int, tuple[int, ...]]:
        diag = self.smith.diagonal
        nonzero = [d for d in diag if d]
        return self.basis.cols - len(nonzero), tuple(d for d in nonzero if d > 1)

    def coordinates(self, cocycle: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Class of ``cocycle`` as (free coordinates, torsion coordinates reduced mod d_i)."""
        y = _solve_exact_columns(self.basis, cocycle)
        c = self.smith.U.apply(y)
        n = self.basis.cols
        diag = [self.smith.D[i, i] if i < self.smith.D.cols else 0 for i in range(n)]
        torsion = tuple(ci % d for ci, d in zip(c, diag) if d > 1)
        free = tuple(ci * self._orientation(i) for i, (ci, d) in enumerate(zip(c, diag)) if d == 0)
        return free, torsion

    def representative(self, i: int) -> tuple[int, ...]:
        """A cocycle representing Smith generator ``i``."""
        return self.basis.apply(self.smith.U_inv.col(i))

    @cached_property
    def _orientations(self) -> dict[int, int]:
        # A free generator is oriented so that the first standard basis cochain
        # that is a cocycle with a nonzero coordinate on it has a positive one;
        # failing that, its representative's first nonzero entry is positive.
        n = self.basis.cols
        diag = [self.smith.D[i, i] if i < self.smith.D.cols else 0 for i in range(n)]
        free = [i for i, d in enumerate(diag) if d == 0]
        out: dict[int, int] = {}
        for j in range(self.basis.rows):
            if len(out) == len(free):
                break
            e = [0] * self.basis.rows
            e[j] = 1
            y = solve_integer(self.basis, e)
            if y is None:
                continue
            c = self.smith.U.apply(y)
            for i in free:
                if i not in out and c[i]:
                    out[i] = 1 if c[i] > 0 else -1
        for i in free:
            if i not in out:
                first = next((x for x in self.representative(i) if x), 1)
                out[i] = 1 if first > 0 else -1
        return out

    def _orientation(self, i: int) -> int:
        return self._orientations[i]


def _solve_exact_columns(B: IntMatrix, vec: Sequence[int]) -> tuple[int, ...]:
    sol = solve_integer(B, vec)
    if sol is None:
        raise ValueError("vector is not in the cocycle lattice")
    return sol


def cohomology_presentation(C: CochainComplex, degree: int,
                            check: bool = True) -> CohomologyPresentation:
    if check:
        k = degree - C.offset
        for j in (k - 1, k):
            if 0 <= j < len(C.differentials) - 1:
                dd = C.differentials[j + 1] @ C.differentials[j]
                if not dd.is_zero():
                    raise MalformedComplexError(
                        f"d∘d is nonzero out of degree {j + C.offset}")
    G = C.group(degree)
    G_next = C.group(degree + 1)
    d = C.differential(degree)
    d_prev = C.differential(degree - 1)
    g = G.generators
    # cocycles: x with d x in the relation lattice of the next term
    ker = integer_kernel(IntMatrix.hstack([d.matrix, G_next.relations], rows=G_next.generators))
    Z = ker.submatrix(range(g), range(ker.cols))
    Zb = lattice_basis(Z) if g else IntMatrix.zeros(0, 0)
    boundaries = IntMatrix.hstack([d_prev.matrix, G.relations], rows=g)
    rel_cols = [_solve_exact_columns(Zb, col) for col in boundaries.columns()]
    rel = IntMatrix([list(r) for r in zip(*rel_cols)], Zb.cols, len(rel_cols)) if rel_cols \
        else IntMatrix.zeros(Zb.cols, 0)
    return CohomologyPresentation(Zb, rel, smith_decomposition(rel))


def cohomology_at(C: CochainComplex, degree: int) -> FGAbelianGroup:
    """Cohomology in one degree, returned in canonical form.

    Degrees outside the complex give the zero group. Raises
    ``MalformedComplexError`` if the differentials around ``degree`` do not
    compose to zero.
    """
    if degree not in C.degrees:
        return FGAbelianGroup.zero()
    r, t = cohomology_presentation(C, degree).canonical()
    return FGAbelianGroup.from_invariants(r, t)


def cohomology(C: CochainComplex) -> dict[int, FGAbelianGroup]:
    return {deg: cohomology_at(C, deg) for deg in C.degrees}
