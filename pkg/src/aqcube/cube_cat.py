"""The cube category on vertices: faces, degeneracies, connections, cube posets
and the permutohedra that shape mapping spaces between cube vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations, product
from math import comb, factorial

from .posets import FinitePoset, GradedPoset, check_graded


def vertices(n: int) -> list[tuple[int, ...]]:
    """Vertices of ``[1]^n`` in lexicographic order."""
    return list(product((0, 1), repeat=n))


@dataclass(frozen=True)
class CubeMap:
    """A map ``[1]^source_dim -> [1]^target_dim`` recorded by its vertex action.

    Two maps are equal when their vertex actions agree; ``word`` only records
    the generators the map was built from.
    """

    source_dim: int
    target_dim: int
    table: tuple[tuple[int, ...], ...]
    word: tuple[str, ...] = field(default=(), compare=False)

    def __call__(self, x) -> tuple[int, ...]:
        x = tuple(x)
        if len(x) != self.source_dim:
            raise ValueError(f"vertex {x} does not lie in [1]^{self.source_dim}")
        return self.table[_vertex_index(x)]

    def is_monotone(self) -> bool:
        vs = vertices(self.source_dim)
        return all(_leq(self(x), self(y)) for x in vs for y in vs if _leq(x, y))

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def __str__(self) -> str:
        return "∘".join(self.word) or f"id_{self.source_dim}"


def _vertex_index(x) -> int:
    i = 0
    for b in x:
        i = 2 * i + b
    return i


def _leq(x, y) -> bool:
    return all(a <= b for a, b in zip(x, y))


def _from_action(m: int, n: int, f, name: str) -> CubeMap:
    return CubeMap(m, n, tuple(tuple(f(x)) for x in vertices(m)), (name,))


def _check_index(i: int, lo: int, hi: int, what: str) -> None:
    if not lo <= i <= hi:
        raise ValueError(f"{what}: index {i} outside {lo}..{hi}")


def _check_eps(eps: int) -> None:
    if eps not in (0, 1):
        raise ValueError(f"epsilon must be 0 or 1, got {eps}")


def face(n: int, i: int, eps: int) -> CubeMap:
    """``d_{i,eps}: [1]^(n-1) -> [1]^n`` inserting ``eps`` in slot ``i`` (1-based)."""
    _check_index(i, 1, n, f"face map into [1]^{n}")
    _check_eps(eps)
    return _from_action(n - 1, n, lambda x: x[:i - 1] + (eps,) + x[i - 1:], f"d[{n}]_{i},{eps}")


def degeneracy(n: int, i: int) -> CubeMap:
    """``σ_i: [1]^n -> [1]^(n-1)`` forgetting coordinate ``i``."""
    _check_index(i, 1, n, f"degeneracy on [1]^{n}")
    return _from_action(n, n - 1, lambda x: x[:i - 1] + x[i:], f"σ[{n}]_{i}")


def connection(n: int, i: int, eps: int) -> CubeMap:
    """``γ_{i,eps}: [1]^n -> [1]^(n-1)`` merging slots ``i, i+1``.

    ``eps = 0`` takes the max (positive connection), ``eps = 1`` the min.
    """
    _check_index(i, 1, n - 1, f"connection on [1]^{n}")
    _check_eps(eps)
    op = max if eps == 0 else min
    return _from_action(n, n - 1, lambda x: x[:i - 1] + (op(x[i - 1], x[i]),) + x[i + 1:],
                        f"γ[{n}]_{i},{eps}")


def identity(n: int) -> CubeMap:
    return CubeMap(n, n, tuple(vertices(n)), ())


def compose(g: CubeMap, f: CubeMap) -> CubeMap:
    """``g ∘ f``."""
    if f.target_dim != g.source_dim:
        raise ValueError(
            f"cannot compose: f lands in [1]^{f.target_dim} but g starts at [1]^{g.source_dim}")
    return CubeMap(f.source_dim, g.target_dim, tuple(g(y) for y in f.table), g.word + f.word)


def is_face_composite(f: CubeMap) -> bool:
    """True iff ``f`` is a composite of face maps, i.e. injective on vertices."""
    return f.is_injective()


_CUBE_POSETS: dict[int, GradedPoset] = {}


def cube_poset(n: int) -> GradedPoset:
    """``{0,1}^n`` with the coordinatewise order; length is the Hamming gap."""
    if n < 0:
        raise ValueError("cube dimension must be nonnegative")
    if n not in _CUBE_POSETS:
        vs = vertices(n)
        covers = [(x, x[:i] + (1,) + x[i + 1:]) for x in vs for i in range(n) if x[i] == 0]
        _CUBE_POSETS[n] = check_graded(FinitePoset(vs, covers))
    return _CUBE_POSETS[n]


def cube_face_counts(n: int) -> list[int]:
    """Number of ``k``-dimensional faces of ``[1]^n`` for ``k = 0..n``."""
    return [comb(n, k) * 2 ** (n - k) for k in range(n + 1)]


# ---------------------------------------------------------------------------
# Permutohedra
# ---------------------------------------------------------------------------

def _ordered_set_partitions(items: tuple):
    if not items:
        yield ()
        return
    n = len(items)
    # choose the first block as any nonempty subset, recursively partition the rest
    for mask in range(1, 2 ** n):
        block = tuple(items[i] for i in range(n) if mask >> i & 1)
        rest = tuple(items[i] for i in range(n) if not mask >> i & 1)
        for tail in _ordered_set_partitions(rest):
            yield (frozenset(block),) + tail


def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@dataclass(frozen=True)
class Permutohedron:
    """Face lattice of the rank-``n`` permutohedron.

    Faces are ordered set partitions of ``{1, ..., n+1}``; a partition with
    ``b`` blocks has dimension ``n + 1 - b``. Vertices are the partitions into
    singletons, i.e. permutations.
    """

    rank: int

    @property
    def ground(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 2))

    def vertices(self) -> list[tuple[int, ...]]:
        return list(permutations(self.ground))

    @cached_property
    def faces(self) -> tuple[tuple[frozenset, ...], ...]:
        return tuple(_ordered_set_partitions(self.ground))

    def dimension(self, face: tuple[frozenset, ...]) -> int:
        return self.rank + 1 - len(face)

    def faces_of_dim(self, k: int) -> list[tuple[frozenset, ...]]:
        return [F for F in self.faces if self.dimension(F) == k]

    def edges(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Edges as vertex pairs; each swaps two adjacent entries of a permutation."""
        out = []
        for F in self.faces_of_dim(1):
            pos = next(i for i, B in enumerate(F) if len(B) == 2)
            head = tuple(next(iter(B)) for B in F[:pos])
            tail = tuple(next(iter(B)) for B in F[pos + 1:])
            a, b = sorted(F[pos])
            out.append((head + (a, b) + tail, head + (b, a) + tail))
        return out

    def f_vector(self) -> list[int]:
        """Face counts by dimension, from ordered-set-partition counts ``b! S(n+1, b)``."""
        m = self.rank + 1
        return [factorial(m - k) * stirling2(m, m - k) for k in range(self.rank + 1)]

    def boundary_euler_characteristic(self) -> int:
        fv = self.f_vector()
        return sum((-1) ** k * c for k, c in enumerate(fv[:-1]))

    @property
    def top_face(self) -> tuple[frozenset, ...]:
        return (frozenset(self.ground),)

    def shape_name(self) -> str:
        return {0: "point", 1: "interval", 2: "hexagon"}.get(self.rank, f"{self.rank}-permutohedron")


def zeros(J) -> int:
    """``|J|``: the number of zero coordinates of a cube vertex."""
    return sum(1 for b in J if b == 0)


def mapping_space_shape(n: int, J, Jp) -> Permutohedron | None:
    """Permutohedron modelling the mapping space from ``J`` to ``Jp`` in the
    resolved ``n``-cube, or ``None`` when ``J`` is not below ``Jp``.

    ``J == Jp`` gives the rank-0 point; ``J < Jp`` gives rank ``|J| - |Jp| - 1``.
    """
    J, Jp = tuple(J), tuple(Jp)
    if len(J) != n or len(Jp) != n:
        raise ValueError(f"vertices must lie in [1]^{n}")
    if not _leq(J, Jp):
        return None
    if J == Jp:
        return Permutohedron(0)
    return Permutohedron(zeros(J) - zeros(Jp) - 1)
