"""Finite posets, intervals, interval length and the interval (twisted arrow) poset."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence


class NotAPosetError(ValueError):
    pass


class NotGradedError(ValueError):
    """Raised when some interval has maximal chains of different lengths.

    ``witness`` is the pair ``(x, y)``; ``chains`` holds two maximal chains
    from ``x`` to ``y`` with different edge counts.
    """

    def __init__(self, witness, chains):
        self.witness = witness
        self.chains = chains
        x, y = witness
        super().__init__(
            f"interval [{x}, {y}] is not graded: maximal chains "
            f"{' < '.join(map(str, chains[0]))} and {' < '.join(map(str, chains[1]))} "
            f"have {len(chains[0]) - 1} and {len(chains[1]) - 1} steps")


@dataclass(frozen=True)
class Interval:
    """The interval ``[low, high]``; ``length`` is filled in by a graded poset."""

    low: Hashable
    high: Hashable
    length: int | None = field(default=None, compare=False)

    def __str__(self) -> str:
        return f"[{_fmt(self.low)}, {_fmt(self.high)}]"

    @property
    def key(self) -> tuple:
        return (self.low, self.high)


def _fmt(x) -> str:
    if isinstance(x, tuple) and all(isinstance(v, int) and 0 <= v <= 9 for v in x):
        return "".join(map(str, x)) or "()"
    return str(x)


class FinitePoset:
    """A finite partial order on an indexed set of hashable elements.

    The element order given at construction is the index order used for
    every deterministic enumeration downstream.
    """

    def __init__(self, elements: Iterable[Hashable], relations: Iterable[tuple] = (),
                 leq: Callable[[Hashable, Hashable], bool] | None = None):
        self.elements: tuple = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise NotAPosetError("duplicate elements")
        n = len(self.elements)
        table = [[i == j for j in range(n)] for i in range(n)]
        if leq is not None:
            for i, x in enumerate(self.elements):
                for j, y in enumerate(self.elements):
                    if i != j and leq(x, y):
                        table[i][j] = True
        for a, b in relations:
            if a not in self.index or b not in self.index:
                raise NotAPosetError(f"relation ({a}, {b}) mentions an unknown element")
            table[self.index[a]][self.index[b]] = True
        # transitive closure (Warshall)
        for k in range(n):
            for i in range(n):
                if table[i][k]:
                    row_k = table[k]
                    row_i = table[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        for i in range(n):
            for j in range(i + 1, n):
                if table[i][j] and table[j][i]:
                    raise NotAPosetError(
                        f"antisymmetry fails: {self.elements[i]} and {self.elements[j]} "
                        "are mutually comparable")
        self._leq = tuple(tuple(r) for r in table)

    @classmethod
    def from_covers(cls, elements, covers) -> FinitePoset:
        return cls(elements, covers)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FinitePoset({len(self)} elements)"

    def leq(self, x, y) -> bool:
        return self._leq[self.index[x]][self.index[y]]

    def lt(self, x, y) -> bool:
        return x != y and self.leq(x, y)

    @cached_property
    def cover_pairs(self) -> tuple[tuple, ...]:
        """Covering relation (transitive reduction), in index order."""
        n = len(self)
        L = self._leq
        out = []
        for i in range(n):
            for j in range(n):
                if i != j and L[i][j] and not any(
                        L[i][k] and L[k][j] for k in range(n) if k != i and k != j):
                    out.append((self.elements[i], self.elements[j]))
        return tuple(out)

    @cached_property
    def upper_covers(self) -> dict:
        up = {x: [] for x in self.elements}
        for a, b in self.cover_pairs:
            up[a].append(b)
        return up

    @cached_property
    def lower_covers(self) -> dict:
        down = {x: [] for x in self.elements}
        for a, b in self.cover_pairs:
            down[b].append(a)
        return down

    def covers(self, x, y) -> bool:
        return y in self.upper_covers[x]

    def comparable_pairs(self) -> list[tuple]:
        """All ``(x, y)`` with ``x <= y``, lexicographic on element indices."""
        n = len(self)
        return [(self.elements[i], self.elements[j])
                for i in range(n) for j in range(n) if self._leq[i][j]]

    def maximal_chains(self, x, y) -> list[list]:
        """Every maximal chain ``x = c0 < c1 < ... < ck = y`` by depth-first search."""
        if not self.leq(x, y):
            return []
        out = []

        def walk(path):
            last = path[-1]
            if last == y:
                out.append(list(path))
                return
            for z in self.upper_covers[last]:
                if self.leq(z, y):
                    path.append(z)
                    walk(path)
                    path.pop()

        walk([x])
        return out

    def subposet(self, elements: Sequence) -> FinitePoset:
        """Full subposet on ``elements`` (kept in the given order)."""
        return FinitePoset(elements, leq=self.leq)

    def minimal_elements(self) -> list:
        return [x for x in self.elements if not self.lower_covers[x]]

    def maximal_elements(self) -> list:
        return [x for x in self.elements if not self.upper_covers[x]]


class GradedPoset:
    """A finite poset in which every interval has a well-defined length.

    Construct through :func:`check_graded`.
    """

    def __init__(self, poset: FinitePoset, lengths: dict[tuple, int]):
        self.poset = poset
        self._lengths = lengths

    def __repr__(self) -> str:
        return f"GradedPoset({len(self.poset)} elements, max length {self.max_length})"

    @property
    def elements(self) -> tuple:
        return self.poset.elements

    def index(self, x) -> int:
        return self.poset.index[x]

    def leq(self, x, y) -> bool:
        return self.poset.leq(x, y)

    def length(self, x, y) -> int:
        try:
            return self._lengths[(x, y)]
        except KeyError:
            raise ValueError(f"{_fmt(x)} is not below {_fmt(y)}; [{_fmt(x)}, {_fmt(y)}] "
                             "is not an interval") from None

    def interval(self, x, y) -> Interval:
        return Interval(x, y, self.length(x, y))

    @cached_property
    def max_length(self) -> int:
        return max(self._lengths.values(), default=0)

    @cached_property
    def _intervals(self) -> tuple[Interval, ...]:
        return tuple(Interval(x, y, self._lengths[(x, y)])
                     for x, y in self.poset.comparable_pairs())

    def intervals(self) -> tuple[Interval, ...]:
        return self._intervals

    def intervals_of_length(self, k: int) -> list[Interval]:
        return intervals_of_length(self, k)

    def interval_sort_key(self, I: Interval | tuple) -> tuple[int, int]:
        low, high = (I.low, I.high) if isinstance(I, Interval) else I
        return (self.poset.index[low], self.poset.index[high])


def check_graded(P: FinitePoset) -> GradedPoset:
    """Wrap ``P`` with its length table, or raise :class:`NotGradedError`.

    The length of ``[x, y]`` is the common number of steps in every maximal
    chain from ``x`` to ``y``. Shortest and longest chains are computed by
    dynamic programming over the covering relation; a disagreement is reported
    with one chain of each length.
    """
    elems = P.elements
    up = P.upper_covers
    lengths: dict[tuple, int] = {}
    for x in elems:
        # longest/shortest step counts from x to every y >= x, with predecessors
        order = [y for y in _linear_extension(P) if P.leq(x, y)]
        lo = {x: 0}
        hi = {x: 0}
        lo_pred: dict = {}
        hi_pred: dict = {}
        for y in order:
            for z in up[y]:
                if z not in lo or lo[y] + 1 < lo[z]:
                    lo[z] = lo[y] + 1
                    lo_pred[z] = y
                if z not in hi or hi[y] + 1 > hi[z]:
                    hi[z] = hi[y] + 1
                    hi_pred[z] = y
        for y in order:
            if lo[y] != hi[y]:
                raise NotGradedError((x, y), (_trace(lo_pred, x, y), _trace(hi_pred, x, y)))
            lengths[(x, y)] = lo[y]
    return GradedPoset(P, lengths)


def _trace(pred, x, y) -> list:
    path = [y]
    while path[-1] != x:
        path.append(pred[path[-1]])
    return path[::-1]


def _linear_extension(P: FinitePoset) -> list:
    """Elements sorted so that every element precedes the elements above it."""
    n = len(P)
    below = [sum(1 for j in range(n) if P._leq[j][i]) for i in range(n)]
    order = sorted(range(n), key=lambda i: (below[i], i))
    return [P.elements[i] for i in order]


def intervals_of_length(P: GradedPoset, k: int) -> list[Interval]:
    """All intervals ``[a, b]`` with ``length(a, b) == k``, lexicographic on indices."""
    return [I for I in P.intervals() if I.length == k]


def twisted_arrow_poset(P: FinitePoset) -> FinitePoset:
    """Intervals of ``P`` ordered by inclusion: ``[a, b] <= [c, d]`` iff ``c <= a`` and ``b <= d``."""
    intervals = [Interval(a, b) for a, b in P.comparable_pairs()]
    return FinitePoset(
        intervals, leq=lambda I, J: P.leq(J.low, I.low) and P.leq(I.high, J.high))


def cover_extensions(P: GradedPoset, I: Interval) -> tuple[list[Interval], list[Interval]]:
    """Intervals covering ``I`` in the interval poset.

    Returns ``(target_extensions, source_extensions)``: the first enlarges the
    top (``[a, b']`` with ``b'`` covering ``b``), the second lowers the bottom
    (``[a', b]`` with ``a'`` covered by ``a``). Both lists are in index order.
    """
    up = P.poset.upper_covers[I.high]
    down = P.poset.lower_covers[I.low]
    targets = [P.interval(I.low, b2) for b2 in up]
    sources = [P.interval(a2, I.high) for a2 in down]
    targets.sort(key=P.interval_sort_key)
    sources.sort(key=P.interval_sort_key)
    return targets, sources


def chain_poset(k: int) -> GradedPoset:
    """The chain ``0 < 1 < ... < k``."""
    return check_graded(FinitePoset(range(k + 1), [(i, i + 1) for i in range(k)]))


def product_poset(*sizes: int) -> GradedPoset:
    """Product of chains ``[s1] x [s2] x ...`` with the coordinatewise order."""
    from itertools import product
    elems = list(product(*(range(s + 1) for s in sizes)))
    covers = []
    for x in elems:
        for i, s in enumerate(sizes):
            if x[i] < s:
                covers.append((x, x[:i] + (x[i] + 1,) + x[i + 1:]))
    return check_graded(FinitePoset(elems, covers))
