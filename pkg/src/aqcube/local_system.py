"""Coefficient systems: functors from the interval poset of a graded poset to
finitely generated abelian groups.

A system is given by a group on every interval of its domain and a
homomorphism on every cover extension inside the domain. Maps along longer
inclusions are composites; :func:`validate` checks that the composite does
not depend on the path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Mapping

from .abgrp import FGAbelianGroup, GroupHom, IntMatrix
from .posets import GradedPoset, Interval, _fmt, cover_extensions

Key = tuple  # (low, high)


class InvalidSystemError(ValueError):
    def __init__(self, violation: Violation):
        self.violation = violation
        super().__init__(str(violation))


@dataclass(frozen=True)
class Violation:
    """One failed functoriality or completeness check."""

    kind: str
    message: str
    intervals: tuple = ()
    matrices: tuple = ()

    def __str__(self) -> str:
        s = f"{self.kind}: {self.message}"
        for m in self.matrices:
            s += f"\n    {m.tolist()}"
        return s


def _ikey(I) -> Key:
    return (I.low, I.high) if isinstance(I, Interval) else tuple(I)


def fmt_interval(key) -> str:
    low, high = _ikey(key)
    return f"[{_fmt(low)}, {_fmt(high)}]"


def fmt_chain(*keys) -> str:
    return " ⊆ ".join(fmt_interval(k) for k in keys)


class CoefficientSystem:
    """Groups on intervals and homomorphisms on cover extensions.

    Parameters
    ----------
    base : GradedPoset
    groups : mapping ``(low, high) -> FGAbelianGroup``
        Its keys are the domain of the system. The domain must be closed under
        passing to sub-intervals (checked by :func:`validate`).
    maps : mapping ``((low, high), (low', high')) -> GroupHom``
        One entry per cover extension inside the domain. Entries for longer
        inclusions are allowed; they are checked against the composites.
    """

    def __init__(self, base: GradedPoset, groups: Mapping, maps: Mapping):
        self.base = base
        self.groups: dict[Key, FGAbelianGroup] = {_ikey(k): v for k, v in groups.items()}
        self.maps: dict[tuple[Key, Key], GroupHom] = {
            (_ikey(a), _ikey(b)): v for (a, b), v in maps.items()}

    def __repr__(self) -> str:
        return f"CoefficientSystem({len(self.groups)} intervals, {len(self.maps)} maps)"

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoefficientSystem):
            return NotImplemented
        return (self.base.elements == other.base.elements
                and self.groups == other.groups and self.maps == other.maps)

    @classmethod
    def from_functions(cls, base: GradedPoset, group: Callable[[Interval], FGAbelianGroup],
                       cover_map: Callable[[Interval, Interval], GroupHom | IntMatrix],
                       domain=None) -> CoefficientSystem:
        """Build a system by evaluating ``group`` on every interval of ``domain``
        and ``cover_map`` on every cover extension inside it."""
        domain = base.intervals() if domain is None else [
            base.interval(*_ikey(I)) for I in domain]
        keys = {_ikey(I) for I in domain}
        groups = {_ikey(I): group(I) for I in domain}
        maps = {}
        for I in domain:
            tgt, src = cover_extensions(base, I)
            for J in tgt + src:
                if _ikey(J) in keys:
                    m = cover_map(I, J)
                    if isinstance(m, IntMatrix):
                        m = GroupHom(groups[_ikey(I)], groups[_ikey(J)], m)
                    maps[(_ikey(I), _ikey(J))] = m
        return cls(base, groups, maps)

    def domain(self) -> list[Interval]:
        """Domain intervals, lexicographic on element indices."""
        keys = sorted(self.groups, key=self.base.interval_sort_key)
        return [self.base.interval(*k) for k in keys]

    def group(self, I) -> FGAbelianGroup:
        try:
            return self.groups[_ikey(I)]
        except KeyError:
            raise KeyError(f"no group on interval {fmt_interval(I)}") from None

    def cover_extensions(self, I) -> tuple[list[Interval], list[Interval]]:
        """Target and source cover extensions of ``I`` that stay in the domain."""
        I = self.base.interval(*_ikey(I))
        tgt, src = cover_extensions(self.base, I)
        return ([J for J in tgt if _ikey(J) in self.groups],
                [J for J in src if _ikey(J) in self.groups])

    def cover_map(self, I, J) -> GroupHom:
        try:
            return self.maps[(_ikey(I), _ikey(J))]
        except KeyError:
            raise KeyError(f"no map for cover extension {fmt_chain(I, J)}") from None

    def map(self, I, J) -> GroupHom:
        """Homomorphism along ``I ⊆ J``, composed along a canonical chain of covers
        (top end raised first, then bottom end lowered)."""
        I, J = _ikey(I), _ikey(J)
        if I == J:
            return GroupHom.identity(self.group(I))
        chain = self.canonical_chain(I, J)
        out = self.cover_map(chain[0], chain[1])
        for a, b in zip(chain[1:], chain[2:]):
            out = self.cover_map(a, b) @ out
        return out

    def canonical_chain(self, I, J) -> list[Key]:
        (a, b), (c, d) = _ikey(I), _ikey(J)
        P = self.base
        if not (P.leq(c, a) and P.leq(b, d)):
            raise ValueError(f"{fmt_interval(I)} is not contained in {fmt_interval(J)}")
        chain = [(a, b)]
        high = b
        while high != d:
            high = next(z for z in P.poset.upper_covers[high] if P.leq(z, d))
            chain.append((a, high))
        low = a
        while low != c:
            low = next(z for z in P.poset.lower_covers[low] if P.leq(c, z))
            chain.append((low, d))
        return chain


def constant_system(P: GradedPoset, G: FGAbelianGroup, domain=None) -> CoefficientSystem:
    """Every group ``G``, every map the identity."""
    ident = GroupHom.identity(G)
    return CoefficientSystem.from_functions(P, lambda I: G, lambda I, J: ident, domain)


def validate(S: CoefficientSystem) -> list[Violation]:
    """All violations of completeness and functoriality; empty means the system is valid.

    Checks, in order: the domain is closed under sub-intervals; each cover
    extension has a well-defined map between the right groups; any two
    composites along two-step chains ``I ⊆ J ⊆ K`` agree; supplied maps on
    longer inclusions equal the composite along the canonical chain.
    """
    P = S.base
    out: list[Violation] = []
    keys = set(S.groups)
    for k in keys:
        if k[0] not in P.poset.index or k[1] not in P.poset.index or not P.leq(*k):
            out.append(Violation("bad-interval", f"{fmt_interval(k)} is not an interval of the base",
                                 (k,)))
    if out:
        return out
    for I in S.domain():
        for J in _subintervals(P, I):
            if J not in keys:
                out.append(Violation(
                    "missing-group",
                    f"{fmt_interval(J)} lies inside {fmt_interval(I)} but has no group", (J, _ikey(I))))
    if out:
        return out

    for I in S.domain():
        tgt, src = S.cover_extensions(I)
        for J in tgt + src:
            pair = (_ikey(I), _ikey(J))
            if pair not in S.maps:
                out.append(Violation("missing-map", f"no map for {fmt_chain(*pair)}", pair))
                continue
            h = S.maps[pair]
            if (h.source.generators != S.group(I).generators
                    or h.target.generators != S.group(J).generators
                    or h.source.relations != S.group(I).relations
                    or h.target.relations != S.group(J).relations):
                out.append(Violation("group-mismatch",
                                     f"map on {fmt_chain(*pair)} does not run between the interval groups",
                                     pair, (h.matrix,)))
            elif not h.is_well_defined():
                out.append(Violation("ill-defined",
                                     f"map on {fmt_chain(*pair)} does not respect relations",
                                     pair, (h.matrix,)))
    for (a, b) in S.maps:
        if a not in keys or b not in keys:
            out.append(Violation("bad-map", f"map {fmt_chain(a, b)} leaves the domain", (a, b)))
        elif not (P.leq(b[0], a[0]) and P.leq(a[1], b[1])) or a == b:
            out.append(Violation("bad-map", f"{fmt_interval(a)} is not properly inside {fmt_interval(b)}",
                                 (a, b)))
    if out:
        return out

    # two-step path independence
    for I in S.domain():
        tgt, src = S.cover_extensions(I)
        paths: dict[Key, list[tuple[Key, GroupHom]]] = {}
        for J in tgt + src:
            first = S.cover_map(I, J)
            t2, s2 = S.cover_extensions(J)
            for K in t2 + s2:
                paths.setdefault(_ikey(K), []).append((_ikey(J), S.cover_map(J, K) @ first))
        for K, options in paths.items():
            J0, h0 = options[0]
            for J1, h1 in options[1:]:
                if not h0.equals(h1):
                    out.append(Violation(
                        "non-commuting",
                        f"{fmt_chain(I, J0, K)} and {fmt_chain(I, J1, K)} give different maps",
                        (_ikey(I), J0, J1, K), (h0.matrix, h1.matrix)))
    # supplied longer maps
    for (a, b), h in S.maps.items():
        if P.length(*b) - P.length(*a) >= 2:
            chain = S.canonical_chain(a, b)
            derived = S.map(a, b)
            if not h.equals(derived):
                out.append(Violation(
                    "non-commuting",
                    f"supplied map on {fmt_chain(a, b)} differs from the composite along "
                    f"{fmt_chain(*chain)}", tuple(chain), (h.matrix, derived.matrix)))
    return out


def _subintervals(P: GradedPoset, I: Interval) -> list[Key]:
    inside = [z for z in P.elements if P.leq(I.low, z) and P.leq(z, I.high)]
    return [(x, y) for x in inside for y in inside if P.leq(x, y)]


def is_valid(S: CoefficientSystem) -> bool:
    return not validate(S)


def check(S: CoefficientSystem) -> CoefficientSystem:
    """Return ``S`` unchanged or raise :class:`InvalidSystemError` on the first violation."""
    v = validate(S)
    if v:
        raise InvalidSystemError(v[0])
    return S


def restrict(S: CoefficientSystem, Q: GradedPoset, iota: Mapping | Callable) -> CoefficientSystem:
    """Pull ``S`` back along a length-preserving full embedding ``iota: Q -> S.base``."""
    f = iota if callable(iota) else iota.__getitem__
    P = S.base
    image = [f(x) for x in Q.elements]
    if len(set(image)) != len(image):
        raise ValueError("inclusion is not injective")
    for x in Q.elements:
        for y in Q.elements:
            if Q.leq(x, y) != P.leq(f(x), f(y)):
                raise ValueError(f"inclusion is not full at ({_fmt(x)}, {_fmt(y)})")
            if Q.leq(x, y) and Q.length(x, y) != P.length(f(x), f(y)):
                raise ValueError(
                    f"inclusion does not preserve length of [{_fmt(x)}, {_fmt(y)}]")
    groups = {}
    for I in Q.intervals():
        k = (f(I.low), f(I.high))
        if k not in S.groups:
            raise ValueError(f"{fmt_interval(I)} maps to {fmt_interval(k)}, outside the system's domain")
        groups[I.key] = S.groups[k]
    maps = {}
    for I in Q.intervals():
        tgt, src = cover_extensions(Q, I)
        for J in tgt + src:
            maps[(I.key, J.key)] = S.cover_map((f(I.low), f(I.high)), (f(J.low), f(J.high)))
    return CoefficientSystem(Q, groups, maps)
