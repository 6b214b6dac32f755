"""The interval cochain complex of a graded poset with coefficients, and its
cube instance.

The term of length ``k`` is the direct sum, over intervals of length ``k``,
of the coefficient groups. The differential is nonzero only along cover
extensions: the coefficient map along the extension, times an incidence
sign. Target extensions carry ``+`` and source extensions ``-`` before the
positional correction described in :func:`incidence_sign`.
"""

from __future__ import annotations

from typing import Callable

from .abgrp import CochainComplex, GroupHom, IntMatrix, Summand, direct_sum
from .cube_cat import cube_poset
from .local_system import CoefficientSystem, InvalidSystemError, fmt_chain, validate
from .posets import GradedPoset, Interval

SignRule = Callable[[Interval, Interval], int]


class ComplexError(ArithmeticError):
    """The assembled differentials do not compose to zero."""


def is_cube_coordinates(P: GradedPoset) -> bool:
    """True when the elements are 0/1 tuples of one length ordered coordinatewise."""
    els = P.elements
    if not els or not all(isinstance(x, tuple) for x in els):
        return False
    n = len(els[0])
    if any(len(x) != n or any(v not in (0, 1) for v in x) for x in els):
        return False
    return all(P.leq(x, y) == all(a <= b for a, b in zip(x, y)) for x in els for y in els)


def naive_sign(I: Interval, J: Interval) -> int:
    """``+1`` for a target extension, ``-1`` for a source extension."""
    return 1 if I.low == J.low else -1


def koszul_sign(I: Interval, J: Interval) -> int:
    """Cubical incidence sign for intervals of a cube written in coordinates.

    The new coordinate ``j`` is the one where ``J`` is wider than ``I``; the
    naive sign is multiplied by ``(-1)^m`` where ``m`` counts the free
    coordinates of ``I`` before ``j``.
    """
    a, b = I.low, I.high
    j = next(i for i, (x, y, u, v) in enumerate(zip(a, b, J.low, J.high)) if (x, y) != (u, v))
    m = sum(1 for i in range(j) if a[i] != b[i])
    return naive_sign(I, J) * (-1) ** m


def solved_signs(S: CoefficientSystem) -> SignRule:
    """Signs making every two-path square of the interval poset anticommute.

    Solves the parity constraints over GF(2), starting from the naive signs;
    free variables keep the naive sign. Rank-two inclusions with a single
    intermediate interval cannot be fixed by any sign choice and are left to
    the ``d∘d = 0`` check.
    """
    P = S.base
    edges: dict[tuple, int] = {}
    for I in S.domain():
        tgt, src = S.cover_extensions(I)
        for J in tgt + src:
            edges[(I.key, J.key)] = len(edges)
    rows: list[int] = []
    for I in S.domain():
        tgt, src = S.cover_extensions(I)
        mids: dict[tuple, list] = {}
        for J in tgt + src:
            t2, s2 = S.cover_extensions(J)
            for K in t2 + s2:
                mids.setdefault(K.key, []).append(J)
        for K, Js in mids.items():
            if len(Js) != 2:
                continue
            Kint = P.interval(*K)
            mask = 0
            prod = 1
            for J in Js:
                mask ^= 1 << edges[(I.key, J.key)]
                mask ^= 1 << edges[(J.key, K)]
                prod *= naive_sign(I, J) * naive_sign(J, Kint)
            rows.append(mask | ((1 if prod == 1 else 0) << len(edges)))
    flips = _solve_gf2(rows, len(edges))

    def rule(I: Interval, J: Interval) -> int:
        e = edges.get((I.key, J.key))
        flip = flips[e] if e is not None else 0
        return naive_sign(I, J) * (-1) ** flip

    return rule


def _solve_gf2(rows: list[int], nvars: int) -> list[int]:
    """One solution of an augmented GF(2) system (bit ``nvars`` is the RHS).

    Inconsistent systems return the best-effort partial solution; the
    ``d∘d = 0`` check reports the failure.
    """
    pivots: list[tuple[int, int]] = []
    for r in rows:
        for col, pr in pivots:
            if r >> col & 1:
                r ^= pr
        low = r & ((1 << nvars) - 1)
        if not low:
            continue
        col = low.bit_length() - 1
        pivots = [(c, p ^ r if p >> col & 1 else p) for c, p in pivots]
        pivots.append((col, r))
    sol = [0] * nvars
    for col, r in pivots:
        sol[col] = r >> nvars & 1
    return sol


def incidence_sign(S: CoefficientSystem, rule: str = "auto") -> SignRule:
    """Pick the sign rule: ``"koszul"``, ``"solve"``, ``"naive"`` or ``"auto"``.

    ``auto`` uses the cubical rule when the base is written in cube
    coordinates and the GF(2) solution otherwise.
    """
    if rule == "auto":
        rule = "koszul" if is_cube_coordinates(S.base) else "solve"
    if rule == "koszul":
        return koszul_sign
    if rule == "solve":
        return solved_signs(S)
    if rule == "naive":
        return naive_sign
    raise ValueError(f"unknown sign rule {rule!r}")


def build_dphi(P: GradedPoset, S: CoefficientSystem, offset: int | None = None,
               signs: str = "auto", check: bool = True) -> CochainComplex:
    """Assemble the interval cochain complex of ``S`` over its domain in ``P``.

    Parameters
    ----------
    P : GradedPoset
        Must be the base of ``S``.
    S : CoefficientSystem
        Validated first; the first violation is raised as ``InvalidSystemError``.
    offset : int, optional
        Degree of the length-0 term. Defaults to ``1 - n`` for maximal
        interval length ``n``, so the top term sits in degree 1.
    signs : str
        Incidence sign rule, see :func:`incidence_sign`.
    check : bool
        Raise :class:`ComplexError` if ``d∘d`` is nonzero.
    """
    if S.base is not P and S.base.elements != P.elements:
        raise ValueError("coefficient system lives on a different poset")
    violations = validate(S)
    if violations:
        raise InvalidSystemError(violations[0])
    sign = incidence_sign(S, signs)
    domain = S.domain()
    top = max((I.length for I in domain), default=0)
    by_len = [[I for I in domain if I.length == k] for k in range(top + 1)]
    if offset is None:
        offset = 1 - top
    terms = [[Summand(I, S.group(I)) for I in Is] for Is in by_len]
    diffs = []
    for k in range(top):
        src, tgt = by_len[k], by_len[k + 1]
        G_src = direct_sum([S.group(I) for I in src])
        G_tgt = direct_sum([S.group(I) for I in tgt])
        col0 = _offsets(S, src)
        row0 = _offsets(S, tgt)
        M = [[0] * G_src.generators for _ in range(G_tgt.generators)]
        for I in src:
            t_ext, s_ext = S.cover_extensions(I)
            for J in t_ext + s_ext:
                e = sign(I, J)
                block = S.cover_map(I, J).matrix
                r, c = row0[J.key], col0[I.key]
                for i in range(block.rows):
                    for j in range(block.cols):
                        M[r + i][c + j] += e * block[i, j]
        diffs.append(GroupHom(G_src, G_tgt, IntMatrix(M, G_tgt.generators, G_src.generators)))
    C = CochainComplex(offset, tuple(tuple(t) for t in terms), tuple(diffs))
    if check:
        bad = C.composition_defects()
        if bad:
            raise ComplexError(_describe_defect(C, bad[0]))
    return C


def _offsets(S: CoefficientSystem, intervals) -> dict:
    out, pos = {}, 0
    for I in intervals:
        out[I.key] = pos
        pos += S.group(I).generators
    return out


def _describe_defect(C: CochainComplex, degree: int) -> str:
    d1, d2 = C.differential(degree), C.differential(degree + 1)
    dd = d2 @ d1
    src = C.block_offsets(degree)
    tgt = C.block_offsets(degree + 2)
    for I, (c0, c1) in src.items():
        for K, (r0, r1) in tgt.items():
            block = dd.matrix.submatrix(range(r0, r1), range(c0, c1))
            if not block.is_zero():
                return (f"d∘d is nonzero out of degree {degree}: component "
                        f"{fmt_chain(I, K)} equals {block.tolist()}")
    return f"d∘d is nonzero out of degree {degree}"


def build_cube_cphi(m: int, S: CoefficientSystem, n: int, signs: str = "auto") -> CochainComplex:
    """Complex of the ``m``-cube with coefficients in degree ``n``.

    The length-``k`` term sits in degree ``k - n``, so the complex lives in
    degrees ``[-n, m - n]``.
    """
    P = cube_poset(m)
    return build_dphi(P, S, offset=-n, signs=signs)
