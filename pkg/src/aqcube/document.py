"""Reading input documents: JSON text checked against the published schema,
then turned into posets, complexes, systems and facet data.

Two failure classes are kept apart. :class:`ParseError` means the text is not
a well-formed document (bad JSON or schema violation). :class:`DocumentError`
means the document is well-formed but describes invalid mathematics or holds
a reference that does not resolve.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

import jsonschema

from .abgrp import DimensionError, FGAbelianGroup, GroupHom, IntMatrix
from .cube_cat import cube_poset
from .cubical_complex import CubicalComplex, boundary_cube, full_cube, validate_complex
from .local_system import CoefficientSystem, validate
from .obstruction import (FacetClasses, ObstructionInputError, TransportData, default_orientation,
                          facet_id, facets)
from .posets import FinitePoset, GradedPoset, NotAPosetError, NotGradedError, check_graded, \
    chain_poset, cover_extensions, product_poset

SCHEMA_VERSION = 1


class ParseError(ValueError):
    exit_code = 3


class DocumentError(ValueError):
    exit_code = 2


def load_schema() -> dict:
    text = resources.files("aqcube").joinpath("schema/input.schema.json").read_text("utf-8")
    return json.loads(text)


def element_name(x) -> str:
    if isinstance(x, tuple):
        return "".join(str(v) for v in x)
    return str(x)


def interval_name(key) -> str:
    return f"{element_name(key[0])}:{element_name(key[1])}"


@dataclass
class Document:
    kind: str
    poset: GradedPoset
    system: CoefficientSystem
    complex: CubicalComplex | None = None
    options: dict = field(default_factory=dict)
    facet_classes: FacetClasses | None = None
    transports: TransportData | None = None
    description: str = ""

    @property
    def n(self) -> int | None:
        """Cube dimension of an obstruction document."""
        return self.complex.ambient_dim if self.kind == "obstruction" else None


def parse_json(text: str, source: str = "<input>") -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{source}:{e.lineno}:{e.colno}: {e.msg}") from None
    errors = sorted(jsonschema.Draft202012Validator(load_schema()).iter_errors(data),
                    key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        where = "/".join(str(p) for p in e.absolute_path) or "(document root)"
        raise ParseError(f"{source}: schema violation at {where}: {e.message}")
    return data


def load_document(path: str | Path) -> Document:
    p = Path(path)
    try:
        text = p.read_text("utf-8")
    except OSError as e:
        raise ParseError(f"{p}: cannot read: {e.strerror}") from None
    return build_document(parse_json(text, str(p)))


def loads_document(text: str) -> Document:
    return build_document(parse_json(text))


# ---------------------------------------------------------------------------

def _group(node: dict, where: str) -> FGAbelianGroup:
    if "rank" in node:
        return FGAbelianGroup.from_invariants(node["rank"], node.get("torsion", []))
    g = node["generators"]
    rows = node["relations"]
    if not rows:
        return FGAbelianGroup(g)
    try:
        M = IntMatrix(rows)
    except DimensionError as e:
        raise DocumentError(f"{where}: relation matrix: {e}") from None
    if M.rows != g:
        raise DocumentError(f"{where}: relation matrix has {M.rows} rows for {g} generators")
    return FGAbelianGroup(g, M)


def _matrix(rows: list, r: int, c: int, where: str) -> IntMatrix:
    if r == 0 or c == 0:
        if any(rows) or (rows and len(rows) != r):
            raise DocumentError(f"{where}: expected a {r}x{c} matrix")
        return IntMatrix.zeros(r, c)
    if len(rows) != r:
        raise DocumentError(f"{where}: expected {r} rows, got {len(rows)}")
    for i, row in enumerate(rows):
        if len(row) != c:
            raise DocumentError(f"{where}: row {i} has {len(row)} entries, expected {c}")
    return IntMatrix(rows, r, c)


def _poset(node: dict) -> GradedPoset:
    try:
        if "chain" in node:
            return chain_poset(node["chain"])
        if "cube" in node:
            return cube_poset(node["cube"])
        if "product" in node:
            return product_poset(*node["product"])
        elems = node["elements"]
        known = set(elems)
        for a, b in node["covers"]:
            for x in (a, b):
                if x not in known:
                    raise DocumentError(f"poset: cover ({a}, {b}) names unknown element {x!r}")
        return check_graded(FinitePoset(elems, [tuple(c) for c in node["covers"]]))
    except (NotAPosetError, NotGradedError) as e:
        raise DocumentError(f"poset: {e}") from None


def _complex(node: dict) -> CubicalComplex:
    if "full" in node:
        return full_cube(node["full"])
    if "boundary" in node:
        return boundary_cube(node["boundary"])
    cells = node["cells"]
    N = len(cells[0])
    for c in cells:
        if len(c) != N:
            raise DocumentError(f"complex: cell {c} does not live in [1]^{N}")
    K = CubicalComplex(N, cells)
    report = validate_complex(K)
    if not report.ok:
        raise DocumentError(f"complex: {report}")
    return K


def _system(P: GradedPoset, domain: list, node: dict) -> CoefficientSystem:
    names = {element_name(x): x for x in P.elements}

    def key(s: str, where: str):
        lo, hi = s.split(":")
        if lo not in names or hi not in names:
            bad = lo if lo not in names else hi
            raise DocumentError(f"{where}: interval {s} names unknown element {bad!r}")
        k = (names[lo], names[hi])
        if k not in dom:
            raise DocumentError(f"{where}: {s} is not an interval of the domain")
        return k

    dom = set(domain)
    default = _group(node["default_group"], "system/default_group") if "default_group" in node else None
    groups = {}
    for s, g in node.get("groups", {}).items():
        groups[key(s, f"system/groups/{s}")] = _group(g, f"system/groups/{s}")
    for k in domain:
        if k not in groups:
            if default is None:
                raise DocumentError(f"system: no group on {interval_name(k)} and no default_group")
            groups[k] = default
    maps = {}
    for i, m in enumerate(node.get("maps", [])):
        where = f"system/maps/{i} ({m['from']} -> {m['to']})"
        a, b = key(m["from"], where), key(m["to"], where)
        Ga, Gb = groups[a], groups[b]
        maps[(a, b)] = GroupHom(Ga, Gb, _matrix(m["matrix"], Gb.generators, Ga.generators, where))
    for k in domain:
        I = P.interval(*k)
        tgt, src = cover_extensions(P, I)
        for J in tgt + src:
            pair = (k, J.key)
            if J.key in dom and pair not in maps and groups[k] == groups[J.key]:
                maps[pair] = GroupHom.identity(groups[k])
    return CoefficientSystem(P, groups, maps)


def _facet_classes(n: int, S: CoefficientSystem, node: dict) -> FacetClasses:
    known = {facet_id(f): f for f in facets(n)}
    out = {}
    for ident, v in node.items():
        if ident not in known:
            raise DocumentError(f"facet_classes: {ident} is not a facet of the {n}-cube")
        G = S.group(known[ident].interval)
        if len(v) != G.generators:
            raise DocumentError(f"facet_classes/{ident}: {len(v)} entries, but its group has "
                                f"{G.generators} generators")
        out[known[ident]] = tuple(v)
    missing = [i for i in known if i not in node]
    if missing:
        raise DocumentError(f"facet_classes: missing {', '.join(missing)}")
    return FacetClasses(n, out)


def _transports(n: int, S: CoefficientSystem, node: dict) -> TransportData:
    known = {facet_id(f): f for f in facets(n)}
    for part in ("maps", "signs"):
        for ident in node.get(part, {}):
            if ident not in known:
                raise DocumentError(f"transports/{part}: {ident} is not a facet of the {n}-cube")
    fs = facets(n)
    M = (_group(node["target"], "transports/target") if "target" in node
         else S.group(fs[0].interval))
    maps = {}
    for f in fs:
        ident = facet_id(f)
        G = S.group(f.interval)
        where = f"transports/maps/{ident}"
        if ident in node.get("maps", {}):
            maps[f] = GroupHom(G, M, _matrix(node["maps"][ident], M.generators, G.generators, where))
        elif G == M:
            maps[f] = GroupHom.identity(G)
        else:
            raise DocumentError(f"{where}: required, since the facet group differs from the target")
    signs = dict(default_orientation(n))
    for ident, s in node.get("signs", {}).items():
        signs[known[ident]] = s
    try:
        return TransportData(M, maps, signs)
    except ObstructionInputError as e:
        raise DocumentError(f"transports: {e}") from None


def build_document(data: dict[str, Any]) -> Document:
    kind = data["kind"]
    options = dict(data.get("options", {}))
    if kind == "poset":
        P = _poset(data["poset"])
        domain = [I.key for I in P.intervals()]
        K = None
    else:
        K = _complex(data["complex"])
        P = cube_poset(K.ambient_dim)
        domain = K.intervals()
    S = _system(P, domain, data["system"])
    doc = Document(kind, P, S, K, options, description=data.get("description", ""))
    if kind == "obstruction":
        if "boundary" not in data["complex"]:
            raise DocumentError("complex: an obstruction instance needs {\"boundary\": n}")
        n = K.ambient_dim
        doc.facet_classes = _facet_classes(n, S, data["facet_classes"])
        if "transports" in data:
            doc.transports = _transports(n, S, data["transports"])
    return doc


def validate_document(doc: Document) -> list[str]:
    """Human-readable problems, first one first; empty when the document is valid."""
    return [str(v) for v in validate(doc.system)]


def shared_interval_notes(doc: Document) -> list[str]:
    """Positive-length intervals lying in several maximal cells, where coefficient
    data supplied for one cell is silently shared with the others."""
    if doc.complex is None:
        return []
    shared = [c for c, _ in validate_complex(doc.complex).shared_intervals if c.dim > 0]
    if not shared:
        return []
    return [f"{len(shared)} intervals lie in two or more maximal cells: "
            + ", ".join(interval_name(c.interval) for c in shared)]


__all__ = ["Document", "DocumentError", "ParseError", "SCHEMA_VERSION", "build_document",
           "element_name", "interval_name", "load_document", "load_schema", "loads_document",
           "parse_json", "shared_interval_notes", "validate_document"]
