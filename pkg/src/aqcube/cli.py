"""``aqcube`` command line.

Exit codes: 0 ok or LIFTS, 1 OBSTRUCTED, 2 invalid input, 3 unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from math import factorial

from .abgrp import cohomology_at, format_group
from .aq_complex import ComplexError, build_dphi
from .cube_cat import cube_face_counts, mapping_space_shape, vertices
from .cubical_complex import build_limit_complex
from .document import Document, DocumentError, ParseError, element_name, load_document, \
    shared_interval_notes, validate_document
from .local_system import InvalidSystemError
from .obstruction import (ObstructionInputError, UnsupportedCaseError, assemble_cocycle,
                          decide_vanishing, obstruction_complex, total_class)

EXIT_OK, EXIT_OBSTRUCTED, EXIT_INVALID, EXIT_PARSE = 0, 1, 2, 3
MAX_CUBE_INFO = 7


class CommandError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load(path: str) -> Document:
    try:
        return load_document(path)
    except (ParseError, DocumentError) as e:
        raise CommandError(str(e), e.exit_code) from None


def _build(doc: Document):
    """The complex a document describes."""
    o = doc.options
    try:
        if doc.kind == "poset":
            return build_dphi(doc.poset, doc.system, offset=o.get("offset"))
        if doc.kind == "obstruction":
            return obstruction_complex(doc.n, doc.system, linear=o.get("linear", False))
        return build_limit_complex(doc.complex, doc.system, o.get("coefficient_degree", 0))
    except (InvalidSystemError, ComplexError, UnsupportedCaseError, ObstructionInputError) as e:
        raise CommandError(str(e), EXIT_INVALID) from None


def _group_json(G) -> dict:
    r, t = G.canonical()
    return {"rank": r, "torsion": list(t)}


def cmd_validate(args, out) -> int:
    doc = _load(args.file)
    problems = validate_document(doc)
    if problems:
        out.write(f"invalid: {problems[0]}\n")
        if len(problems) > 1:
            out.write(f"({len(problems) - 1} further violations)\n")
        return EXIT_INVALID
    _build(doc)
    out.write(f"ok: {doc.kind} document, {len(doc.system.groups)} intervals, "
              f"{len(doc.system.maps)} maps\n")
    for note in shared_interval_notes(doc):
        out.write(f"note: {note}\n")
    return EXIT_OK


def cmd_cohomology(args, out) -> int:
    doc = _load(args.file)
    C = _build(doc)
    if args.degree is not None:
        degrees = [args.degree]
    else:
        degrees = list(C.degrees)
    groups = {k: cohomology_at(C, k) for k in degrees}
    counts = [len(C.summands(k)) for k in C.degrees]
    if args.json:
        json.dump({"degrees": {str(k): _group_json(G) for k, G in groups.items()},
                   "offset": C.offset,
                   "interval_counts": counts}, out, sort_keys=True)
        out.write("\n")
        return EXIT_OK
    for k, G in groups.items():
        out.write(f"H^{k} = {format_group(*G.canonical(), ascii=args.ascii)}\n")
    out.write("intervals by length: " + " ".join(map(str, counts)) + "\n")
    return EXIT_OK


def cmd_obstruct(args, out) -> int:
    doc = _load(args.file)
    if doc.kind != "obstruction":
        raise CommandError(f"{args.file}: expected an obstruction document, got kind {doc.kind!r}",
                           EXIT_INVALID)
    C = _build(doc)
    try:
        cocycle = assemble_cocycle(C, doc.facet_classes)
        res = decide_vanishing(C, cocycle)
    except ObstructionInputError as e:
        raise CommandError(str(e), EXIT_INVALID) from None
    total = total_class(doc.facet_classes, doc.transports) if doc.transports else None
    rank, tors = res.cohomology
    free, tc = res.class_coordinates
    if args.json:
        payload = {"verdict": res.verdict, "cocycle": list(res.cocycle),
                   "H1": {"rank": rank, "torsion": list(tors)},
                   "class": {"free": list(free), "torsion": list(tc)},
                   "certificate": list(res.certificate) if res.certificate is not None else None}
        if total is not None:
            payload["total_class"] = list(total)
            payload["total_class_vanishes"] = doc.transports.target.contains_relation(total)
        json.dump(payload, out, sort_keys=True)
        out.write("\n")
    else:
        out.write(f"{res.verdict}\n")
        out.write(f"H^1 = {format_group(rank, tors, ascii=args.ascii)}\n")
        out.write(f"cocycle: {list(res.cocycle)}\n")
        if res.vanishes:
            out.write(f"certificate: {list(res.certificate)}\n")
        else:
            out.write(f"class: free {list(free)} torsion {list(tc)}\n")
        if total is not None:
            out.write(f"total class: {list(total)}\n")
    return EXIT_OK if res.vanishes else EXIT_OBSTRUCTED


def cmd_cube_info(args, out) -> int:
    n = args.n
    if not 0 <= n <= MAX_CUBE_INFO:
        raise CommandError(f"cube-info supports 0 <= n <= {MAX_CUBE_INFO} (permutohedra grow "
                           f"factorially), got {n}", EXIT_INVALID)
    faces = cube_face_counts(n)
    out.write(f"cube [1]^{n}\n")
    out.write("faces by dimension: " + " ".join(map(str, faces)) + "\n")
    # an interval of length k is the vertex set of a k-face
    out.write("intervals by length: " + " ".join(map(str, faces)) + "\n")
    vs = vertices(n)
    ranks = Counter()
    for J in vs:
        for Jp in vs:
            P = mapping_space_shape(n, J, Jp)
            if P is not None and J != Jp:
                ranks[P.rank] += 1
    out.write("mapping spaces by permutohedron rank: "
              + ", ".join(f"rank {r}: {ranks[r]}" for r in sorted(ranks)) + "\n")
    if n >= 1:
        lo, hi = (0,) * n, (1,) * n
        P = mapping_space_shape(n, lo, hi)
        nv = factorial(P.rank + 1)
        out.write(f"{element_name(lo)} -> {element_name(hi)}: {P.shape_name()}, rank {P.rank}, "
                  f"{nv} vertices\n")
        if P.rank <= 5:
            out.write("  f-vector: " + " ".join(map(str, P.f_vector())) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="aqcube", description="Interval cochain complexes, "
                                "cohomology and cube lifting obstructions.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check an input document")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    c = sub.add_parser("cohomology", help="cohomology groups of the document's complex")
    c.add_argument("file")
    g = c.add_mutually_exclusive_group()
    g.add_argument("--degree", type=int, default=None)
    g.add_argument("--all", action="store_true", help="every supported degree (default)")
    c.add_argument("--json", action="store_true")
    c.add_argument("--ascii", action="store_true", help="write Z and + instead of ℤ and ⊕")
    c.set_defaults(func=cmd_cohomology)

    o = sub.add_parser("obstruct", help="decide the boundary lifting obstruction")
    o.add_argument("file")
    o.add_argument("--json", action="store_true")
    o.add_argument("--ascii", action="store_true")
    o.set_defaults(func=cmd_obstruct)

    i = sub.add_parser("cube-info", help="face and mapping-space counts for [1]^n")
    i.add_argument("n", type=int)
    i.set_defaults(func=cmd_cube_info)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CommandError as e:
        err.write(f"aqcube: {e}\n")
        return e.code


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
