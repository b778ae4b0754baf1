"""Command-line front end.

Inputs are JSON documents {"dim": d, "points": [[..], ..], "name": optional}
or the built-in example names a3, kp2, f2.  Output is deterministic text, or
machine-readable JSON with --json.

Exit codes: 0 success/verified, 1 verification failure, 2 invalid input,
3 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .builtin import BUILTIN_DOCUMENTS
from .discriminant import principal_a_determinant
from .elimination import Budget, BudgetExceeded
from .ktheory import verify_theorem
from .polynomial import IntPolynomial
from .polytope import InvalidConfiguration, faces, validate_aset
from .report import build_report, records_to_json, report_to_dict
from .secondary import NotAnEdge, edge_data, secondary_polytope

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_BUDGET = 3


class CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _load_document(path: str) -> dict:
    if path in BUILTIN_DOCUMENTS:
        return dict(BUILTIN_DOCUMENTS[path])
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise CliError(EXIT_INVALID_INPUT, "cannot read input: %s" % exc)
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_INVALID_INPUT, "malformed document: %s" % exc)
    if not isinstance(doc, dict) or "dim" not in doc or "points" not in doc:
        raise CliError(
            EXIT_INVALID_INPUT, 'malformed document: need {"dim": .., "points": ..}'
        )
    return doc


def _load_aset(path: str):
    doc = _load_document(path)
    try:
        aset = validate_aset(int(doc["dim"]), doc["points"])
    except (InvalidConfiguration, TypeError, ValueError) as exc:
        code = getattr(exc, "code", str(exc))
        raise CliError(EXIT_INVALID_INPUT, "invalid A-set: %s" % code)
    return aset, doc.get("name")


def _budget(args) -> Budget:
    return Budget(seconds=args.budget, max_terms=args.terms)


def _poly_str(poly: IntPolynomial, n: int) -> str:
    return poly.to_str()


def _emit(args, text_lines, json_payload) -> None:
    if args.json:
        sys.stdout.write(json.dumps(json_payload, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def cmd_validate(args) -> int:
    aset, name = _load_aset(args.input)
    fs = faces(aset)
    lines = [
        "name: %s" % (name or "-"),
        "dim: %d" % aset.dim,
        "n: %d" % aset.n,
        "height: %s" % (list(aset.height),),
        "faces: %d" % len(fs),
    ]
    payload = {
        "name": name,
        "dim": aset.dim,
        "n": aset.n,
        "height": list(aset.height),
        "faces": len(fs),
    }
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_faces(args) -> int:
    aset, name = _load_aset(args.input)
    fs = faces(aset)
    lines = ["faces of %s (dim, indices, support, offset):" % (name or args.input)]
    rows = []
    for f in fs:
        lines.append(
            "  dim %d  indices %s  support %s  offset %d"
            % (f.dim, list(f.indices), list(f.support), f.offset)
        )
        rows.append(
            {
                "dim": f.dim,
                "indices": list(f.indices),
                "support": list(f.support),
                "offset": f.offset,
            }
        )
    _emit(args, lines, {"name": name, "faces": rows})
    return EXIT_OK


def cmd_secondary(args) -> int:
    aset, name = _load_aset(args.input)
    sp = secondary_polytope(aset)
    lines = [
        "secondary polytope of %s" % (name or args.input),
        "dim: %d" % sp.dim,
        "vertices: %d" % len(sp.phis),
    ]
    for k, (tri, phi) in enumerate(zip(sp.triangulations, sp.phis)):
        lines.append(
            "  [%d] phi %s  simplices %s"
            % (k, list(phi), [list(s) for s in tri.simplices])
        )
    lines.append("edges: %s" % ([list(e) for e in sp.edges],))
    payload = {
        "name": name,
        "dim": sp.dim,
        "vertices": [
            {"phi": list(phi), "simplices": [list(s) for s in tri.simplices]}
            for tri, phi in zip(sp.triangulations, sp.phis)
        ],
        "edges": [list(e) for e in sp.edges],
    }
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_edge(args) -> int:
    aset, name = _load_aset(args.input)
    sp = secondary_polytope(aset)
    i, j = args.pair
    try:
        ed = edge_data(sp, i, j)
    except NotAnEdge:
        raise CliError(EXIT_INVALID_INPUT, "not an edge: %d %d" % (i, j))
    lines = [
        "edge %d-%d of %s" % (ed.vertex_pair[0], ed.vertex_pair[1], name or args.input),
        "endpoints: %s | %s"
        % (
            [list(s) for s in ed.endpoints[0].simplices],
            [list(s) for s in ed.endpoints[1].simplices],
        ),
        "circuit: indices %s relation %s"
        % (list(ed.circuit.indices), list(ed.circuit.relation)),
        "separating sets: %s" % ([list(j_) for j_ in ed.separating_sets],),
        "common simplices: %s" % ([list(s) for s in ed.common_simplices],),
        "subdivision cells: %s"
        % ([[list(m.vertices_hull), list(m.marks)] for m in ed.subdivision],),
        "psi: %s" % ([str(x) for x in ed.psi],),
    ]
    payload = {
        "name": name,
        "vertex_pair": list(ed.vertex_pair),
        "endpoints": [
            [list(s) for s in ed.endpoints[0].simplices],
            [list(s) for s in ed.endpoints[1].simplices],
        ],
        "circuit": {
            "indices": list(ed.circuit.indices),
            "relation": list(ed.circuit.relation),
        },
        "separating_sets": [list(j_) for j_ in ed.separating_sets],
        "common_simplices": [list(s) for s in ed.common_simplices],
        "subdivision": [
            {"vertices_hull": list(m.vertices_hull), "marks": list(m.marks)}
            for m in ed.subdivision
        ],
        "psi": [str(x) for x in ed.psi],
    }
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_edet(args) -> int:
    aset, name = _load_aset(args.input)
    result = principal_a_determinant(aset, _budget(args))
    lines = ["principal A-determinant of %s" % (name or args.input)]
    rows = []
    for f in result.factors:
        if f.discriminant is None:
            desc = "BUDGET EXCEEDED: %s" % f.error
        else:
            desc = _poly_str(f.discriminant, aset.n)
        lines.append(
            "  face %s  u %d  i %d  exponent %d  discriminant %s"
            % (list(f.face.indices), f.u, f.index, f.exponent, desc)
        )
        rows.append(
            {
                "face": list(f.face.indices),
                "u": f.u,
                "i": f.index,
                "exponent": f.exponent,
                "discriminant": records_to_json(
                    None
                    if f.discriminant is None
                    else tuple(
                        (r["coeff"], tuple(r["exps"]))
                        for r in f.discriminant.to_records()
                    )
                ),
                "error": f.error,
            }
        )
    if result.e_a is not None:
        lines.append("E_A = %s" % _poly_str(result.e_a, aset.n))
        lines.append("terms: %d" % len(result.e_a.terms))
        ea_json = [
            {"coeff": r["coeff"], "exps": r["exps"]} for r in result.e_a.to_records()
        ]
    else:
        lines.append("E_A: incomplete (budget exceeded)")
        ea_json = None
    payload = {"name": name, "factors": rows, "e_a": ea_json}
    _emit(args, lines, payload)
    return EXIT_OK if result.e_a is not None else EXIT_BUDGET


def cmd_multiplicities(args) -> int:
    aset, name = _load_aset(args.input)
    result = verify_theorem(aset, _budget(args))
    lines = ["multiplicities of %s (per edge, per face)" % (name or args.input)]
    rows = []
    for e in result.edges:
        lines.append(
            "  edge %s circuit %s: %s"
            % (
                list(e.vertex_pair),
                list(e.circuit_indices),
                "skipped (%s)" % e.detail
                if e.status == "skipped"
                else [[list(f), n] for f, n in e.multiplicities],
            )
        )
        rows.append(
            {
                "vertex_pair": list(e.vertex_pair),
                "circuit": list(e.circuit_indices),
                "status": e.status,
                "multiplicities": [
                    {"face": list(f), "n": n} for f, n in e.multiplicities
                ],
            }
        )
    _emit(args, lines, {"name": name, "edges": rows})
    if result.status == "fail":
        return EXIT_VERIFICATION_FAILED
    if result.status == "budget":
        return EXIT_BUDGET
    return EXIT_OK


def cmd_verify(args) -> int:
    aset, name = _load_aset(args.input)
    result = verify_theorem(aset, _budget(args))
    report = build_report(result, name)
    lines = ["verification of %s" % (name or args.input)]
    lines.append("triangulations: %d" % report.triangulation_count)
    for e in report.edges:
        if e.status == "skipped":
            lines.append(
                "  edge %s circuit %s: SKIPPED (%s)"
                % (list(e.vertex_pair), list(e.circuit_indices), e.detail)
            )
            continue
        contrib = " + ".join(
            "%d*%d" % (n, next(fr.k0_rank for fr in report.face_ranks if fr.indices == f))
            for f, n in e.multiplicities
            if n
        ) or "0"
        mark = "ok" if e.status == "ok" else "FAIL (%s)" % e.detail
        lines.append(
            "  edge %s circuit %s: lhs %d = %s : %s"
            % (list(e.vertex_pair), list(e.circuit_indices), e.zf_rank, contrib, mark)
        )
    lines.append("status: %s" % report.status)
    _emit(args, lines, report_to_dict(report))
    if report.status == "fail":
        return EXIT_VERIFICATION_FAILED
    if report.status == "budget":
        return EXIT_BUDGET
    return EXIT_OK


def cmd_example(args) -> int:
    if args.name not in BUILTIN_DOCUMENTS:
        raise CliError(
            EXIT_INVALID_INPUT,
            "unknown example %r; available: %s"
            % (args.name, ", ".join(sorted(BUILTIN_DOCUMENTS))),
        )
    sys.stdout.write(json.dumps(BUILTIN_DOCUMENTS[args.name], indent=2) + "\n")
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument(
        "--budget",
        type=float,
        default=None,
        help="oracle budget in seconds (default GKZ_BUDGET_SECS or 60)",
    )
    parser.add_argument(
        "--terms", type=int, default=None, help="cap on intermediate polynomial terms"
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed for randomized survey tooling (unused by deterministic commands)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gkzrank",
        description="Exact secondary-polytope, discriminant and K-theory rank toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    commands = [
        ("validate", cmd_validate, "validate an A-set document"),
        ("faces", cmd_faces, "list the faces of Q = conv(A)"),
        ("secondary", cmd_secondary, "vertices and edges of the secondary polytope"),
        ("edge", cmd_edge, "circuit and subdivision data of one edge"),
        ("edet", cmd_edet, "principal A-determinant and per-face exponents"),
        ("multiplicities", cmd_multiplicities, "per-edge, per-face multiplicities"),
        ("verify", cmd_verify, "verify the rank identity on every edge"),
    ]
    for name, fn, help_text in commands:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="path to a JSON document or a built-in name")
        if name == "edge":
            p.add_argument(
                "--pair",
                nargs=2,
                type=int,
                required=True,
                metavar=("I", "J"),
                help="vertex indices of the edge",
            )
        _add_common(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("example", help="print a built-in example document")
    p.add_argument("name", help="a3, kp2 or f2")
    _add_common(p)
    p.set_defaults(fn=cmd_example)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return exc.code
    except BudgetExceeded as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
