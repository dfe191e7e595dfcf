"""The ``tri`` command line tool.

Subcommands:
    info      summary of a .tri file (skeleton, links, classification)
    sig       canonical isomorphism signature
    check     decision procedures: --angles, --geometric, --efficiency, --degree1
    moves     list applicable moves / apply a move or move script
    explore   bounded Pachner-graph BFS, JSON graph output
    path      shortest 2-3/3-2 path between two .tri files
    rewrite   degree-one-free rewriting of a move path file
    census    read / write signature line files

Exit codes: 0 on success (negative verdicts included), 1 on domain errors,
2 on I/O or format errors.  Verdict-bearing queries never fail the process:
scripting over censuses must distinguish errors from negative answers.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import angles, explorer, files, geom, nsurf
from .errors import FormatError, TriangulationError
from .isosig import decode
from .moves import Move, apply_move, enumerate_moves
from .triangulation import Triangulation

__all__ = ["main", "run"]


def canonical_json(obj):
    """The tool's canonical JSON serializer: sorted keys, no whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(args, payload, text_lines):
    if getattr(args, "format", "text") == "json":
        print(canonical_json(payload))
    else:
        for line in text_lines:
            print(line)


def _load(path):
    try:
        return files.read_tri(path)
    except OSError as exc:
        raise FormatError("cannot read %s: %s" % (path, exc)) from None


def _frac_str(x):
    return "%d/%d" % (Fraction(x).numerator, Fraction(x).denominator)


def _cmd_info(args):
    tri = _load(args.file)
    sk = tri.skeleton
    links = []
    for v in sk.vertices:
        if v.link_is_sphere:
            kind = "sphere"
        elif v.link_is_torus:
            kind = "torus"
        elif v.link_is_klein:
            kind = "klein"
        elif not v.link_closed:
            kind = "boundary"
        else:
            kind = "chi=%d" % v.link_euler
        links.append(kind)
    payload = {
        "n": tri.n,
        "classification": str(tri.classify()),
        "edgeDegrees": [e.degree for e in sk.edges],
        "vertexLinks": links,
        "faceClasses": sk.face_count,
        "sig": tri.iso_sig(),
    }
    lines = [
        "tetrahedra:      %d" % tri.n,
        "classification:  %s" % payload["classification"],
        "edge degrees:    %s" % " ".join(str(d) for d in payload["edgeDegrees"]),
        "vertex links:    %s" % " ".join(links),
        "face classes:    %d" % sk.face_count,
        "iso sig:         %s" % payload["sig"],
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_sig(args):
    tri = _load(args.file)
    print(tri.iso_sig())
    return 0


def _check_angles(args, tri):
    kind = args.angles
    if kind == "generalised":
        vec = angles.find_generalised(tri)
        found, vectors = vec is not None, [vec] if vec is not None else []
    elif kind == "semi":
        vec = angles.find_semi(tri)
        found, vectors = vec is not None, [vec] if vec is not None else []
    elif kind == "strict":
        res = angles.find_strict(tri)
        found, vectors = res.found, [res.vector] if res.found else []
    else:
        vectors = angles.find_taut(tri)
        found = bool(vectors)
    payload = {
        "check": "angles",
        "kind": kind,
        "found": found,
        "vectors": [[_frac_str(x) for x in v] for v in vectors],
    }
    lines = ["%s angle structure: %s" % (kind, "found" if found else "not found")]
    for v in vectors:
        lines.append("  " + " ".join(_frac_str(x) for x in v))
    _emit(args, payload, lines)


def _check_geometric(args, tri):
    verdict = geom.solve(tri, tol=args.tol, max_iter=args.max_iter)
    payload = {
        "check": "geometric",
        "solved": verdict.solved,
        "positivelyOriented": verdict.positively_oriented,
        "residual": verdict.residual,
        "shapes": ["%.15g%+.15gj" % (z.real, z.imag) for z in verdict.shapes],
        "note": verdict.message,
    }
    lines = [
        "geometric candidate: %s"
        % ("yes" if verdict.solved and verdict.positively_oriented else "no"),
        "solved: %s   positively oriented: %s" % (verdict.solved, verdict.positively_oriented),
        "max edge residual: %.3e" % verdict.residual,
        "note: %s" % verdict.message,
    ]
    for i, z in enumerate(verdict.shapes):
        lines.append("  z[%d] = %.15g%+.15gj" % (i, z.real, z.imag))
    _emit(args, payload, lines)


def _check_efficiency(args, tri):
    which = args.efficiency
    if which == "0":
        verdict = nsurf.check_0_efficient(tri, args.max_tets_bound)
    else:
        verdict = nsurf.check_1_efficient(tri, args.max_tets_bound)
    payload = {
        "check": "efficiency",
        "kind": which,
        "status": verdict.status,
        "witness": list(verdict.witness) if verdict.witness else None,
        "note": verdict.note,
    }
    lines = ["%s-efficiency: %s (%s)" % (which, verdict.status, verdict.note)]
    if verdict.witness:
        lines.append("witness: " + " ".join(str(x) for x in verdict.witness))
    _emit(args, payload, lines)


def _cmd_check(args):
    tri = _load(args.file)
    if args.angles:
        _check_angles(args, tri)
    elif args.geometric:
        _check_geometric(args, tri)
    elif args.efficiency:
        _check_efficiency(args, tri)
    elif args.degree1:
        has = explorer.has_degree_one_edge(tri)
        payload = {"check": "degree1", "hasDegreeOneEdge": has}
        _emit(args, payload, ["degree-one edge: %s" % ("present" if has else "none")])
    else:
        print("tri check: pick one of --angles/--geometric/--efficiency/--degree1", file=sys.stderr)
        return 2
    return 0


def _cmd_moves(args):
    tri = _load(args.file)
    kinds = tuple(args.kinds.split(",")) if args.kinds else ("23", "32", "14", "41", "02", "20")
    if args.list:
        moves = enumerate_moves(tri, kinds)
        payload = {"moves": [str(m) for m in moves]}
        _emit(args, payload, [str(m) for m in moves])
        return 0
    if args.apply:
        seq = [Move.parse(args.apply)]
    elif args.script:
        with open(args.script, "r", encoding="utf-8") as fh:
            seq = files.parse_move_script(fh.read())
    else:
        print("tri moves: pick one of --list/--apply/--script", file=sys.stderr)
        return 2
    for move in seq:
        tri = apply_move(tri, move)
    if args.out:
        files.write_tri(args.out, tri)
    payload = {"n": tri.n, "sig": tri.iso_sig()}
    _emit(args, payload, ["applied %d move(s): n=%d sig=%s" % (len(seq), tri.n, payload["sig"])])
    return 0


def _graph_json(graph):
    order = sorted(graph.nodes)
    index = {sig: i for i, sig in enumerate(order)}
    return {
        "version": 1,
        "maxTets": graph.max_tets,
        "moves": list(graph.move_kinds),
        "predicate": graph.predicate,
        "nodes": [
            {"sig": sig, "n": graph.nodes[sig]["n"], "props": graph.nodes[sig]["props"]}
            for sig in order
        ],
        "arcs": [
            {"a": index[a], "b": index[b], "move": str(m)} for a, b, m in graph.arcs
        ],
    }


def _cmd_explore(args):
    tri = _load(args.file)
    kinds = tuple(args.moves.split(","))
    graph = explorer.explore(
        tri,
        args.max_tets,
        move_kinds=kinds,
        predicate=args.predicate,
        node_budget=args.budget,
        threads=args.threads,
    )
    doc = _graph_json(graph)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(canonical_json(doc) + "\n")
    _emit(
        args,
        {"nodes": graph.node_count, "arcs": graph.arc_count},
        ["nodes: %d arcs: %d (bound %d)" % (graph.node_count, graph.arc_count, args.max_tets)],
    )
    return 0


def _cmd_path(args):
    tri_a = _load(args.file_a)
    tri_b = _load(args.file_b)
    path = explorer.find_path(tri_a, tri_b, args.max_tets, node_budget=args.budget)
    if path is None:
        _emit(args, {"found": False}, ["no path within %d tetrahedra" % args.max_tets])
        return 0
    text = files.format_path_file(tri_a.iso_sig(), path.moves)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    payload = {"found": True, "length": len(path.moves), "moves": [str(m) for m in path.moves]}
    _emit(args, payload, ["length %d" % len(path.moves)] + [str(m) for m in path.moves])
    return 0


def _cmd_rewrite(args):
    with open(args.pathfile, "r", encoding="utf-8") as fh:
        start, moves = files.parse_path_file(fh.read())
    path = explorer.make_path(start, moves)
    new_path = explorer.rewrite_path_degree1free(path)
    text = files.format_path_file(start.iso_sig(), new_path.moves)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    payload = {
        "length": len(new_path.moves),
        "moves": [str(m) for m in new_path.moves],
        "endSig": new_path.end_sig,
    }
    _emit(args, payload, ["length %d" % len(new_path.moves)] + [str(m) for m in new_path.moves])
    return 0


def _cmd_census(args):
    if args.action == "read":
        with open(args.target, "r", encoding="utf-8") as fh:
            entries = files.parse_census(fh.read())
        payload = {"count": len(entries), "entries": [{"sig": s, "n": t.n} for s, t in entries]}
        _emit(args, payload, ["%s  n=%d" % (s, t.n) for s, t in entries])
        return 0
    sigs = [_load(p).iso_sig() for p in args.inputs]
    with open(args.target, "w", encoding="utf-8") as fh:
        fh.write(files.format_census(sigs))
    _emit(args, {"written": len(sigs)}, ["wrote %d signature(s) to %s" % (len(sigs), args.target)])
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tri",
        description="Triangulations of 3-manifolds: moves, structures, exploration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("info", help="summarize a .tri file")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("sig", help="canonical isomorphism signature")
    p.add_argument("file")
    p.set_defaults(func=_cmd_sig)

    p = sub.add_parser("check", help="decision procedures")
    p.add_argument("file")
    p.add_argument("--angles", choices=("generalised", "semi", "strict", "taut"))
    p.add_argument("--geometric", action="store_true")
    p.add_argument("--efficiency", choices=("0", "1"))
    p.add_argument("--degree1", action="store_true")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int, default=100)
    p.add_argument("--max-tets", dest="max_tets_bound", type=int, default=nsurf.DEFAULT_SIZE_BOUND)
    add_format(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("moves", help="list or apply moves")
    p.add_argument("file")
    p.add_argument("--list", action="store_true")
    p.add_argument("--kinds")
    p.add_argument("--apply", metavar="MOVE")
    p.add_argument("--script", metavar="FILE")
    p.add_argument("-o", "--out")
    add_format(p)
    p.set_defaults(func=_cmd_moves)

    p = sub.add_parser("explore", help="bounded Pachner graph BFS")
    p.add_argument("file")
    p.add_argument("--max-tets", type=int, required=True)
    p.add_argument("--predicate")
    p.add_argument("--moves", default="23,32")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--budget", type=int, default=explorer.DEFAULT_NODE_BUDGET)
    p.add_argument("--out")
    add_format(p)
    p.set_defaults(func=_cmd_explore)

    p = sub.add_parser("path", help="shortest 2-3/3-2 path between two files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--max-tets", type=int, required=True)
    p.add_argument("--budget", type=int, default=explorer.DEFAULT_NODE_BUDGET)
    p.add_argument("--out")
    add_format(p)
    p.set_defaults(func=_cmd_path)

    p = sub.add_parser("rewrite", help="degree-one-free path rewriting")
    p.add_argument("pathfile")
    p.add_argument("--degree1free", action="store_true", required=True)
    p.add_argument("-o", "--out")
    add_format(p)
    p.set_defaults(func=_cmd_rewrite)

    p = sub.add_parser("census", help="read/write signature line files")
    p.add_argument("action", choices=("read", "write"))
    p.add_argument("target")
    p.add_argument("inputs", nargs="*")
    add_format(p)
    p.set_defaults(func=_cmd_census)

    return parser


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print("tri: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("tri: %s" % exc, file=sys.stderr)
        return 2
    except TriangulationError as exc:
        print("tri: %s" % exc, file=sys.stderr)
        return 1


def main():
    sys.exit(run())
