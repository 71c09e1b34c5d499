"""``edgeflip`` command line.

Exit codes: 0 success, 1 usage or input error, 2 unsolvable pair,
3 search or closure cap exceeded, 4 self-check failure. Errors go to stderr
as one JSON line ``{"error": kind, "detail": ...}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .cayley import DEFAULT_CAP
from .edgespace import EdgeSet, edge_set_json, format_edge_set, parse_edge_set
from .errors import CapExceeded, EdgeFlipError
from .flips import format_moves
from .graph import SEARCH_LIMIT, line_graph, load_graph
from .orbits import classify, closed_form_partition, orbit_count, orbit_size
from .solver import DEFAULT_STATE_CAP, solve
from .structure import groups_isomorphic, structure, verify_structure
from .vertexflip import YGraphSpec, classify_Y, pi1

EXIT_OK, EXIT_USAGE, EXIT_UNSOLVABLE, EXIT_CAP, EXIT_SELFCHECK = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="edgeflip", description="Edge-flipping puzzle algebra on graphs.")
    p.set_defaults(human=False)
    fmt = _Parser(add_help=False)
    out = fmt.add_mutually_exclusive_group()
    out.add_argument("--json", dest="human", action="store_false", default=False, help="JSON output (default)")
    out.add_argument("--human", dest="human", action="store_true", help="key: value output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[fmt])

    def graph_cmd(name, help_text):
        sp = add(name, help_text)
        sp.add_argument("--graph", required=True, help="graph file (JSON or 'n m' text)")
        return sp

    sp = graph_cmd("classify", "orbit descriptor of a configuration")
    sp.add_argument("--config", "--from", dest="config", required=True,
                    help='edge set, e.g. "0-1,1-2"; "-" for empty')

    sp = graph_cmd("solve", "shortest move sequence between configurations")
    sp.add_argument("--from", dest="source", required=True)
    sp.add_argument("--to", dest="target", required=True)
    sp.add_argument("--cap", type=_positive, default=DEFAULT_STATE_CAP)

    sp = graph_cmd("orbits", "orbit census over all 2^m configurations")
    sp.add_argument("--cap", type=_positive, default=SEARCH_LIMIT, help="largest m to enumerate")

    graph_cmd("order", "order of the edge-flipping group")

    sp = graph_cmd("verify", "brute-force check of the semidirect-product structure")
    sp.add_argument("--cap", type=_positive, default=DEFAULT_CAP)

    sp = add("isomorphic", "same (n, m) criterion for two graphs")
    sp.add_argument("--graph", action="append", required=True, help="give exactly twice")

    sp = add("pi1", "pi1 value and classification of a Y graph")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--attach", required=True, help="comma-separated attachment points")

    graph_cmd("linegraph", "emit the line graph as JSON")
    add("selfcheck", "oracle equivalence on the built-in corpus")
    return p


def _descriptor_json(g, desc) -> dict:
    return {"coset_rep": edge_set_json(g, desc.coset_rep), "class": desc.label,
            "orbit_size": orbit_size(g, desc)}


def _cmd_classify(args):
    g = load_graph(args.graph)
    desc = classify(g, parse_edge_set(g, args.config))
    return EXIT_OK, _descriptor_json(g, desc)


def _cmd_solve(args):
    g = load_graph(args.graph)
    a, b = parse_edge_set(g, args.source), parse_edge_set(g, args.target)
    try:
        sol = solve(g, a, b, args.cap)
    except CapExceeded as exc:
        _emit_error("CapExceeded", str(exc), solvable=True)
        return EXIT_CAP, {"solvable": True, "moves": None, "length": None}
    if not sol.solvable:
        da, db = sol.certificate
        return EXIT_UNSOLVABLE, {"solvable": False, "certificate": {
            "from": _descriptor_json(g, da), "to": _descriptor_json(g, db)}}
    return EXIT_OK, {"solvable": True, "moves": format_moves(g, sol.moves), "length": len(sol.moves)}


def _cmd_orbits(args):
    g = load_graph(args.graph)
    if g.m > args.cap:
        raise CapExceeded(f"m={g.m} exceeds census cap {args.cap}")
    parts = closed_form_partition(g)
    rows = []
    for desc, members in parts.items():
        rows.append({"coset_rep": edge_set_json(g, desc.coset_rep), "class": desc.label,
                     "orbit_size": orbit_size(g, desc), "members": len(members),
                     "example": format_edge_set(g, EdgeSet(min(members), g.m))})
    rows.sort(key=lambda r: (r["coset_rep"], r["class"]))
    return EXIT_OK, {"n": g.n, "m": g.m, "orbit_count": orbit_count(g),
                     "configurations": 2 ** g.m, "orbits": rows}


def _cmd_order(args):
    return EXIT_OK, structure(load_graph(args.graph)).to_json()


def _cmd_verify(args):
    report = verify_structure(load_graph(args.graph), cap=args.cap)
    return (EXIT_OK if report.ok else EXIT_SELFCHECK), report.to_json()


def _cmd_isomorphic(args):
    if len(args.graph) != 2:
        raise UsageError("isomorphic needs --graph twice")
    g1, g2 = (load_graph(p) for p in args.graph)
    return EXIT_OK, {"isomorphic": groups_isomorphic(g1, g2),
                     "n": [g1.n, g2.n], "m": [g1.m, g2.m]}


def _cmd_pi1(args):
    try:
        attach = tuple(int(x) for x in args.attach.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"bad --attach {args.attach!r}") from None
    spec = YGraphSpec(args.m, attach)
    desc = classify_Y(spec)
    out = {"pi1": pi1(spec), "classification": desc.describe()}
    if desc.order is not None:
        out["order"] = str(desc.order)
    return EXIT_OK, out


def _cmd_linegraph(args):
    return EXIT_OK, line_graph(load_graph(args.graph)).to_json()


def _cmd_selfcheck(args):
    from .checks import selfcheck
    report = selfcheck()
    return (EXIT_OK if report["ok"] else EXIT_SELFCHECK), report


COMMANDS = {
    "classify": _cmd_classify, "solve": _cmd_solve, "orbits": _cmd_orbits,
    "order": _cmd_order, "verify": _cmd_verify, "isomorphic": _cmd_isomorphic,
    "pi1": _cmd_pi1, "linegraph": _cmd_linegraph, "selfcheck": _cmd_selfcheck,
}


def _emit_error(kind: str, detail: str, **extra) -> None:
    print(json.dumps({"error": kind, "detail": detail, **extra}, sort_keys=True), file=sys.stderr)


def _render(payload: dict, human: bool) -> str:
    if not human:
        return json.dumps(payload, sort_keys=True)
    return "\n".join(f"{k}: {json.dumps(v, sort_keys=True)}" for k, v in sorted(payload.items()))


def run(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        code, payload = COMMANDS[args.command](args)
    except UsageError as exc:
        _emit_error("UsageError", str(exc))
        return EXIT_USAGE
    except CapExceeded as exc:
        _emit_error(exc.kind, str(exc))
        return EXIT_CAP
    except EdgeFlipError as exc:
        _emit_error(exc.kind, str(exc))
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        _emit_error(type(exc).__name__, str(exc))
        return EXIT_USAGE
    print(_render(payload, args.human))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
