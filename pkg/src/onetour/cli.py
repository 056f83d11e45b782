"""Command-line front end.

Every JSON document is written canonically (sorted keys, sorted edge lists,
one document per line) so outputs can be compared byte for byte.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, TextIO

from .best import corollary_membership, explain_corollary_failure
from .digraph import DiGraph, explain_not_in_A, in_A, satisfies_lemma1
from .enumeration import brute_force_A, enumerate_A_via_g, verify_theorem1
from .parens import (
    MarkedDigraph,
    ParenArrangement,
    add_loops,
    enumerate_valid,
    inverse_h,
    map_h,
    remove_loops,
)
from .plane_trees import (
    RootedPlaneTree,
    enumerate_L,
    enumerate_Lprime,
    inverse_g,
    involution_f,
    map_g,
)


class InputError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_documents(path: str) -> List[dict]:
    """A single JSON document, or JSON lines."""
    text = _read(path)
    try:
        docs = [json.loads(text)]
    except json.JSONDecodeError:
        docs = []
        for lineno, line in enumerate(text.splitlines(), 1):
            if line.strip():
                try:
                    docs.append(json.loads(line))
                except json.JSONDecodeError as exc:
                    raise InputError(f"{path}:{lineno}: malformed JSON ({exc.msg})") from None
    if not docs:
        raise InputError(f"{path}: no input")
    for doc in docs:
        if not isinstance(doc, dict):
            raise InputError(f"{path}: expected a JSON object, got {type(doc).__name__}")
    return docs


def _parse_edge(text: str):
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an edge as 'u,v', got {text!r}") from None
    return (u, v)


def _emit(out: TextIO, obj) -> None:
    out.write(dumps(obj) + "\n")


def cmd_count(args, out: TextIO) -> int:
    reports = [verify_theorem1(n) for n in args.n]
    if args.json:
        for r in reports:
            out.write(r.dumps() + "\n")
    else:
        header = f"{'n':>3} {'expected':>10} {'brute':>10} {'trees':>10} {'parens':>10}  agree"
        out.write(header + "\n")
        for r in reports:
            cells = [r.via_bruteforce, r.via_tree_bijection, r.via_parens]
            shown = ["-" if c is None else str(c) for c in cells]
            out.write(f"{r.n:>3} {r.expected:>10} " + " ".join(f"{s:>10}" for s in shown)
                      + f"  {'yes' if r.agree else 'NO'}\n")
    return 0 if all(r.agree for r in reports) else 1


def cmd_enumerate(args, out: TextIO) -> int:
    n = args.n
    if args.kind == "A":
        items = (D.to_json() for D in sorted(set(enumerate_A_via_g(n)), key=lambda D: D.edges))
    elif args.kind == "A-brute":
        items = (D.to_json() for D in brute_force_A(n))
    elif args.kind == "L":
        items = (T.to_json() for T in enumerate_L(n))
    elif args.kind == "Lprime":
        items = (T.to_json() for T in enumerate_Lprime(n))
    else:
        if args.text:
            for w in enumerate_valid(n):
                out.write(w.to_text() + "\n")
            return 0
        items = (w.to_json() for w in enumerate_valid(n))
    for obj in items:
        _emit(out, obj)
    return 0


def cmd_tree2digraph(args, out: TextIO) -> int:
    for doc in _load_documents(args.input):
        _emit(out, map_g(RootedPlaneTree.from_json(doc)).to_json())
    return 0


def cmd_involution(args, out: TextIO) -> int:
    for doc in _load_documents(args.input):
        _emit(out, involution_f(RootedPlaneTree.from_json(doc)).to_json())
    return 0


def cmd_digraph2tree(args, out: TextIO) -> int:
    for doc in _load_documents(args.input):
        _emit(out, inverse_g(DiGraph.from_json(doc)).to_json())
    return 0


def cmd_digraph2parens(args, out: TextIO) -> int:
    for doc in _load_documents(args.input):
        D = DiGraph.from_json(doc)
        B = D if not D.is_loopless() else add_loops(D)
        w = map_h(MarkedDigraph(B, args.mark))
        if args.json:
            _emit(out, w.to_json())
        else:
            out.write(w.to_text() + "\n")
    return 0


def cmd_parens2digraph(args, out: TextIO) -> int:
    text = _read(args.input).strip()
    if text.startswith("{"):
        try:
            words = [ParenArrangement.from_json(json.loads(text))]
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed JSON ({exc.msg})") from None
    else:
        words = [ParenArrangement.from_text(line) for line in text.splitlines() if line.strip()]
    if not words:
        raise InputError("no arrangement given")
    for w in words:
        M = inverse_h(w)
        if args.strip_loops:
            _emit(out, remove_loops(M.graph).to_json())
        else:
            _emit(out, M.to_json())
    return 0


def cmd_verify(args, out: TextIO) -> int:
    status = 0
    for doc in _load_documents(args.input):
        D = DiGraph.from_json(doc)
        a = in_A(D)
        report = {
            "n": D.n,
            "in_A": a,
            "lemma1": satisfies_lemma1(D),
            "corollary": corollary_membership(D),
        }
        report["agree"] = report["in_A"] == report["lemma1"] == report["corollary"]
        if not a:
            report["reason"] = explain_not_in_A(D)
        if not report["corollary"]:
            report["corollary_reason"] = explain_corollary_failure(D)
        _emit(out, report)
        if not report["agree"]:
            status = 1
    return status


def cmd_dot(args, out: TextIO) -> int:
    for i, doc in enumerate(_load_documents(args.input)):
        if "children" in doc:
            D = map_g(RootedPlaneTree.from_json(doc))
            mark = None
        else:
            D = DiGraph.from_json(doc)
            mark = tuple(doc["marked"]) if "marked" in doc else None
        out.write(D.to_dot(name=f"D{i}", highlight=mark))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onetour",
        description="Digraphs with exactly one Eulerian tour: counting, bijections, checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count A_n by brute force, trees and parentheses")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--json", action="store_true", help="one JSON report per line")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list objects as JSON lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=["A", "A-brute", "L", "Lprime", "parens"], default="A")
    p.add_argument("--text", action="store_true", help="text form for arrangements")
    p.set_defaults(func=cmd_enumerate)

    def with_input(p):
        p.add_argument("input", nargs="?", default="-", help="input file (default: stdin)")
        return p

    with_input(sub.add_parser("tree2digraph", help="tree JSON -> digraph JSON")).set_defaults(
        func=cmd_tree2digraph)
    with_input(sub.add_parser("involution", help="swap the halves of a tree in L_n")).set_defaults(
        func=cmd_involution)
    with_input(sub.add_parser("digraph2tree", help="digraph JSON -> tree JSON")).set_defaults(
        func=cmd_digraph2tree)

    p = with_input(sub.add_parser("digraph2parens", help="digraph JSON -> arrangement"))
    p.add_argument("--mark", type=_parse_edge, required=True, metavar="U,V",
                   help="edge the tour starts with (after loops are added)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_digraph2parens)

    p = with_input(sub.add_parser("parens2digraph", help="arrangement -> marked digraph JSON"))
    p.add_argument("--strip-loops", action="store_true", help="output the loopless digraph")
    p.set_defaults(func=cmd_parens2digraph)

    with_input(sub.add_parser("verify", help="compare the three membership tests")).set_defaults(
        func=cmd_verify)
    with_input(sub.add_parser("dot", help="Graphviz DOT for a digraph or tree")).set_defaults(
        func=cmd_dot)
    return parser


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InputError, ValueError) as exc:
        print(f"onetour {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
