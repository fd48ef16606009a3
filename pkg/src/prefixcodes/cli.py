"""Command-line front-end.

Subcommands: huffman, check, swaps, sync, verify.  Exit codes: 0 on a
success / affirmative answer, 1 on a negative finding, 2 on input
errors, 3 when a resource guard (cap, alphabet size) trips.  Rationals
are always printed exactly, never as decimals.

File formats:
  source file: one `symbol value` per line, value a fraction `p/q` or a
    positive integer weight (weights are normalized by their total);
    `#` starts a comment.
  code file: one `symbol bitstring` per line, same comment rule.
  certificate: one move per line, `kind row_u idx_u row_v idx_v`.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from .analysis import PropertyReport, classify
from .core import (
    CodeTree,
    PrefixCode,
    Source,
    code_from_tree,
    expected_length,
    tree_from_code,
)
from .errors import (
    AlphabetTooLarge,
    CapExceeded,
    CodeError,
    ParseError,
    SubsetCapExceeded,
    Truncated,
)
from .huffman import (
    ChildOrder,
    Selector,
    TiePolicy,
    huffman_build,
    huffman_enumerate,
)
from .oracle import VERIFY_MAX_SYMBOLS, builtin_corpus, verify_theorems
from .swaps import (
    DEFAULT_CLOSURE_CAP,
    SwapKind,
    move_to_text,
    node_swap,
    swap_closure,
    swap_equivalent,
)
from .sync import shortest_sync_string

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


def parse_source_text(text: str) -> Source:
    entries = []
    weights_only = True
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("line %d: expected 'symbol value'" % lineno)
        sym, value = parts
        try:
            frac = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ParseError("line %d: bad value %r" % (lineno, value)) from None
        if "/" in value or frac.denominator != 1:
            weights_only = False
        entries.append((sym, frac))
    if not entries:
        raise ParseError("empty source file")
    try:
        if weights_only:
            return Source.from_weights(
                (sym, int(frac)) for sym, frac in entries)
        return Source(entries)
    except CodeError as exc:
        raise ParseError(str(exc)) from None


def parse_code_text(text: str) -> PrefixCode:
    words = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("line %d: expected 'symbol bitstring'" % lineno)
        words.append((parts[0], parts[1]))
    if not words:
        raise ParseError("empty code file")
    try:
        return PrefixCode(words)
    except CodeError as exc:
        raise ParseError(str(exc)) from None


def _load_source(path: str) -> Source:
    with open(path, encoding="utf-8") as fh:
        return parse_source_text(fh.read())


def _load_code(path: str) -> PrefixCode:
    with open(path, encoding="utf-8") as fh:
        return parse_code_text(fh.read())


def tree_to_dot(tree: CodeTree) -> str:
    """Graphviz rendering: probabilities on nodes, 0/1 on edges."""
    lines = ["digraph codetree {", "  node [shape=circle];"]
    for node in tree.nodes:
        if node.is_leaf:
            lines.append('  n%d [shape=box label="%s\\n%s"];'
                         % (node.id, node.symbol, node.prob))
        else:
            lines.append('  n%d [label="%s"];' % (node.id, node.prob))
    for node in tree.nodes:
        if node.left is not None:
            lines.append('  n%d -> n%d [label="0"];' % (node.id, node.left))
        if node.right is not None:
            lines.append('  n%d -> n%d [label="1"];' % (node.id, node.right))
    lines.append("}")
    return "\n".join(lines)


def _policy(name: str) -> TiePolicy:
    selector, _, order = name.partition("-")
    return TiePolicy(
        selector=Selector.FIRST_INDEX if selector == "first"
        else Selector.LAST_INDEX,
        child_order=ChildOrder.SMALLER_LEFT if order == "left"
        else ChildOrder.SMALLER_RIGHT)


def _parse_kinds(text: str) -> set:
    kinds = set()
    for part in text.split(","):
        part = part.strip()
        try:
            kinds.add(SwapKind(part))
        except ValueError:
            raise ParseError("unknown swap kind %r (use parent,row,prob)"
                             % part) from None
    return kinds


def cmd_huffman(args) -> int:
    source = _load_source(args.source)
    if args.all:
        trees = huffman_enumerate(source, cap=args.cap)
        if args.json:
            print(json.dumps({
                "count": len(trees),
                "trees": [t.label for t in trees],
                "expected_length": str(trees[0].expected_length()),
            }, indent=2))
        else:
            print("%d Huffman trees" % len(trees))
            for tree in trees:
                print(tree.label)
        return EXIT_OK
    tree = huffman_build(source, _policy(args.policy))
    code = code_from_tree(tree)
    if args.dot:
        print(tree_to_dot(tree))
        return EXIT_OK
    if args.json:
        print(json.dumps({
            "code": dict(code.words),
            "lengths": code.lengths(),
            "expected_length": str(expected_length(source, code)),
            "tree": tree.label,
        }, indent=2))
    else:
        for sym in source.symbols:
            print("%s %s %d" % (sym, code.word(sym), len(code.word(sym))))
        print("expected length %s" % expected_length(source, code))
    return EXIT_OK


def _report_json(report: PropertyReport) -> dict:
    witness = None
    if report.witness is not None:
        witness = {"A": list(report.witness.A), "B": list(report.witness.B),
                   "i": report.witness.i, "j": report.witness.j}
    return {
        "complete": report.complete,
        "kraft_total": str(report.kraft_total),
        "monotone": report.monotone,
        "strongly_monotone": report.strongly_monotone,
        "witness": witness,
        "optimal": report.optimal,
        "expected_length": str(report.expected_len),
        "huffman_length": str(report.huffman_len),
        "huffman_member": report.huffman_member,
        "length_equivalent_to_huffman": report.length_equivalent_to_huffman,
    }


def cmd_check(args) -> int:
    source = _load_source(args.source)
    code = _load_code(args.code)
    report = classify(source, code)
    if args.json:
        print(json.dumps(_report_json(report), indent=2))
    else:
        print("complete            %s" % report.complete)
        print("kraft sum           %s" % report.kraft_total)
        print("monotone            %s" % report.monotone)
        print("strongly monotone   %s" % report.strongly_monotone)
        if report.witness is not None:
            w = report.witness
            print("  violation: A={%s} B={%s} i=%d j=%d"
                  % (",".join(w.A), ",".join(w.B), w.i, w.j))
        print("optimal             %s" % report.optimal)
        print("expected length     %s" % report.expected_len)
        print("huffman length      %s" % report.huffman_len)
        print("huffman code        %s" % report.huffman_member)
        print("length-equiv to H   %s" % report.length_equivalent_to_huffman)
    return EXIT_OK if report.optimal else EXIT_NEGATIVE


def cmd_swaps(args) -> int:
    source = _load_source(args.source)
    start = tree_from_code(source, _load_code(args.from_code))
    kinds = _parse_kinds(args.kinds)
    if args.to_code:
        target = tree_from_code(source, _load_code(args.to_code))
        moves = swap_equivalent(source, start, target, kinds, cap=args.cap)
        if moves is None:
            print("NOT EQUIVALENT")
            return EXIT_NEGATIVE
        current = start
        lines = []
        for move in moves:
            lines.append(move_to_text(current, move))
            current = node_swap(current, move)
        if args.json:
            print(json.dumps({"equivalent": True, "certificate": lines},
                             indent=2))
        else:
            for line in lines:
                print(line)
        return EXIT_OK
    closure = swap_closure(source, start, kinds, cap=args.cap)
    if args.json:
        print(json.dumps({
            "size": len(closure.members),
            "truncated": closure.truncated,
            "members": list(closure.members),
        }, indent=2))
    else:
        print("closure size %d%s" % (len(closure.members),
                                     " (truncated)" if closure.truncated
                                     else ""))
        for label in closure.members:
            print(label)
    return EXIT_OK


def cmd_sync(args) -> int:
    source = _load_source(args.source)
    tree = tree_from_code(source, _load_code(args.code))
    result = shortest_sync_string(tree)
    if args.json:
        print(json.dumps({
            "exists": result.exists,
            "string": result.string,
            "explored_subsets": result.explored_subsets,
        }, indent=2))
    else:
        print(result.string if result.exists else "NONE")
    return EXIT_OK if result.exists else EXIT_NEGATIVE


def cmd_verify(args) -> int:
    if args.corpus:
        sources = builtin_corpus()
    elif args.source:
        sources = [(args.source, _load_source(args.source))]
    else:
        raise ParseError("verify needs a source file or --corpus")
    max_n = min(args.max_n, VERIFY_MAX_SYMBOLS)
    all_ok = True
    results = []
    for name, source in sources:
        if len(source) > max_n:
            raise AlphabetTooLarge(
                "%s has %d symbols, limit %d" % (name, len(source), max_n))
        report = verify_theorems(source)
        results.append((name, report))
        all_ok = all_ok and report.all_passed
    if args.json:
        print(json.dumps([{
            "source": name,
            "all_passed": report.all_passed,
            "checks": [{"name": c.name, "passed": c.passed,
                        "detail": c.detail} for c in report.checks],
        } for name, report in results], indent=2))
    else:
        for name, report in results:
            print("== %s" % name)
            for check in report.checks:
                status = "PASS" if check.passed else "FAIL"
                print("  %s %-55s %s" % (status, check.name, check.detail))
    return EXIT_OK if all_ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prefixcodes",
        description="Analyze minimum-expected-length binary prefix codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("huffman", help="build or enumerate Huffman codes")
    p.add_argument("source")
    p.add_argument("--all", action="store_true",
                   help="enumerate every tie-break outcome")
    p.add_argument("--policy", default="first-left",
                   choices=["first-left", "first-right",
                            "last-left", "last-right"])
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cap", type=int, default=100_000)
    p.set_defaults(func=cmd_huffman)

    p = sub.add_parser("check", help="property report for a code")
    p.add_argument("source")
    p.add_argument("code")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("swaps", help="swap closures and certificates")
    p.add_argument("source")
    p.add_argument("--from", dest="from_code", required=True)
    p.add_argument("--to", dest="to_code")
    p.add_argument("--kinds", default="parent,row,prob")
    p.add_argument("--cap", type=int, default=DEFAULT_CLOSURE_CAP)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_swaps)

    p = sub.add_parser("sync", help="shortest self-synchronizing string")
    p.add_argument("source")
    p.add_argument("code")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sync)

    p = sub.add_parser("verify", help="run the brute-force theorem checks")
    p.add_argument("source", nargs="?")
    p.add_argument("--corpus", action="store_true")
    p.add_argument("--max-n", type=int, default=VERIFY_MAX_SYMBOLS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except (AlphabetTooLarge, CapExceeded, SubsetCapExceeded,
            Truncated) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_GUARD
    except CodeError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
