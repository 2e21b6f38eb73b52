"""Command line interface.

Exit codes: 0 success / PASS, 1 verdict FAIL, 2 usage or parse error,
3 I/O error.
"""
from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import __version__
from .bott import acyclic_twist_range, cohomology
from .collection import (
    BundleNameError,
    bundle_name,
    format_decomposition,
    parse_bundle,
    read_collection,
    verify_collection,
)
from .parabolic import ParabolicData, dual_weight, parse_space
from .reptheory import ext_power, klimyk_tensor, levi_dimension, sym_power
from .roots import DominanceError, RootSystemError, Weight, is_dominant, weyl_dimension

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

_SPACE_TOKEN = re.compile(r"^[ADEade]_?\d+/P_?\d+$")
# negative weights and twist ranges that argparse would mistake for options
_NEGATIVE_TOKEN = re.compile(r"^-\d+(\s*,\s*[-−]?\d+)+$|^-\d+\s*:\s*[-−]?\d+$")
_RAW_WEIGHT = re.compile(r"^\(?\s*[-−]?\d+(\s*,\s*[-−]?\d+)*\s*\)?$")

DECOMPOSE_ARITY = {"tensor": 2, "hom": 2, "sym2": 1, "sym3": 1, "ext2": 1, "end": 1}


class UsageError(Exception):
    pass


def _pretty_weight(w: Sequence[int]) -> str:
    terms = []
    for i, c in enumerate(w, start=1):
        if c:
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(("−" if c < 0 else "+") + f"{mag}ω{i}")
    if not terms:
        return "0"
    text = "".join(terms)
    return text[1:] if text[0] == "+" else text


def parse_operand(P: ParabolicData, text: str) -> Weight:
    if _RAW_WEIGHT.match(text.strip()):
        body = text.strip().strip("()").replace("−", "-")
        w = tuple(int(x) for x in body.split(","))
        if len(w) != P.rank:
            raise UsageError(f"weight {text!r} has {len(w)} coefficients, {P.label} needs {P.rank}")
        return w
    try:
        return parse_bundle(text, P).weight
    except BundleNameError as exc:
        raise UsageError(str(exc)) from None


def _split_space(args: argparse.Namespace, tokens: list[str]) -> tuple[ParabolicData, list[str]]:
    label = args.space
    if tokens and _SPACE_TOKEN.match(tokens[0]):
        label, tokens = tokens[0], tokens[1:]
    try:
        return parse_space(label), tokens
    except (ValueError, RootSystemError) as exc:
        raise UsageError(str(exc)) from None


def _render_result(P: ParabolicData, res) -> str:
    if not res.nonzero:
        return "acyclic"
    return f"H^{res.degree} = V^∨_{{{_pretty_weight(res.g_dominant)}}}, dim {res.dim}"


def _render_trace(res, out: TextIO) -> None:
    for w, node in res.trace:
        arrow = f"  --s{node}-->" if node else ""
        print(f"    ({','.join(str(c) for c in w)}){arrow}", file=out)


def cmd_bott(args: argparse.Namespace, out: TextIO) -> int:
    P, tokens = _split_space(args, args.operands)
    if len(tokens) != 1:
        raise UsageError("bott expects one weight or bundle name")
    lam = parse_operand(P, tokens[0])
    if args.range:
        m = re.fullmatch(r"\s*([-−]?\d+)\s*:\s*([-−]?\d+)\s*", args.range)
        if not m:
            raise UsageError(f"--range expects TMIN:TMAX, got {args.range!r}")
        lo, hi = (int(g.replace("−", "-")) for g in m.groups())
        hits = acyclic_twist_range(P, lam, lo, hi)
        print(f"{bundle_name(P, lam)} twisted by t in [{lo}, {hi}]:", file=out)
        if not hits:
            print("  acyclic for every t", file=out)
        for t, res in hits:
            print(f"  t={t}: {_render_result(P, res)}", file=out)
        return EXIT_OK
    res = cohomology(P, lam, trace=args.trace)
    print(_render_result(P, res), file=out)
    if args.trace:
        _render_trace(res, out)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace, out: TextIO) -> int:
    P, tokens = _split_space(args, args.operands)
    if not tokens or tokens[0] not in DECOMPOSE_ARITY:
        raise UsageError(f"decompose expects a kind among {', '.join(DECOMPOSE_ARITY)}")
    kind, operands = tokens[0], tokens[1:]
    if len(operands) != DECOMPOSE_ARITY[kind]:
        raise UsageError(f"{kind} takes {DECOMPOSE_ARITY[kind]} operand(s), got {len(operands)}")
    ws = [parse_operand(P, t) for t in operands]
    if kind == "tensor":
        dec = klimyk_tensor(P, ws[0], ws[1])
    elif kind == "hom":
        dec = klimyk_tensor(P, dual_weight(P, ws[0]), ws[1])
    elif kind == "end":
        dec = klimyk_tensor(P, dual_weight(P, ws[0]), ws[0])
    elif kind == "ext2":
        dec = ext_power(P, ws[0], 2)
    else:
        dec = sym_power(P, ws[0], int(kind[-1]))
    print(format_decomposition(P, dec, ascii_only=args.ascii), file=out)
    return EXIT_OK


def cmd_dual(args: argparse.Namespace, out: TextIO) -> int:
    P, tokens = _split_space(args, args.operands)
    if len(tokens) != 1:
        raise UsageError("dual expects one weight or bundle name")
    d = dual_weight(P, parse_operand(P, tokens[0]))
    print(f"{bundle_name(P, d, ascii_only=args.ascii)}  [{','.join(str(c) for c in d)}]", file=out)
    return EXIT_OK


def cmd_dim(args: argparse.Namespace, out: TextIO) -> int:
    P, tokens = _split_space(args, args.operands)
    if len(tokens) != 1:
        raise UsageError("dim expects one weight or bundle name")
    lam = parse_operand(P, tokens[0])
    rank = levi_dimension(P, lam)
    line = f"rank {rank}"
    if is_dominant(lam):
        line += f", dim V_{{{_pretty_weight(lam)}}} = {weyl_dimension(P.root_system, lam)}"
    print(line, file=out)
    return EXIT_OK


def cmd_check(args: argparse.Namespace, out: TextIO) -> int:
    P, tokens = _split_space(args, args.operands)
    if len(tokens) != 1:
        raise UsageError("check expects one collection file")
    try:
        bundles = read_collection(Path(tokens[0]), P)
    except OSError as exc:
        print(f"error: cannot read {tokens[0]}: {exc}", file=sys.stderr)
        return EXIT_IO
    except BundleNameError as exc:
        raise UsageError(f"{tokens[0]}: {exc}") from None
    if not bundles:
        raise UsageError(f"{tokens[0]} contains no bundles")
    rep = verify_collection(bundles, strong=args.strong, P=P)
    print(
        f"{rep.verdict} ({rep.mode}, {rep.members} members, {rep.pair_count} ordered pairs, "
        f"{len(rep.witnesses)} witnesses)",
        file=out,
    )
    for w in rep.witnesses:
        print(f"  {w.describe(P)}", file=out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_reproduce(args: argparse.Namespace, out: TextIO) -> int:
    from .report import reproduce_paper

    collection = None
    if args.collection:
        try:
            collection = read_collection(Path(args.collection))
        except OSError as exc:
            print(f"error: cannot read {args.collection}: {exc}", file=sys.stderr)
            return EXIT_IO
        except BundleNameError as exc:
            raise UsageError(f"{args.collection}: {exc}") from None
    doc = reproduce_paper(collection)
    out.write(doc.to_text())
    code = EXIT_OK if doc.verdict == "PASS" else EXIT_FAIL
    if args.json:
        try:
            Path(args.json).write_text(doc.to_json(), encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot write report to {args.json}: {exc}", file=sys.stderr)
            return EXIT_IO
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleybott",
        description="Bott-Borel-Weil cohomology and exceptional collections on G/P.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--space", default="E6/P1", help="homogeneous space, e.g. E6/P1 (default)")
    common.add_argument("--ascii", action="store_true", help="print w and - instead of ω and −")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bott", parents=[common], help="cohomology of an irreducible bundle")
    p.add_argument("operands", nargs="+", metavar="[SPACE] WEIGHT")
    p.add_argument("--trace", action="store_true", help="print the reflection walk")
    p.add_argument("--range", metavar="TMIN:TMAX", help="scan twists and list the non-acyclic ones")
    p.set_defaults(func=cmd_bott)

    p = sub.add_parser("decompose", parents=[common], help="tensor/sym/ext/End/Hom decompositions")
    p.add_argument("operands", nargs="+", metavar="[SPACE] KIND OPERAND")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("dual", parents=[common], help="highest weight of the dual bundle")
    p.add_argument("operands", nargs="+", metavar="[SPACE] WEIGHT")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("dim", parents=[common], help="rank of a bundle and dimension of V_lambda")
    p.add_argument("operands", nargs="+", metavar="[SPACE] WEIGHT")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("check", parents=[common], help="verify an exceptional collection file")
    p.add_argument("operands", nargs="+", metavar="[SPACE] FILE")
    p.add_argument("--strong", action="store_true", help="also require vanishing forward higher Ext")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reproduce-paper", parents=[common], help="run every claim check")
    p.add_argument("--json", metavar="PATH", help="also write the structured report here")
    p.add_argument("--collection", metavar="FILE", help="verify this collection instead of the built-in one")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    argv = ["−" + a[1:] if _NEGATIVE_TOKEN.match(a) else a for a in argv]
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, DominanceError, RootSystemError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
