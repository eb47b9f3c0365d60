"""Command-line interface.

Subcommands::

    aspeq check P.lp Q.lp --mode MODE [--alphabet a,b | --alphabet-all-but w]
    aspeq models P.lp --kind KIND [--alphabet ...]
    aspeq shift P.lp [--rule N] [--check-alphabet ...]
    aspeq sweep --property NAME [--atoms N] [--max-rules K]

Exit codes: 0 equivalent / all models listed / property holds, 1 not
equivalent or property violated, 2 usage or parse error, 3 capacity
exceeded.  ``--format json`` emits a machine-readable report with a
versioned ``"schema": 1`` field describing the same verdict as the text
output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .equivalence import (
    Verdict,
    decide_ordinary,
    decide_rel_strong,
    decide_rel_uniform,
)
from .harness import PROPERTIES, exhaustive_sweep
from .relativized import ase_models, aue_models
from .se import decide_strong, decide_uniform, se_models, ue_models
from .semantics import CapacityError, answer_sets, classical_models
from .syntax import ParseError, Program, Universe, bits, parse_program, render, rule_to_str
from .transforms import check_shift_safe, shift_one, shift_program

CHECK_MODES = ("ordinary", "strong", "uniform", "rel-strong", "rel-uniform")
MODEL_KINDS = ("as", "classical", "se", "ue", "ase", "aue")


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except CapacityError as e:
        print(f"capacity exceeded: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aspeq",
        description="Decide equivalence of propositional disjunctive logic programs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="decide equivalence of two programs")
    check.add_argument("p", help="first program file")
    check.add_argument("q", help="second program file")
    check.add_argument("--mode", choices=CHECK_MODES, default="strong")
    _add_alphabet_args(check)
    _add_format_arg(check)
    check.set_defaults(func=cmd_check)

    models = sub.add_parser("models", help="enumerate models of a program")
    models.add_argument("p", help="program file")
    models.add_argument("--kind", choices=MODEL_KINDS, default="as")
    _add_alphabet_args(models)
    _add_format_arg(models)
    models.set_defaults(func=cmd_models)

    shift = sub.add_parser("shift", help="shift disjunctive heads")
    shift.add_argument("p", help="program file")
    shift.add_argument("--rule", type=int, default=None, metavar="N",
                       help="shift only rule N (1-based, canonical order)")
    shift.add_argument("--check-alphabet", default=None, metavar="a,b",
                       help="also report whether the shift preserves strong "
                            "equivalence relative to this alphabet")
    _add_format_arg(shift)
    shift.set_defaults(func=cmd_shift)

    sweep = sub.add_parser("sweep", help="exhaustive property sweep")
    sweep.add_argument("--property", required=True, choices=sorted(PROPERTIES))
    sweep.add_argument("--atoms", type=int, default=2)
    sweep.add_argument("--max-rules", type=int, default=None)
    _add_format_arg(sweep)
    sweep.set_defaults(func=cmd_sweep)
    return parser


def _add_alphabet_args(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--alphabet", default=None, metavar="a,b",
                     help="comma-separated alphabet atoms (default: all atoms)")
    grp.add_argument("--alphabet-all-but", default=None, metavar="w",
                     help="alphabet = all atoms except these")


def _add_format_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def _load(path: str, universe: Universe) -> Program:
    with open(path, encoding="utf-8") as fh:
        return parse_program(fh.read(), universe)


def _alphabet(args, universe: Universe, default: int) -> int:
    if args.alphabet is not None:
        return universe.mask_of(_split_atoms(args.alphabet))
    if args.alphabet_all_but is not None:
        return universe.full_mask & ~universe.mask_of(_split_atoms(args.alphabet_all_but))
    return default


def _split_atoms(spec: str) -> list[str]:
    names = [n.strip() for n in spec.split(",") if n.strip()]
    if not names:
        raise ValueError(f"empty alphabet spec {spec!r}")
    return names


def cmd_check(args) -> int:
    uni = Universe()
    p = _load(args.p, uni)
    q = _load(args.q, uni)
    a = _alphabet(args, uni, default=uni.full_mask)
    if args.mode == "ordinary":
        verdict = decide_ordinary(p, q)
    elif args.mode == "strong":
        verdict = decide_strong(p, q)
    elif args.mode == "uniform":
        verdict = decide_uniform(p, q)
    elif args.mode == "rel-strong":
        verdict = decide_rel_strong(p, q, a)
    else:
        verdict = decide_rel_uniform(p, q, a)
    if args.format == "json":
        print(json.dumps(_verdict_json(verdict, uni)))
    else:
        _print_verdict(verdict, uni, args.p, args.q)
    return 0 if verdict.equivalent else 1


def _print_verdict(v: Verdict, uni: Universe, pname: str, qname: str) -> None:
    rel = v.mode.startswith("rel-")
    scope = f" relative to {uni.fmt(v.alphabet)}" if rel else ""
    if v.equivalent:
        print(f"equivalent ({v.mode}{scope})")
        return
    print(f"not equivalent ({v.mode}{scope})")
    w = v.witness
    ctx = render(w.context)
    print("context:")
    for line in (ctx.splitlines() if ctx else ["(empty)"]):
        print(f"  {line}")
    keeper = pname if w.side == "left" else qname
    print(f"distinguishing: {uni.fmt(w.distinguishing)}")
    print(f"answer set of {keeper} plus the context only")


def _verdict_json(v: Verdict, uni: Universe) -> dict:
    out = {
        "schema": 1,
        "mode": v.mode,
        "alphabet": list(uni.decode(v.alphabet)),
        "equivalent": v.equivalent,
        "witness": None,
    }
    if v.witness is not None:
        w = v.witness
        out["witness"] = {
            "context": [rule_to_str(r, uni) for r in sorted(w.context.rules, key=lambda r: (r.head, r.pos, r.neg))],
            "distinguishing": list(uni.decode(w.distinguishing)),
            "side": w.side,
        }
    return out


def cmd_models(args) -> int:
    uni = Universe()
    p = _load(args.p, uni)
    a = _alphabet(args, uni, default=uni.full_mask)
    over = p.var | (a if args.kind in ("ase", "aue") else 0)
    if args.kind == "as":
        listing = [uni.fmt(m) for m in sorted(answer_sets(p))]
        raw = [list(uni.decode(m)) for m in sorted(answer_sets(p))]
    elif args.kind == "classical":
        ms = classical_models(p, p.var)
        listing = [uni.fmt(m) for m in ms]
        raw = [list(uni.decode(m)) for m in ms]
    elif args.kind in ("se", "ue"):
        fn = se_models if args.kind == "se" else ue_models
        pairs = fn(p, p.var)
        listing = [uni.fmt_pair(x, y) for x, y in pairs]
        raw = [[list(uni.decode(x)), list(uni.decode(y))] for x, y in pairs]
    else:
        fn = ase_models if args.kind == "ase" else aue_models
        pairs = fn(p, a, over)
        listing = [uni.fmt_pair(pr.x, pr.y) for pr in pairs]
        raw = [[list(uni.decode(pr.x)), list(uni.decode(pr.y))] for pr in pairs]
    if args.format == "json":
        print(json.dumps({
            "schema": 1,
            "kind": args.kind,
            "alphabet": list(uni.decode(a)) if args.kind in ("ase", "aue") else None,
            "models": raw,
        }))
    else:
        for line in listing:
            print(line)
    return 0


def cmd_shift(args) -> int:
    uni = Universe()
    p = _load(args.p, uni)
    ordered = sorted(p.rules, key=lambda r: (r.head, r.pos, r.neg))
    if args.rule is not None:
        if not 1 <= args.rule <= len(ordered):
            raise ValueError(f"rule index {args.rule} out of range 1..{len(ordered)}")
        target = ordered[args.rule - 1]
        shifted = shift_one(p, target)
    else:
        target = None
        shifted = shift_program(p)
    safe = None
    if args.check_alphabet is not None:
        a = uni.mask_of(_split_atoms(args.check_alphabet))
        rules = [target] if target is not None else ordered
        safe = all(check_shift_safe(p, r, a) for r in rules if r.head.bit_count() >= 2)
    if args.format == "json":
        out_rules = sorted(shifted.rules, key=lambda r: (r.head, r.pos, r.neg))
        print(json.dumps({
            "schema": 1,
            "program": [rule_to_str(r, uni) for r in out_rules],
            "safe": safe,
        }))
    else:
        text = render(shifted)
        if text:
            print(text)
        if safe is not None:
            print("safe" if safe else "unsafe")
    return 0


def cmd_sweep(args) -> int:
    report = exhaustive_sweep(args.atoms, args.property, args.max_rules)
    if args.format == "json":
        print(json.dumps({
            "schema": 1,
            "property": report.prop,
            "checked": report.checked,
            "counterexamples": sorted(report.counterexamples),
        }))
    else:
        print(f"{report.prop}: checked {report.checked}, "
              f"{len(report.counterexamples)} counterexamples")
        for c in sorted(report.counterexamples):
            print(f"  {c}")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
