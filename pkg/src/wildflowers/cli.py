"""Command-line front end.

Subcommands: eval, canonical, genus, classify, twin, check, reduce.  Every
subcommand takes --format {text,json}.  Exit codes: 0 on success, 1 when a
verification or property check fails, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .engine import Engine
from .forms import Position
from .misere import TamenessClass
from .notation import format_form, format_position
from .reduction import (
    build_reduction,
    parse_dimacs,
    validate_tovey,
    verify_equivalence,
    xor_cover,
)
from .suites import run_family_suite
from .taxonomy import (
    as_mutant_flower,
    as_wildflower,
    classify_component,
    color,
    is_restricted_fickle,
    is_restricted_firm,
)
from .twins import FamilyRule, twin_of

_FAMILIES = {
    "sprigs": FamilyRule.SPRIGS,
    "flowers": FamilyRule.FLOWERS,
    "mutant-flowers": FamilyRule.MUTANT_FLOWERS,
    "tame": FamilyRule.TAME_IMPARTIAL,
    "wildflowers": FamilyRule.RESTRICTED_WILDFLOWERS,
}


# ============================================================================
# Report emission
# ============================================================================


def _text_lines(obj, prefix=""):
    if isinstance(obj, dict):
        for key, value in obj.items():
            yield from _text_lines(value, f"{prefix}.{key}" if prefix else key)
    elif isinstance(obj, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            yield f"{prefix}: {' '.join(_scalar(v) for v in obj)}"
        else:
            for i, value in enumerate(obj):
                yield from _text_lines(value, f"{prefix}[{i}]")
    else:
        yield f"{prefix}: {_scalar(obj)}"


def _scalar(v) -> str:
    if v is None:
        return "unknown"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def emit_report(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
    else:
        for line in _text_lines(report):
            print(line)


# ============================================================================
# Subcommands
# ============================================================================


def _cmd_eval(engine: Engine, args) -> tuple:
    p = engine.parse(args.expr)
    solver = engine.misere if args.play == "misere" else engine.normal
    out = solver.outcome(p)
    return {
        "input": format_position(engine.arena, p),
        "play": args.play,
        "outcome": str(out),
    }, 0


def _cmd_canonical(engine: Engine, args) -> tuple:
    p = engine.parse(args.expr)
    form = engine.zero
    for c in p:
        form = engine.arena.sum_form(form, c)
    canon = engine.normal.canonical(form)
    return {
        "input": format_position(engine.arena, p),
        "canonical": format_form(engine.arena, canon),
    }, 0


def _cmd_genus(engine: Engine, args) -> tuple:
    p = engine.parse(args.expr)
    for c in p:
        if not engine.arena.is_impartial(c):
            raise ValueError("genus requires an impartial position")
    gen = engine.misere.genus_position(p)
    return {
        "input": format_position(engine.arena, p),
        "genus": gen.to_json(),
        "display": str(gen),
    }, 0


def _component_report(engine: Engine, c) -> dict:
    arena = engine.arena
    report: dict = {"form": format_form(arena, c)}
    if arena.is_impartial(c):
        gen = engine.misere.genus(c)
        report["impartial"] = True
        report["genus"] = str(gen)
        report["tameness"] = str(engine.misere.classify_tameness(c))
        report["restricted_fickle"] = is_restricted_fickle(engine, c)
        report["restricted_firm"] = is_restricted_firm(engine, c)
    else:
        report["impartial"] = False
    w = as_wildflower(engine, c)
    if w is not None and not arena.is_impartial(c):
        report["wildflower"] = {
            "base": format_form(arena, w.base),
            "top": format_form(arena, w.top),
            "color": str(color(engine, w)),
        }
        mf = as_mutant_flower(engine, c)
        if mf is not None:
            report["wildflower"]["height"] = mf.height
            report["wildflower"]["head"] = sorted(mf.xs)
            report["wildflower"]["top_value"] = mf.a.to_json()
            report["wildflower"]["member"] = mf.member
    cls = classify_component(engine, c)
    report["kernel_class"] = None if cls is None else str(cls)
    return report


def _cmd_classify(engine: Engine, args) -> tuple:
    p = engine.parse(args.expr)
    return {
        "input": format_position(engine.arena, p),
        "components": [_component_report(engine, c) for c in p],
    }, 0


def _cmd_twin(engine: Engine, args) -> tuple:
    p = engine.parse(args.expr)
    report = twin_of(engine, p, _FAMILIES[args.family])
    payload = {
        "input": format_position(engine.arena, report.input),
        "family": args.family,
        "kernel_member": report.kernel_member,
        "twin": format_position(engine.arena, report.twin),
        "normal_outcomes": [str(o) for o in report.normal_outcomes],
        "misere_outcomes": [str(o) for o in report.misere_outcomes],
        "verified": report.verified,
    }
    return payload, 0 if report.verified else 1


def _cmd_check(engine: Engine, args) -> tuple:
    result = run_family_suite(engine, _FAMILIES[args.family], args.bound)
    payload = {
        "family": args.family,
        "bound": result.bound,
        "instances": result.instances,
        "failures": [
            format_position(engine.arena, r.input) for r in result.failures
        ],
        "ok": result.ok,
    }
    return payload, 0 if result.ok else 1


def _cmd_reduce(engine: Engine, args) -> tuple:
    with open(args.file, "r", encoding="utf-8") as fh:
        formula = parse_dimacs(fh.read())
    report = validate_tovey(formula, allow_even=args.allow_even)
    tovey_payload = {
        "ok": report.ok,
        "odd_var_count": report.odd_var_count,
        "vars": [
            {
                "var": o.var,
                "positive": list(o.positive),
                "negative": list(o.negative),
            }
            for o in report.occurrences
        ],
        "problems": list(report.problems),
    }
    if not report.ok:
        return {"file": args.file, "tovey": tovey_payload}, 2
    out = build_reduction(engine, formula, allow_even=args.allow_even)
    witness = xor_cover(formula)
    payload: dict = {
        "file": args.file,
        "tovey": tovey_payload,
        "gadgets": {
            "vars": [
                {
                    "index": g.index,
                    "r": g.r,
                    "s": g.s,
                    "t": g.t,
                    "a": g.a,
                    "b": g.b,
                    "c": g.c,
                    "d": g.d,
                    "big": g.big,
                    "form": format_form(engine.arena, g.form),
                }
                for g in out.gadgets
            ],
            "y_count": out.y_count,
            "y_form": format_form(engine.arena, out.y_form),
            "tail": out.tail_index,
        },
        "satisfiable": witness is not None,
        "witness": None,
        "trace": None,
    }
    if witness is not None:
        payload["witness"] = {
            "choices": list(witness.choices),
            "assignment": list(witness.assignment),
        }
        payload["trace"] = {"N_i": list(witness.trace(len(formula.clauses)))}
    code = 0
    if args.verify is not None:
        mode = "full_game" if args.verify == "full" else "oracle"
        ok = verify_equivalence(engine, formula, mode, allow_even=args.allow_even)
        payload["verify"] = {"mode": args.verify, "ok": ok}
        if not ok:
            code = 1
    return payload, code


# ============================================================================
# Entry point
# ============================================================================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wildflowers",
        description="Exact solver and twin verifier for wildflower games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p):
        p.add_argument(
            "--format", choices=("text", "json"), default="text",
            help="output format",
        )
        return p

    p = with_format(sub.add_parser("eval", help="outcome of an expression"))
    p.add_argument("expr")
    p.add_argument("--play", choices=("normal", "misere"), default="normal")

    p = with_format(
        sub.add_parser("canonical", help="normal-play canonical form")
    )
    p.add_argument("expr")

    p = with_format(sub.add_parser("genus", help="genus of an impartial position"))
    p.add_argument("expr")

    p = with_format(sub.add_parser("classify", help="taxonomy of each component"))
    p.add_argument("expr")

    p = with_format(sub.add_parser("twin", help="evil twin per a family rule"))
    p.add_argument("expr")
    p.add_argument("--family", choices=sorted(_FAMILIES), required=True)

    p = with_format(sub.add_parser("check", help="run a family sweep"))
    p.add_argument("family", choices=sorted(_FAMILIES))
    p.add_argument("--bound", type=int, default=None)

    p = with_format(sub.add_parser("reduce", help="3-SAT to game reduction"))
    p.add_argument("file")
    p.add_argument("--verify", choices=("oracle", "full"), default=None)
    p.add_argument("--allow-even", action="store_true")

    return parser


_DISPATCH = {
    "eval": _cmd_eval,
    "canonical": _cmd_canonical,
    "genus": _cmd_genus,
    "classify": _cmd_classify,
    "twin": _cmd_twin,
    "check": _cmd_check,
    "reduce": _cmd_reduce,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    engine = Engine()
    try:
        payload, code = _DISPATCH[args.command](engine, args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    emit_report(payload, args.format)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
