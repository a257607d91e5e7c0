"""Command-line driver: ``weights limit|theory|span|operad|validate``.

Exit codes: 0 success, 2 invalid input (bad file, missing symmetry or
action data, unparseable terms), 3 a limit disagrees with its oracle or a
truncated naturality check fails.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from importlib import resources
from math import comb
from pathlib import Path

from . import words as W
from .fcat import FAError, parse_fa, render_fa
from .fincat import (CategoryError, action_violations, load_monoidal, self_action, validate_monoidal)
from .limits import LimitError, naturality_failures, oracle_comparison, weighted_limit
from .operad import Operad, OperadError, enumerate_ops, render_op
from .oracles import OracleError, oracle
from .span import SpanError, SpanMorphism, compose_span, enumerate_spans, span
from .theory import (TheoryError, action_object, compose_m, hom_w, one_cell, two_cell_m, weight,
                     weight_object)
from .words import ParseError

OK, INVALID, MISMATCH = 0, 2, 3


@dataclass
class RunReport:
    command: str
    inputs: dict
    counts: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    depth: int | None = None
    bound: int | None = None
    lines: list[str] = field(default_factory=list)
    seconds: float | None = None
    status: int = OK

    def say(self, line: str) -> None:
        self.lines.append(line)


class InputError(Exception):
    pass


def fixture_path(name: str) -> Path:
    """A file path, or the name of a bundled fixture (with or without .json)."""
    p = Path(name)
    if p.exists():
        return p
    base = resources.files("weights") / "fixtures"
    for cand in (name, name + ".json"):
        q = base / cand
        if q.is_file():
            return Path(str(q))
    raise InputError(f"no such category file or fixture: {name}")


def bundled_fixtures() -> list[str]:
    base = resources.files("weights") / "fixtures"
    return sorted(p.name[:-5] for p in base.iterdir() if p.name.endswith(".json"))


def _load(name: str):
    try:
        return load_monoidal(fixture_path(name))
    except (CategoryError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"invalid category file {name}: {exc}") from None


def _count(n: int, noun: str) -> str:
    return f"{n} {noun}{'' if n == 1 else 's'}"


# -- commands ----------------------------------------------------------------

def cmd_limit(args) -> RunReport:
    rep = RunReport("limit", {"file": args.file, "weight": args.weight}, depth=args.depth)
    C, action = _load(args.file)
    if args.weight == "action" and action is None:
        action = self_action(C)
    try:
        lim = weighted_limit(C, args.weight, action)
        orc = oracle(args.weight, C, action)
    except (LimitError, OracleError) as exc:
        raise InputError(str(exc)) from None
    ok, why = oracle_comparison(lim, orc)
    rep.counts = {"oracle_objects": len(orc.objects), "oracle_homs": len(orc.morphisms),
                  "limit_objects": len(lim.objects), "limit_homs": len(lim.homs)}
    rep.verdicts["iso"] = ok
    rep.say(f"oracle: {_count(len(orc.objects), 'object')}/{_count(len(orc.morphisms), 'hom')}; "
            f"limit: {len(lim.objects)}/{len(lim.homs)}; ISO: {'yes' if ok else 'no'}")
    if not ok:
        rep.say(f"  {why}")
    if args.verbose:
        for s in lim.objects:
            rep.say("  " + ", ".join([f"carrier={s.carrier}"] + ([f"space={s.space}"] if s.space is not None else [])
                                     + [f"{k}={v}" for k, v in s.ops]))
    if args.naturality and args.weight == "monoid":
        bad = [s for s in lim.objects
               if naturality_failures(C, s.carrier, s["mul"], s["unit"], args.depth)]
        rep.verdicts["naturality"] = not bad
        rep.say(f"truncated naturality at depth {args.depth}: {len(lim.objects) - len(bad)}/{len(lim.objects)} pass")
        ok = ok and not bad
    rep.status = OK if ok else MISMATCH
    return rep


def _obj(text: str, tag: str):
    if tag == "action":
        return action_object(text)
    return weight_object(*[p for p in text.replace(",", ";").split(";")])


def cmd_theory(args) -> RunReport:
    rep = RunReport(f"theory {args.what}", {"args": args.terms}, bound=args.bound)
    if args.what == "hom":
        if len(args.terms) != 2:
            raise InputError("hom needs two objects")
        wt = weight(args.weight)
        w, u = (_obj(t, wt.tag) for t in args.terms)
        cells = hom_w(wt, w, u, args.bound)
        rep.counts["morphisms"] = len(cells)
        rep.say(f"{len(cells)} morphism{'s' if len(cells) != 1 else ''}")
        if wt.tag == "monoid":
            for h in cells:
                rep.say("  " + " ; ".join(" ".join(map(str, m)) or "-" for m in h.maps))
        if wt.tag == "monoid" and all(len(x.words) == 1 for x in (w, u)):
            n, m = W.occurrences(w.words[0]), W.occurrences(u.words[0])
            rep.verdicts["closed_form"] = len(cells) == (comb(n + m - 1, n) if m else int(n == 0))
    elif args.what == "compose":
        if len(args.terms) != 2:
            raise InputError("compose needs two 1-cells, applied first then second")
        first_words = [W.parse(p) for p in args.terms[0].replace(",", ";").split(";")]
        dom = max((x for w in first_words for x in W.type_of(w)), default=0)
        f = one_cell(dom, first_words)
        second_words = [W.parse(p) for p in args.terms[1].replace(",", ";").split(";")]
        g = one_cell(len(first_words), second_words)
        out = compose_m(f, g)
        rep.say(out.render())
    elif args.what == "twocell":
        if len(args.terms) != 2:
            raise InputError("twocell needs two 1-cells")
        ws = [[W.parse(p) for p in t.replace(",", ";").split(";")] for t in args.terms]
        dom = max((x for part in ws for w in part for x in W.type_of(w)), default=0)
        f, g = one_cell(dom, ws[0]), one_cell(dom, ws[1])
        exists = two_cell_m(f, g) is not None
        rep.verdicts["exists"] = exists
        rep.say("exists" if exists else "none")
    return rep


def _operad(name: str) -> Operad:
    try:
        return Operad(name.lower())
    except ValueError:
        raise InputError(f"unknown operad {name!r}; choose from {[o.value for o in Operad]}") from None


def _span(op_a: Operad, op_b: Operad, text: str) -> SpanMorphism:
    left, sep, right = text.partition("~")
    if not sep:
        raise InputError("a span is written LEFT ~ RIGHT")
    return span(parse_fa(op_a, left), parse_fa(op_b, right))


def _render_span(s: SpanMorphism) -> str:
    return f"{render_fa(s.left)} ~ {render_fa(s.right)}"


def cmd_span(args) -> RunReport:
    op_a, op_b = _operad(args.a), _operad(args.b)
    rep = RunReport(f"span {args.what}", {"operads": [op_a.value, op_b.value], "args": args.rest},
                    bound=args.bound)
    if op_a.colored or op_b.colored:
        raise InputError("the span commands take uncoloured operads")
    if args.what == "canon":
        for t in args.rest:
            rep.say(_render_span(_span(op_a, op_b, t)))
    elif args.what == "compose":
        if len(args.rest) < 2:
            raise InputError("compose needs at least two spans")
        out = _span(op_a, op_b, args.rest[0])
        for t in args.rest[1:]:
            out = compose_span(out, _span(op_a, op_b, t))
        rep.say(_render_span(out))
    else:
        if len(args.rest) != 2:
            raise InputError("enumerate needs sizes n m")
        n, m = (int(x) for x in args.rest)
        spans = enumerate_spans(op_a, op_b, n, m, args.bound)
        rep.counts["spans"] = len(spans)
        rep.say(f"{len(spans)} span{'s' if len(spans) != 1 else ''} ({n}] -> ({m}] with apex <= {args.bound}")
        if args.verbose:
            rep.lines.extend("  " + _render_span(s) for s in spans)
    return rep


def cmd_operad(args) -> RunReport:
    op = _operad(args.operad)
    rep = RunReport("operad", {"operad": op.value, "n": args.n}, bound=args.bound)
    ops = enumerate_ops(op, range(1, args.n + 1), args.bound)
    rep.counts["operations"] = len(ops)
    rep.say(f"{op.value}: {len(ops)} operation{'s' if len(ops) != 1 else ''} on ({args.n}]")
    if args.verbose:
        rep.lines.extend("  " + (render_op(o) or "-") for o in ops)
    return rep


def cmd_validate(args) -> RunReport:
    rep = RunReport("validate", {"file": args.file})
    C, action = _load(args.file)
    problems = validate_monoidal(C)
    if action is not None:
        problems += action_violations(action)
    rep.counts = {"objects": len(C.base.objects), "morphisms": len(C.base.morphisms)}
    rep.verdicts = {"valid": not problems, "symmetric": C.symmetric, "strict": C.strict,
                    "action": action is not None}
    rep.say(f"{C.name}: {len(C.base.objects)} objects, {len(C.base.morphisms)} morphisms, "
            f"strict={C.strict}, symmetric={C.symmetric}, action={'yes' if action else 'no'}")
    for p in problems[:20]:
        rep.say(f"  {p}")
    rep.say("valid" if not problems else f"{len(problems)} problem(s)")
    rep.status = OK if not problems else INVALID
    return rep


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--depth", type=int, default=2, help="truncation depth for naturality checks")
    common.add_argument("--bound", type=int, default=3, help="apex size and unit budget for enumeration")
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--timing", action="store_true", help="include the elapsed time")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="weights", description="Weighted limits of finite monoidal categories.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("limit", parents=[common], help="weighted limit vs brute-force oracle")
    p.add_argument("file", help="category JSON file or bundled fixture name")
    p.add_argument("--weight", default="monoid", choices=["monoid", "comonoid", "cmonoid", "bimonoid", "action"])
    p.add_argument("--naturality", action="store_true", help="also run the truncated naturality check")
    p.set_defaults(run=cmd_limit)

    p = sub.add_parser("theory", parents=[common], help="hom-sets of the weight, composites and 2-cells of M")
    p.add_argument("what", choices=["hom", "compose", "twocell"])
    p.add_argument("terms", nargs="+")
    p.add_argument("--weight", default="monoid")
    p.set_defaults(run=cmd_theory)

    p = sub.add_parser("span", parents=[common], help="spans of operad-labelled functions")
    p.add_argument("what", choices=["compose", "canon", "enumerate"])
    p.add_argument("a", help="left operad (bot, btr, lo, top)")
    p.add_argument("b", help="right operad")
    p.add_argument("rest", nargs="*")
    p.set_defaults(run=cmd_span)

    p = sub.add_parser("operad", parents=[common], help="list operations of an operad")
    p.add_argument("operad")
    p.add_argument("n", type=int)
    p.set_defaults(run=cmd_operad)

    p = sub.add_parser("validate", parents=[common], help="check a category file")
    p.add_argument("file")
    p.set_defaults(run=cmd_validate)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        rep = args.run(args)
    except (InputError, ParseError, TheoryError, SpanError, FAError, OperadError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID
    if args.timing:
        rep.seconds = round(time.perf_counter() - start, 3)
    if args.json:
        print(json.dumps(asdict(rep), indent=2, sort_keys=True, default=str))
    else:
        print("\n".join(rep.lines))
        if rep.seconds is not None:
            print(f"({rep.seconds}s)")
    return rep.status


if __name__ == "__main__":
    sys.exit(main())
