"""Command-line front end.

Exit codes: 0 for true / VALID / success, 1 for false / INVALID, 2 for usage,
parse and resource errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import literals
from .decide import (DEFAULT_BUDGET, DEFAULT_COVER_CAP, ResourceError, ZeroElementError, decide_sentence,
                     make_pair, normalize_pair, pair_is_empty, parse_sentence,
                     radical_member_generic)
from .ezring import RINGS, EffectiveRing, NotDivisible, make_ring
from .idealarith import CapExceeded, UnsupportedPrime
from .idealarith.ideal import PRINCIPAL_SLACK
from .zgspec import (LevelLine, Marker, NonCompactIntersection, classify_pair, emit_diagram,
                     four_point_figure, interval_covers, intersect_rectangles, parse_cut, parse_interval,
                     parse_point, parse_rectangle, point_in_rectangle, project_rectangle)

EXIT = {True: 0, False: 1}


class CliError(Exception):
    pass


@dataclass
class Session:
    ring: EffectiveRing
    radical_budget: int = DEFAULT_BUDGET
    cover_cap: int = DEFAULT_COVER_CAP
    json: bool = False
    plot_out: str | None = None


@dataclass
class Outcome:
    verdict: str
    code: int
    lines: list
    payload: dict


def _ok(verdict: str, lines=(), **payload) -> Outcome:
    return Outcome(verdict, 0, list(lines), payload)


def _bool(value: bool, lines=(), **payload) -> Outcome:
    return Outcome("true" if value else "false", EXIT[value], list(lines), payload)


# -- ring commands ---------------------------------------------------------------------

def cmd_ring(s: Session, args) -> Outcome:
    R = s.ring
    a, b = R.parse(args.a), R.parse(args.b)
    fmt = R.format
    if args.op == "gcd":
        cert = R.gcd_bezout(a, b)
        cert_out = {k: (fmt(getattr(cert, k)) if getattr(cert, k) is not None else None)
                    for k in ("c", "u", "v", "g", "h")}
        lines = [fmt(cert.c)] + [f"{k} = {v}" for k, v in cert_out.items()]
        if cert.note:
            lines.append(f"note: {cert.note}")
        cert_out["verified"] = cert.verify(R, a, b)
        return _ok("success", lines, result=fmt(cert.c), certificate=cert_out, note=cert.note)
    if args.op == "lcm":
        m = R.lcm_of(a, b)
        return _ok("success", [fmt(m)], result=fmt(m))
    if args.op == "colon":
        d = R.colon_generator(a, b)
        return _ok("success", [fmt(d), f"({fmt(a)} : {fmt(b)}) is generated by {fmt(d)}"], result=fmt(d))
    if args.op == "divides":
        return _bool(R.divides(a, b))
    # radical: a in rad(b)
    if args.generic:
        res = radical_member_generic(R, a, b, s.radical_budget)
        report = {"steps": res.steps, "budget": s.radical_budget}
        if res.exhausted:
            return Outcome("exhausted", 2, [f"exhausted after {res.steps} steps"],
                           {"budget_report": report})
        return _bool(res.answer, [res.describe(R)], budget_report=report,
                     witness=res.describe(R))
    return _bool(R.radical_member(a, b))


# -- spectrum commands -----------------------------------------------------------------

def _plot_object(text: str):
    text = text.strip()
    if text.replace(" ", "").startswith("x+y="):
        return LevelLine(literals.constant_value(literals.parse_expression(text.split("=", 1)[1])))
    if "@" in text:
        label, _, rest = text.partition("@")
        filled = not rest.startswith("o")
        rest = rest.lstrip("o").strip()
        if not (rest.startswith("(") and rest.endswith(")")):
            raise literals.ParseError(f"bad marker {text!r}; expected like a@(1, 1+)")
        x, y = rest[1:-1].split(",")
        return Marker(parse_cut(x), parse_cut(y), label.strip(), filled)
    return parse_rectangle(text)


def cmd_spec(s: Session, args) -> Outcome:
    op = args.op
    if op == "classify":
        p = classify_pair(parse_cut(args.items[0]), parse_cut(args.items[1]))
        return _ok("success", [str(p), f"kind: {p.kind}"], result=str(p), kind=p.kind)
    if op == "member":
        p, r = parse_point(args.items[0]), parse_rectangle(args.items[1])
        return _bool(point_in_rectangle(p, r))
    if op == "project":
        iv = project_rectangle(parse_rectangle(args.items[0]))
        return _ok("success", [str(iv)], result=str(iv))
    if op == "intersect":
        rs = intersect_rectangles(parse_rectangle(args.items[0]), parse_rectangle(args.items[1]))
        out = [str(r) for r in rs]
        return _ok("success", out or ["empty"], result=out)
    if op == "cover":
        target, cover = parse_interval(args.items[0]), [parse_interval(t) for t in args.items[1:]]
        res = interval_covers(target, cover)
        lines = [] if res.holds else [f"witness: {res.reason}"]
        return _bool(res.holds, lines, witness=None if res.holds else res.reason)
    # plot
    objects = four_point_figure() if args.figure == "four-point" else []
    objects += [_plot_object(t) for t in args.items]
    svg = emit_diagram(objects, s.plot_out)
    if s.plot_out:
        return _ok("success", [f"wrote {s.plot_out}"], result=s.plot_out)
    return _ok("success", [svg.rstrip("\n")], result=svg)


# -- pairs and sentences -----------------------------------------------------------------

def cmd_normalize(s: Session, args) -> Outcome:
    R = s.ring
    p = normalize_pair(R, make_pair(R, *(R.parse(x) for x in (args.a, args.b, args.c, args.d))))
    empty = pair_is_empty(R, p)
    fields = {k: R.format(getattr(p, k)) for k in ("a", "b", "c", "d", "g", "h")}
    lines = [f"{k} = {v}" for k, v in fields.items()] + [f"open set is {'empty' if empty else 'nonempty'}"]
    return _ok("success", lines, result=fields, empty=empty)


def cmd_decide(s: Session, args) -> Outcome:
    R = s.ring
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read().strip()
    elif args.sentence:
        text = args.sentence
    else:
        raise CliError("give a sentence or --file")
    d = decide_sentence(R, parse_sentence(text, R), s.cover_cap)
    witness = [{"atom": w.atom, "must_contain": R.format(w.constraint.must_contain),
                "must_avoid": R.format(w.constraint.must_avoid), "reason": w.reason} for w in d.witnesses]
    code = 0 if d.valid else 1
    payload = {"witness": witness} if not d.valid else {}
    payload["budget_report"] = {"subsets_checked": d.subsets_checked, "cover_cap": s.cover_cap}
    return Outcome(d.verdict, code, d.describe(R).splitlines()[1:], payload)


# -- entry point ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="modec", description="Decide the theory of modules over "
                                 "effectively given Bezout domains.")
    ap.add_argument("--ring", default="algint", choices=RINGS)
    ap.add_argument("--json", action="store_true", help="emit one JSON object")
    ap.add_argument("--radical-budget", type=int, default=DEFAULT_BUDGET, metavar="N")
    ap.add_argument("--cover-cap", type=int, default=DEFAULT_COVER_CAP, metavar="N")
    ap.add_argument("--principal-slack", type=float, default=PRINCIPAL_SLACK, metavar="X")
    ap.add_argument("--plot-out", metavar="PATH")
    sub = ap.add_subparsers(dest="command", required=True)

    r = sub.add_parser("ring", help="ring operations")
    r.add_argument("op", choices=("gcd", "lcm", "colon", "divides", "radical"))
    r.add_argument("a")
    r.add_argument("b")
    r.add_argument("--generic", action="store_true", help="radical: use the interleaved search")

    sp = sub.add_parser("spec", help="spectrum geometry")
    sp.add_argument("op", choices=("classify", "member", "project", "intersect", "cover", "plot"))
    sp.add_argument("items", nargs="*")
    sp.add_argument("--figure", choices=("four-point",))

    n = sub.add_parser("normalize", help="align a pair (a,b; c,d)")
    for k in "abcd":
        n.add_argument(k)

    d = sub.add_parser("decide", help="decide a sentence")
    d.add_argument("sentence", nargs="?")
    d.add_argument("--file")
    return ap


ARITY = {"classify": 2, "member": 2, "project": 1, "intersect": 2}


def execute(argv) -> tuple[int, str]:
    ap = build_parser()
    args = ap.parse_args(argv)
    for name in ("radical_budget", "cover_cap"):
        if getattr(args, name) < 1:
            ap.error(f"--{name.replace('_', '-')} must be positive")
    try:
        options = {"principal_slack": args.principal_slack} if args.ring == "algint" else {}
        s = Session(make_ring(args.ring, **options), args.radical_budget, args.cover_cap, args.json,
                    args.plot_out)
        if args.command == "spec":
            want = ARITY.get(args.op)
            if (want and len(args.items) != want) or (args.op == "cover" and len(args.items) < 1):
                raise CliError(f"spec {args.op} expects {want or 'at least 1'} argument(s)")
        handler = {"ring": cmd_ring, "spec": cmd_spec, "normalize": cmd_normalize,
                   "decide": cmd_decide}[args.command]
        out = handler(s, args)
    except (CliError, literals.ParseError, ZeroElementError, NotDivisible, ValueError, ArithmeticError,
            CapExceeded, ResourceError, UnsupportedPrime, NonCompactIntersection, OSError) as exc:
        kind = "resource" if isinstance(exc, (CapExceeded, ResourceError)) else "error"
        out = Outcome("error", 2, [f"error: {exc}"], {"reason": str(exc), "kind": kind})
    if args.json:
        body = {"verdict": out.verdict, **out.payload}
        return out.code, json.dumps(body, ensure_ascii=False)
    if out.verdict in ("true", "false", "VALID", "INVALID"):
        return out.code, "\n".join([out.verdict] + out.lines)
    return out.code, "\n".join(out.lines)


def main(argv=None) -> int:
    code, text = execute(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if code == 2 and text.startswith("error:") else sys.stdout
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
