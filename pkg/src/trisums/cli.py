"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import sys

from .classify import classify
from .forms import FormKind, MixedForm, exceptional_set
from .local import local_report
from .twoadic import binary_spinor_norm
from .verify import DEFAULT_BOUND, verify_reference


def _form_from_args(args) -> MixedForm:
    return MixedForm(FormKind(args.kind), args.a, args.b, args.c)


def _verdict_payload(cl) -> dict:
    return {
        "kind": cl.form.kind.value,
        "a": cl.form.a,
        "b": cl.form.b,
        "c": cl.form.c,
        "universal": cl.universal,
        "asymptotically_universal": cl.asymptotically_universal,
        "almost_universal": {
            "value": cl.almost_universal.value,
            "gap_tag": cl.almost_universal.gap_tag,
        },
        "trace": [
            {"clause": e.clause, "inputs": e.inputs, "outcome": e.outcome}
            for e in cl.trace
        ],
    }


def dumps(payload) -> str:
    return json.dumps(payload, separators=(", ", ": "))


def _cmd_classify(args) -> int:
    cl = classify(_form_from_args(args))
    if args.json:
        print(dumps(_verdict_payload(cl)))
        return 0
    tri = cl.almost_universal
    print(f"form: {cl.form}")
    print(f"universal: {'yes' if cl.universal else 'no'}")
    print(f"asymptotically universal: {'yes' if cl.asymptotically_universal else 'no'}")
    tag = f" [{tri.gap_tag}]" if tri.gap_tag else ""
    print(f"almost universal: {tri.value}{tag}")
    for e in cl.trace:
        print(f"  {e.clause}: {e.outcome} {e.inputs}")
    return 0


def _cmd_exceptions(args) -> int:
    report = exceptional_set(_form_from_args(args), args.bound)
    if args.json:
        print(
            dumps(
                {
                    "kind": report.form.kind.value,
                    "a": report.form.a,
                    "b": report.form.b,
                    "c": report.form.c,
                    "bound": report.bound,
                    "exceptions": list(report.exceptions),
                    "complete_below_bound": report.complete_below_bound,
                    "caveat": report.caveat,
                }
            )
        )
        return 0
    if args.csv:
        print("n")
    for n in report.exceptions:
        print(n)
    if not args.csv:
        print(f"# {report.caveat}", file=sys.stderr)
    return 0


def _cmd_local(args) -> int:
    form = _form_from_args(args)
    rep = local_report(form)
    if args.json:
        print(
            dumps(
                {
                    "kind": form.kind.value,
                    "a": form.a,
                    "b": form.b,
                    "c": form.c,
                    "odd_condition_holds": rep.odd_condition_holds,
                    "failing_odd_primes": list(rep.failing_odd_primes),
                    "two_adic_holds": rep.two_adic_holds,
                    "vf": rep.vf,
                }
            )
        )
        return 0
    print(f"form: {form}")
    print(f"odd-prime conditions hold: {rep.odd_condition_holds}")
    if rep.failing_odd_primes:
        print(f"failing odd primes: {', '.join(map(str, rep.failing_odd_primes))}")
    print(f"dyadic condition holds: {rep.two_adic_holds}")
    print(f"critical valuation: {rep.vf}")
    return 0


def _cmd_spinor(args) -> int:
    classes = binary_spinor_norm(args.alpha, args.r)
    reps = list(classes.representatives())
    if args.json:
        print(dumps({"alpha": args.alpha, "r": args.r, "classes": reps}))
    else:
        print("{" + ", ".join(map(str, reps)) + "}")
    return 0


def _cmd_verify(args) -> int:
    results, ok = verify_reference(bound=args.bound, jobs=args.jobs)
    counts = {"pass": 0, "fail": 0, "skip": 0}
    for r in results:
        counts[r.status] += 1
        line = f"{r.status.upper():4s} {r.fid}"
        if r.detail:
            line += f" -- {r.detail}"
        print(line)
    print(
        f"# {counts['pass']} passed, {counts['fail']} failed, "
        f"{counts['skip']} skipped (bound {args.bound})"
    )
    print("# exception lists are certified below the bound only")
    return 0 if ok else 1


def _add_form_arguments(sub) -> None:
    sub.add_argument("--kind", required=True, choices=[k.value for k in FormKind])
    sub.add_argument("a", type=int)
    sub.add_argument("b", type=int)
    sub.add_argument("c", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trisums",
        description="Classify mixed sums of squares and triangular numbers "
        "and compute their exceptional sets.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("classify", help="universality verdicts for one form")
    _add_form_arguments(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_classify)

    p = subs.add_parser("exceptions", help="exceptional set up to a bound")
    _add_form_arguments(p)
    p.add_argument("--bound", type=int, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(fn=_cmd_exceptions)

    p = subs.add_parser("local", help="local solvability report for one form")
    _add_form_arguments(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_local)

    p = subs.add_parser("spinor", help="binary dyadic spinor-norm classes")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_spinor)

    p = subs.add_parser("verify-paper", help="re-check the bundled reference fixtures")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
