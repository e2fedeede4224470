"""Command-line front door: one subcommand per analysis.

The CLI is a thin client of the service layer -- it builds the same request
models, calls the same handlers in-process, and prints either a human summary
or the full JSON envelope (``--json``).  All state flows through argv.

Exit codes: 0 on success, 1 when the condition named by ``--fail-on`` is
observed, 2 on input errors (with a position-carrying message for parse
errors).
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from . import __version__
from .service import handlers, models

FAIL_CONDITIONS: dict[str, tuple[str, ...]] = {
    "check": ("non-stable", "unstable"),
    "chow": ("chow-unstable",),
    "verify-lemmas": ("fail",),
    "paper-suite": ("fail",),
    "type-xi": ("not-closed",),
    "lct-bound": ("below-one",),
}


def _int_list(text: str, count: int, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part.strip()) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"invalid {what} {text!r}: expected comma-separated integers") from exc
    if len(values) != count:
        raise ValueError(f"invalid {what} {text!r}: expected {count} comma-separated integers")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadric-stability",
        description=(
            "Torus GIT stability analysis of surfaces cut on the smooth quadric "
            "threefold x0*x4 + x1*x3 + x2^2 = 0 by a degree-d form."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, fail_on: bool = True) -> None:
        p.add_argument("--json", action="store_true", help="emit the full JSON report")
        if fail_on:
            p.add_argument(
                "--fail-on",
                metavar="CONDITION",
                help="exit 1 when the named analysis finding is observed",
            )

    p = sub.add_parser("basis", help="list the quotient-basis monomials of degree d")
    p.add_argument("--d", type=int, required=True)
    common(p, fail_on=False)

    p = sub.add_parser("families", help="enumerate the maximal destabilizing families")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="negative-weight families M<0 instead of M<=0")
    common(p, fail_on=False)

    p = sub.add_parser("verify-lemmas", help="verify the slope bounds on maximal families")
    p.add_argument("--d", type=int, required=True)
    common(p)

    p = sub.add_parser("check", help="torus stability verdict for a form")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--f", required=True, help="polynomial, or @family:<u>/<v>[:strict]")
    common(p)

    p = sub.add_parser("chart", help="restrict to the affine chart and measure the singularity")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--shift", default="0", help="rational shift b/a of the chart center (default 0)")
    common(p, fail_on=False)

    p = sub.add_parser("lct-bound", help="weighted multiplicity and the lct upper bound at the base point")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--weights", default="2,3,4", help="comma-separated positive weights for y1,y2,y3")
    common(p)

    p = sub.add_parser("type-xi", help="invariant form: fixed space and orbit closedness")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mus", required=True, help="comma-separated rational coefficients")
    common(p)

    p = sub.add_parser("chow", help="complete-intersection Chow weight under a diagonal 1-PS")
    p.add_argument("--q", required=True, help="the quadric form")
    p.add_argument("--f", required=True, help="the degree-d form")
    p.add_argument("--chi", required=True, help="five comma-separated SL(5) weights summing to 0")
    common(p)

    p = sub.add_parser("paper-suite", help="run the full acceptance battery")
    common(p)

    p = sub.add_parser("serve", help="run the HTTP service (uvicorn)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _build_request(args: argparse.Namespace):
    command = args.command
    if command == "basis":
        return models.BasisRequest(d=args.d), handlers.handle_basis
    if command == "families":
        return models.FamiliesRequest(d=args.d, strict=args.strict), handlers.handle_families
    if command == "verify-lemmas":
        return models.VerifyLemmasRequest(d=args.d), handlers.handle_verify_lemmas
    if command == "check":
        return models.CheckRequest(d=args.d, f=args.f), handlers.handle_check
    if command == "chart":
        return models.ChartRequest(d=args.d, f=args.f, shift=args.shift), handlers.handle_chart
    if command == "lct-bound":
        weights = _int_list(args.weights, 3, "weights")
        return models.LctBoundRequest(d=args.d, f=args.f, weights=weights), handlers.handle_lct_bound
    if command == "type-xi":
        mus = [part.strip() for part in args.mus.split(",")]
        return models.TypeXiRequest(d=args.d, mus=mus), handlers.handle_type_xi
    if command == "chow":
        chi = _int_list(args.chi, 5, "chi")
        return models.ChowRequest(q=args.q, f=args.f, chi=chi), handlers.handle_chow
    if command == "paper-suite":
        return models.PaperSuiteRequest(), handlers.handle_paper_suite
    raise ValueError(f"unknown command {command!r}")


def _findings(command: str, payload) -> set[str]:
    if command == "check":
        found = set()
        if payload.verdict != "torus-stable":
            found.add("non-stable")
        if payload.verdict == "torus-unstable":
            found.add("unstable")
        return found
    if command == "chow":
        return {"chow-unstable"} if payload.verdict == "chow-unstable-witness" else set()
    if command in ("verify-lemmas", "paper-suite"):
        return set() if payload.passed else {"fail"}
    if command == "type-xi":
        return set() if payload.orbit.closed else {"not-closed"}
    if command == "lct-bound":
        return {"below-one"} if payload.below_one else set()
    return set()


# -- human-readable rendering ------------------------------------------------

def _render_human(command: str, payload) -> str:
    lines: list[str] = []
    if command == "basis":
        lines.append(f"basis of degree {payload.d}: {payload.count} monomials")
        lines.extend(f"  {m}" for m in payload.monomials)
    elif command == "families":
        kind = "strict (M<0)" if payload.strict else "non-strict (M<=0)"
        lines.append(f"{payload.count} maximal {kind} families for d={payload.d}")
        for fam in payload.families:
            lines.append(
                f"  slope {fam.slope}: {fam.size} monomials, max weight {fam.max_weight}, {fam.classification}"
            )
    elif command == "verify-lemmas":
        lines.append(f"slope-bound verification for d={payload.d}: {'PASS' if payload.passed else 'FAIL'}")
        for check in payload.assertions:
            lines.append(f"  [{'pass' if check.passed else 'FAIL'}] {check.name}: {check.detail}")
        lines.append(f"  checked slopes: {', '.join(payload.checked_slopes)}")
    elif command == "check":
        lines.append(f"verdict: {payload.verdict}")
        lines.append(f"  reduced form: {payload.reduced_form}")
        for w in payload.witnesses:
            where = f" along {w.singular_line}" if w.singular_line else f" at {w.base_point}"
            kind = "M<0" if w.strict else "M<=0"
            lines.append(f"  witness {kind} at slope {w.slope}: {w.classification}{where}")
    elif command == "chart":
        lines.append(f"chart at [1 : {payload.shift} : 0 : 0 : 0]: {payload.chart_form}")
        lines.append(f"  multiplicity: {payload.multiplicity}")
        lines.append(f"  leading form: {payload.leading_form}")
        lines.append(f"  vanishing order along x2=x3=x4=0: {payload.line_vanishing_order}")
    elif command == "lct-bound":
        lines.append(f"weights {payload.weights}: weighted multiplicity {payload.weighted_multiplicity}")
        lines.append(f"  lct upper bound: {payload.lct_upper_bound}{'  (< 1)' if payload.below_one else ''}")
    elif command == "type-xi":
        lines.append(f"invariant form: {payload.form}")
        lines.append(f"  H-fixed space ({len(payload.fixed_space)}): {', '.join(payload.fixed_space)}")
        lines.append(f"  torus-semistable: {payload.torus_semistable}")
        if payload.orbit.closed:
            lines.append("  orbit: closed")
        else:
            lines.append(f"  orbit: degenerates along slope {payload.orbit.direction} to {payload.orbit.limit}")
    elif command == "chow":
        lines.append(f"mu(q, chi) = {payload.mu_q}, mu(f, chi) = {payload.mu_y}")
        lines.append(
            f"combined = {payload.deg_y}*{payload.mu_q} + {payload.deg_q}*({payload.mu_y}) = {payload.combined}"
        )
        lines.append(f"verdict: {payload.verdict}")
    elif command == "paper-suite":
        for crit in payload.criteria:
            lines.append(f"[{'PASS' if crit.passed else 'FAIL'}] {crit.criterion}")
            lines.extend(f"    {detail}" for detail in crit.details)
        lines.append(f"paper-suite: {'PASS' if payload.passed else 'FAIL'}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    fail_on = getattr(args, "fail_on", None)
    if fail_on is not None and fail_on not in FAIL_CONDITIONS.get(args.command, ()):
        allowed = ", ".join(FAIL_CONDITIONS.get(args.command, ())) or "none"
        print(
            f"error: --fail-on {fail_on!r} is not recognized for {args.command!r} (allowed: {allowed})",
            file=sys.stderr,
        )
        return 2

    try:
        request, handler = _build_request(args)
        envelope = handlers.run(args.command, request, handler)
    except (ValueError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.json:
        print(json.dumps(envelope.model_dump(by_alias=True), indent=2))
    else:
        print(_render_human(args.command, envelope.payload))

    if fail_on is not None and fail_on in _findings(args.command, envelope.payload):
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
