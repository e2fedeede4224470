"""Request handlers shared by the FastAPI endpoints and the CLI.

Each handler turns a validated request model into a payload model using the
core package; ``run`` wraps the payload in the timed envelope.  Input problems
surface as ``ValueError`` (or its subclass ``ParseError``), which the callers
translate to HTTP 400 or exit code 2.
"""

from __future__ import annotations

import time
from fractions import Fraction
from typing import Callable, TypeVar

from pydantic import BaseModel

from .. import __version__
from ..acceptance import run_paper_suite
from ..charts import (
    WeightVector,
    chart_at_line_point,
    chart_at_p0,
    generic_member,
    lct_upper_bound,
    leading_form,
    line_vanishing_order,
    multiplicity,
    weighted_multiplicity,
)
from ..chow import ci_chow_weight
from ..families import (
    BASE_POINT,
    LINE_SINGULAR,
    SINGULAR_LINE,
    DestabilizingFamily,
    TORUS_UNSTABLE,
    basis,
    check_torus_stability,
    classify_family,
    enumerate_maximal_families,
    verify_inclusion_lemmas,
)
from ..orbits import h_fixed_space, stabilized_by_h, torus_orbit_closed, type_xi
from ..parsing import format_monomial, format_polynomial, parse_polynomial
from ..polynomials import Polynomial
from ..weights import DiagonalOnePS, NormalizedOnePS
from . import models

PayloadT = TypeVar("PayloadT", bound=BaseModel)


def _parse_fraction(text: str, what: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid {what} {text!r}: expected an exact rational p/q") from exc


def resolve_form(text: str, d: int) -> Polynomial:
    """Parse a polynomial argument; ``@family:<u>/<v>[:strict]`` expands to the
    generic member of the named maximal family."""
    if not text.startswith("@family:"):
        return parse_polynomial(text, arity=5)
    spec = text[len("@family:"):]
    parts = spec.split(":")
    if len(parts) > 2 or (len(parts) == 2 and parts[1] != "strict"):
        raise ValueError(f"malformed family reference {text!r}; use @family:<u>/<v>[:strict]")
    strict = len(parts) == 2
    slope_text = parts[0]
    try:
        if "/" in slope_text:
            u_text, v_text = slope_text.split("/", 1)
            lam = NormalizedOnePS(int(u_text), int(v_text))
        else:
            lam = NormalizedOnePS(int(slope_text), 1)
    except ValueError as exc:
        raise ValueError(f"invalid family slope {slope_text!r}: {exc}") from exc
    for fam in enumerate_maximal_families(d, strict):
        if fam.slope == lam:
            return generic_member(fam)
    available = ", ".join(f.slope.label() for f in enumerate_maximal_families(d, strict))
    kind = "strict" if strict else "non-strict"
    raise ValueError(
        f"no maximal {kind} family at slope {lam.label()} for d={d}; available: {available}"
    )


def _family_info(fam: DestabilizingFamily) -> models.FamilyInfo:
    return models.FamilyInfo(
        slope=fam.slope.label(),
        strict=fam.strict,
        maximal=fam.maximal,
        classification=classify_family(fam),
        max_weight=fam.maximum_weight(),
        size=len(fam.members),
        members=[format_monomial(m) for m in fam.members],
    )


def _witness_info(fam: DestabilizingFamily, classification: str) -> models.WitnessInfo:
    return models.WitnessInfo(
        slope=fam.slope.label(),
        strict=fam.strict,
        classification=classification,
        singular_line=SINGULAR_LINE if classification == LINE_SINGULAR else None,
        base_point=BASE_POINT,
        size=len(fam.members),
    )


def handle_basis(req: models.BasisRequest) -> models.BasisPayload:
    monomials = basis(req.d)
    return models.BasisPayload(
        d=req.d,
        count=len(monomials),
        monomials=[format_monomial(m) for m in monomials],
    )


def handle_families(req: models.FamiliesRequest) -> models.FamiliesPayload:
    families = enumerate_maximal_families(req.d, req.strict)
    return models.FamiliesPayload(
        d=req.d,
        strict=req.strict,
        count=len(families),
        families=[_family_info(fam) for fam in families],
    )


def handle_verify_lemmas(req: models.VerifyLemmasRequest) -> models.VerifyLemmasPayload:
    report = verify_inclusion_lemmas(req.d)
    return models.VerifyLemmasPayload(
        d=req.d,
        passed=report.passed,
        checked_slopes=list(report.checked_slopes),
        assertions=[
            models.AssertionInfo(name=c.name, passed=c.passed, detail=c.detail)
            for c in report.checks
        ],
    )


def handle_check(req: models.CheckRequest) -> models.CheckPayload:
    f = resolve_form(req.f, req.d)
    report = check_torus_stability(f, req.d)
    return models.CheckPayload(
        d=req.d,
        form=format_polynomial(f),
        reduced_form=format_polynomial(report.reduced),
        verdict=report.verdict,
        witnesses=[
            _witness_info(fam, tag)
            for fam, tag in zip(report.witnesses, report.classifications)
        ],
    )


def handle_chart(req: models.ChartRequest) -> models.ChartPayload:
    f = resolve_form(req.f, req.d)
    shift = _parse_fraction(req.shift, "shift")
    if shift == 0:
        g = chart_at_p0(f, req.d)
    else:
        g = chart_at_line_point(f, req.d, shift)
    return models.ChartPayload(
        d=req.d,
        form=format_polynomial(f),
        shift=str(shift),
        origin=[str(c) for c in g.origin],
        chart_form=format_polynomial(g.poly),
        multiplicity=multiplicity(g),
        leading_form=format_polynomial(leading_form(g)),
        line_vanishing_order=line_vanishing_order(f),
    )


def handle_lct_bound(req: models.LctBoundRequest) -> models.LctBoundPayload:
    f = resolve_form(req.f, req.d)
    w = WeightVector(*req.weights)
    g = chart_at_p0(f, req.d)
    bound = lct_upper_bound(g, w)
    return models.LctBoundPayload(
        d=req.d,
        form=format_polynomial(f),
        weights=req.weights,
        chart_form=format_polynomial(g.poly),
        weighted_multiplicity=weighted_multiplicity(g, w),
        lct_upper_bound=str(bound),
        below_one=bound < 1,
    )


def handle_type_xi(req: models.TypeXiRequest) -> models.TypeXiPayload:
    mus = [_parse_fraction(text, "coefficient") for text in req.mus]
    form = type_xi(req.d, mus)
    fixed = h_fixed_space(req.d)
    if form.is_zero():
        raise ValueError("all coefficients are zero; the invariant form is the zero form")
    stabilized = stabilized_by_h(form)
    verdict = torus_orbit_closed(form)
    report = check_torus_stability(form, req.d)
    return models.TypeXiPayload(
        d=req.d,
        mus=[str(m) for m in mus],
        form=format_polynomial(form),
        fixed_space=[format_monomial(m) for m in fixed],
        stabilized=stabilized,
        torus_semistable=report.verdict != TORUS_UNSTABLE,
        orbit=models.OrbitInfo(
            closed=verdict.closed,
            direction=verdict.direction.label() if verdict.direction else None,
            limit=format_polynomial(verdict.limit) if verdict.limit is not None else None,
        ),
    )


def handle_chow(req: models.ChowRequest) -> models.ChowPayload:
    q = parse_polynomial(req.q, arity=5)
    f = parse_polynomial(req.f, arity=5)
    chi = DiagonalOnePS(req.chi)
    verdict = ci_chow_weight(q, f, chi)
    return models.ChowPayload(
        q=format_polynomial(q),
        f=format_polynomial(f),
        chi=req.chi,
        deg_q=verdict.deg_q,
        deg_y=verdict.deg_y,
        mu_q=verdict.mu_q,
        mu_y=verdict.mu_y,
        combined=verdict.combined,
        verdict=verdict.verdict,
    )


def handle_paper_suite(req: models.PaperSuiteRequest) -> models.PaperSuitePayload:
    results = run_paper_suite()
    return models.PaperSuitePayload(
        passed=all(r.passed for r in results),
        criteria=[
            models.CriterionInfo(criterion=r.criterion, passed=r.passed, details=list(r.details))
            for r in results
        ],
    )


def run(
    command: str,
    request: BaseModel,
    handler: Callable[..., PayloadT],
) -> models.AnalysisEnvelope[PayloadT]:
    """Execute a handler and wrap its payload in the timed envelope."""
    start = time.perf_counter()
    payload = handler(request)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return models.AnalysisEnvelope[type(payload)](
        version=__version__,
        command=command,
        input=request.model_dump(),
        payload=payload,
        timing_ms=round(elapsed_ms, 3),
    )
