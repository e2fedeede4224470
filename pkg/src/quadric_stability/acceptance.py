"""The built-in verification battery behind the ``paper-suite`` command.

Each criterion is a deterministic check of the package against golden values
and universally quantified properties; the property suites draw from a fixed
seed so two runs agree bit for bit.  Every check is exact -- a single failure
is a defect, not noise.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .charts import (
    DEFAULT_CHART_WEIGHTS,
    chart_assignment,
    chart_at_p0,
    generic_member,
    lct_upper_bound,
    leading_form,
    multiplicity,
    weighted_multiplicity,
)
from .chow import CHOW_UNSTABLE_WITNESS, ci_chow_weight
from .families import (
    TORUS_NON_STABLE,
    check_torus_stability,
    enumerate_maximal_families,
    family_members_at,
    verify_inclusion_lemmas,
)
from .orbits import h_fixed_space, invariant_monomials, torus_orbit_closed, type_xi
from .parsing import format_polynomial, parse_polynomial
from .polynomials import (
    Monomial,
    ParamCoefficient,
    Polynomial,
    quadric,
    reduce_mod_quadric,
    substitute,
)
from .weights import DiagonalOnePS, NormalizedOnePS

SEED = 0x5105


@dataclass(frozen=True)
class CriterionResult:
    criterion: str
    passed: bool
    details: tuple[str, ...]


def _result(criterion: str, failures: list[str], notes: list[str]) -> CriterionResult:
    return CriterionResult(criterion, not failures, tuple(failures + notes))


# -- random generators shared with the test suite ---------------------------

def random_monomial(rng: random.Random, arity: int, degree: int) -> Monomial:
    cuts = sorted(rng.randint(0, degree) for _ in range(arity - 1))
    bounds = [0] + cuts + [degree]
    return Monomial(tuple(bounds[i + 1] - bounds[i] for i in range(arity)))


def random_rational(rng: random.Random) -> Fraction:
    num = rng.randint(-9, 9)
    if num == 0:
        num = 1
    return Fraction(num, rng.randint(1, 9))


def random_homogeneous_form(rng: random.Random, d: int, max_terms: int = 6) -> Polynomial:
    terms = [
        (random_monomial(rng, 5, d), random_rational(rng))
        for _ in range(rng.randint(1, max_terms))
    ]
    f = Polynomial.from_terms(5, terms)
    if f.is_zero():  # coefficients may cancel; retry
        return random_homogeneous_form(rng, d, max_terms)
    return f


def random_polynomial_for_roundtrip(rng: random.Random) -> Polynomial:
    arity = rng.choice([3, 5])
    terms = []
    for _ in range(rng.randint(0, 6)):
        m = random_monomial(rng, arity, rng.randint(0, 6))
        if rng.random() < 0.4:
            coeff = ParamCoefficient.parameter(rng.randint(0, 3), rng.randint(1, 2)) * random_rational(rng)
        else:
            coeff = ParamCoefficient.from_rational(random_rational(rng))
        terms.append((m, coeff))
    return Polynomial.from_terms(arity, terms)


def random_normalized_one_ps(rng: random.Random, max_u: int = 50) -> NormalizedOnePS:
    u = rng.randint(1, max_u)
    v = rng.randint(0, u)
    return NormalizedOnePS(u, v)


# -- criteria ---------------------------------------------------------------

def criterion_lemma_verification() -> CriterionResult:
    """1: slope bounds for maximal families hold for every degree 3..10."""
    failures: list[str] = []
    notes: list[str] = []
    for d in range(3, 11):
        start = time.perf_counter()
        report = verify_inclusion_lemmas(d)
        elapsed = time.perf_counter() - start
        if not report.passed:
            bad = [c.name for c in report.checks if not c.passed]
            failures.append(f"d={d}: failed checks: {', '.join(bad)}")
        if elapsed >= 5.0:
            failures.append(f"d={d}: verification took {elapsed:.2f}s (limit 5s)")
        notes.append(f"d={d}: {len(report.checked_slopes)} slopes checked in {elapsed * 1000:.0f}ms")
    return _result("lemma-verification", failures, notes)


def _golden_weight_zero_slice(d: int) -> set[Monomial]:
    extras = {Monomial((1, 0, 0, d - 1, 0)), Monomial((0, d - 1, 0, 0, 1))}
    return set(invariant_monomials(d)) | extras


def _golden_weight_minus_one_slice(d: int) -> set[Monomial]:
    slice_ = {Monomial((0, d - 1, 0, 0, 1))}
    for i in range((d - 1) // 2 + 1):
        slice_.add(Monomial((0, i, d - 1 - 2 * i, i + 1, 0)))
    return slice_


def criterion_golden_monomial_lists() -> CriterionResult:
    """2: the weight-0 and weight-(-1) slices match the golden lists for d = 4, 5."""
    failures: list[str] = []
    notes: list[str] = []
    for d in (4, 5):
        nonstrict = enumerate_maximal_families(d, strict=False)
        fam = next((x for x in nonstrict if x.slope == NormalizedOnePS(d - 1, 1)), None)
        if fam is None:
            failures.append(f"d={d}: no maximal non-strict family at slope (d-1, 1)")
        else:
            got = set(fam.members_with_weight(0))
            want = _golden_weight_zero_slice(d)
            if got != want:
                failures.append(f"d={d}: weight-0 slice mismatch at slope ({d - 1}, 1)")
            else:
                notes.append(f"d={d}: weight-0 slice at ({d - 1}, 1) matches ({len(want)} monomials)")

        strict = enumerate_maximal_families(d, strict=True)
        fam = next((x for x in strict if x.slope == NormalizedOnePS(d, 1)), None)
        if fam is None:
            failures.append(f"d={d}: no maximal strict family at slope (d, 1)")
        else:
            if fam.maximum_weight() != -1:
                failures.append(f"d={d}: strict family at ({d}, 1) has max weight {fam.maximum_weight()}, not -1")
            got = set(fam.members_with_weight(-1))
            want = _golden_weight_minus_one_slice(d)
            if got != want:
                failures.append(f"d={d}: weight-(-1) slice mismatch at slope ({d}, 1)")
            else:
                notes.append(f"d={d}: weight-(-1) slice at ({d}, 1) matches ({len(want)} monomials)")
    return _result("golden-monomial-lists", failures, notes)


def criterion_multiplicities() -> CriterionResult:
    """3: chart multiplicities of generic members behave as claimed."""
    failures: list[str] = []
    notes: list[str] = []

    for d in range(3, 9):
        ray_fam = next(
            fam for fam in enumerate_maximal_families(d, strict=False) if fam.slope.v == 0
        )
        g = chart_at_p0(generic_member(ray_fam), d)
        r = multiplicity(g)
        if r != d:
            failures.append(f"d={d}: generic member of the (1,0) family has multiplicity {r}, expected {d}")
    notes.append("generic (1,0)-family members have chart multiplicity d for d = 3..8")

    fam_11 = next(
        (f for f in enumerate_maximal_families(4, strict=False) if f.slope == NormalizedOnePS(1, 1)),
        None,
    )
    if fam_11 is None:
        failures.append("d=4: no maximal non-strict family at slope (1, 1)")
    else:
        member = generic_member(fam_11)
        g = chart_at_p0(member, 4)
        lead = leading_form(g)
        y3sq = Monomial((0, 0, 2))
        source = Monomial((2, 0, 0, 2, 0))
        coeff = lead.coefficient(y3sq)
        if multiplicity(g) != 2 or coeff.is_zero():
            failures.append("d=4: slope-(1,1) generic member does not lead with y3^2")
        else:
            index = fam_11.members.index(source)
            if coeff != ParamCoefficient.parameter(index):
                failures.append("d=4: y3^2 in the leading form is not sourced from x0^2*x3^2 alone")
            else:
                notes.append("d=4: slope-(1,1) leading form contains y3^2, sourced from x0^2*x3^2")

    for d in range(4, 9):
        for fam in enumerate_maximal_families(d, strict=True):
            if fam.slope.v == 0 or fam.slope.slope >= d - 1:
                continue
            r = multiplicity(chart_at_p0(generic_member(fam), d))
            if r < 3:
                failures.append(
                    f"d={d}: strict family at {fam.slope.label()} has generic multiplicity {r} < 3"
                )
    notes.append("strict families of slope < d-1 have generic multiplicity >= 3 for d = 4..8")
    return _result("multiplicity-claims", failures, notes)


def criterion_lct_bounds() -> CriterionResult:
    """4: the weighted multiplicities and Kollar-type bounds, exactly."""
    failures: list[str] = []
    notes: list[str] = []

    fam = next(
        (f for f in enumerate_maximal_families(4, strict=False) if f.slope == NormalizedOnePS(3, 1)),
        None,
    )
    if fam is None:
        failures.append("d=4: no maximal non-strict family at slope (3, 1)")
    else:
        g = chart_at_p0(generic_member(fam), 4)
        wm = weighted_multiplicity(g, DEFAULT_CHART_WEIGHTS)
        bound = lct_upper_bound(g, DEFAULT_CHART_WEIGHTS)
        if wm != 12 or bound != Fraction(3, 4):
            failures.append(f"d=4 slope-(3,1): weighted multiplicity {wm}, bound {bound} (want 12, 3/4)")
        else:
            notes.append("d=4 slope-(3,1) generic member: weighted multiplicity 12, bound 3/4")

    fam = next(
        (f for f in enumerate_maximal_families(3, strict=True) if f.slope == NormalizedOnePS(3, 1)),
        None,
    )
    if fam is None:
        failures.append("d=3: no maximal strict family at slope (3, 1)")
    else:
        g = chart_at_p0(generic_member(fam), 3)
        wm = weighted_multiplicity(g, DEFAULT_CHART_WEIGHTS)
        bound = lct_upper_bound(g, DEFAULT_CHART_WEIGHTS)
        if wm != 10 or bound != Fraction(9, 10):
            failures.append(f"d=3 strict slope-(3,1): weighted multiplicity {wm}, bound {bound} (want 10, 9/10)")
        else:
            notes.append("d=3 strict slope-(3,1) generic member: weighted multiplicity 10, bound 9/10")
    return _result("lct-bounds", failures, notes)


def criterion_chow_example() -> CriterionResult:
    """5: the worked Chow-instability example, and its torus verdict."""
    failures: list[str] = []
    notes: list[str] = []
    f = parse_polynomial("x0*x3^3 + x1*x2^2*x3")
    chi = DiagonalOnePS((3, 3, -2, -2, -2))
    verdict = ci_chow_weight(quadric(), f, chi)
    if (verdict.mu_q, verdict.mu_y, verdict.combined) != (1, -3, -2):
        failures.append(
            f"chow weights (mu_q, mu_y, combined) = "
            f"({verdict.mu_q}, {verdict.mu_y}, {verdict.combined}), want (1, -3, -2)"
        )
    elif verdict.verdict != CHOW_UNSTABLE_WITNESS:
        failures.append(f"chow verdict {verdict.verdict!r}, want {CHOW_UNSTABLE_WITNESS!r}")
    else:
        notes.append("chow witness chi = (3,3,-2,-2,-2): mu_q = 1, mu_y = -3, combined = -2")

    report = check_torus_stability(f, 4)
    if report.verdict != TORUS_NON_STABLE:
        failures.append(f"torus verdict {report.verdict!r}, want {TORUS_NON_STABLE!r}")
    else:
        notes.append("the same surface is torus-non-stable but not torus-unstable")
    return _result("chow-example", failures, notes)


def criterion_minimal_orbits() -> CriterionResult:
    """6: H-fixed space golden lists and the two closedness verdicts, d = 3..8."""
    failures: list[str] = []
    notes: list[str] = []
    for d in range(3, 9):
        want = _golden_weight_zero_slice(d)
        got = set(h_fixed_space(d))
        if got != want:
            failures.append(f"d={d}: H-fixed space does not match the golden list")

        ones = [1] * (d // 2 + 1)
        xi = type_xi(d, ones)
        verdict = torus_orbit_closed(xi)
        if not verdict.closed:
            failures.append(f"d={d}: the invariant form with unit coefficients is not reported closed")

        perturbed = xi + Polynomial.monomial(Monomial((0, d - 1, 0, 0, 1)))
        verdict = torus_orbit_closed(perturbed)
        if verdict.closed:
            failures.append(f"d={d}: the perturbed invariant form is reported closed")
        elif verdict.limit != xi:
            failures.append(f"d={d}: degeneration limit is not the invariant form")
    notes.append("H-fixed space, closed invariant orbits, and degenerations check out for d = 3..8")
    return _result("minimal-orbits", failures, notes)


def criterion_property_suites() -> CriterionResult:
    """7: seeded exact property suites (reduction, weights, containment, parser)."""
    failures: list[str] = []
    notes: list[str] = []
    rng = random.Random(SEED)

    chart = chart_assignment()
    for i in range(1000):
        d = rng.randint(3, 6)
        f = random_homogeneous_form(rng, d)
        reduced = reduce_mod_quadric(f)
        if reduce_mod_quadric(reduced) != reduced:
            failures.append(f"reduction not idempotent on sample {i}")
            break
        if substitute(f, chart) != substitute(reduced, chart):
            failures.append(f"chart compatibility fails on sample {i}")
            break
    else:
        notes.append("reduction idempotence and chart compatibility: 1000 samples")

    for i in range(1000):
        m1 = random_monomial(rng, 5, rng.randint(0, 8))
        m2 = random_monomial(rng, 5, rng.randint(0, 8))
        lam = random_normalized_one_ps(rng)
        if lam.weight(m1 * m2) != lam.weight(m1) + lam.weight(m2):
            failures.append(f"weight additivity fails on sample {i}")
            break
    else:
        notes.append("weight additivity: 1000 monomial pairs")

    for d in range(3, 11):
        nonstrict = enumerate_maximal_families(d, strict=False)
        strict = enumerate_maximal_families(d, strict=True)
        for i in range(200):
            lam = random_normalized_one_ps(rng)
            members = family_members_at(d, lam, strict=False)
            if not any(members <= fam.member_set for fam in nonstrict):
                failures.append(f"d={d}: M<=0 at {lam.label()} escapes every maximal family")
                break
            members = family_members_at(d, lam, strict=True)
            if members and not any(members <= fam.member_set for fam in strict):
                failures.append(f"d={d}: M<0 at {lam.label()} escapes every maximal family")
                break
    if not any("escapes" in f for f in failures):
        notes.append("containment of 200 random slopes per degree, d = 3..10")

    for i in range(1000):
        p = random_polynomial_for_roundtrip(rng)
        if parse_polynomial(format_polynomial(p), arity=p.arity) != p:
            failures.append(f"parser round-trip fails on sample {i}")
            break
    else:
        notes.append("parser round-trip: 1000 random polynomials")

    return _result("property-suites", failures, notes)


def run_paper_suite() -> tuple[CriterionResult, ...]:
    """Run every acceptance criterion; deterministic and exact."""
    return (
        criterion_lemma_verification(),
        criterion_golden_monomial_lists(),
        criterion_multiplicities(),
        criterion_lct_bounds(),
        criterion_chow_example(),
        criterion_minimal_orbits(),
        criterion_property_suites(),
    )
