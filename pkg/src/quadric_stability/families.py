"""Destabilizing monomial families and torus stability verdicts.

The quotient space of degree-d forms on the quadric has the monomial basis

    B(d) = { x0^a0 * ... * x4^a4 : sum(ai) = d, a0*a4 = 0 },

of size C(d+4, 4) - C(d+2, 4).  For a normalized 1-PS lambda_(u,v) the sets
M<=0 / M<0 collect the basis monomials of non-positive / negative weight.  A
nonzero form supported inside such a set is torus-non-stable (resp.
torus-unstable) by the Hilbert-Mumford criterion.

Enumeration of the inclusion-maximal sets over all slopes is finite: the
weight of a monomial changes sign only at its critical slope
(a3 - a1)/(a0 - a4), so the slope axis [1, infinity] splits into finitely many
intervals on which both sets are constant.  Sampling every critical slope, the
smallest-denominator fraction inside each open interval, and the (1, 0) ray
covers every combinatorial type; deduplication and a pairwise inclusion scan
leave the maximal families, each labeled by the minimal-denominator slope
realizing it.

Verdicts speak only about the torus in the given coordinates ("torus-stable"
etc.); no sweep over coordinate changes in SO(5) is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement

from .polynomials import Monomial, Polynomial, reduce_mod_quadric
from .weights import RAY, NormalizedOnePS

TORUS_STABLE = "torus-stable"
TORUS_NON_STABLE = "torus-non-stable"
TORUS_UNSTABLE = "torus-unstable"

LINE_SINGULAR = "line-singular"
ISOLATED_AT_P0 = "isolated-at-p0"

#: The line along which non-stable general members are singular, and the point
#: lying on every member surface (x0^d always has positive weight).
SINGULAR_LINE = "x2 = x3 = x4 = 0"
BASE_POINT = "[1:0:0:0:0]"


def _require_degree(d: int) -> None:
    if not isinstance(d, int) or d < 3:
        raise ValueError(f"the degree must be an integer >= 3, got {d!r}")


@lru_cache(maxsize=None)
def basis(d: int) -> tuple[Monomial, ...]:
    """The quotient basis B(d), sorted descending; size C(d+4,4) - C(d+2,4)."""
    _require_degree(d)
    monomials = []
    # compositions of d into 5 parts via stars and bars
    for bars in combinations_with_replacement(range(d + 1), 4):
        exps = (
            bars[0],
            bars[1] - bars[0],
            bars[2] - bars[1],
            bars[3] - bars[2],
            d - bars[3],
        )
        if exps[0] * exps[4] == 0:
            monomials.append(Monomial(exps))
    return tuple(sorted(monomials, reverse=True))


@dataclass(frozen=True)
class DestabilizingFamily:
    """A set of basis monomials of non-positive (or negative) weight at one slope."""

    slope: NormalizedOnePS
    strict: bool  # True: all weights < 0 (M<0); False: all weights <= 0 (M<=0)
    members: tuple[Monomial, ...]
    maximal: bool

    @cached_property
    def member_set(self) -> frozenset[Monomial]:
        return frozenset(self.members)

    def contains_support(self, f: Polynomial) -> bool:
        return set(f.support()) <= self.member_set

    def maximum_weight(self) -> int:
        return max(self.slope.weight(m) for m in self.members)

    def members_with_weight(self, w: int) -> tuple[Monomial, ...]:
        return tuple(m for m in self.members if self.slope.weight(m) == w)


def family_members_at(d: int, lam: NormalizedOnePS, strict: bool) -> frozenset[Monomial]:
    """M<0 (strict) or M<=0 (non-strict) at a concrete slope."""
    if strict:
        return frozenset(m for m in basis(d) if lam.weight(m) < 0)
    return frozenset(m for m in basis(d) if lam.weight(m) <= 0)


def family_at(d: int, lam: NormalizedOnePS, strict: bool) -> DestabilizingFamily:
    """The (not necessarily maximal) family at one slope, with maximality decided."""
    members = family_members_at(d, lam, strict)
    maximal = any(
        fam.slope == lam and fam.member_set == members
        for fam in enumerate_maximal_families(d, strict)
    )
    return DestabilizingFamily(lam, strict, _sorted_members(members), maximal)


def _sorted_members(members: frozenset[Monomial]) -> tuple[Monomial, ...]:
    return tuple(sorted(members, reverse=True))


@lru_cache(maxsize=None)
def critical_slopes(d: int) -> tuple[Fraction, ...]:
    """Slopes in [1, d] where some basis monomial weight changes sign.

    The weight of m vanishes at u/v = (a3 - a1)/(a0 - a4) when a0 != a4;
    numerators and denominators are bounded by d.  The slope 1 is kept as an
    anchor for the interval scan even in the (impossible for d >= 3) case that
    no monomial realizes it.
    """
    _require_degree(d)
    values = {Fraction(1)}
    for m in basis(d):
        den = m[0] - m[4]
        if den == 0:
            continue
        ratio = Fraction(m[3] - m[1], den)
        if 1 <= ratio <= d:
            values.add(ratio)
    return tuple(sorted(values))


def simplest_in_interval(lo: Fraction, hi: Fraction | None) -> Fraction:
    """The smallest-denominator fraction strictly between lo and hi.

    ``hi=None`` means +infinity.  Ties on the denominator are broken toward
    the smaller numerator (the Stern-Brocot simplest fraction).
    """
    if hi is not None and lo >= hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    floor = lo.numerator // lo.denominator
    if hi is None or floor + 1 < hi:
        return Fraction(floor + 1)
    frac = lo - floor
    if frac == 0:
        # interval (floor, hi) inside one integer step: take floor + 1/n
        inv = 1 / (hi - floor)
        steps = inv.numerator // inv.denominator + 1
        return floor + Fraction(1, steps)
    return floor + 1 / simplest_in_interval(1 / (hi - floor), 1 / frac)


def _sample_slopes(d: int) -> tuple[NormalizedOnePS, ...]:
    crits = critical_slopes(d)
    samples = [RAY]
    samples.extend(NormalizedOnePS.from_slope(s) for s in crits)
    for lo, hi in zip(crits, crits[1:]):
        samples.append(NormalizedOnePS.from_slope(simplest_in_interval(lo, hi)))
    samples.append(NormalizedOnePS.from_slope(simplest_in_interval(crits[-1], None)))
    return tuple(samples)


@lru_cache(maxsize=None)
def enumerate_maximal_families(d: int, strict: bool) -> tuple[DestabilizingFamily, ...]:
    """All inclusion-maximal families of the given strictness, slope-sorted."""
    _require_degree(d)
    best_label: dict[frozenset[Monomial], NormalizedOnePS] = {}
    for lam in _sample_slopes(d):
        members = family_members_at(d, lam, strict)
        if not members:
            continue
        prev = best_label.get(members)
        if prev is None or (lam.v, lam.u) < (prev.v, prev.u):
            best_label[members] = lam
    member_sets = list(best_label)
    families = [
        DestabilizingFamily(best_label[mset], strict, _sorted_members(mset), True)
        for mset in member_sets
        if not any(mset < other for other in member_sets)
    ]
    families.sort(key=lambda fam: fam.slope.sort_key())
    return tuple(families)


def classify_family(fam: DestabilizingFamily) -> str:
    """Singularity type of the general member surface.

    ``line-singular`` when every member vanishes to order >= 2 along the line
    x2 = x3 = x4 = 0 (min of a2 + a3 + a4 over members >= 2); otherwise the
    singularity is isolated at the base point [1:0:0:0:0].
    """
    if not fam.members:
        raise ValueError("cannot classify an empty family")
    order = min(m[2] + m[3] + m[4] for m in fam.members)
    return LINE_SINGULAR if order >= 2 else ISOLATED_AT_P0


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class InclusionVerification:
    """Computational restatement of the two containment lemmas for one degree."""

    d: int
    checked_slopes: tuple[str, ...]
    checks: tuple[LemmaCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_inclusion_lemmas(d: int) -> InclusionVerification:
    """Check that the maximal-family enumeration matches the slope bounds.

    (i)   every maximal non-strict family sits at the (1, 0) ray or at slope
          u/v <= d - 1;
    (ii)  every maximal strict family has v != 0 and u/v < d - 1, or u/v = d;
    (iii) families at sampled slopes beyond the bounds embed into the
          (d-1, 1) non-strict resp. (d, 1) strict family.

    Failures are reported, not raised: one would indicate an implementation
    bug or a genuine discrepancy in the underlying combinatorics.
    """
    _require_degree(d)
    nonstrict = enumerate_maximal_families(d, strict=False)
    strict = enumerate_maximal_families(d, strict=True)
    checks: list[LemmaCheck] = []

    bad = [fam.slope.label() for fam in nonstrict if fam.slope.v != 0 and fam.slope.slope > d - 1]
    checks.append(
        LemmaCheck(
            "maximal-nonstrict-slopes",
            not bad,
            "all maximal M<=0 slopes are (1,0) or u/v <= d-1"
            if not bad
            else f"offending slopes: {', '.join(bad)}",
        )
    )

    bad = [
        fam.slope.label()
        for fam in strict
        if fam.slope.v == 0 or not (fam.slope.slope < d - 1 or fam.slope.slope == d)
    ]
    checks.append(
        LemmaCheck(
            "maximal-strict-slopes",
            not bad,
            "all maximal M<0 slopes have v != 0 and u/v < d-1, or u/v = d"
            if not bad
            else f"offending slopes: {', '.join(bad)}",
        )
    )

    anchor_nonstrict = next(
        (fam for fam in nonstrict if fam.slope == NormalizedOnePS(d - 1, 1)), None
    )
    anchor_strict = next((fam for fam in strict if fam.slope == NormalizedOnePS(d, 1)), None)

    high_slopes = [
        Fraction(2 * d - 1, 2),  # strictly between d-1 and d
        Fraction(d),
        Fraction(d + 1),
        Fraction(3 * d),
    ]
    checked: list[str] = [lam.label() for lam in _sample_slopes(d)]

    if anchor_nonstrict is None:
        checks.append(LemmaCheck("high-slope-nonstrict-containment", False, "no maximal family at slope (d-1, 1)"))
    else:
        bad = []
        for s in high_slopes:
            lam = NormalizedOnePS.from_slope(s)
            checked.append(lam.label())
            if not family_members_at(d, lam, False) <= anchor_nonstrict.member_set:
                bad.append(lam.label())
        checks.append(
            LemmaCheck(
                "high-slope-nonstrict-containment",
                not bad,
                "M<=0 at slopes > d-1 embeds into the (d-1, 1) family"
                if not bad
                else f"containment fails at: {', '.join(bad)}",
            )
        )

    if anchor_strict is None:
        checks.append(LemmaCheck("high-slope-strict-containment", False, "no maximal family at slope (d, 1)"))
    else:
        bad = []
        for s in [Fraction(d - 1)] + high_slopes:
            lam = NormalizedOnePS.from_slope(s)
            checked.append(lam.label())
            if not family_members_at(d, lam, True) <= anchor_strict.member_set:
                bad.append(lam.label())
        if not family_members_at(d, RAY, True) <= anchor_strict.member_set:
            bad.append(RAY.label())
        checks.append(
            LemmaCheck(
                "high-slope-strict-containment",
                not bad,
                "M<0 at the ray and at slopes >= d-1 embeds into the (d, 1) family"
                if not bad
                else f"containment fails at: {', '.join(bad)}",
            )
        )

    seen = set()
    unique_checked = tuple(s for s in checked if not (s in seen or seen.add(s)))
    return InclusionVerification(d, unique_checked, tuple(checks))


@dataclass(frozen=True)
class StabilityReport:
    """Torus stability verdict with the witnessing maximal families.

    ``classifications[i]`` is the singularity tag of ``witnesses[i]``.  The
    witnesses are empty exactly when the verdict is torus-stable.
    """

    verdict: str
    witnesses: tuple[DestabilizingFamily, ...]
    classifications: tuple[str, ...]
    reduced: Polynomial


def check_torus_stability(f: Polynomial, d: int) -> StabilityReport:
    """Decide torus (in)stability of a degree-d form after reduction to B(d).

    torus-unstable   iff the reduced support lies in some maximal strict family;
    torus-non-stable iff it lies in some maximal non-strict family;
    torus-stable     otherwise.  All witnessing maximal families are listed.
    """
    _require_degree(d)
    if f.arity != 5:
        raise ValueError("stability checks expect a form in x0..x4 (arity 5)")
    if f.is_zero():
        raise ValueError("the zero form has no stability verdict")
    if not f.is_homogeneous() or f.degree() != d:
        raise ValueError(f"expected a homogeneous form of degree {d}, got degree {f.degree()}")
    reduced = reduce_mod_quadric(f)
    if reduced.is_zero():
        raise ValueError("the form is a multiple of the quadric and cuts out no surface")

    support = set(reduced.support())
    witnesses = [
        fam
        for strict in (False, True)
        for fam in enumerate_maximal_families(d, strict)
        if support <= fam.member_set
    ]
    if any(fam.strict for fam in witnesses):
        verdict = TORUS_UNSTABLE
    elif witnesses:
        verdict = TORUS_NON_STABLE
    else:
        verdict = TORUS_STABLE
    return StabilityReport(
        verdict,
        tuple(witnesses),
        tuple(classify_family(fam) for fam in witnesses),
        reduced,
    )
