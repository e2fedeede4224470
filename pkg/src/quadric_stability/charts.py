"""Affine chart restriction and singularity measurements.

Near the base point [1:0:0:0:0] the quadric is parametrized by the chart

    x0 = 1,  x1 = y1,  x2 = y2,  x3 = y3,  x4 = -y2^2 - y1*y3,

so a degree-d form restricts to an (inhomogeneous) polynomial in y1, y2, y3 of
total degree at most 2d.  Translating y1 by a rational shift s moves the chart
center to the point [1 : s : 0 : 0 : 0] on the line x2 = x3 = x4 = 0; points
with x0 = 0 would need the symmetric chart and are not supported.

Multiplicity is the lowest total degree present in the chart polynomial; for
generic members presence is decided structurally (a parameter coefficient that
is nonzero as a polynomial in the c_i), never by sampling.  The weighted
multiplicity w(g) with positive integer weights on y1, y2, y3 gives the upper
bound sum(w_i)/w(g) for the log canonical threshold at the chart center; a
value below 1 is evidence against log canonicity (the bound's equality
condition is not checked).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .families import DestabilizingFamily
from .polynomials import Monomial, ParamCoefficient, Polynomial, reduce_mod_quadric, substitute


@dataclass(frozen=True)
class WeightVector:
    """Positive integer weights assigned to the chart variables y1, y2, y3."""

    w1: int
    w2: int
    w3: int

    def __post_init__(self) -> None:
        for w in (self.w1, self.w2, self.w3):
            if not isinstance(w, int) or w < 1:
                raise ValueError("chart weights must be integers >= 1")

    @property
    def total(self) -> int:
        return self.w1 + self.w2 + self.w3

    def of(self, m: Monomial) -> int:
        if m.arity != 3:
            raise ValueError("weight vectors apply to chart monomials (arity 3)")
        return self.w1 * m[0] + self.w2 * m[1] + self.w3 * m[2]


# Preset used by the headline lct bounds; any positive weights are a legitimate probe.
DEFAULT_CHART_WEIGHTS = WeightVector(2, 3, 4)


@dataclass(frozen=True)
class ChartPolynomial:
    """A restriction to the affine chart, centered at [1 : shift : 0 : 0 : 0]."""

    poly: Polynomial
    shift: Fraction

    def __post_init__(self) -> None:
        if self.poly.arity != 3:
            raise ValueError("chart polynomials live in y1, y2, y3 (arity 3)")

    @property
    def origin(self) -> tuple[Fraction, Fraction, Fraction, Fraction, Fraction]:
        return (Fraction(1), self.shift, Fraction(0), Fraction(0), Fraction(0))


def _validate_projective(f: Polynomial, d: int) -> None:
    if f.arity != 5:
        raise ValueError("chart restriction expects a form in x0..x4 (arity 5)")
    if f.is_zero():
        raise ValueError("cannot restrict the zero form")
    if not f.is_homogeneous() or f.degree() != d:
        raise ValueError(f"expected a homogeneous form of degree {d}, got degree {f.degree()}")


def chart_assignment(shift: Fraction = Fraction(0)) -> tuple[Polynomial, ...]:
    """Substitution images for the chart at [1 : shift : 0 : 0 : 0]."""
    y1 = Polynomial.variable(3, 0)
    y2 = Polynomial.variable(3, 1)
    y3 = Polynomial.variable(3, 2)
    x1_image = y1 - Polynomial.constant(3, shift)
    x4_image = -(y2 * y2) - x1_image * y3
    return (Polynomial.constant(3, 1), x1_image, y2, y3, x4_image)


def chart_at_p0(f: Polynomial, d: int) -> ChartPolynomial:
    """Restrict f to the chart at the base point [1:0:0:0:0]."""
    _validate_projective(f, d)
    return ChartPolynomial(substitute(f, chart_assignment()), Fraction(0))


def chart_at_line_point(f: Polynomial, d: int, shift: Fraction) -> ChartPolynomial:
    """Restrict f to the chart translated to [1 : shift : 0 : 0 : 0] on the line."""
    _validate_projective(f, d)
    shift = Fraction(shift)
    return ChartPolynomial(substitute(f, chart_assignment(shift)), shift)


def multiplicity(g: ChartPolynomial) -> int:
    """The lowest total degree present: the multiplicity at the chart center."""
    if g.poly.is_zero():
        raise ValueError("the zero chart polynomial has no multiplicity")
    return min(m.degree for m in g.poly.support())


def leading_form(g: ChartPolynomial) -> Polynomial:
    """The lowest-degree homogeneous piece of the chart polynomial."""
    r = multiplicity(g)
    return Polynomial.from_terms(3, [(m, c) for m, c in g.poly.terms if m.degree == r])


def line_vanishing_order(f: Polynomial) -> int:
    """min(a2 + a3 + a4) over the reduced support; >= 2 certifies the surface
    is singular along the whole line x2 = x3 = x4 = 0."""
    if f.arity != 5:
        raise ValueError("expected a form in x0..x4 (arity 5)")
    if f.is_zero():
        raise ValueError("the zero form has no vanishing order")
    if any(m[0] and m[4] for m in f.support()):
        f = reduce_mod_quadric(f)
    return min(m[2] + m[3] + m[4] for m in f.support())


def weighted_multiplicity(g: ChartPolynomial, w: WeightVector) -> int:
    """min over present monomials of w1*e1 + w2*e2 + w3*e3."""
    if g.poly.is_zero():
        raise ValueError("the zero chart polynomial has no weighted multiplicity")
    return min(w.of(m) for m in g.poly.support())


def lct_upper_bound(g: ChartPolynomial, w: WeightVector) -> Fraction:
    """The weighted-multiplicity upper bound (w1+w2+w3)/w(g) for the log
    canonical threshold at the chart center.  An upper bound only."""
    return Fraction(w.total, weighted_multiplicity(g, w))


def generic_member(fam: DestabilizingFamily) -> Polynomial:
    """The general form of the family: sum of c_i * m_i with fresh parameters."""
    if not fam.members:
        raise ValueError("cannot form the generic member of an empty family")
    return Polynomial.from_terms(
        5,
        [(m, ParamCoefficient.parameter(i)) for i, m in enumerate(fam.members)],
    )
