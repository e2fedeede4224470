"""Torus-invariant forms, their stabilizing 1-PS, and orbit closedness.

The invariant forms common to every non-positive weight region are

    mu_0 * x2^d + mu_1 * x1*x2^(d-2)*x3 + ... + mu_c * x1^c*x3^c        (d = 2c)
    mu_0 * x2^d + mu_1 * x1*x2^(d-2)*x3 + ... + mu_c * x1^c*x2*x3^c     (d = 2c+1),

built by ``type_xi``.  They are stabilized by the 1-PS H = lambda_(d-1, 1); the
basis monomials fixed by H are exactly those invariant monomials together with
x0*x3^(d-1) and x1^(d-1)*x4 (``h_fixed_space``).

For a form supported in the H-fixed space, closedness of its orbit under the
centralizer torus diag(a0, a1, 1, 1/a1, 1/a0) reduces (Luna's criterion) to a
convex-geometry fact: the orbit is closed iff the zero vector lies in the
relative interior of the convex hull of the two-torus weights
(a0 - a4, a1 - a3) of the support.  When it does not, a witnessing direction
and the limit form are produced.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .families import basis, enumerate_maximal_families
from .polynomials import Monomial, ParamCoefficient, Polynomial, RationalLike, reduce_mod_quadric
from .weights import NormalizedOnePS, take_limit

CoefficientLike = Union[RationalLike, ParamCoefficient]


def invariant_monomials(d: int) -> tuple[Monomial, ...]:
    """x1^i * x2^(d-2i) * x3^i for i = 0..floor(d/2), in display order."""
    if d < 3:
        raise ValueError("the degree must be >= 3")
    return tuple(Monomial((0, i, d - 2 * i, i, 0)) for i in range(d // 2 + 1))


def type_xi(d: int, mus: Sequence[CoefficientLike]) -> Polynomial:
    """The invariant form with the given coefficients (floor(d/2)+1 of them)."""
    monomials = invariant_monomials(d)
    if len(mus) != len(monomials):
        raise ValueError(f"degree {d} needs exactly {len(monomials)} coefficients, got {len(mus)}")
    return Polynomial.from_terms(5, list(zip(monomials, mus)))


def stabilizing_one_ps(d: int) -> NormalizedOnePS:
    """The 1-PS H = diag(t^(d-1), t, 1, t^-1, t^(1-d)) fixing every invariant form."""
    return NormalizedOnePS(d - 1, 1)


@lru_cache(maxsize=None)
def h_fixed_space(d: int) -> tuple[Monomial, ...]:
    """Basis monomials of H-weight zero: (d-1)(a0 - a4) + (a1 - a3) == 0."""
    h = stabilizing_one_ps(d)
    return tuple(m for m in basis(d) if h.weight(m) == 0)


def stabilized_by_h(f: Polynomial) -> bool:
    """True iff the reduced support lies in the H-fixed space."""
    if f.arity != 5:
        raise ValueError("expected a form in x0..x4 (arity 5)")
    if f.is_zero():
        raise ValueError("the zero form is not considered here")
    if not f.is_homogeneous():
        raise ValueError("expected a homogeneous form")
    f = reduce_mod_quadric(f)
    if f.is_zero():
        return False
    d = f.degree()
    if d < 3:
        return False
    return set(f.support()) <= set(h_fixed_space(d))


def two_torus_weight(m: Monomial) -> tuple[int, int]:
    """Weight of a monomial under the maximal torus diag(a0, a1, 1, 1/a1, 1/a0)."""
    if m.arity != 5:
        raise ValueError("two-torus weights are defined on arity-5 monomials")
    a = m.exponents
    return (a[0] - a[4], a[1] - a[3])


def zero_in_relative_interior(points: Iterable[tuple[int, int]]) -> bool:
    """Exact test: is the origin in the relative interior of conv(points)?

    A single point counts as its own relative interior, so {0} contains 0.
    Integer arithmetic throughout.
    """
    pts = sorted(set(points))
    if not pts:
        raise ValueError("need at least one point")

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    if len(pts) == 1:
        return pts[0] == (0, 0)

    base = pts[0]
    direction = next((p[0] - base[0], p[1] - base[1]) for p in pts[1:] if p != base)
    collinear = all(cross(base, (base[0] + direction[0], base[1] + direction[1]), p) == 0 for p in pts)

    if collinear:
        # origin must lie on the same line, strictly between the extremes
        if cross((0, 0), direction, base) != 0:
            return False
        coords = [p[0] * direction[0] + p[1] * direction[1] for p in pts]
        return min(coords) < 0 < max(coords)

    # full-dimensional hull: origin strictly inside every edge (monotone chain)
    def half_hull(points_):
        hull: list[tuple[int, int]] = []
        for p in points_:
            while len(hull) >= 2 and cross(hull[-2], hull[-1], p) <= 0:
                hull.pop()
            hull.append(p)
        return hull

    lower = half_hull(pts)
    upper = half_hull(list(reversed(pts)))
    hull = lower[:-1] + upper[:-1]
    return all(cross(a, b, (0, 0)) > 0 for a, b in zip(hull, hull[1:] + hull[:1]))


@dataclass(frozen=True)
class OrbitVerdict:
    """Closedness of the centralizer-torus orbit; a degeneration if not closed.

    When not closed, ``limit == take_limit(f, direction)`` is the invariant
    form the orbit closure contains, and ``direction`` is the smallest-slope
    maximal strict family direction witnessing it.
    """

    closed: bool
    direction: NormalizedOnePS | None = None
    limit: Polynomial | None = None


def torus_orbit_closed(f: Polynomial) -> OrbitVerdict:
    """Decide orbit closedness for a form supported in the H-fixed space."""
    if not stabilized_by_h(f):
        raise ValueError("orbit closedness is decided only for forms stabilized by H")
    g = reduce_mod_quadric(f)
    d = g.degree()
    weights = [two_torus_weight(m) for m in g.support()]
    if zero_in_relative_interior(weights):
        return OrbitVerdict(closed=True)

    moving = {m for m in g.support() if two_torus_weight(m) != (0, 0)}
    for fam in enumerate_maximal_families(d, strict=True):
        if moving <= fam.member_set:
            limit = take_limit(g, fam.slope)
            return OrbitVerdict(closed=False, direction=fam.slope, limit=limit)
    raise RuntimeError("no destabilizing direction found for a non-closed orbit")
