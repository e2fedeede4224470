"""One-parameter subgroups, monomial weights, and the Hilbert-Mumford weight.

A normalized SO(5) one-parameter subgroup acts diagonally as
diag(t^u, t^v, 1, t^-v, t^-u) with u >= v >= 0, so the monomial
x0^a0 * ... * x4^a4 scales by t^W with

    W = (a0 - a4)*u + (a1 - a3)*v.

A general SL(5) diagonal subgroup carries an integer weight vector summing to
zero and acts by W = sum(ai * wi).  The Hilbert-Mumford weight mu of a nonzero
form is the maximum of W over its support; a form lies in the non-positive
(resp. negative) weight region of lambda iff mu <= 0 (resp. < 0).

Sign convention: a weight-W monomial scales by t^W, so the limit of f under
lambda(t) as t -> infinity exists exactly when all support weights are <= 0,
and equals the weight-0 part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .polynomials import Monomial, Polynomial


class LimitUndefined(ValueError):
    """Raised when a support monomial has positive weight, so t -> infinity diverges."""


@dataclass(frozen=True)
class NormalizedOnePS:
    """A normalized diagonal 1-PS of SO(5), canonicalized to lowest terms.

    Invariants: u >= v >= 0, (u, v) != (0, 0), gcd(u, v) == 1; the v == 0 ray
    is stored as the distinguished value (1, 0).
    """

    u: int
    v: int

    def __post_init__(self) -> None:
        u, v = self.u, self.v
        if not (isinstance(u, int) and isinstance(v, int)):
            raise ValueError("1-PS weights must be integers")
        if u < v or v < 0 or (u, v) == (0, 0):
            raise ValueError(f"normalized 1-PS requires u >= v >= 0 and (u, v) != (0, 0): ({u}, {v})")
        if v == 0:
            u = 1
        else:
            g = gcd(u, v)
            u, v = u // g, v // g
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @classmethod
    def from_slope(cls, slope: Fraction) -> "NormalizedOnePS":
        return cls(slope.numerator, slope.denominator)

    @property
    def slope(self) -> Fraction | None:
        """u/v as a Fraction, or None for the infinite-slope ray (1, 0)."""
        return Fraction(self.u, self.v) if self.v else None

    def sort_key(self) -> tuple[int, Fraction]:
        # finite slopes ascending, the (1, 0) ray last
        return (1, Fraction(0)) if self.v == 0 else (0, Fraction(self.u, self.v))

    def label(self) -> str:
        return f"{self.u}/{self.v}"

    def weight(self, m: Monomial) -> int:
        if m.arity != 5:
            raise ValueError("1-PS weights are defined on arity-5 monomials")
        a = m.exponents
        return (a[0] - a[4]) * self.u + (a[1] - a[3]) * self.v


RAY = NormalizedOnePS(1, 0)


@dataclass(frozen=True)
class DiagonalOnePS:
    """A diagonal 1-PS of SL(5): integer weights summing to zero, not all zero.

    The SO(5)-normalized case embeds as (u, v, 0, -v, -u).
    """

    weights: tuple[int, int, int, int, int]

    def __post_init__(self) -> None:
        w = tuple(self.weights)
        if len(w) != 5 or not all(isinstance(x, int) for x in w):
            raise ValueError("expected 5 integer weights")
        if sum(w) != 0:
            raise ValueError(f"SL(5) weights must sum to zero, got sum {sum(w)}")
        if all(x == 0 for x in w):
            raise ValueError("the trivial 1-PS is not allowed")
        object.__setattr__(self, "weights", w)

    @classmethod
    def from_normalized(cls, lam: NormalizedOnePS, scale: int = 1) -> "DiagonalOnePS":
        u, v = lam.u * scale, lam.v * scale
        return cls((u, v, 0, -v, -u))

    def weight(self, m: Monomial) -> int:
        if m.arity != 5:
            raise ValueError("1-PS weights are defined on arity-5 monomials")
        return sum(a * w for a, w in zip(m.exponents, self.weights))


OneParamSubgroup = NormalizedOnePS | DiagonalOnePS


def weight(lam: OneParamSubgroup, m: Monomial) -> int:
    """The exact integer weight of a monomial; additive over products."""
    return lam.weight(m)


def mu(lam: OneParamSubgroup, f: Polynomial) -> int:
    """Hilbert-Mumford weight: the maximum weight over the support of f."""
    if f.is_zero():
        raise ValueError("the Hilbert-Mumford weight of the zero polynomial is undefined")
    return max(lam.weight(m) for m in f.support())


def take_limit(f: Polynomial, lam: NormalizedOnePS) -> Polynomial:
    """The limit of lambda(t) . f as t -> infinity: the weight-0 part of f.

    Defined only when every support monomial has weight <= 0; otherwise
    ``LimitUndefined`` is raised.  The result is lambda-invariant (possibly
    zero), and taking the limit again is a fixed point.
    """
    if f.is_zero():
        raise ValueError("the limit of the zero polynomial is undefined")
    weights = [(lam.weight(m), m, c) for m, c in f.terms]
    worst = max(w for w, _, _ in weights)
    if worst > 0:
        raise LimitUndefined(
            f"limit does not exist: support has a monomial of positive weight {worst} "
            f"under lambda_({lam.u},{lam.v}), so f is not in the non-positive region"
        )
    return Polynomial.from_terms(5, [(m, c) for w, m, c in weights if w == 0])
