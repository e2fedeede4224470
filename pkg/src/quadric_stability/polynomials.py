"""Exact sparse multivariate polynomial arithmetic over Q, extended by parameters.

A polynomial is a sparse map from monomials to coefficients.  Coefficients are
themselves sparse polynomials in generic parameter symbols ``c0, c1, ...`` with
rational (``fractions.Fraction``) coefficients, so "general form" arguments can
be decided structurally: a monomial is present in a generic member exactly when
its parameter coefficient is not the zero polynomial.  Parameter-free
coefficients are the special case of a single term with the empty exponent.

Everything here is exact and immutable:

* ``Monomial``         -- an exponent tuple, e.g. x0*x3^3 == Monomial((1, 0, 0, 3, 0))
* ``ParamCoefficient`` -- sparse map {parameter exponent tuple -> Fraction}
* ``Polynomial``       -- sparse map {Monomial -> ParamCoefficient} plus an arity

The canonical term order is descending lexicographic on exponent tuples, which
makes equality structural and output deterministic.  Projective forms live in
arity 5 (x0..x4); affine chart polynomials live in arity 3 (y1..y3).

The only relation ever reduced is the fixed smooth quadric threefold

    x0*x4 + x1*x3 + x2^2 = 0,

via exhaustive rewriting x0*x4 -> -x1*x3 - x2^2 (``reduce_mod_quadric``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import zip_longest
from typing import Iterable, Mapping, Sequence, Union

RationalLike = Union[int, Fraction]


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True, order=True)
class Monomial:
    """A power product, stored as its exponent tuple.

    The natural total order on monomials is lexicographic on the exponent
    tuple; canonical listings in this package are descending in that order.
    """

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(self.exponents)
        for e in exps:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"monomial exponents must be non-negative integers: {exps!r}")
        object.__setattr__(self, "exponents", exps)

    @cached_property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def arity(self) -> int:
        return len(self.exponents)

    def __getitem__(self, index: int) -> int:
        return self.exponents[index]

    def __mul__(self, other: "Monomial") -> "Monomial":
        if len(self.exponents) != len(other.exponents):
            raise ValueError("cannot multiply monomials of different arity")
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Monomial({self.exponents!r})"


def _strip_trailing_zeros(exps: Sequence[int]) -> tuple[int, ...]:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


@dataclass(frozen=True)
class ParamCoefficient:
    """A coefficient: an exact-rational polynomial in parameter symbols c0, c1, ...

    ``terms`` maps parameter exponent tuples (trailing zeros stripped) to
    nonzero rationals, stored sorted in descending lexicographic order.  The
    zero coefficient is the empty map; a parameter-free coefficient has the
    single key ``()``.
    """

    terms: tuple[tuple[tuple[int, ...], Fraction], ...]

    @staticmethod
    def _canonical(mapping: Mapping[tuple[int, ...], Fraction]) -> "ParamCoefficient":
        items = [(_strip_trailing_zeros(e), q) for e, q in mapping.items() if q != 0]
        return ParamCoefficient(tuple(sorted(items, reverse=True)))

    @classmethod
    def zero(cls) -> "ParamCoefficient":
        return cls(())

    @classmethod
    def from_rational(cls, value: RationalLike) -> "ParamCoefficient":
        q = _as_fraction(value)
        return cls(()) if q == 0 else cls((((), q),))

    @classmethod
    def one(cls) -> "ParamCoefficient":
        return cls.from_rational(1)

    @classmethod
    def parameter(cls, index: int, power: int = 1) -> "ParamCoefficient":
        """The coefficient ``c<index>**power``."""
        if index < 0 or power < 0:
            raise ValueError("parameter index and power must be non-negative")
        exps = (0,) * index + (power,)
        return cls._canonical({exps: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_rational(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == ())

    def as_rational(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if self.is_rational():
            return self.terms[0][1]
        raise ValueError("coefficient involves parameters; it is not a plain rational")

    def __add__(self, other: "ParamCoefficient") -> "ParamCoefficient":
        acc = dict(self.terms)
        for exps, q in other.terms:
            acc[exps] = acc.get(exps, Fraction(0)) + q
        return ParamCoefficient._canonical(acc)

    def __neg__(self) -> "ParamCoefficient":
        return ParamCoefficient(tuple((e, -q) for e, q in self.terms))

    def __sub__(self, other: "ParamCoefficient") -> "ParamCoefficient":
        return self + (-other)

    def __mul__(self, other: Union["ParamCoefficient", RationalLike]) -> "ParamCoefficient":
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            if q == 0:
                return ParamCoefficient.zero()
            return ParamCoefficient(tuple((e, c * q) for e, c in self.terms))
        acc: dict[tuple[int, ...], Fraction] = {}
        for e1, q1 in self.terms:
            for e2, q2 in other.terms:
                exps = tuple(a + b for a, b in zip_longest(e1, e2, fillvalue=0))
                acc[exps] = acc.get(exps, Fraction(0)) + q1 * q2
        return ParamCoefficient._canonical(acc)

    __rmul__ = __mul__

    def evaluate(self, params: Sequence[RationalLike]) -> Fraction:
        """Evaluate at concrete parameter values (exact)."""
        values = [_as_fraction(p) for p in params]
        total = Fraction(0)
        for exps, q in self.terms:
            if len(exps) > len(values):
                raise ValueError(f"no value supplied for parameter c{len(exps) - 1}")
            piece = q
            for v, e in zip(values, exps):
                piece *= v**e
            total += piece
        return total


@dataclass(frozen=True)
class Polynomial:
    """A sparse polynomial: canonical tuple of (Monomial, ParamCoefficient) terms.

    Terms are stored with nonzero coefficients only, sorted descending in the
    monomial order, so structural equality is polynomial equality.  Homogeneity
    is not an invariant (chart polynomials are inhomogeneous); use
    ``is_homogeneous``.
    """

    arity: int
    terms: tuple[tuple[Monomial, ParamCoefficient], ...]

    @staticmethod
    def _build(arity: int, mapping: Mapping[Monomial, ParamCoefficient]) -> "Polynomial":
        items = [(m, c) for m, c in mapping.items() if c]
        items.sort(key=lambda mc: mc[0], reverse=True)
        return Polynomial(arity, tuple(items))

    @classmethod
    def zero(cls, arity: int) -> "Polynomial":
        return cls(arity, ())

    @classmethod
    def constant(cls, arity: int, value: Union[RationalLike, ParamCoefficient]) -> "Polynomial":
        coeff = value if isinstance(value, ParamCoefficient) else ParamCoefficient.from_rational(value)
        return cls._build(arity, {Monomial((0,) * arity): coeff})

    @classmethod
    def variable(cls, arity: int, index: int) -> "Polynomial":
        if not 0 <= index < arity:
            raise ValueError(f"variable index {index} out of range for arity {arity}")
        exps = [0] * arity
        exps[index] = 1
        return cls.monomial(Monomial(tuple(exps)))

    @classmethod
    def monomial(
        cls, m: Monomial, coeff: Union[RationalLike, ParamCoefficient] = 1
    ) -> "Polynomial":
        c = coeff if isinstance(coeff, ParamCoefficient) else ParamCoefficient.from_rational(coeff)
        return cls._build(m.arity, {m: c})

    @classmethod
    def from_terms(
        cls,
        arity: int,
        terms: Iterable[tuple[Monomial, Union[RationalLike, ParamCoefficient]]],
    ) -> "Polynomial":
        acc: dict[Monomial, ParamCoefficient] = {}
        for m, coeff in terms:
            if m.arity != arity:
                raise ValueError(f"monomial arity {m.arity} does not match polynomial arity {arity}")
            c = coeff if isinstance(coeff, ParamCoefficient) else ParamCoefficient.from_rational(coeff)
            acc[m] = acc.get(m, ParamCoefficient.zero()) + c
        return cls._build(arity, acc)

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def support(self) -> tuple[Monomial, ...]:
        """The monomials with nonzero coefficient, in descending order."""
        return tuple(m for m, _ in self.terms)

    def coefficient(self, m: Monomial) -> ParamCoefficient:
        return self._coeff_map.get(m, ParamCoefficient.zero())

    @cached_property
    def _coeff_map(self) -> dict[Monomial, ParamCoefficient]:
        return dict(self.terms)

    def degree(self) -> int | None:
        """Total degree; ``None`` for the zero polynomial (undefined)."""
        if not self.terms:
            return None
        return max(m.degree for m, _ in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {m.degree for m, _ in self.terms}
        return len(degrees) <= 1

    # -- ring operations -------------------------------------------------

    def _require_same_arity(self, other: "Polynomial") -> None:
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._require_same_arity(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = acc.get(m, ParamCoefficient.zero()) + c
        return Polynomial._build(self.arity, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.arity, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(
        self, other: Union["Polynomial", ParamCoefficient, RationalLike]
    ) -> "Polynomial":
        if isinstance(other, (int, Fraction, ParamCoefficient)):
            scale = other if isinstance(other, ParamCoefficient) else ParamCoefficient.from_rational(other)
            acc = {m: c * scale for m, c in self.terms}
            return Polynomial._build(self.arity, acc)
        self._require_same_arity(other)
        acc: dict[Monomial, ParamCoefficient] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = m1 * m2
                prod = c1 * c2
                acc[m] = acc.get(m, ParamCoefficient.zero()) + prod
        return Polynomial._build(self.arity, acc)

    def __rmul__(self, other: Union[ParamCoefficient, RationalLike]) -> "Polynomial":
        return self * other

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must have non-negative integer exponents")
        result = Polynomial.constant(self.arity, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def evaluate(
        self, point: Sequence[RationalLike], params: Sequence[RationalLike] = ()
    ) -> Fraction:
        """Exact evaluation at a rational point (and parameter values)."""
        values = [_as_fraction(x) for x in point]
        if len(values) != self.arity:
            raise ValueError(f"expected {self.arity} coordinates, got {len(values)}")
        total = Fraction(0)
        for m, c in self.terms:
            piece = c.evaluate(params)
            for v, e in zip(values, m.exponents):
                piece *= v**e
            total += piece
        return total


# -- the quadric threefold and its rewriting rule --------------------------

def quadric() -> Polynomial:
    """The smooth quadric threefold form x0*x4 + x1*x3 + x2^2."""
    return Polynomial.from_terms(
        5,
        [
            (Monomial((1, 0, 0, 0, 1)), 1),
            (Monomial((0, 1, 0, 1, 0)), 1),
            (Monomial((0, 0, 2, 0, 0)), 1),
        ],
    )


QUADRIC = quadric()


@lru_cache(maxsize=None)
def _rewrite_power(k: int) -> Polynomial:
    # (-x1*x3 - x2^2)^k, the image of (x0*x4)^k modulo the quadric.
    base = Polynomial.from_terms(
        5, [(Monomial((0, 1, 0, 1, 0)), -1), (Monomial((0, 0, 2, 0, 0)), -1)]
    )
    return base**k


def reduce_mod_quadric(f: Polynomial) -> Polynomial:
    """Rewrite f into the quotient basis (no monomial divisible by x0*x4).

    The result is congruent to f modulo the quadric and every surviving
    monomial satisfies a0*a4 == 0.  Requires a homogeneous arity-5 input.
    """
    if f.arity != 5:
        raise ValueError("reduction is defined for forms in x0..x4 (arity 5)")
    if not f.is_homogeneous():
        raise ValueError("reduction requires a homogeneous form")
    acc: dict[Monomial, ParamCoefficient] = {}

    def _accumulate(m: Monomial, c: ParamCoefficient) -> None:
        acc[m] = acc.get(m, ParamCoefficient.zero()) + c

    for m, c in f.terms:
        k = min(m[0], m[4])
        if k == 0:
            _accumulate(m, c)
            continue
        stripped = Monomial((m[0] - k, m[1], m[2], m[3], m[4] - k))
        for mm, cc in _rewrite_power(k).terms:
            _accumulate(stripped * mm, c * cc)
    return Polynomial._build(5, acc)


def substitute(f: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """Compose f with an assignment variable_i -> images[i] (exact).

    All images must share one arity, which becomes the arity of the result.
    """
    images = tuple(images)
    if len(images) != f.arity:
        raise ValueError(f"assignment must cover all {f.arity} variables, got {len(images)}")
    if not images:
        raise ValueError("cannot substitute into a polynomial with no variables")
    target = images[0].arity
    for g in images:
        if g.arity != target:
            raise ValueError("all substitution images must share one arity")

    power_cache: dict[tuple[int, int], Polynomial] = {}

    def _image_power(i: int, e: int) -> Polynomial:
        key = (i, e)
        if key not in power_cache:
            power_cache[key] = images[i] ** e
        return power_cache[key]

    result = Polynomial.zero(target)
    for m, c in f.terms:
        piece = Polynomial.constant(target, c)
        for i, e in enumerate(m.exponents):
            if e:
                piece = piece * _image_power(i, e)
        result = result + piece
    return result
