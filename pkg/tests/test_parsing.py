"""Expression grammar: golden parses, error positions, round trips."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from quadric_stability import (
    Monomial,
    ParamCoefficient,
    ParseError,
    Polynomial,
    format_monomial,
    format_polynomial,
    parse_polynomial,
    reduce_mod_quadric,
    type_xi,
)
from quadric_stability.acceptance import random_polynomial_for_roundtrip


class TestParse:
    def test_chow_example_form(self):
        p = parse_polynomial("x0*x3^3 + x1*x2^2*x3")
        assert p == Polynomial.from_terms(
            5, [(Monomial((1, 0, 0, 3, 0)), 1), (Monomial((0, 1, 2, 1, 0)), 1)]
        )

    def test_zero(self):
        assert parse_polynomial("0").is_zero()

    def test_invariant_form_with_parameters(self):
        p = parse_polynomial("c0*x2^4 + c1*x1*x2^2*x3 + c2*x1^2*x3^2")
        mus = [ParamCoefficient.parameter(i) for i in range(3)]
        assert p == type_xi(4, mus)

    def test_whitespace_insensitive(self):
        assert parse_polynomial(" x0 * x3 ^ 3\n+ x1*x2^2*x3 ") == parse_polynomial("x0*x3^3+x1*x2^2*x3")

    def test_rational_coefficients(self):
        p = parse_polynomial("-3/2*x2^4")
        assert p.coefficient(Monomial((0, 0, 4, 0, 0))).as_rational() == Fraction(-3, 2)

    def test_repeated_variable_multiplies(self):
        assert parse_polynomial("x0*x0") == parse_polynomial("x0^2")

    def test_exponent_zero_is_allowed(self):
        assert parse_polynomial("x2^0") == parse_polynomial("1")

    def test_chart_variables_give_arity_three(self):
        p = parse_polynomial("y1*y3^2")
        assert p.arity == 3


class TestParseErrors:
    def test_juxtaposition_rejected(self):
        with pytest.raises(ParseError):
            parse_polynomial("x0x3")
        with pytest.raises(ParseError):
            parse_polynomial("2x0")

    def test_mixed_families_rejected_with_position(self):
        with pytest.raises(ParseError) as exc_info:
            parse_polynomial("x0*x3 + x2*y1")
        assert exc_info.value.line == 1
        assert exc_info.value.column == 12

    def test_negative_exponent_rejected(self):
        with pytest.raises(ParseError, match="negative exponent"):
            parse_polynomial("x2^-1")

    def test_unknown_variable(self):
        with pytest.raises(ParseError, match="unknown variable"):
            parse_polynomial("x9 + x0")
        with pytest.raises(ParseError, match="unknown variable"):
            parse_polynomial("z1")

    def test_unexpected_character_position(self):
        with pytest.raises(ParseError) as exc_info:
            parse_polynomial("x0 + @")
        assert exc_info.value.column == 6

    def test_empty_expression(self):
        with pytest.raises(ParseError, match="empty"):
            parse_polynomial("   ")

    def test_zero_denominator(self):
        with pytest.raises(ParseError, match="denominator"):
            parse_polynomial("1/0*x2")

    def test_arity_conflict(self):
        with pytest.raises(ParseError):
            parse_polynomial("x0*x1", arity=3)


class TestFormat:
    def test_zero(self):
        assert format_polynomial(Polynomial.zero(5)) == "0"

    def test_round_trip_simple(self):
        assert format_polynomial(parse_polynomial("x1*x3 + x2^2")) == "x1*x3 + x2^2"

    def test_reduction_golden(self):
        reduced = reduce_mod_quadric(parse_polynomial("x0*x2^2*x4"))
        assert format_polynomial(reduced) == "-x1*x2^2*x3 - x2^4"

    def test_monomial_format(self):
        assert format_monomial(Monomial((1, 0, 0, 3, 0))) == "x0*x3^3"
        assert format_monomial(Monomial((0, 0, 0, 0, 0))) == "1"
        assert format_monomial(Monomial((0, 2, 1))) == "y2^2*y3"

    def test_parameter_terms_are_expanded(self):
        p = parse_polynomial("2*c0*x2^4 + 3*c1^2*x2^4")
        assert format_polynomial(p) == "2*c0*x2^4 + 3*c1^2*x2^4"


def test_round_trip_property():
    rng = random.Random(23)
    for _ in range(1000):
        p = random_polynomial_for_roundtrip(rng)
        assert parse_polynomial(format_polynomial(p), arity=p.arity) == p
