"""Invariant forms, the H-fixed space, and torus-orbit closedness."""

from __future__ import annotations

import pytest

from quadric_stability import (
    Monomial,
    NormalizedOnePS,
    ParamCoefficient,
    check_torus_stability,
    h_fixed_space,
    invariant_monomials,
    parse_polynomial,
    stabilized_by_h,
    stabilizing_one_ps,
    take_limit,
    torus_orbit_closed,
    two_torus_weight,
    type_xi,
)
from quadric_stability.families import TORUS_UNSTABLE
from quadric_stability.orbits import zero_in_relative_interior


def monomial(text: str) -> Monomial:
    return parse_polynomial(text).support()[0]


class TestTypeXi:
    def test_even_degree_display(self):
        assert type_xi(4, [1, 1, 1]) == parse_polynomial("x2^4 + x1*x2^2*x3 + x1^2*x3^2")

    def test_odd_degree_display(self):
        assert type_xi(5, [1, 0, 1]) == parse_polynomial("x2^5 + x1^2*x2*x3^2")

    def test_all_zero_coefficients_give_zero(self):
        assert type_xi(3, [0, 0]).is_zero()

    def test_wrong_coefficient_count_rejected(self):
        with pytest.raises(ValueError, match="coefficients"):
            type_xi(4, [1, 1])

    def test_monomials_are_torus_central(self):
        for d in range(3, 9):
            for m in invariant_monomials(d):
                assert m[0] == m[4] == 0
                assert m[1] == m[3]
                assert two_torus_weight(m) == (0, 0)


class TestHFixedSpace:
    @pytest.mark.parametrize(
        "d,expected",
        [
            (4, ["x0*x3^3", "x1^3*x4", "x2^4", "x1*x2^2*x3", "x1^2*x3^2"]),
            (5, ["x0*x3^4", "x1^4*x4", "x2^5", "x1*x2^3*x3", "x1^2*x2*x3^2"]),
        ],
    )
    def test_golden_lists(self, d, expected):
        assert set(h_fixed_space(d)) == {monomial(text) for text in expected}

    @pytest.mark.parametrize("d", range(3, 11))
    def test_equals_invariants_plus_two_extremes(self, d):
        expected = set(invariant_monomials(d))
        expected.add(Monomial((1, 0, 0, d - 1, 0)))
        expected.add(Monomial((0, d - 1, 0, 0, 1)))
        assert set(h_fixed_space(d)) == expected

    @pytest.mark.parametrize("d", range(3, 11))
    def test_weight_filter_oracle(self, d):
        from quadric_stability import basis

        h = stabilizing_one_ps(d)
        assert h == NormalizedOnePS(d - 1, 1)
        assert set(h_fixed_space(d)) == {
            m for m in basis(d) if (d - 1) * (m[0] - m[4]) + (m[1] - m[3]) == 0
        }


class TestStabilizedByH:
    def test_invariant_forms(self):
        for d in (3, 4, 7):
            assert stabilized_by_h(type_xi(d, [1] * (d // 2 + 1)))

    def test_extreme_pair(self):
        for d in (4, 5):
            f = parse_polynomial(f"x0*x3^{d - 1} + x1^{d - 1}*x4")
            assert stabilized_by_h(f)

    def test_off_space_monomial(self):
        d = 5
        f = parse_polynomial(f"x1^{d - 1}*x4 + x2^{d - 1}*x3")
        assert not stabilized_by_h(f)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            stabilized_by_h(parse_polynomial("0"))


class TestZeroInRelativeInterior:
    def test_origin_alone(self):
        assert zero_in_relative_interior([(0, 0)])

    def test_single_offset_point(self):
        assert not zero_in_relative_interior([(1, 2)])

    def test_segment_with_origin_endpoint(self):
        assert not zero_in_relative_interior([(0, 0), (1, 1)])

    def test_balanced_segment(self):
        assert zero_in_relative_interior([(-1, -1), (1, 1)])
        assert zero_in_relative_interior([(-2, 6), (0, 0), (1, -3)])

    def test_origin_on_hull_boundary(self):
        assert not zero_in_relative_interior([(-1, 0), (1, 0), (0, 1)])
        assert not zero_in_relative_interior([(0, 0), (1, 0), (0, 1)])

    def test_origin_strictly_inside(self):
        assert zero_in_relative_interior([(-1, -1), (2, 0), (0, 2)])

    def test_off_line_origin(self):
        assert not zero_in_relative_interior([(1, 1), (2, 2), (3, 1)])
        assert not zero_in_relative_interior([(1, 0), (1, 2)])


class TestOrbitClosedness:
    @pytest.mark.parametrize("d", range(3, 9))
    def test_invariant_forms_are_closed(self, d):
        verdict = torus_orbit_closed(type_xi(d, [1] * (d // 2 + 1)))
        assert verdict.closed
        assert verdict.direction is None and verdict.limit is None

    def test_balanced_perturbation_stays_closed(self):
        for d in (4, 5):
            xi = type_xi(d, [1] * (d // 2 + 1))
            f = xi + 2 * parse_polynomial(f"x0*x3^{d - 1}") + 3 * parse_polynomial(f"x1^{d - 1}*x4")
            assert torus_orbit_closed(f).closed

    @pytest.mark.parametrize("d", range(3, 9))
    def test_one_sided_perturbation_degenerates(self, d):
        xi = type_xi(d, [1] * (d // 2 + 1))
        f = xi + parse_polynomial(f"x1^{d - 1}*x4")
        verdict = torus_orbit_closed(f)
        assert not verdict.closed
        assert verdict.direction == NormalizedOnePS(d, 1)
        assert verdict.limit == xi

    def test_degeneration_invariants(self):
        d = 4
        xi = type_xi(d, [1, 1, 1])
        f = xi + parse_polynomial("x0*x3^3")
        verdict = torus_orbit_closed(f)
        assert not verdict.closed
        assert verdict.limit == take_limit(f, verdict.direction)
        assert verdict.limit != f
        assert stabilized_by_h(verdict.limit)

    def test_rescaling_does_not_change_the_verdict(self):
        d = 4
        xi = type_xi(d, [1, 1, 1])
        f = xi + parse_polynomial("x1^3*x4")
        assert torus_orbit_closed(3 * f).closed == torus_orbit_closed(f).closed
        scaled = f * ParamCoefficient.parameter(9)
        assert not torus_orbit_closed(scaled).closed

    def test_requires_h_stabilized_input(self):
        with pytest.raises(ValueError, match="stabilized"):
            torus_orbit_closed(parse_polynomial("x0^4"))

    @pytest.mark.parametrize("d", [3, 4, 5, 6])
    def test_nonvanishing_invariant_forms_are_semistable(self, d):
        xi = type_xi(d, list(range(1, d // 2 + 2)))
        report = check_torus_stability(xi, d)
        assert report.verdict != TORUS_UNSTABLE


def test_pure_moving_form_degenerates_to_zero():
    # no invariant part at all: the orbit closure collapses to the origin
    f = parse_polynomial("x1^3*x4")
    verdict = torus_orbit_closed(f)
    assert not verdict.closed
    assert verdict.limit is not None and verdict.limit.is_zero()


def test_polynomial_left_scalar_multiplication():
    f = parse_polynomial("x1^3*x4")
    assert 3 * f == f * 3 == parse_polynomial("3*x1^3*x4")
