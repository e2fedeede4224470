"""Monomial weights, the Hilbert-Mumford weight, and torus limits."""

from __future__ import annotations

import random

import pytest

from quadric_stability import (
    DiagonalOnePS,
    LimitUndefined,
    Monomial,
    NormalizedOnePS,
    QUADRIC,
    RAY,
    generic_member,
    mu,
    parse_polynomial,
    reduce_mod_quadric,
    take_limit,
    type_xi,
    weight,
)
from quadric_stability.acceptance import (
    random_homogeneous_form,
    random_monomial,
    random_normalized_one_ps,
)
from quadric_stability.families import enumerate_maximal_families, family_members_at


class TestNormalizedOnePS:
    def test_canonicalization(self):
        assert NormalizedOnePS(8, 2) == NormalizedOnePS(4, 1)
        assert NormalizedOnePS(3, 0) == RAY

    def test_invalid_pairs_rejected(self):
        with pytest.raises(ValueError):
            NormalizedOnePS(0, 0)
        with pytest.raises(ValueError):
            NormalizedOnePS(1, 2)
        with pytest.raises(ValueError):
            NormalizedOnePS(1, -1)


class TestDiagonalOnePS:
    def test_must_sum_to_zero(self):
        with pytest.raises(ValueError, match="sum to zero"):
            DiagonalOnePS((1, 0, 0, 0, 0))

    def test_trivial_rejected(self):
        with pytest.raises(ValueError, match="trivial"):
            DiagonalOnePS((0, 0, 0, 0, 0))

    def test_embeds_normalized(self):
        lam = NormalizedOnePS(3, 1)
        chi = DiagonalOnePS.from_normalized(lam)
        assert chi.weights == (3, 1, 0, -1, -3)


class TestWeight:
    def test_central_monomial_has_weight_zero(self):
        for d in (4, 5, 7):
            lam = NormalizedOnePS(d - 1, 1)
            assert weight(lam, Monomial((0, 0, d, 0, 0))) == 0

    def test_maximum_weight_monomial_at_high_slope(self):
        for d in (3, 4, 5):
            lam = NormalizedOnePS(d, 1)
            assert weight(lam, Monomial((0, d - 1, 0, 0, 1))) == -1

    def test_sl5_weight_example(self):
        chi = DiagonalOnePS((3, 3, -2, -2, -2))
        assert weight(chi, Monomial((0, 0, 2, 0, 0))) == -4

    def test_additivity_property(self):
        rng = random.Random(29)
        for _ in range(1000):
            m1 = random_monomial(rng, 5, rng.randint(0, 8))
            m2 = random_monomial(rng, 5, rng.randint(0, 8))
            lam = random_normalized_one_ps(rng)
            assert weight(lam, m1 * m2) == weight(lam, m1) + weight(lam, m2)


class TestMu:
    def test_quadric_weight_under_witness(self):
        chi = DiagonalOnePS((3, 3, -2, -2, -2))
        assert mu(chi, QUADRIC) == 1

    def test_section_weight_under_witness(self):
        chi = DiagonalOnePS((3, 3, -2, -2, -2))
        assert mu(chi, parse_polynomial("x0*x3^3 + x1*x2^2*x3")) == -3

    def test_central_power_is_ray_invariant(self):
        assert mu(RAY, parse_polynomial("x2^4")) == 0

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            mu(RAY, parse_polynomial("0"))

    def test_scaling(self):
        rng = random.Random(31)
        for _ in range(50):
            f = random_homogeneous_form(rng, rng.randint(3, 6))
            lam = random_normalized_one_ps(rng, max_u=10)
            base = mu(lam, f)
            for k in (2, 3, 5):
                assert mu(DiagonalOnePS.from_normalized(lam, scale=k), f) == k * base

    def test_membership_duality(self):
        rng = random.Random(37)
        for _ in range(60):
            d = rng.randint(3, 5)
            lam = random_normalized_one_ps(rng, max_u=12)
            members = family_members_at(d, lam, strict=False)
            g = reduce_mod_quadric(random_homogeneous_form(rng, d))
            if g.is_zero():
                continue
            assert (set(g.support()) <= members) == (mu(lam, g) <= 0)


class TestTakeLimit:
    def test_degeneration_to_invariant_form(self):
        xi = type_xi(4, [1, 1, 1])
        f = xi + parse_polynomial("x1^3*x4")
        assert take_limit(f, NormalizedOnePS(4, 1)) == xi

    def test_invariant_form_is_fixed(self):
        xi = type_xi(5, [1, 2, 3])
        for lam in (NormalizedOnePS(1, 1), NormalizedOnePS(4, 1), RAY):
            assert take_limit(xi, lam) == xi

    def test_positive_weight_diverges(self):
        f = parse_polynomial("x0^4")
        for lam in (NormalizedOnePS(1, 1), NormalizedOnePS(3, 1), RAY):
            with pytest.raises(LimitUndefined):
                take_limit(f, lam)

    def test_limit_is_a_fixed_point(self):
        count = 0
        for fam in enumerate_maximal_families(4, strict=False):
            f = generic_member(fam)
            limit = take_limit(f, fam.slope)
            if not limit.is_zero():
                assert take_limit(limit, fam.slope) == limit
                count += 1
        assert count > 0
