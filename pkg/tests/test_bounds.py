# -*- coding: utf-8 -*-
"""
Tests for the bounds module.
"""

from __future__ import annotations

import logging
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monodromy_lab.bounds import (
    BoundRegistry,
    bers_constant,
    collar_partner,
    cusp_distance_bracket,
    eppa_systole_bound,
    format_value,
    horocycle_depth,
    k2_prime,
    k5_constants,
    lmax,
    penner_bound,
    wolpert_factor,
)
from monodromy_lab.errors import DomainError, UnknownNameError
from monodromy_lab.models import BoundInputs


class TestGenusBounds:
    """Tests for bounds depending on the genus."""

    def test_penner(self) -> None:
        """penner_bound(2) = log 2 / 12."""
        assert penner_bound(2) == pytest.approx(math.log(2) / 12, rel=1e-15)

    def test_eppa_systole(self) -> None:
        """eppa_systole_bound(2) = log 2 / 6."""
        assert eppa_systole_bound(2) == pytest.approx(math.log(2) / 6, rel=1e-15)

    def test_bers(self) -> None:
        """bers_constant(h) = 21(h - 1)."""
        assert bers_constant(2) == 21
        assert bers_constant(5) == 84

    def test_lmax(self) -> None:
        """lmax(2, 1) = 63(1 + e^16)."""
        assert lmax(2, 1) == pytest.approx(63 * (1 + math.exp(16)), rel=1e-9)

    def test_lmax_overflow(self, caplog: pytest.LogCaptureFixture) -> None:
        """Huge powers give inf with a warning."""
        with caplog.at_level(logging.WARNING):
            assert lmax(2, 45) == math.inf
        assert "overflows" in caplog.text

    @pytest.mark.parametrize("h", [1, 0, -3, 2.5])
    def test_genus_domain(self, h) -> None:
        """h must be an integer >= 2."""
        with pytest.raises(DomainError):
            penner_bound(h)

    def test_mu_domain(self) -> None:
        """mu must be a positive integer."""
        with pytest.raises(DomainError):
            lmax(2, 0)


class TestLengthBounds:
    """Tests for length and collar bounds."""

    def test_wolpert(self) -> None:
        """wolpert_factor(d) = e^(2d)."""
        assert wolpert_factor(0) == 1
        assert wolpert_factor(0.5) == pytest.approx(math.e, rel=1e-15)

    def test_wolpert_negative(self) -> None:
        """Negative distances are rejected."""
        with pytest.raises(DomainError):
            wolpert_factor(-0.1)

    def test_collar_identity_grid(self) -> None:
        """sinh(l/2) sinh(collar_partner(l)/2) = 1 on [0.01, 20]."""
        for step in range(2000):
            l = 0.01 + step * (20 - 0.01) / 1999
            product = math.sinh(l / 2) * math.sinh(collar_partner(l) / 2)
            assert product == pytest.approx(1.0, abs=1e-12)

    @settings(max_examples=200, deadline=None)
    @given(st.floats(min_value=0.01, max_value=20))
    def test_collar_involution(self, l: float) -> None:
        """The collar partner of the partner is the original length."""
        assert collar_partner(collar_partner(l)) == pytest.approx(l, rel=1e-9)

    def test_collar_large_length(self) -> None:
        """Very long curves have exponentially short partners."""
        assert collar_partner(1000) == pytest.approx(4 * math.exp(-500), rel=1e-9)

    def test_collar_domain(self) -> None:
        """l must be positive."""
        with pytest.raises(DomainError):
            collar_partner(0)


class TestConstants:
    """Tests for k5, k2' and the cusp bracket."""

    def test_k5_symmetric_case(self) -> None:
        """With mu1 = mu2 both constants agree."""
        expected = 0.5 * math.log(1 / math.asinh(1 / math.sinh(1)))
        first, second = k5_constants(1.0, 1, 1)
        assert first == pytest.approx(expected, rel=1e-12)
        assert second == pytest.approx(expected, rel=1e-12)
        assert first == pytest.approx(0.1294, abs=1e-4)

    def test_k5_swap(self) -> None:
        """K_{5,2,1} is K_{5,1,2} with the powers swapped."""
        first, second = k5_constants(0.7, 2, 3)
        swapped_first, swapped_second = k5_constants(0.7, 3, 2)
        assert first == pytest.approx(swapped_second, rel=1e-12)
        assert second == pytest.approx(swapped_first, rel=1e-12)

    def test_k5_large_argument(self) -> None:
        """Large K1 mu stays finite."""
        first, _ = k5_constants(500.0, 1, 2)
        expected = 0.5 * (math.log(500.0) - math.log(2) + 1000.0)
        assert first == pytest.approx(expected, rel=1e-12)

    def test_k2_prime(self) -> None:
        """k2' = 1 - log(sys)/2 + log(K1 mu)/2."""
        assert k2_prime(1.0, 1.0, 1) == 1.0
        assert k2_prime(math.e, math.e, 1) == pytest.approx(1.0)

    def test_horocycle_depth(self) -> None:
        """Depth is log(2 / eps)."""
        assert horocycle_depth(2.0) == 0.0
        assert horocycle_depth(0.5) == pytest.approx(math.log(4))

    @pytest.mark.parametrize("eps", [0.0, -1.0, 2.5])
    def test_horocycle_domain(self, eps: float) -> None:
        """eps must lie in (0, 2]."""
        with pytest.raises(DomainError):
            horocycle_depth(eps)

    def test_bracket_equal_lengths(self) -> None:
        """Equal horocycles give [0, 4]."""
        assert cusp_distance_bracket(2.0, 2.0) == (0.0, 4.0)

    def test_bracket_far_apart(self) -> None:
        """The bracket is |log ratio| -+ 4."""
        lower, upper = cusp_distance_bracket(0.01, 2.0)
        gap = math.log(200)
        assert lower == pytest.approx(gap - 4)
        assert upper == pytest.approx(gap + 4)

    @settings(max_examples=100, deadline=None)
    @given(st.floats(min_value=1e-6, max_value=2.0), st.floats(min_value=1e-6, max_value=2.0))
    def test_bracket_symmetric(self, e1: float, e2: float) -> None:
        """Swapping the horocycles gives the same bracket."""
        assert cusp_distance_bracket(e1, e2) == pytest.approx(cusp_distance_bracket(e2, e1))


class TestBoundRegistry:
    """Tests for BoundRegistry."""

    def test_all_names_listed(self) -> None:
        """Every calculator is registered."""
        assert set(BoundRegistry.list_bounds()) == {
            'wolpert', 'penner', 'eppa-systole', 'bers', 'lmax', 'collar',
            'k5', 'cusp-bracket', 'horocycle-depth', 'k2-prime',
        }

    def test_evaluate(self) -> None:
        """evaluate returns labelled values."""
        assert BoundRegistry.evaluate('bers', BoundInputs(h=3)) == [('bers_constant', 42.0)]

    def test_pair_labels(self) -> None:
        """Two-valued calculators label both values."""
        labels = [label for label, _ in BoundRegistry.evaluate('cusp-bracket', BoundInputs(epsilon=1.0, eps2=0.5))]
        assert labels == ['lower', 'upper']

    def test_missing_parameter(self) -> None:
        """Missing inputs raise DomainError naming them."""
        with pytest.raises(DomainError, match="mu"):
            BoundRegistry.evaluate('lmax', BoundInputs(h=2))

    def test_unknown_name(self) -> None:
        """Unknown names raise UnknownNameError."""
        with pytest.raises(UnknownNameError):
            BoundRegistry.get_bound('bogus')

    def test_format_value(self) -> None:
        """Values print with 12 significant digits."""
        assert format_value(math.log(2) / 12) == "0.0577622650467"
        assert format_value(math.inf) == "inf"
