# -*- coding: utf-8 -*-
"""
Tests for the hplane module.
"""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monodromy_lab.errors import DegenerateInputError, DomainError
from monodromy_lab.hplane import (
    dilate,
    geodesics_disjoint,
    hdistance,
    hdistance_many,
    mc_check_separation_lemma,
    sample_trial,
    separates,
    side_of,
)
from monodromy_lab.models import HGeodesic, HPoint, SeparationStats

coords = st.floats(min_value=-50, max_value=50)
heights = st.floats(min_value=0.01, max_value=50)
points = st.builds(HPoint, coords, heights)


class TestDistance:
    """Tests for hdistance."""

    def test_vertical_segment(self) -> None:
        """d(i, e i) = 1."""
        assert hdistance(HPoint(0, 1), HPoint(0, math.e)) == pytest.approx(1.0, rel=1e-12)

    def test_known_value(self) -> None:
        """d(i, 3 + 4i) = arccosh(3.25)."""
        d = hdistance(HPoint(0, 1), HPoint(3, 4))
        assert d == pytest.approx(math.acosh(3.25), rel=1e-12)
        assert d == pytest.approx(1.847246, abs=1e-6)

    def test_zero_distance(self) -> None:
        """A point is at distance 0 from itself."""
        assert hdistance(HPoint(2.5, 0.3), HPoint(2.5, 0.3)) == 0.0

    @settings(max_examples=200, deadline=None)
    @given(points, points, points)
    def test_triangle_inequality(self, p: HPoint, q: HPoint, r: HPoint) -> None:
        """d(p, r) <= d(p, q) + d(q, r)."""
        assert hdistance(p, r) <= hdistance(p, q) + hdistance(q, r) + 1e-9

    @settings(max_examples=200, deadline=None)
    @given(points, points, st.floats(min_value=-20, max_value=20), st.floats(min_value=0.05, max_value=20))
    def test_isometry_invariance(self, p: HPoint, q: HPoint, shift: float, scale: float) -> None:
        """Real translations and positive dilations preserve distance."""
        d = hdistance(p, q)
        moved = hdistance(
            HPoint(scale * p.x + shift, scale * p.y), HPoint(scale * q.x + shift, scale * q.y)
        )
        assert moved == pytest.approx(d, rel=1e-9, abs=1e-9)

    def test_vectorised_matches_scalar(self) -> None:
        """hdistance_many agrees with hdistance entry by entry."""
        rng = np.random.default_rng(7)
        x1, x2 = rng.uniform(-5, 5, 50), rng.uniform(-5, 5, 50)
        y1, y2 = rng.uniform(0.1, 5, 50), rng.uniform(0.1, 5, 50)
        many = hdistance_many(x1, y1, x2, y2)
        for i in range(50):
            single = hdistance(HPoint(x1[i], y1[i]), HPoint(x2[i], y2[i]))
            assert many[i] == pytest.approx(single, rel=1e-12)

    def test_point_below_axis_rejected(self) -> None:
        """Points need y > 0."""
        with pytest.raises(DomainError):
            HPoint(0, 0)


class TestGeodesics:
    """Tests for side tests and disjointness."""

    def test_separates_vertical(self) -> None:
        """The imaginary axis separates left from right."""
        axis = HGeodesic.vertical(0.0)
        assert separates(axis, HPoint(-1, 1), HPoint(1, 1))
        assert not separates(axis, HPoint(1, 1), HPoint(2, 5))

    def test_separates_circle(self) -> None:
        """The unit semicircle separates inside from outside."""
        unit = HGeodesic.circle(0.0, 1.0)
        assert separates(unit, HPoint(0, 0.5), HPoint(0, 2))
        assert not separates(unit, HPoint(0.1, 0.5), HPoint(-0.2, 0.3))

    @settings(max_examples=100, deadline=None)
    @given(points, points)
    def test_separates_symmetric(self, p: HPoint, q: HPoint) -> None:
        """separates(g, p, q) == separates(g, q, p)."""
        g = HGeodesic.circle(0.5, 3.0)
        try:
            assert separates(g, p, q) == separates(g, q, p)
        except DegenerateInputError:
            pass

    def test_point_on_geodesic(self) -> None:
        """A point on g has no side."""
        with pytest.raises(DegenerateInputError):
            side_of(HGeodesic.circle(0.0, 1.0), HPoint(0.0, 1.0))
        with pytest.raises(DegenerateInputError):
            side_of(HGeodesic.vertical(2.0), HPoint(2.0, 3.0))

    def test_dilate(self) -> None:
        """Dilation scales centers and radii."""
        assert dilate(HGeodesic.through_feet(1, 3), 2) == HGeodesic.through_feet(2, 6)
        with pytest.raises(DomainError):
            dilate(HGeodesic.vertical(1), 0)

    def test_disjoint_apart(self) -> None:
        """Semicircles with separate feet are disjoint."""
        assert geodesics_disjoint(HGeodesic.through_feet(1, 2), HGeodesic.through_feet(3, 4))

    def test_disjoint_nested(self) -> None:
        """Nested semicircles are disjoint."""
        assert geodesics_disjoint(HGeodesic.through_feet(0, 10), HGeodesic.through_feet(3, 4))

    def test_crossing(self) -> None:
        """Interleaving feet mean the geodesics cross."""
        assert not geodesics_disjoint(HGeodesic.through_feet(0, 2), HGeodesic.through_feet(1, 3))
        assert not geodesics_disjoint(HGeodesic.through_feet(-1, 1), HGeodesic.vertical(0))

    def test_vertical_pair(self) -> None:
        """Distinct vertical lines are disjoint."""
        assert geodesics_disjoint(HGeodesic.vertical(0), HGeodesic.vertical(1))
        assert not geodesics_disjoint(HGeodesic.vertical(1), HGeodesic.vertical(1))

    def test_margin_rejects_tangent(self) -> None:
        """A positive margin rejects pairs sharing a foot."""
        g1, g2 = HGeodesic.through_feet(1, 2), HGeodesic.through_feet(2, 3)
        assert not geodesics_disjoint(g1, g2, margin=1e-9)


class TestSeparationCheck:
    """Tests for the Monte-Carlo separation check."""

    def test_default_run_passes(self) -> None:
        """10000 samples with seed 1 show no violation."""
        report = mc_check_separation_lemma(10_000, 1)
        stats = report.witness
        assert isinstance(stats, SeparationStats)
        assert report.passed
        assert stats.violations == 0
        assert stats.trials + stats.skips == 10_000
        assert stats.trials > 0
        assert stats.min_margin >= 0
        assert report.result_line() == "RESULT hplane-separation PASS"

    def test_deterministic(self) -> None:
        """Same (samples, seed) gives the same report."""
        first = mc_check_separation_lemma(1500, 42)
        second = mc_check_separation_lemma(1500, 42)
        assert first.detail == second.detail

    def test_single_sample(self) -> None:
        """One sample is enough to run."""
        report = mc_check_separation_lemma(1, 3)
        assert report.passed
        assert report.witness.trials + report.witness.skips == 1

    @pytest.mark.parametrize("samples", [0, -5])
    def test_no_samples(self, samples: int) -> None:
        """samples < 1 is a domain error."""
        with pytest.raises(DomainError):
            mc_check_separation_lemma(samples)

    def test_detail_lines(self) -> None:
        """The detail lists trials, skips, violations and min_margin."""
        report = mc_check_separation_lemma(200, 5)
        keys = [line.split('=')[0] for line in report.detail.splitlines()]
        assert keys == ['trials', 'skips', 'violations', 'min_margin']

    def test_progress(self) -> None:
        """Progress ends at 100%."""
        seen: list[int] = []
        mc_check_separation_lemma(2500, 1, progress=lambda _msg, percent: seen.append(percent))
        assert seen == [40, 80, 100]

    def test_sample_hypotheses(self) -> None:
        """Sampled translation lengths stay in range and satisfy the bound."""
        rng = np.random.default_rng(11)
        for _ in range(100):
            drawn = sample_trial(rng)
            if drawn is None:
                continue
            l, p1, p2 = drawn
            assert 0.1 <= l <= 3.0
            assert hdistance(p1, p2) >= l
