# -*- coding: utf-8 -*-
"""
Upper half-plane geometry for the geodesic separation check.

Provides:
- Hyperbolic distance, scalar and vectorised
- Side tests and disjointness predicates for geodesics
- A seeded Monte-Carlo check: for a hyperbolic translation phi of length l
  along the imaginary axis and a geodesic g disjoint from the axis and
  from phi(g), points separated by both g and phi^k(g), k >= 3, lie at
  distance at least l
"""

from __future__ import annotations

import logging
import math
from typing import Callable, Optional

import numpy as np

from .constants import (
    DEFAULT_MC_SEED,
    DISTANCE_SLACK,
    MAX_REJECTIONS,
    MC_BATCH_SIZE,
    ON_GEODESIC_TOL,
    POWER_RANGE,
    SEPARATION_MARGIN,
    TRANSLATION_RANGE,
)
from .errors import DegenerateInputError, DomainError
from .models import GeodesicKind, HGeodesic, HPoint, SeparationStats, VerificationReport

logger = logging.getLogger(__name__)

# Half-width of the log-scale window for the left foot of a sampled geodesic
FOOT_LOG_RANGE: float = 2.0

# Type alias for progress callbacks
ProgressCallback = Callable[[str, int], None]


# =============================================================================
# DISTANCE
# =============================================================================

def hdistance(p: HPoint, q: HPoint) -> float:
    """
    Hyperbolic distance, 2 asinh(|p - q| / (2 sqrt(y_p y_q))).

    Equivalent to cosh d = 1 + |p - q|^2 / (2 y_p y_q) without the
    cancellation near d = 0.
    """
    chord = math.hypot(p.x - q.x, p.y - q.y)
    return 2 * math.asinh(chord / (2 * math.sqrt(p.y * q.y)))


def hdistance_many(
    x1: np.ndarray, y1: np.ndarray, x2: np.ndarray, y2: np.ndarray
) -> np.ndarray:
    """Element-wise hdistance over coordinate arrays."""
    chord = np.hypot(x1 - x2, y1 - y2)
    return 2 * np.arcsinh(chord / (2 * np.sqrt(y1 * y2)))


# =============================================================================
# GEODESICS
# =============================================================================

def side_of(g: HGeodesic, p: HPoint) -> int:
    """
    Side of g containing p: +1 right of / outside g, -1 left of / inside g.

    Raises:
        DegenerateInputError: If p lies on g within ON_GEODESIC_TOL.
    """
    if g.kind is GeodesicKind.VERTICAL:
        offset = p.x - g.x
        tol = ON_GEODESIC_TOL * max(1.0, abs(g.x))
    else:
        offset = (p.x - g.x) ** 2 + p.y ** 2 - g.radius ** 2
        tol = ON_GEODESIC_TOL * max(1.0, g.radius ** 2)
    if abs(offset) <= tol:
        raise DegenerateInputError(f"point ({p.x}, {p.y}) lies on the geodesic")
    return 1 if offset > 0 else -1


def separates(g: HGeodesic, p: HPoint, q: HPoint) -> bool:
    """
    Whether p and q lie in different half-planes bounded by g.

    Raises:
        DegenerateInputError: If either point lies on g.
    """
    return side_of(g, p) != side_of(g, q)


def dilate(g: HGeodesic, factor: float) -> HGeodesic:
    """Image of g under z -> factor * z, factor > 0."""
    if not factor > 0:
        raise DomainError(f"dilation factor must be positive, got {factor}")
    if g.kind is GeodesicKind.VERTICAL:
        return HGeodesic.vertical(g.x * factor)
    return HGeodesic.circle(g.x * factor, g.radius * factor)


def geodesics_disjoint(g1: HGeodesic, g2: HGeodesic, margin: float = 0.0) -> bool:
    """
    Whether two geodesics have no common point in the half-plane.

    Geodesics are disjoint iff their boundary feet do not interleave.
    A positive margin also rejects pairs whose feet are closer than
    margin, which excludes tangent (asymptotic) pairs.
    """
    if g1.kind is GeodesicKind.VERTICAL and g2.kind is GeodesicKind.VERTICAL:
        return abs(g1.x - g2.x) > margin
    if g1.kind is GeodesicKind.VERTICAL:
        g1, g2 = g2, g1
    if g2.kind is GeodesicKind.VERTICAL:
        left, right = g1.feet
        return g2.x < left - margin or g2.x > right + margin

    (a1, b1), (a2, b2) = g1.feet, g2.feet
    apart = b1 < a2 - margin or b2 < a1 - margin
    nested = (a1 < a2 - margin and b2 < b1 - margin) or (a2 < a1 - margin and b1 < b2 - margin)
    return apart or nested


# =============================================================================
# MONTE-CARLO
# =============================================================================

def _point_under(g: HGeodesic, rng: np.random.Generator) -> HPoint:
    """Random point strictly inside the half-disk bounded by a circular geodesic."""
    theta = rng.uniform(SEPARATION_MARGIN, math.pi - SEPARATION_MARGIN)
    rho = g.radius * rng.uniform(SEPARATION_MARGIN, 1 - SEPARATION_MARGIN)
    return HPoint(g.x + rho * math.cos(theta), rho * math.sin(theta))


def sample_trial(rng: np.random.Generator) -> Optional[tuple[float, HPoint, HPoint]]:
    """
    Draw one configuration satisfying the separation hypotheses.

    Returns:
        (l, p1, p2), or None after MAX_REJECTIONS failed attempts.
    """
    axis = HGeodesic.vertical(0.0)
    low_k, high_k = POWER_RANGE
    for _ in range(MAX_REJECTIONS):
        l = float(rng.uniform(*TRANSLATION_RANGE))
        k = int(rng.integers(low_k, high_k + 1))
        left = math.exp(rng.uniform(-FOOT_LOG_RANGE, FOOT_LOG_RANGE))
        right = left * math.exp(rng.uniform(0.0, 2 * l))
        if right - left <= SEPARATION_MARGIN:
            continue

        g = HGeodesic.through_feet(left, right)
        if not geodesics_disjoint(g, axis, SEPARATION_MARGIN):
            continue
        if not geodesics_disjoint(g, dilate(g, math.exp(l)), SEPARATION_MARGIN):
            continue

        g_k = dilate(g, math.exp(k * l))
        p1 = _point_under(g, rng)
        p2 = _point_under(g_k, rng)
        try:
            if separates(g, p1, p2) and separates(g_k, p1, p2):
                return l, p1, p2
        except DegenerateInputError:
            continue
    return None


def _run_batch(seed: int, batch: int, size: int) -> tuple[int, int, float]:
    """One batch of trials: (trials, violations, min margin)."""
    rng = np.random.default_rng(np.random.SeedSequence([seed, batch]))
    lengths, x1, y1, x2, y2 = [], [], [], [], []
    for _ in range(size):
        drawn = sample_trial(rng)
        if drawn is None:
            continue
        l, p1, p2 = drawn
        lengths.append(l)
        x1.append(p1.x)
        y1.append(p1.y)
        x2.append(p2.x)
        y2.append(p2.y)

    if not lengths:
        return 0, 0, math.inf
    margins = hdistance_many(
        np.array(x1), np.array(y1), np.array(x2), np.array(y2)
    ) - np.array(lengths)
    violations = int(np.count_nonzero(margins < -DISTANCE_SLACK))
    return len(lengths), violations, float(margins.min())


def mc_check_separation_lemma(
    samples: int,
    seed: int = DEFAULT_MC_SEED,
    progress: Optional[ProgressCallback] = None,
) -> VerificationReport:
    """
    Monte-Carlo check of the geodesic separation distance bound.

    Samples are processed in batches of MC_BATCH_SIZE; batch b draws from
    SeedSequence([seed, b]), so the result depends on (samples, seed) only.

    Args:
        samples: Number of configurations to draw.
        seed: Unsigned 64-bit seed.
        progress: Optional callback(message, percent).

    Returns:
        Report named "hplane-separation" with SeparationStats as witness.

    Raises:
        DomainError: If samples < 1.
    """
    if samples < 1:
        raise DomainError(f"samples must be positive, got {samples}")

    trials = violations = 0
    min_margin = math.inf
    done = 0
    batch = 0
    while done < samples:
        size = min(MC_BATCH_SIZE, samples - done)
        batch_trials, batch_violations, batch_margin = _run_batch(seed, batch, size)
        trials += batch_trials
        violations += batch_violations
        min_margin = min(min_margin, batch_margin)
        done += size
        batch += 1
        logger.debug("Batch %d: %d trials, %d violations", batch, batch_trials, batch_violations)
        if progress:
            progress(f"Batch {batch}", int(done * 100 / samples))

    stats = SeparationStats(
        trials=trials,
        skips=samples - trials,
        violations=violations,
        min_margin=min_margin,
    )
    if stats.skips:
        logger.info("%d of %d samples skipped by the rejection sampler", stats.skips, samples)

    detail = (
        f"trials={stats.trials}\n"
        f"skips={stats.skips}\n"
        f"violations={stats.violations}\n"
        f"min_margin={stats.min_margin:.12g}"
    )
    return VerificationReport("hplane-separation", violations == 0, stats, detail)
