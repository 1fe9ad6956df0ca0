# -*- coding: utf-8 -*-
"""
Closed-form constants and inequalities of hyperbolic and Teichmuller geometry.

Provides:
- Length distortion under Teichmuller distance
- Pseudo-Anosov translation length and systole lower bounds
- Bers-type bound on the length of a multi-twist curve
- Collar partner lengths and the constants built from them
- Distance brackets between points on horocycles

K1, the comparison constant between curve lengths and Teichmuller
translation distance, has no closed form; it is always an input.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable

from .constants import BOUNDS_SIGNIFICANT_DIGITS
from .errors import DomainError, UnknownNameError
from .models import BoundInputs

logger = logging.getLogger(__name__)

# Width of the boundary collar of a cusp region (horocycle of length 2)
HOROCYCLE_CORRECTION: float = 2.0
CUSP_BOUNDARY_LENGTH: float = 2.0


def _check_genus(h: int) -> None:
    if int(h) != h or h < 2:
        raise DomainError(f"h must be an integer >= 2, got {h}")


def _check_power(mu: int, name: str = "mu") -> None:
    if int(mu) != mu or mu < 1:
        raise DomainError(f"{name} must be a positive integer, got {mu}")


def _check_positive(value: float, name: str) -> None:
    if not value > 0 or not math.isfinite(value):
        raise DomainError(f"{name} must be positive and finite, got {value}")


def _check_horocycle(eps: float, name: str) -> None:
    if not 0 < eps <= CUSP_BOUNDARY_LENGTH:
        raise DomainError(f"{name} must lie in (0, 2], got {eps}")


# =============================================================================
# BOUNDS
# =============================================================================

def wolpert_factor(d: float) -> float:
    """
    Maximal distortion e^{2d} of geodesic lengths across Teichmuller distance d.

    Raises:
        DomainError: If d < 0.
    """
    if not d >= 0:
        raise DomainError(f"distance must be non-negative, got {d}")
    return math.exp(2 * d)


def penner_bound(h: int) -> float:
    """Lower bound log 2 / (12h - 12) for pseudo-Anosov translation lengths."""
    _check_genus(h)
    return math.log(2) / (12 * h - 12)


def eppa_systole_bound(h: int) -> float:
    """Systole lower bound 2 log 2 / (12h - 12) for the base of an eppA family."""
    return 2 * penner_bound(h)


def bers_constant(h: int) -> float:
    """Explicit Bers constant 21(h - 1) bounding a shortest pants decomposition."""
    _check_genus(h)
    return 21.0 * (h - 1)


def lmax(h: int, mu: int) -> float:
    """
    Length bound 63(h - 1)(1 + e^{16 mu}) for curves of a multi-twist.

    Returns inf, with a warning, when e^{16 mu} overflows.
    """
    _check_genus(h)
    _check_power(mu)
    try:
        growth = math.exp(16 * mu)
    except OverflowError:
        logger.warning("lmax overflows a double for mu=%d", mu)
        return math.inf
    return 3 * bers_constant(h) * (1 + growth)


def collar_partner(l: float) -> float:
    """
    Shortest possible length 2 asinh(1 / sinh(l/2)) of a geodesic
    crossing one of length l.
    """
    _check_positive(l, "l")
    half = l / 2
    if half > 700:
        # 1/sinh(x) ~ 2e^{-x} and asinh(y) ~ y
        return 4 * math.exp(-half)
    return 2 * math.asinh(1 / math.sinh(half))


def _log_asinh_csch(x: float) -> float:
    """log(asinh(1 / sinh x)), stable for large x."""
    if x > 700:
        return math.log(2) - x
    return math.log(math.asinh(1 / math.sinh(x)))


def k5_constants(K1: float, mu1: int, mu2: int) -> tuple[float, float]:
    """
    The pair K_{5,1,2}, K_{5,2,1}.

    K_{5,1,2} = 1/2 log(K1 mu1 / asinh(1 / sinh(K1 mu2))), and K_{5,2,1}
    swaps mu1 and mu2.
    """
    _check_positive(K1, "K1")
    _check_power(mu1, "mu1")
    _check_power(mu2, "mu2")
    first = 0.5 * (math.log(K1 * mu1) - _log_asinh_csch(K1 * mu2))
    second = 0.5 * (math.log(K1 * mu2) - _log_asinh_csch(K1 * mu1))
    return first, second


def horocycle_depth(eps: float) -> float:
    """Distance log(2 / eps) from a horocycle of length eps to the cusp-region boundary."""
    _check_horocycle(eps, "eps")
    return math.log(CUSP_BOUNDARY_LENGTH / eps)


def cusp_distance_bracket(eps1: float, eps2: float) -> tuple[float, float]:
    """
    Bracket for the distance between points on horocycles of lengths eps1, eps2.

    Lower bound |log(eps1/eps2)| - 4, clamped at 0; upper bound
    |log(eps1/eps2)| + 4.
    """
    _check_horocycle(eps1, "eps1")
    _check_horocycle(eps2, "eps2")
    gap = abs(math.log(eps1 / eps2))
    correction = 2 * HOROCYCLE_CORRECTION
    return max(gap - correction, 0.0), gap + correction


def k2_prime(sys_max: float, K1: float, mu: int) -> float:
    """Additive constant 1 - log(sys_max)/2 + log(K1 mu)/2 of the cusp-region comparison."""
    _check_positive(sys_max, "sys")
    _check_positive(K1, "K1")
    _check_power(mu)
    return 1 - 0.5 * math.log(sys_max) + 0.5 * math.log(K1 * mu)


# =============================================================================
# REGISTRY
# =============================================================================

@dataclass(frozen=True)
class BoundSpec:
    """
    A named calculator reachable from the command line.

    Attributes:
        name: Sub-command name.
        params: BoundInputs fields it reads.
        evaluate: Function from inputs to (label, value) pairs.
        summary: One-line description.
    """
    name: str
    params: tuple[str, ...]
    evaluate: Callable[[BoundInputs], list[tuple[str, float]]]
    summary: str


def _pair(labels: tuple[str, str], values: tuple[float, float]) -> list[tuple[str, float]]:
    return list(zip(labels, values))


class BoundRegistry:
    """
    Registry of bound calculators by name.
    """

    BOUNDS: dict[str, BoundSpec] = {
        bound.name: bound for bound in (
            BoundSpec(
                "wolpert", ("d",),
                lambda b: [("wolpert_factor", wolpert_factor(*b.require("d")))],
                "length distortion e^(2d)",
            ),
            BoundSpec(
                "penner", ("h",),
                lambda b: [("penner_bound", penner_bound(*b.require("h")))],
                "pseudo-Anosov translation length lower bound",
            ),
            BoundSpec(
                "eppa-systole", ("h",),
                lambda b: [("eppa_systole_bound", eppa_systole_bound(*b.require("h")))],
                "systole lower bound of the base",
            ),
            BoundSpec(
                "bers", ("h",),
                lambda b: [("bers_constant", bers_constant(*b.require("h")))],
                "explicit Bers constant 21(h-1)",
            ),
            BoundSpec(
                "lmax", ("h", "mu"),
                lambda b: [("lmax", lmax(*b.require("h", "mu")))],
                "length bound for multi-twist curves",
            ),
            BoundSpec(
                "collar", ("l",),
                lambda b: [("collar_partner", collar_partner(*b.require("l")))],
                "shortest length of a crossing geodesic",
            ),
            BoundSpec(
                "k5", ("K1", "mu", "mu2"),
                lambda b: _pair(("k5_1_2", "k5_2_1"), k5_constants(*b.require("K1", "mu", "mu2"))),
                "the constants K_{5,1,2} and K_{5,2,1}",
            ),
            BoundSpec(
                "cusp-bracket", ("epsilon", "eps2"),
                lambda b: _pair(("lower", "upper"), cusp_distance_bracket(*b.require("epsilon", "eps2"))),
                "distance bracket between horocycle points",
            ),
            BoundSpec(
                "horocycle-depth", ("epsilon",),
                lambda b: [("horocycle_depth", horocycle_depth(*b.require("epsilon")))],
                "distance to the cusp-region boundary",
            ),
            BoundSpec(
                "k2-prime", ("sys_max", "K1", "mu"),
                lambda b: [("k2_prime", k2_prime(*b.require("sys_max", "K1", "mu")))],
                "additive constant of the cusp-region comparison",
            ),
        )
    }

    @classmethod
    def get_bound(cls, name: str) -> BoundSpec:
        """
        Calculator by name.

        Raises:
            UnknownNameError: If no calculator has that name.
        """
        try:
            return cls.BOUNDS[name]
        except KeyError:
            raise UnknownNameError(
                f"unknown bound '{name}', expected one of {', '.join(cls.BOUNDS)}"
            ) from None

    @classmethod
    def list_bounds(cls) -> list[str]:
        """Names of all calculators."""
        return list(cls.BOUNDS)

    @classmethod
    def evaluate(cls, name: str, inputs: BoundInputs) -> list[tuple[str, float]]:
        """Run a calculator on the given inputs."""
        return cls.get_bound(name).evaluate(inputs)


def format_value(value: float) -> str:
    """Value with BOUNDS_SIGNIFICANT_DIGITS significant digits."""
    return f"{value:.{BOUNDS_SIGNIFICANT_DIGITS}g}"
