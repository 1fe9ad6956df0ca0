# -*- coding: utf-8 -*-
"""
Exception hierarchy for Monodromy Lab.

Every error subclasses MonodromyLabError and the closest builtin, so
callers may catch either. Negative results that carry information
(a failed verification, an exhausted search, a matrix that is not a
power transvection) are returned as values, never raised.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Union


class MonodromyLabError(Exception):
    """Base class for all Monodromy Lab errors."""


class DimensionError(MonodromyLabError, ValueError):
    """Operands live in homology groups of different genus."""


class DomainError(MonodromyLabError, ValueError):
    """An argument lies outside the domain of the operation."""


class PreconditionError(MonodromyLabError, ValueError):
    """A hypothesis of the operation does not hold for the given input."""


class InvariantError(MonodromyLabError, ValueError):
    """A value violates a structural invariant (skew, symplectic)."""


class DegenerateInputError(MonodromyLabError, ValueError):
    """A geometric input is degenerate (e.g. a point lies on a geodesic)."""


class UnknownNameError(MonodromyLabError, KeyError):
    """A named relation, bound or resource does not exist."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class MoveBoundsError(MonodromyLabError, IndexError):
    """
    A Hurwitz move index is out of range for the tuple length.

    Attributes:
        position: 1-based position of the offending move in its sequence,
            or None for a single move.
    """

    def __init__(self, message: str, position: Optional[int] = None) -> None:
        super().__init__(message)
        self.position = position


class DataFormatError(MonodromyLabError, ValueError):
    """
    A data file could not be parsed.

    Attributes:
        source: File path or resource name.
        line: 1-based line number, when known.
    """

    def __init__(
        self,
        message: str,
        source: Union[str, Path, None] = None,
        line: Optional[int] = None
    ) -> None:
        location = ""
        if source is not None:
            location = f"{source}"
            if line is not None:
                location += f":{line}"
            location += ": "
        super().__init__(f"{location}{message}")
        self.source = source
        self.line = line
