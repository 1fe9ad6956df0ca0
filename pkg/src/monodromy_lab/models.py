# -*- coding: utf-8 -*-
"""
Data models and enumerations for Monodromy Lab.

This module contains all data structures shared across the package:
- Homology classes and integer matrices
- Twist words, twist tuples and intersection matrices
- Hurwitz moves and move sequences
- Verification reports
- Search configuration and outcomes
- Half-plane points and geodesics
- Inputs of the closed-form bound calculators

All values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterator, Optional, Sequence

from .constants import (
    CANDIDATE_CAP,
    DEFAULT_MAX_MOVES,
    DEFAULT_RESTARTS,
    DEFAULT_SEED,
    DEFAULT_TIME_LIMIT,
    DEFAULT_WORKERS,
    MAX_SEED,
    STAGNATION_WINDOW,
)
from .errors import DimensionError, DomainError, InvariantError


# =============================================================================
# ENUMS
# =============================================================================

class Side(Enum):
    """Side of a Hurwitz move."""
    L = "L"
    R = "R"


class Level(Enum):
    """Level at which Hurwitz moves act."""
    SHARP = "sharp"
    FLAT = "flat"


class Strategy(Enum):
    """Search strategies for certifying move sequences."""
    GREEDY_RANDOM = "greedy-random"
    PURE_RANDOM = "pure-random"


class GeodesicKind(Enum):
    """Shapes of geodesics in the upper half-plane."""
    VERTICAL = "vertical"
    CIRCULAR = "circular"


# =============================================================================
# HOMOLOGY
# =============================================================================

@dataclass(frozen=True)
class HomologyClass:
    """
    Homology class of an oriented closed curve in H1(Sigma_g; Z).

    Coordinates are taken in the symplectic basis a1, b1, ..., ag, bg.

    Attributes:
        coords: Integer coordinates, length 2g.
    """
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(int(c) for c in self.coords)
        if len(coords) < 2 or len(coords) % 2:
            raise DimensionError(
                f"homology class needs an even positive number of coordinates, got {len(coords)}"
            )
        object.__setattr__(self, 'coords', coords)

    @classmethod
    def of(cls, *coords: int) -> HomologyClass:
        """Build a class from coordinates given as arguments."""
        return cls(tuple(coords))

    @classmethod
    def zero(cls, genus: int) -> HomologyClass:
        """Return the zero class of the given genus."""
        if genus < 1:
            raise DomainError(f"genus must be positive, got {genus}")
        return cls((0,) * (2 * genus))

    @property
    def genus(self) -> int:
        """Genus of the underlying surface."""
        return len(self.coords) // 2

    @property
    def is_zero(self) -> bool:
        """True for the zero class."""
        return not any(self.coords)

    def _check_genus(self, other: HomologyClass) -> None:
        if self.genus != other.genus:
            raise DimensionError(
                f"genus mismatch: {self.genus} vs {other.genus}"
            )

    def __neg__(self) -> HomologyClass:
        return HomologyClass(tuple(-c for c in self.coords))

    def __add__(self, other: HomologyClass) -> HomologyClass:
        self._check_genus(other)
        return HomologyClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: HomologyClass) -> HomologyClass:
        self._check_genus(other)
        return HomologyClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scaled(self, k: int) -> HomologyClass:
        """Return k times this class."""
        return HomologyClass(tuple(k * c for c in self.coords))

    def normalized(self) -> HomologyClass:
        """Return the representative of +-self whose first nonzero coordinate is positive."""
        for c in self.coords:
            if c:
                return self if c > 0 else -self
        return self

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class SymplecticMatrix:
    """
    Square integer matrix acting on H1(Sigma_g; Z) from the left.

    Symplecticity (M^T J M = J) is checked by symplectic.is_symplectic;
    every matrix produced by the package satisfies it.

    Attributes:
        rows: Matrix rows.
    """
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        n = len(rows)
        if n < 2 or n % 2 or any(len(row) != n for row in rows):
            raise DimensionError(f"expected a 2g x 2g matrix, got {n} rows")
        object.__setattr__(self, 'rows', rows)

    @classmethod
    def identity(cls, dim: int) -> SymplecticMatrix:
        """Identity matrix of the given (even) dimension."""
        return cls(tuple(
            tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)
        ))

    @property
    def dim(self) -> int:
        """Matrix size 2g."""
        return len(self.rows)

    @property
    def genus(self) -> int:
        """Genus g of the surface the matrix acts on."""
        return self.dim // 2

    def __matmul__(self, other: SymplecticMatrix) -> SymplecticMatrix:
        if self.dim != other.dim:
            raise DimensionError(f"matrix size mismatch: {self.dim} vs {other.dim}")
        cols = list(zip(*other.rows))
        return SymplecticMatrix(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.rows
        ))

    def __neg__(self) -> SymplecticMatrix:
        return SymplecticMatrix(tuple(tuple(-v for v in row) for row in self.rows))

    def apply(self, x: HomologyClass) -> HomologyClass:
        """Return M x."""
        if x.genus != self.genus:
            raise DimensionError(f"genus mismatch: {self.genus} vs {x.genus}")
        return HomologyClass(tuple(
            sum(a * b for a, b in zip(row, x.coords)) for row in self.rows
        ))

    def transpose(self) -> SymplecticMatrix:
        """Return the transpose."""
        return SymplecticMatrix(tuple(zip(*self.rows)))

    def power(self, n: int) -> SymplecticMatrix:
        """Return M^n for n >= 0 by repeated squaring."""
        if n < 0:
            raise DomainError("use symplectic.inverse for negative powers")
        result = SymplecticMatrix.identity(self.dim)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def is_identity(self) -> bool:
        """True when M = I."""
        return self == SymplecticMatrix.identity(self.dim)

    def is_negative_identity(self) -> bool:
        """True when M = -I."""
        return self == -SymplecticMatrix.identity(self.dim)

    def to_lists(self) -> list[list[int]]:
        """Rows as mutable lists."""
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        return "\n".join(",".join(str(v) for v in row) for row in self.rows)


@dataclass(frozen=True)
class TwistLetter:
    """
    One letter T_c^e of a twist word.

    Attributes:
        generator: Class c of the twist curve.
        exponent: Nonzero integer power e.
        label: Source token for display (e.g. "g3").
    """
    generator: HomologyClass
    exponent: int
    label: str = ""

    def __post_init__(self) -> None:
        if self.exponent == 0:
            raise DomainError("twist exponents must be nonzero")

    def inverse(self) -> TwistLetter:
        """The letter T_c^-e."""
        return TwistLetter(self.generator, -self.exponent, self.label)

    def __str__(self) -> str:
        name = self.label or f"T{self.generator}"
        return name if self.exponent == 1 else f"{name}^{self.exponent}"


@dataclass(frozen=True)
class TwistWord:
    """
    Word in Dehn twists, written in composition order.

    The rightmost letter acts first, as in f o g.

    Attributes:
        letters: Letters from left to right.
    """
    letters: tuple[TwistLetter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, 'letters', tuple(self.letters))
        genera = {letter.generator.genus for letter in self.letters}
        if len(genera) > 1:
            raise DimensionError(f"word mixes genera {sorted(genera)}")

    @property
    def genus(self) -> Optional[int]:
        """Genus of the generators, None for the empty word."""
        return self.letters[0].generator.genus if self.letters else None

    def inverse(self) -> TwistWord:
        """Reverse the letters and negate exponents."""
        return TwistWord(tuple(letter.inverse() for letter in reversed(self.letters)))

    def __add__(self, other: TwistWord) -> TwistWord:
        return TwistWord(self.letters + other.letters)

    def __pow__(self, n: int) -> TwistWord:
        if n < 0:
            return self.inverse() ** (-n)
        return TwistWord(self.letters * n)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)


# =============================================================================
# HURWITZ DATA
# =============================================================================

@dataclass(frozen=True)
class TwistTuple:
    """
    Ordered tuple of positive Dehn twists, each given by an oriented class.

    Attributes:
        entries: Classes of the twist curves.
        genus: Genus shared by all entries.
    """
    entries: tuple[HomologyClass, ...]
    genus: int

    def __post_init__(self) -> None:
        object.__setattr__(self, 'entries', tuple(self.entries))
        if self.genus < 1:
            raise DomainError(f"genus must be positive, got {self.genus}")
        for idx, entry in enumerate(self.entries, start=1):
            if entry.genus != self.genus:
                raise DimensionError(
                    f"entry {idx} has genus {entry.genus}, tuple has genus {self.genus}"
                )

    @classmethod
    def of(cls, entries: Sequence[HomologyClass]) -> TwistTuple:
        """Build a nonempty tuple, taking the genus from its entries."""
        if not entries:
            raise DomainError("cannot infer the genus of an empty tuple")
        return cls(tuple(entries), entries[0].genus)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[HomologyClass]:
        return iter(self.entries)

    def __getitem__(self, idx: int) -> HomologyClass:
        return self.entries[idx]


@dataclass(frozen=True)
class IntersectionMatrix:
    """
    Matrix of pairwise algebraic intersections of a twist tuple.

    Skew-symmetry is not enforced on construction; flat moves check it.

    Attributes:
        rows: Square integer matrix rows.
    """
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        if any(len(row) != len(rows) for row in rows):
            raise DimensionError("intersection matrix must be square")
        object.__setattr__(self, 'rows', rows)

    @property
    def size(self) -> int:
        """Tuple length l."""
        return len(self.rows)

    def is_skew(self) -> bool:
        """True when m[i][j] = -m[j][i] and the diagonal is zero."""
        n = self.size
        return all(
            self.rows[i][j] == -self.rows[j][i]
            for i in range(n) for j in range(i, n)
        )

    def check_skew(self) -> None:
        """
        Raise InvariantError unless the matrix is skew with zero diagonal.

        Raises:
            InvariantError: If skew-symmetry fails.
        """
        n = self.size
        for i in range(n):
            for j in range(i, n):
                if self.rows[i][j] != -self.rows[j][i]:
                    raise InvariantError(
                        f"matrix is not skew-symmetric at ({i + 1},{j + 1})"
                    )

    def off_diagonal_zeros(self) -> list[tuple[int, int]]:
        """1-based pairs (i, j), i < j, with m[i][j] = 0."""
        n = self.size
        return [
            (i + 1, j + 1)
            for i in range(n) for j in range(i + 1, n)
            if self.rows[i][j] == 0
        ]

    def to_lists(self) -> list[list[int]]:
        """Rows as mutable lists."""
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        return "\n".join(",".join(str(v) for v in row) for row in self.rows)


@dataclass(frozen=True)
class HurwitzMove:
    """
    Elementary Hurwitz move L_k or R_k acting on positions k, k+1.

    Attributes:
        side: L or R.
        index: 1-based position k.
    """
    side: Side
    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise DomainError(f"move index must be >= 1, got {self.index}")

    def inverse(self) -> HurwitzMove:
        """R_k undoes L_k and vice versa."""
        return HurwitzMove(Side.R if self.side is Side.L else Side.L, self.index)

    def __str__(self) -> str:
        return f"{self.side.value}{self.index}"


@dataclass(frozen=True)
class MoveSequence:
    """
    Ordered list of Hurwitz moves, applied left to right.

    Attributes:
        moves: The moves.
    """
    moves: tuple[HurwitzMove, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, 'moves', tuple(self.moves))

    @property
    def max_index(self) -> int:
        """Largest move index, 0 for the empty sequence."""
        return max((mv.index for mv in self.moves), default=0)

    def inverse(self) -> MoveSequence:
        """Sequence undoing this one."""
        return MoveSequence(tuple(mv.inverse() for mv in reversed(self.moves)))

    def __add__(self, other: MoveSequence) -> MoveSequence:
        return MoveSequence(self.moves + other.moves)

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self) -> Iterator[HurwitzMove]:
        return iter(self.moves)

    def __str__(self) -> str:
        return " ".join(str(mv) for mv in self.moves)


# =============================================================================
# REPORTS
# =============================================================================

@dataclass(frozen=True)
class VerificationReport:
    """
    Result of a one-shot checker.

    Attributes:
        name: Identifier used in the `RESULT <name> PASS|FAIL` line.
        passed: Whether every assertion held.
        witness: Matrix or class data; on failure it localizes the problem.
        detail: Human-readable explanation, one finding per line.
    """
    name: str
    passed: bool
    witness: Any = None
    detail: str = ""

    @property
    def verdict(self) -> str:
        """PASS or FAIL."""
        return "PASS" if self.passed else "FAIL"

    def result_line(self) -> str:
        """Machine-readable summary line."""
        return f"RESULT {self.name} {self.verdict}"


@dataclass(frozen=True)
class SeparationStats:
    """
    Statistics of the geodesic-separation Monte-Carlo check.

    Attributes:
        trials: Samples whose hypotheses held and were tested.
        skips: Samples abandoned by the rejection sampler.
        violations: Trials with distance below l - slack.
        min_margin: Smallest observed d(p1, p2) - l.
    """
    trials: int
    skips: int
    violations: int
    min_margin: float


# =============================================================================
# SEARCH
# =============================================================================

@dataclass(frozen=True)
class SearchConfig:
    """
    Parameters of the certifying-sequence search.

    Identical config and input give identical output as long as the
    time limit is not reached.

    Attributes:
        seed: Unsigned 64-bit seed.
        max_moves: Moves per restart.
        time_limit_seconds: Wall-clock budget for the whole search.
        restarts: Number of restarts (worker w uses seed (seed, w)).
        strategy: Greedy-random or pure-random.
        workers: Parallel worker processes.
        candidate_cap: Candidate moves sampled per greedy step.
        stagnation_window: Steps without improvement before restarting.
    """
    seed: int = DEFAULT_SEED
    max_moves: int = DEFAULT_MAX_MOVES
    time_limit_seconds: float = DEFAULT_TIME_LIMIT
    restarts: int = DEFAULT_RESTARTS
    strategy: Strategy = Strategy.GREEDY_RANDOM
    workers: int = DEFAULT_WORKERS
    candidate_cap: int = CANDIDATE_CAP
    stagnation_window: int = STAGNATION_WINDOW

    def __post_init__(self) -> None:
        if not 0 <= self.seed <= MAX_SEED:
            raise DomainError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.max_moves < 1:
            raise DomainError("max_moves must be positive")
        if self.time_limit_seconds <= 0:
            raise DomainError("time limit must be positive")
        if self.restarts < 1:
            raise DomainError("restarts must be positive")
        if self.workers < 1:
            raise DomainError("workers must be positive")
        if self.candidate_cap < 1 or self.stagnation_window < 1:
            raise DomainError("candidate cap and stagnation window must be positive")
        if isinstance(self.strategy, str):
            object.__setattr__(self, 'strategy', Strategy(self.strategy))


@dataclass(frozen=True)
class SearchOutcome:
    """
    Result of a certifying-sequence search.

    Attributes:
        found: Whether a sequence reaching score 0 was found.
        sequence: The sequence, when found.
        explored: Candidate sequences evaluated.
        score_trace: (step, zero-pair count) after each applied move.
        restarts_used: Restarts run up to and including the successful one.
        detail: Explanation for degenerate inputs or exhaustion.
    """
    found: bool
    sequence: Optional[MoveSequence] = None
    explored: int = 0
    score_trace: tuple[tuple[int, int], ...] = ()
    restarts_used: int = 0
    detail: str = ""


# =============================================================================
# HALF-PLANE GEOMETRY
# =============================================================================

@dataclass(frozen=True)
class HPoint:
    """
    Point of the upper half-plane.

    Attributes:
        x: Real part.
        y: Imaginary part, positive.
    """
    x: float
    y: float

    def __post_init__(self) -> None:
        if not self.y > 0:
            raise DomainError(f"half-plane points need y > 0, got {self.y}")


@dataclass(frozen=True)
class HGeodesic:
    """
    Geodesic of the upper half-plane: a vertical line or a semicircle
    orthogonal to the real axis.

    Attributes:
        kind: Vertical or circular.
        x: Foot of a vertical geodesic, center of a circular one.
        radius: Radius of a circular geodesic (0 for vertical).
    """
    kind: GeodesicKind
    x: float
    radius: float = 0.0

    def __post_init__(self) -> None:
        if self.kind is GeodesicKind.CIRCULAR and not self.radius > 0:
            raise DomainError(f"circular geodesics need a positive radius, got {self.radius}")

    @classmethod
    def vertical(cls, x: float) -> HGeodesic:
        """The vertical geodesic Re z = x."""
        return cls(GeodesicKind.VERTICAL, x)

    @classmethod
    def circle(cls, center: float, radius: float) -> HGeodesic:
        """The semicircle |z - center| = radius."""
        return cls(GeodesicKind.CIRCULAR, center, radius)

    @classmethod
    def through_feet(cls, left: float, right: float) -> HGeodesic:
        """The semicircle with boundary points left < right."""
        if not left < right:
            raise DomainError("feet must satisfy left < right")
        return cls.circle((left + right) / 2, (right - left) / 2)

    @property
    def feet(self) -> tuple[float, float]:
        """Boundary points on the real axis (inf for the vertical end)."""
        if self.kind is GeodesicKind.VERTICAL:
            return (self.x, float('inf'))
        return (self.x - self.radius, self.x + self.radius)


# =============================================================================
# BOUNDS
# =============================================================================

@dataclass(frozen=True)
class BoundInputs:
    """
    Parameters of the closed-form bounds; unset values are None.

    Attributes:
        h: Target genus (>= 2).
        mu: Power making a monodromy a multi-twist (positive integer).
        mu2: Second power for the paired constants.
        epsilon: Systole bound or horocycle length.
        eps2: Second horocycle length.
        K1: User-supplied length/distance comparison constant.
        d: Teichmuller distance.
        l: Geodesic length.
        sys_max: Systole at the cusp-region boundary point.
    """
    h: Optional[int] = None
    mu: Optional[int] = None
    mu2: Optional[int] = None
    epsilon: Optional[float] = None
    eps2: Optional[float] = None
    K1: Optional[float] = None
    d: Optional[float] = None
    l: Optional[float] = None
    sys_max: Optional[float] = None

    def require(self, *names: str) -> list[Any]:
        """
        Fetch required parameters.

        Raises:
            DomainError: If any of them is unset.
        """
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            raise DomainError("missing parameter(s): " + ", ".join(missing))
        return [getattr(self, name) for name in names]
