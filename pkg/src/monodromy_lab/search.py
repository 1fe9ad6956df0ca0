# -*- coding: utf-8 -*-
"""
Seeded search for Hurwitz move sequences that make every pair of
entries intersect.

The search runs on the flat level (the intersection matrix), where one
move costs O(l) and its effect on the zero-pair count is known before it
is applied. Found sequences are replayed on the tuple itself before they
are returned.

Restart w draws from numpy's generator seeded with (seed, w), so the
outcome depends only on the input and the configuration: serial and
parallel runs agree, as long as the time limit is not hit.
"""

from __future__ import annotations

import logging
import threading
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, InvariantError
from .hurwitz import apply_sequence, flat_move_inplace, matrix_of_tuple, product_matrix
from .models import (
    HurwitzMove,
    IntersectionMatrix,
    Level,
    MoveSequence,
    SearchConfig,
    SearchOutcome,
    Side,
    Strategy,
    TwistTuple,
)

logger = logging.getLogger(__name__)

# Type alias for progress callbacks
ProgressCallback = Callable[[str, int], None]


def zero_pair_score(m: IntersectionMatrix) -> int:
    """
    Number of pairs i < j with m[i][j] = 0.

    Args:
        m: Skew-symmetric matrix.

    Returns:
        Count of non-intersecting pairs; 0 certifies the tuple.
    """
    n = m.size
    return sum(
        1 for i in range(n) for j in range(i + 1, n) if m.rows[i][j] == 0
    )


def _score_rows(rows: list[list[int]]) -> int:
    n = len(rows)
    return sum(1 for i in range(n) for j in range(i + 1, n) if rows[i][j] == 0)


def decode_move(code: int, movable: int) -> HurwitzMove:
    """
    Move number code in [0, 2 * movable): L first, then R.
    """
    side = Side.L if code < movable else Side.R
    return HurwitzMove(side, code % movable + 1)


def move_delta(rows: list[list[int]], mv: HurwitzMove) -> int:
    """
    Change of the zero-pair count if mv were applied.

    Only pairs between the moved positions and the rest change; the pair
    of moved positions keeps its value up to sign.
    """
    i = mv.index - 1
    j = i + 1
    ri, rj = rows[i], rows[j]
    delta = 0
    if mv.side is Side.L:
        m_ji = rj[i]
        for k in range(len(rows)):
            if k == i or k == j:
                continue
            delta += (rj[k] + m_ji * ri[k] == 0) - (rj[k] == 0)
    else:
        m_ij = ri[j]
        for k in range(len(rows)):
            if k == i or k == j:
                continue
            delta += (ri[k] - m_ij * rj[k] == 0) - (ri[k] == 0)
    return delta


# =============================================================================
# SINGLE RESTART
# =============================================================================

@dataclass(frozen=True)
class RestartResult:
    """
    Outcome of one restart.

    Attributes:
        index: Restart number w.
        found: Whether score 0 was reached.
        moves: Moves applied in this restart.
        explored: Candidate moves evaluated.
        trace: (local step, score) after each applied move.
        timed_out: Whether the deadline stopped the restart.
    """
    index: int
    found: bool
    moves: tuple[HurwitzMove, ...]
    explored: int
    trace: tuple[tuple[int, int], ...]
    timed_out: bool = False


def run_restart(
    rows: list[list[int]],
    cfg: SearchConfig,
    index: int,
    movable: int,
    budget_seconds: float,
    cancel: Optional[threading.Event] = None,
) -> RestartResult:
    """
    One descent from the initial matrix with generator seeded (seed, index).

    Args:
        rows: Initial matrix rows (copied, not modified).
        cfg: Search configuration.
        index: Restart number.
        movable: Number of positions k that moves may use (1..movable).
        budget_seconds: Wall-clock budget left for this restart.
        cancel: Optional cancellation flag.

    Returns:
        RestartResult for this restart.
    """
    deadline = time.monotonic() + budget_seconds
    rng = np.random.default_rng(np.random.SeedSequence([cfg.seed, index]))
    state = [list(row) for row in rows]
    score = _score_rows(state)
    best = score
    stale = 0
    n_codes = 2 * movable
    sample = min(n_codes, cfg.candidate_cap)

    moves: list[HurwitzMove] = []
    trace: list[tuple[int, int]] = []
    explored = 0

    for step in range(1, cfg.max_moves + 1):
        if time.monotonic() > deadline or (cancel is not None and cancel.is_set()):
            return RestartResult(index, False, tuple(moves), explored, tuple(trace), True)

        if cfg.strategy is Strategy.PURE_RANDOM:
            mv = decode_move(int(rng.integers(n_codes)), movable)
            delta = move_delta(state, mv)
            explored += 1
        else:
            codes = rng.choice(n_codes, size=sample, replace=False)
            candidates = [decode_move(int(c), movable) for c in codes]
            deltas = [move_delta(state, mv) for mv in candidates]
            explored += len(candidates)
            lowest = min(deltas)
            ties = [mv for mv, d in zip(candidates, deltas) if d == lowest]
            mv = ties[int(rng.integers(len(ties)))]
            delta = lowest

        flat_move_inplace(state, mv)
        score += delta
        moves.append(mv)
        trace.append((step, score))

        if score == 0:
            return RestartResult(index, True, tuple(moves), explored, tuple(trace))

        if cfg.strategy is Strategy.GREEDY_RANDOM:
            if score < best:
                best = score
                stale = 0
            else:
                stale += 1
                if stale >= cfg.stagnation_window:
                    logger.debug("Restart %d stagnated at score %d after %d moves", index, score, step)
                    break

    return RestartResult(index, False, tuple(moves), explored, tuple(trace))


# =============================================================================
# SEARCHER
# =============================================================================

class HurwitzSearcher:
    """
    Search driver with progress reporting and cancellation.

    Attributes:
        _cancel_flag: Threading event for cancellation
        _progress_callback: Optional callback for progress updates
    """

    def __init__(self, config: Optional[SearchConfig] = None) -> None:
        """Initialize the searcher."""
        self.config = config or SearchConfig()
        self._cancel_flag = threading.Event()
        self._progress_callback: Optional[ProgressCallback] = None

    def set_progress_callback(self, callback: ProgressCallback) -> None:
        """
        Set the progress callback function.

        Args:
            callback: Function taking (message: str, percent: int)
        """
        self._progress_callback = callback

    def cancel(self) -> None:
        """Request cancellation of the current search."""
        self._cancel_flag.set()
        logger.debug("Search cancellation requested")

    def _report_progress(self, message: str, percent: int) -> None:
        if self._progress_callback:
            self._progress_callback(message, percent)

    def search(self, t: TwistTuple, fixed_tail: int = 0) -> SearchOutcome:
        """
        Find moves after which all entries of t pairwise intersect.

        Args:
            t: Tuple of at least two classes.
            fixed_tail: Trailing positions no move may touch; 1 keeps the
                last entry in place, as the certificates of the lemma do.

        Returns:
            SearchOutcome; found=False on exhaustion, timeout, cancellation
            or a zero class in t.

        Raises:
            DomainError: If the tuple is too short for any move.
            InvariantError: If a found sequence fails re-verification.
        """
        cfg = self.config
        self._cancel_flag.clear()
        length = len(t)
        if length < 2:
            raise DomainError(f"search needs a tuple of length >= 2, got {length}")
        movable = length - 1 - fixed_tail
        if fixed_tail < 0 or movable < 1:
            raise DomainError(f"fixed tail {fixed_tail} leaves no movable positions")

        zero_entries = [idx for idx, entry in enumerate(t, start=1) if entry.is_zero]
        if zero_entries:
            detail = (
                f"entry {zero_entries[0]} is the zero class; its pairing with every "
                "class stays 0 under all moves"
            )
            logger.info("Search rejected: %s", detail)
            return SearchOutcome(False, detail=detail)

        initial = matrix_of_tuple(t)
        if zero_pair_score(initial) == 0:
            return SearchOutcome(True, MoveSequence(), detail="input already pairwise intersecting")

        logger.info(
            "Searching %s over %d positions: seed=%d, restarts=%d, max_moves=%d",
            cfg.strategy.value, movable, cfg.seed, cfg.restarts, cfg.max_moves
        )
        started = time.monotonic()
        if cfg.workers > 1:
            results = self._run_parallel(initial, movable, started)
        else:
            results = self._run_serial(initial, movable, started)
        return self._merge(t, initial, results)

    def _remaining(self, started: float) -> float:
        return self.config.time_limit_seconds - (time.monotonic() - started)

    def _run_serial(
        self,
        initial: IntersectionMatrix,
        movable: int,
        started: float
    ) -> list[RestartResult]:
        rows = initial.to_lists()
        results: list[RestartResult] = []
        restarts = self.config.restarts
        for w in range(restarts):
            remaining = self._remaining(started)
            if remaining <= 0 or self._cancel_flag.is_set():
                break
            result = run_restart(rows, self.config, w, movable, remaining, self._cancel_flag)
            results.append(result)
            self._report_progress(f"Restart {w + 1}/{restarts}", int((w + 1) * 100 / restarts))
            if result.found or result.timed_out:
                break
        return results

    def _run_parallel(
        self,
        initial: IntersectionMatrix,
        movable: int,
        started: float
    ) -> list[RestartResult]:
        rows = initial.to_lists()
        cfg = self.config
        results: list[RestartResult] = []
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            for first in range(0, cfg.restarts, cfg.workers):
                remaining = self._remaining(started)
                if remaining <= 0 or self._cancel_flag.is_set():
                    break
                batch = range(first, min(first + cfg.workers, cfg.restarts))
                futures = [
                    pool.submit(run_restart, rows, cfg, w, movable, remaining)
                    for w in batch
                ]
                for future in futures:
                    results.append(future.result())
                self._report_progress(
                    f"Restart {batch[-1] + 1}/{cfg.restarts}",
                    int((batch[-1] + 1) * 100 / cfg.restarts)
                )
                if any(r.found or r.timed_out for r in results):
                    break

        # keep everything up to the first success or timeout, in restart order
        merged: list[RestartResult] = []
        for result in results:
            merged.append(result)
            if result.found or result.timed_out:
                break
        return merged

    def _merge(
        self,
        t: TwistTuple,
        initial: IntersectionMatrix,
        results: list[RestartResult]
    ) -> SearchOutcome:
        explored = 0
        offset = 0
        trace: list[tuple[int, int]] = []
        for result in results:
            explored += result.explored
            trace.extend((offset + step, score) for step, score in result.trace)
            offset += len(result.moves)
            if result.found:
                sequence = MoveSequence(result.moves)
                self._reverify(t, initial, sequence)
                logger.info(
                    "Found a %d-move sequence in restart %d (%d candidates explored)",
                    len(sequence), result.index, explored
                )
                self._report_progress("Sequence found", 100)
                return SearchOutcome(
                    True, sequence, explored, tuple(trace), result.index + 1,
                    f"found in restart {result.index + 1}",
                )

        if self._cancel_flag.is_set():
            detail = "search cancelled"
        elif results and results[-1].timed_out:
            detail = f"time limit of {self.config.time_limit_seconds:g}s reached"
        else:
            detail = f"no sequence within {len(results)} restarts of {self.config.max_moves} moves"
        logger.info("Search exhausted: %s", detail)
        return SearchOutcome(False, None, explored, tuple(trace), len(results), detail)

    @staticmethod
    def _reverify(t: TwistTuple, initial: IntersectionMatrix, sequence: MoveSequence) -> None:
        """
        Replay a found sequence at both levels.

        Raises:
            InvariantError: If the levels disagree, a pair still fails to
                intersect, or the length or product changed.
        """
        final_tuple = apply_sequence(t, sequence, Level.SHARP)
        flat = apply_sequence(initial, sequence, Level.FLAT)
        if matrix_of_tuple(final_tuple) != flat:
            raise InvariantError("sharp and flat replays of the found sequence disagree")
        if zero_pair_score(flat) != 0:
            raise InvariantError("found sequence leaves non-intersecting pairs")
        if len(final_tuple) != len(t) or product_matrix(final_tuple) != product_matrix(t):
            raise InvariantError("found sequence changed the tuple length or product")


def search_nonzero(
    t: TwistTuple,
    cfg: Optional[SearchConfig] = None,
    fixed_tail: int = 0,
) -> SearchOutcome:
    """
    Search for moves making all pairs of entries of t intersect.

    Args:
        t: Tuple of classes.
        cfg: Search configuration; defaults when omitted.
        fixed_tail: Trailing positions kept in place.

    Returns:
        The SearchOutcome.
    """
    return HurwitzSearcher(cfg).search(t, fixed_tail=fixed_tail)
