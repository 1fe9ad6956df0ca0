# -*- coding: utf-8 -*-
"""
Hurwitz moves on tuples of positive Dehn twists.

A tuple (delta_1, ..., delta_l) of classes denotes the twist tuple
(T_delta_1, ..., T_delta_l). Moves act at two levels:
- sharp: on the tuple of classes itself
- flat: on the matrix of pairwise algebraic intersections

The flat formulas are implemented directly from the intersection data,
so matrix_of_tuple(sharp) == flat(matrix_of_tuple) is a real cross-check.

Move indices are 1-based in all public interfaces.
"""

from __future__ import annotations

import logging
from typing import Iterable, Optional, Sequence, Union, overload

from .errors import DimensionError, DomainError, MoveBoundsError, UnknownNameError
from .models import (
    HomologyClass,
    HurwitzMove,
    IntersectionMatrix,
    Level,
    MoveSequence,
    Side,
    SymplecticMatrix,
    TwistTuple,
)
from .symplectic import chain_classes, intersection_pairing, transvection_matrix, twist_apply

logger = logging.getLogger(__name__)

# Chain indices of the standard genus-2 tuples
STANDARD_TUPLES: dict[str, tuple[int, ...]] = {
    'A1': (1, 2, 3, 4, 5, 5, 4, 3, 2, 1) * 2,
    'A2': (1, 2, 3, 4) * 5,
    'A3': (1, 2, 3, 4, 5) * 6,
}


def _check_index(mv: HurwitzMove, length: int, position: Optional[int] = None) -> None:
    """Raise MoveBoundsError unless 1 <= index <= length - 1."""
    if not 1 <= mv.index <= length - 1:
        where = f" (move {position} of sequence)" if position is not None else ""
        raise MoveBoundsError(
            f"move {mv} out of range for a tuple of length {length}{where}",
            position=position,
        )


# =============================================================================
# SHARP LEVEL
# =============================================================================

def sharp_move(t: TwistTuple, mv: HurwitzMove) -> TwistTuple:
    """
    Apply a Hurwitz move to a tuple of classes.

    L_k: (d_k, d_k+1) -> (T_{d_k}(d_k+1), d_k)
    R_k: (d_k, d_k+1) -> (d_k+1, T_{d_k+1}^-1(d_k))

    Args:
        t: Tuple of twist classes.
        mv: Move to apply.

    Returns:
        The transformed tuple.

    Raises:
        MoveBoundsError: If the move index is out of range.
    """
    _check_index(mv, len(t))
    entries = list(t.entries)
    sharp_move_inplace(entries, mv)
    return TwistTuple(tuple(entries), t.genus)


def sharp_move_inplace(entries: list[HomologyClass], mv: HurwitzMove) -> None:
    """Update tuple entries in place; the index is not checked."""
    i = mv.index - 1
    first, second = entries[i], entries[i + 1]
    if mv.side is Side.L:
        entries[i], entries[i + 1] = twist_apply(first, second), first
    else:
        entries[i], entries[i + 1] = second, twist_apply(second, first, -1)


# =============================================================================
# FLAT LEVEL
# =============================================================================

def matrix_of_tuple(t: TwistTuple) -> IntersectionMatrix:
    """
    Matrix of algebraic intersections, m[i][j] = I(d_i, d_j).

    Args:
        t: Tuple of twist classes.

    Returns:
        Skew-symmetric l x l matrix.
    """
    entries = t.entries
    return IntersectionMatrix(tuple(
        tuple(intersection_pairing(a, b) for b in entries) for a in entries
    ))


def flat_move(m: IntersectionMatrix, mv: HurwitzMove) -> IntersectionMatrix:
    """
    Apply a Hurwitz move to a matrix of algebraic intersections.

    Args:
        m: Skew-symmetric matrix with zero diagonal.
        mv: Move to apply.

    Returns:
        The updated matrix, again skew with zero diagonal.

    Raises:
        InvariantError: If m is not skew-symmetric.
        MoveBoundsError: If the move index is out of range.
    """
    m.check_skew()
    _check_index(mv, m.size)
    rows = m.to_lists()
    flat_move_inplace(rows, mv)
    return IntersectionMatrix(tuple(tuple(row) for row in rows))


def flat_move_inplace(rows: list[list[int]], mv: HurwitzMove) -> None:
    """Update matrix rows in place for L_i or R_i; the index is not checked."""
    i = mv.index - 1
    j = i + 1
    n = len(rows)
    ri, rj = rows[i], rows[j]
    m_ij = ri[j]
    m_ji = rj[i]
    others = [k for k in range(n) if k != i and k != j]

    new_i = [0] * n
    new_j = [0] * n
    col_i = [0] * n
    col_j = [0] * n

    if mv.side is Side.L:
        for k in others:
            new_i[k] = rj[k] + m_ji * ri[k]
            new_j[k] = ri[k]
            col_i[k] = rows[k][j] - m_ij * rows[k][i]
            col_j[k] = rows[k][i]
    else:
        for k in others:
            new_i[k] = rj[k]
            new_j[k] = ri[k] - m_ij * rj[k]
            col_i[k] = rows[k][j]
            col_j[k] = rows[k][i] + m_ji * rows[k][j]

    new_i[j] = m_ji
    new_j[i] = m_ij
    rows[i] = new_i
    rows[j] = new_j
    for k in others:
        rows[k][i] = col_i[k]
        rows[k][j] = col_j[k]


# =============================================================================
# SEQUENCES
# =============================================================================

@overload
def apply_sequence(target: TwistTuple, q: MoveSequence, level: Level = ...) -> TwistTuple: ...
@overload
def apply_sequence(target: IntersectionMatrix, q: MoveSequence, level: Level = ...) -> IntersectionMatrix: ...


def apply_sequence(
    target: Union[TwistTuple, IntersectionMatrix],
    q: MoveSequence,
    level: Optional[Level] = None,
) -> Union[TwistTuple, IntersectionMatrix]:
    """
    Apply a move sequence left to right at the sharp or flat level.

    Args:
        target: A tuple (sharp level) or an intersection matrix (flat level).
        q: Moves to apply.
        level: Optional level; must agree with the target kind.

    Returns:
        Object of the same kind and length as target.

    Raises:
        MoveBoundsError: At the first out-of-range move, carrying its
            1-based position in q. Nothing is applied in that case.
    """
    is_tuple = isinstance(target, TwistTuple)
    expected = Level.SHARP if is_tuple else Level.FLAT
    if level is not None and Level(level) is not expected:
        raise DomainError(
            f"{type(target).__name__} is acted on at the {expected.value} level, not {Level(level).value}"
        )

    length = len(target) if is_tuple else target.size
    for position, mv in enumerate(q, start=1):
        _check_index(mv, length, position)

    if is_tuple:
        entries = list(target.entries)
        for mv in q:
            sharp_move_inplace(entries, mv)
        logger.debug("Applied %d sharp moves to a %d-tuple", len(q), length)
        return TwistTuple(tuple(entries), target.genus)

    target.check_skew()
    rows = target.to_lists()
    for mv in q:
        flat_move_inplace(rows, mv)
    logger.debug("Applied %d flat moves to a %dx%d matrix", len(q), length, length)
    return IntersectionMatrix(tuple(tuple(row) for row in rows))


# =============================================================================
# TUPLE CONSTRUCTIONS
# =============================================================================

def tuple_from_chain(indices: Iterable[int], genus: int = 2) -> TwistTuple:
    """
    Tuple of chain classes c_i for the given 1-based indices.

    Raises:
        DomainError: If an index is outside 1..2g+1.
    """
    chain = chain_classes(genus)
    entries = []
    for idx in indices:
        if not 1 <= idx <= len(chain):
            raise DomainError(f"chain curve c{idx} does not exist in genus {genus}")
        entries.append(chain[idx - 1])
    return TwistTuple(tuple(entries), genus)


def standard_tuple(name: str) -> TwistTuple:
    """
    Standard genus-2 tuple A1, A2 or A3.

    A1 = (c1..c5, c5..c1)^2, A2 = (c1, c2, c3, c4)^5, A3 = (c1, ..., c5)^6.

    Raises:
        UnknownNameError: For any other name.
    """
    key = name.upper()
    if key not in STANDARD_TUPLES:
        raise UnknownNameError(
            f"unknown standard tuple '{name}', expected one of {', '.join(STANDARD_TUPLES)}"
        )
    return tuple_from_chain(STANDARD_TUPLES[key], genus=2)


def concat(t1: TwistTuple, t2: TwistTuple) -> TwistTuple:
    """
    Concatenation t1 . t2.

    Raises:
        DimensionError: If the genera differ.
    """
    if t1.genus != t2.genus:
        raise DimensionError(f"genus mismatch: {t1.genus} vs {t2.genus}")
    return TwistTuple(t1.entries + t2.entries, t1.genus)


def product_matrix(t: TwistTuple) -> SymplecticMatrix:
    """
    Homology image of the ordered product T_d1 ... T_dl.

    Uses the same convention as evaluate_word, so Hurwitz moves leave
    the result unchanged.
    """
    result = SymplecticMatrix.identity(2 * t.genus)
    for entry in t.entries:
        result = result @ transvection_matrix(entry, 1)
    return result


def conjugate_tuple(t: TwistTuple, delta: HomologyClass, power: int) -> TwistTuple:
    """
    Replace every entry x by T_delta^power(x) = x + power * I(x, delta) * delta.

    Raises:
        DimensionError: If delta has a different genus.
    """
    if delta.genus != t.genus:
        raise DimensionError(f"genus mismatch: {t.genus} vs {delta.genus}")
    return TwistTuple(tuple(twist_apply(delta, x, power) for x in t.entries), t.genus)


def twisted_concatenation(
    base: TwistTuple,
    blocks: Sequence[tuple[TwistTuple, int]],
    delta: HomologyClass,
    n: int,
) -> TwistTuple:
    """
    base . prod_j conjugate_tuple(block_j, delta, j * n).

    Args:
        base: Leading tuple, left untouched.
        blocks: (tuple, j) pairs in concatenation order.
        delta: Class of the twist used for conjugation.
        n: Positive power step N.

    Returns:
        The concatenated tuple.
    """
    if n < 1:
        raise DomainError(f"N must be positive, got {n}")
    result = base
    for block, j in blocks:
        result = concat(result, conjugate_tuple(block, delta, j * n))
    return result


def negate_entry(t: TwistTuple, position: int) -> TwistTuple:
    """Flip the orientation of the entry at 1-based position."""
    if not 1 <= position <= len(t):
        raise DomainError(f"position {position} outside 1..{len(t)}")
    entries = list(t.entries)
    entries[position - 1] = -entries[position - 1]
    return TwistTuple(tuple(entries), t.genus)
