# -*- coding: utf-8 -*-
"""
Exact integer model of H1(Sigma_g; Z).

This module provides:
- The algebraic intersection pairing I(x, y) = x^T J y
- The chain classes c_1, ..., c_{2g+1}
- Dehn twists acting on homology as transvections
- Evaluation of twist words to symplectic matrices
- Recovery of a twist class from a power transvection

Composition convention: a word is read as a composition of maps, so the
rightmost letter acts first and the matrix of ``w1 w2`` is ``M(w1) @ M(w2)``.

All arithmetic uses Python integers; entries never wrap.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from math import isqrt
from typing import Optional, Sequence

from .errors import DimensionError, DomainError, InvariantError, PreconditionError
from .models import HomologyClass, SymplecticMatrix, TwistLetter, TwistWord

logger = logging.getLogger(__name__)


# =============================================================================
# SYMPLECTIC FORM
# =============================================================================

@lru_cache(maxsize=16)
def symplectic_form(genus: int) -> SymplecticMatrix:
    """
    Return J, block-diagonal with g blocks [[0, 1], [-1, 0]].

    Args:
        genus: Positive genus g.

    Returns:
        The 2g x 2g matrix J.
    """
    if genus < 1:
        raise DomainError(f"genus must be positive, got {genus}")
    dim = 2 * genus
    rows = [[0] * dim for _ in range(dim)]
    for i in range(genus):
        rows[2 * i][2 * i + 1] = 1
        rows[2 * i + 1][2 * i] = -1
    return SymplecticMatrix(tuple(tuple(row) for row in rows))


def _pairing(x: Sequence[int], y: Sequence[int]) -> int:
    """Pairing on raw coordinate sequences of equal length."""
    total = 0
    for i in range(0, len(x), 2):
        total += x[i] * y[i + 1] - x[i + 1] * y[i]
    return total


def intersection_pairing(x: HomologyClass, y: HomologyClass) -> int:
    """
    Algebraic intersection number I(x, y) = x^T J y.

    Args:
        x: First class.
        y: Second class.

    Returns:
        The signed intersection; antisymmetric and bilinear.

    Raises:
        DimensionError: If the classes have different genus.
    """
    if x.genus != y.genus:
        raise DimensionError(f"genus mismatch: {x.genus} vs {y.genus}")
    return _pairing(x.coords, y.coords)


def chain_classes(genus: int) -> list[HomologyClass]:
    """
    Homology classes of the standard chain c_1, ..., c_{2g+1}.

    c_1 = a_1, c_{2i} = b_i, c_{2i+1} = a_i + a_{i+1} and c_{2g+1} = a_g.
    For genus 2 this is a1, b1, a1+a2, b2, a2.

    Args:
        genus: Positive genus g.

    Returns:
        List of 2g+1 classes; consecutive ones pair to +-1, others to 0.

    Raises:
        DomainError: If genus < 1.
    """
    if genus < 1:
        raise DomainError(f"genus must be positive, got {genus}")
    dim = 2 * genus

    def basis(*indices: int) -> HomologyClass:
        coords = [0] * dim
        for idx in indices:
            coords[idx] += 1
        return HomologyClass(tuple(coords))

    chain = [basis(0)]
    for i in range(genus):
        chain.append(basis(2 * i + 1))
        if i < genus - 1:
            chain.append(basis(2 * i, 2 * i + 2))
    chain.append(basis(2 * genus - 2))
    return chain


# =============================================================================
# TWISTS
# =============================================================================

def twist_apply(delta: HomologyClass, x: HomologyClass, exponent: int = 1) -> HomologyClass:
    """
    Apply T_delta^exponent to a class: x + exponent * I(x, delta) * delta.

    The result does not depend on the orientation of delta.

    Args:
        delta: Twist curve class.
        x: Class to transform.
        exponent: Power of the twist (may be negative).

    Returns:
        The transformed class.
    """
    k = exponent * intersection_pairing(x, delta)
    if k == 0:
        return x
    return x + delta.scaled(k)


def transvection_matrix(delta: HomologyClass, exponent: int = 1) -> SymplecticMatrix:
    """
    Matrix of T_delta^exponent, i.e. I + exponent * delta (J delta)^T.

    Args:
        delta: Twist curve class.
        exponent: Power of the twist; 0 gives the identity.

    Returns:
        The transvection matrix.
    """
    s = delta.coords
    dim = len(s)
    # (J s)_j: J maps a_i -> -b_i and b_i -> a_i
    js = [0] * dim
    for i in range(0, dim, 2):
        js[i] = s[i + 1]
        js[i + 1] = -s[i]
    return SymplecticMatrix(tuple(
        tuple((1 if r == c else 0) + exponent * s[r] * js[c] for c in range(dim))
        for r in range(dim)
    ))


def is_symplectic(m: SymplecticMatrix) -> bool:
    """True when M^T J M = J exactly."""
    j = symplectic_form(m.genus)
    return m.transpose() @ j @ m == j


def inverse(m: SymplecticMatrix) -> SymplecticMatrix:
    """
    Inverse of a symplectic matrix, -J M^T J.

    Raises:
        InvariantError: If M is not symplectic.
    """
    if not is_symplectic(m):
        raise InvariantError("matrix is not symplectic")
    j = symplectic_form(m.genus)
    return -(j @ m.transpose() @ j)


def matrix_power(m: SymplecticMatrix, n: int) -> SymplecticMatrix:
    """M^n for any integer n."""
    if n < 0:
        return inverse(m).power(-n)
    return m.power(n)


# =============================================================================
# WORDS
# =============================================================================

def letter(index: int, exponent: int = 1, genus: int = 2) -> TwistLetter:
    """
    Letter g_index^exponent over the chain of the given genus.

    Raises:
        DomainError: If the index is outside 1..2g+1.
    """
    chain = chain_classes(genus)
    if not 1 <= index <= len(chain):
        raise DomainError(f"generator g{index} does not exist in genus {genus}")
    return TwistLetter(chain[index - 1], exponent, f"g{index}")


def word_of(*tokens: tuple[int, int], genus: int = 2) -> TwistWord:
    """Build a word from (index, exponent) pairs over the chain."""
    return TwistWord(tuple(letter(i, e, genus) for i, e in tokens))


def evaluate_word(word: TwistWord, genus: Optional[int] = None) -> SymplecticMatrix:
    """
    Homology image of a twist word.

    Letters are multiplied left to right, so the rightmost letter acts
    first. The empty word evaluates to the identity.

    Args:
        word: Word to evaluate.
        genus: Genus of the identity returned for an empty word;
            inferred from the letters otherwise.

    Returns:
        The product of transvection matrices.
    """
    g = word.genus or genus
    if g is None:
        raise DomainError("genus required to evaluate an empty word")
    if genus is not None and word.genus is not None and genus != word.genus:
        raise DimensionError(f"word has genus {word.genus}, expected {genus}")

    result = SymplecticMatrix.identity(2 * g)
    for item in word.letters:
        result = result @ transvection_matrix(item.generator, item.exponent)
    return result


# =============================================================================
# DERIVED CLASSES
# =============================================================================

def triangle_class(x: HomologyClass, y: HomologyClass) -> HomologyClass:
    """
    Class of the triangle curve x # y, which is T_y^-1(x) = x - I(x, y) y.

    Args:
        x: First curve class.
        y: Second curve class, meeting x once.

    Returns:
        The class of the triangle curve.

    Raises:
        PreconditionError: If |I(x, y)| != 1.
    """
    pairing = intersection_pairing(x, y)
    if abs(pairing) != 1:
        raise PreconditionError(
            f"triangle operator needs |I(x, y)| = 1, got {pairing}"
        )
    return x - y.scaled(pairing)


def derive_twist_class(m: SymplecticMatrix, power: int) -> Optional[HomologyClass]:
    """
    Solve M = transvection_matrix(s, power) for s.

    Writing M = I + power * s (J s)^T gives (M - I) J = power * s s^T,
    which is read off exactly. The sign of s is not determined; the
    representative with first nonzero coordinate positive is returned.

    Args:
        m: Symplectic matrix.
        power: Positive twist power.

    Returns:
        The normalized class s, the zero class when M = I, or None when
        M is not a power transvection of that power.

    Raises:
        DomainError: If power < 1.
        InvariantError: If M is not symplectic.
    """
    if power < 1:
        raise DomainError(f"power must be positive, got {power}")
    if not is_symplectic(m):
        raise InvariantError("matrix is not symplectic")

    dim = m.dim
    if m.is_identity():
        return HomologyClass.zero(m.genus)

    j = symplectic_form(m.genus)
    n = m.to_lists()
    for i in range(dim):
        n[i][i] -= 1
    scaled = (SymplecticMatrix(tuple(tuple(row) for row in n)) @ j).to_lists()

    outer = [[0] * dim for _ in range(dim)]
    for r in range(dim):
        for c in range(dim):
            q, rem = divmod(scaled[r][c], power)
            if rem:
                logger.debug("Entry (%d,%d) not divisible by %d", r, c, power)
                return None
            outer[r][c] = q

    pivot = next((i for i in range(dim) if outer[i][i] > 0), None)
    if pivot is None:
        return None
    root = isqrt(outer[pivot][pivot])
    if root * root != outer[pivot][pivot]:
        return None

    coords = []
    for r in range(dim):
        q, rem = divmod(outer[r][pivot], root)
        if rem:
            return None
        coords.append(q)

    if any(outer[r][c] != coords[r] * coords[c] for r in range(dim) for c in range(dim)):
        return None

    return HomologyClass(tuple(coords)).normalized()
