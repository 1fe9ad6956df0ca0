# -*- coding: utf-8 -*-
"""
One-shot checkers on the shipped data.

Every checker returns a VerificationReport; a failed check is a value,
never an exception. Errors are reserved for missing or corrupt data and
invalid arguments.

All conclusions are drawn at the level of homology. An identity that
holds there is a necessary condition for the same identity in the
mapping class group, not a proof of it.
"""

from __future__ import annotations

import logging
from enum import Enum
from typing import Iterable, Optional, Sequence

from .constants import (
    DEFAULT_MAX_POWER,
    EXAMPLE_WORD_FILES,
    LEMMA_MOVE_COUNTS,
    LEMMA_MOVE_FILES,
    LEMMA_TUPLE_FILES,
)
from .errors import DataFormatError, DomainError, PreconditionError, UnknownNameError
from .formats import WordBook, ensure_intact, parse_moves, parse_tuple, parse_words, read_resource_text
from .hurwitz import apply_sequence, matrix_of_tuple, twisted_concatenation
from .models import (
    HomologyClass,
    IntersectionMatrix,
    Level,
    MoveSequence,
    SearchConfig,
    SymplecticMatrix,
    TwistTuple,
    VerificationReport,
)
from .search import search_nonzero, zero_pair_score
from .symplectic import (
    chain_classes,
    derive_twist_class,
    evaluate_word,
    intersection_pairing,
    inverse,
    is_symplectic,
    transvection_matrix,
    triangle_class,
    word_of,
)

logger = logging.getLogger(__name__)

HOMOLOGY_CAVEAT = (
    "Checked on homology only: a necessary condition, blind to the Torelli group."
)
LEMMA_CASES: tuple[int, ...] = tuple(sorted(LEMMA_TUPLE_FILES))


# =============================================================================
# RELATIONS
# =============================================================================

class RelationName(Enum):
    """
    Named relations of the genus-2 chain, checked on homology.

    Each value is (name, chain word, power, expected sign of the image).
    """
    CHAIN4_POW5 = ("chain4-pow5", (1, 2, 3, 4), 5, -1)
    CHAIN5_POW6 = ("chain5-pow6", (1, 2, 3, 4, 5), 6, 1)
    PALINDROME_SQ = ("palindrome-sq", (1, 2, 3, 4, 5, 5, 4, 3, 2, 1), 2, 1)

    def __init__(self, key: str, chain: tuple[int, ...], power: int, sign: int) -> None:
        self.key = key
        self.chain = chain
        self.power = power
        self.sign = sign

    @classmethod
    def from_key(cls, key: str) -> RelationName:
        """
        Look up a relation by its name.

        Raises:
            UnknownNameError: If no relation has that name.
        """
        for relation in cls:
            if relation.key == key:
                return relation
        raise UnknownNameError(f"unknown relation '{key}'")


BRAID = "braid"
RELATION_KEYS: tuple[str, ...] = tuple(r.key for r in RelationName) + (BRAID,)


def describe_matrix(m: SymplecticMatrix) -> str:
    """'I', '-I' or 'other'."""
    if m.is_identity():
        return "I"
    if m.is_negative_identity():
        return "-I"
    return "other"


def check_relation(name: str) -> VerificationReport:
    """
    Evaluate a named relation on homology.

    chain5-pow6 and palindrome-sq must map to I; chain4-pow5, the
    hyperelliptic involution, must map to -I.

    Raises:
        UnknownNameError: If the name is not a known relation.
    """
    if name == BRAID:
        return check_braid_relations()

    relation = RelationName.from_key(name)
    word = word_of(*((i, 1) for i in relation.chain)) ** relation.power
    image = evaluate_word(word)
    observed = describe_matrix(image)
    expected = "I" if relation.sign > 0 else "-I"
    passed = observed == expected

    detail = "\n".join([
        f"word: ({' '.join(f'g{i}' for i in relation.chain)})^{relation.power}",
        f"image on homology: {observed} (expected {expected})",
        HOMOLOGY_CAVEAT,
    ])
    logger.info("Relation %s: %s", name, "PASS" if passed else "FAIL")
    return VerificationReport(f"relation-{name}", passed, image, detail)


def check_braid_relations(genus: int = 2) -> VerificationReport:
    """
    Braid relations of the chain on homology.

    Adjacent twists satisfy T_i T_j T_i = T_j T_i T_j, disjoint ones commute.
    """
    n = 2 * genus + 1
    failures: list[str] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if j - i == 1:
                lhs = word_of((i, 1), (j, 1), (i, 1), genus=genus)
                rhs = word_of((j, 1), (i, 1), (j, 1), genus=genus)
            else:
                lhs = word_of((i, 1), (j, 1), genus=genus)
                rhs = word_of((j, 1), (i, 1), genus=genus)
            if evaluate_word(lhs) != evaluate_word(rhs):
                failures.append(f"g{i},g{j}")

    pairs = n * (n - 1) // 2
    detail = f"{pairs - len(failures)}/{pairs} generator pairs satisfy their relation"
    if failures:
        detail += "\nfailing pairs: " + " ".join(failures)
    detail += "\n" + HOMOLOGY_CAVEAT
    return VerificationReport(f"relation-{BRAID}", not failures, failures or None, detail)


# =============================================================================
# LEMMA
# =============================================================================

def _check_case(case: int) -> None:
    if case not in LEMMA_CASES:
        raise DomainError(f"lemma case must be one of {LEMMA_CASES}, got {case}")


def lemma_inputs(case: int) -> tuple[TwistTuple, MoveSequence]:
    """
    Shipped tuple A_case . (c1) and move sequence q_case.

    Raises:
        DomainError: If case is not 1, 2 or 3.
        DataFormatError: If the shipped files are corrupt.
        FileNotFoundError: If they are missing.
    """
    _check_case(case)
    tuple_name = LEMMA_TUPLE_FILES[case]
    moves_name = LEMMA_MOVE_FILES[case]
    ensure_intact(tuple_name, moves_name)

    t = parse_tuple(read_resource_text(tuple_name), tuple_name)
    q = parse_moves(read_resource_text(moves_name), moves_name)
    if len(q) != LEMMA_MOVE_COUNTS[case]:
        raise DataFormatError(
            f"expected {LEMMA_MOVE_COUNTS[case]} moves, found {len(q)}", source=moves_name
        )
    return t, q


def first_zero_pair(m: IntersectionMatrix) -> Optional[tuple[int, int]]:
    """First 1-based pair (i, j), i < j, with m[i][j] = 0."""
    zeros = m.off_diagonal_zeros()
    return zeros[0] if zeros else None


def verify_lemma_case(case: int) -> VerificationReport:
    """
    Replay q_case on A_case . (c1) at both levels.

    Passes when the sharp and flat computations agree entrywise and
    every off-diagonal entry of the final matrix is nonzero.

    Args:
        case: 1, 2 or 3.

    Returns:
        Report named lemma-<case>; the witness is the final matrix, or
        the first zero pair on failure.
    """
    t, q = lemma_inputs(case)
    sharp = matrix_of_tuple(apply_sequence(t, q, Level.SHARP))
    flat = apply_sequence(matrix_of_tuple(t), q, Level.FLAT)

    size = flat.size
    lines = [f"tuple length {len(t)}, {len(q)} moves, {size}x{size} matrix"]
    agree = sharp == flat
    lines.append("sharp and flat levels agree" if agree else "sharp and flat levels DISAGREE")

    zero = first_zero_pair(flat)
    nonzero = size * (size - 1) - 2 * len(flat.off_diagonal_zeros())
    lines.append(f"{nonzero} of {size * (size - 1)} off-diagonal entries nonzero")
    if zero is not None:
        lines.append(f"first zero entry at ({zero[0]},{zero[1]})")
    else:
        lines.append("all pairs have nonzero algebraic, hence nonzero geometric, intersection")

    passed = agree and zero is None
    witness: object = flat
    if not agree:
        witness = sharp
    elif zero is not None:
        witness = zero
    logger.info("Lemma case %d: %s", case, "PASS" if passed else "FAIL")
    return VerificationReport(f"lemma-{case}", passed, witness, "\n".join(lines))


def processed_blocks(
    cfg: Optional[SearchConfig] = None,
    inputs: Optional[Sequence[tuple[TwistTuple, MoveSequence]]] = None,
) -> tuple[list[TwistTuple], list[str]]:
    """
    The tuples q_i . A_i with the trailing c1 dropped.

    A sequence that leaves some pair non-intersecting is extended by a
    seeded search that keeps the last entry in place.

    Args:
        cfg: Configuration of the extending search.
        inputs: (tuple, moves) pairs; the shipped lemma data when omitted.

    Returns:
        (blocks, notes) with one note per extended block.

    Raises:
        PreconditionError: If an extension cannot be found.
    """
    blocks: list[TwistTuple] = []
    notes: list[str] = []
    if inputs is None:
        inputs = [lemma_inputs(case) for case in LEMMA_CASES]
    for case, (t, q) in enumerate(inputs, start=1):
        processed = apply_sequence(t, q, Level.SHARP)
        remaining = zero_pair_score(matrix_of_tuple(processed))
        if remaining:
            outcome = search_nonzero(processed, cfg, fixed_tail=1)
            if not outcome.found or outcome.sequence is None:
                raise PreconditionError(
                    f"q{case} leaves {remaining} zero pair(s) and no extension was found: {outcome.detail}"
                )
            processed = apply_sequence(processed, outcome.sequence, Level.SHARP)
            notes.append(
                f"q{case} leaves {remaining} zero pair(s); extended by {outcome.sequence}"
            )
        blocks.append(TwistTuple(processed.entries[:-1], processed.genus))
    return blocks, notes


# =============================================================================
# EXAMPLES
# =============================================================================

def _load_book(example: int) -> WordBook:
    name = EXAMPLE_WORD_FILES[example]
    ensure_intact(name)
    return parse_words(read_resource_text(name), name)


def _solve_squared(m: SymplecticMatrix) -> Optional[HomologyClass]:
    """Class s with T_s^2 = m, checked to reproduce m exactly."""
    s = derive_twist_class(m, 2)
    if s is None or transvection_matrix(s, 2) != m:
        return None
    return s


def _class_kind(s: HomologyClass) -> str:
    return "zero class, separating on homology" if s.is_zero else "nonseparating class"


def example1_check() -> VerificationReport:
    """
    Solve the two identities of the first example for tau and sigma.

    (a) T_tau^2 o P = 1 forces T_tau^2 = P^-1 on homology.
    (b) Q o T_sigma^-2 = 1 forces T_sigma^2 = Q.

    Identity (b) is tried as written first. When Q is not a squared
    transvection the loop beta2.beta1.beta2.beta1 is read with the
    monodromy reversing path products (word Q_paths), and the report says
    which reading closed. Passes when both identities close exactly.
    """
    book = _load_book(1)
    p = evaluate_word(book.word('P'))
    witness: dict[str, object] = {'P': p}
    lines: list[str] = []

    tau = _solve_squared(inverse(p))
    if tau is None:
        lines.append("(a) P^-1 is not a squared transvection")
    else:
        witness['tau'] = tau
        lines.append(f"(a) [tau] = +-{tau} ({_class_kind(tau)}); identity closes")

    sigma: Optional[HomologyClass] = None
    for reading, name in (("as written", 'Q'), ("path-product order", 'Q_paths')):
        q = evaluate_word(book.word(name))
        witness[name] = q
        sigma = _solve_squared(q)
        if sigma is None:
            trace = sum(q.rows[i][i] for i in range(q.dim))
            lines.append(f"(b) {reading}: Q is not a squared transvection (trace {trace})")
            continue
        witness['sigma'] = sigma
        witness['reading'] = reading
        lines.append(f"(b) {reading}: [sigma] = +-{sigma} ({_class_kind(sigma)}); identity closes")
        break

    passed = tau is not None and sigma is not None
    lines.append(HOMOLOGY_CAVEAT)
    if sigma is not None and witness['reading'] != "as written":
        lines.append(f"identity (b) fails as written; it closes only in {witness['reading']}")
    logger.info("Example 1: %s", "PASS" if passed else "FAIL")
    return VerificationReport("example-1", passed, witness, "\n".join(lines))


def example2_check() -> VerificationReport:
    """
    The product R of the seven squared half monodromies of the second example.

    Passes when R^2 = I, the homology shadow of R having order 2.
    Whether R itself is I or -I is reported, not asserted.
    """
    book = _load_book(2)
    lines: list[str] = []
    all_symplectic = True
    for name, word in book.macros.items():
        if name == 'R':
            continue
        if not is_symplectic(evaluate_word(word)):
            all_symplectic = False
            lines.append(f"{name} does not evaluate to a symplectic matrix")

    r = evaluate_word(book.word('R'))
    square_is_identity = (r @ r).is_identity()
    lines.append(f"R on homology: {describe_matrix(r)}")
    lines.append(f"R^2 = I: {square_is_identity}")
    lines.append(HOMOLOGY_CAVEAT)

    passed = all_symplectic and square_is_identity
    logger.info("Example 2: %s", "PASS" if passed else "FAIL")
    return VerificationReport("example-2", passed, r, "\n".join(lines))


# =============================================================================
# TRIANGLE OPERATOR
# =============================================================================

def triangle_words_check(genus: int = 2) -> VerificationReport:
    """
    For adjacent chain curves x, y the word T_y^-1 T_x T_y is the twist
    along triangle_class(x, y).
    """
    chain = chain_classes(genus)
    failures: list[str] = []
    checked = 0
    for i in range(len(chain) - 1):
        for a, b in ((i, i + 1), (i + 1, i)):
            word = word_of((b + 1, -1), (a + 1, 1), (b + 1, 1), genus=genus)
            derived = derive_twist_class(evaluate_word(word), 1)
            expected = triangle_class(chain[a], chain[b]).normalized()
            checked += 1
            if derived != expected:
                failures.append(f"c{a + 1} # c{b + 1}")

    detail = f"{checked - len(failures)}/{checked} triangle curves match their words"
    if failures:
        detail += "\nmismatches: " + ", ".join(failures)
    return VerificationReport("triangle", not failures, failures or None, detail)


# =============================================================================
# INTERSECTION BOUNDS
# =============================================================================

def ivanov_lower_bound(terms: Iterable[tuple[int, int, int]], cross: int) -> int:
    """
    Lower bound for Int(tau(x), y), tau = prod T_{alpha_i}^{r_i} a multi-twist.

    Args:
        terms: (r_i, Int(x, alpha_i), Int(y, alpha_i)) per twist curve.
        cross: Int(x, y).

    Returns:
        sum((|r_i| - 2) * i1 * i2) - cross; may be negative.

    Raises:
        DomainError: If some r_i = 0 or an intersection number is negative.
    """
    if cross < 0:
        raise DomainError("intersection numbers are non-negative")
    total = 0
    for r, i1, i2 in terms:
        if r == 0:
            raise DomainError("twist powers must be nonzero")
        if i1 < 0 or i2 < 0:
            raise DomainError("intersection numbers are non-negative")
        total += (abs(r) - 2) * i1 * i2
    return total - cross


def ivanov_power_bound(terms: Iterable[tuple[int, int]]) -> int:
    """
    Lower bound for Int(tau^3(x), x): sum((|3 r_i| - 2) * Int(x, alpha_i)^2).

    At least 1 as soon as x meets some alpha_i.

    Args:
        terms: (r_i, Int(x, alpha_i)) per twist curve.
    """
    items = list(terms)
    return ivanov_lower_bound(((3 * r, i, i) for r, i in items), 0)


def min_power_N(i_delta: int, i_delta_prime: int, cross_upper: int) -> int:
    """
    Smallest N with (N - 2) * i_delta * i_delta_prime - cross_upper >= 1.

    Raises:
        DomainError: Unless i_delta, i_delta_prime >= 1 and cross_upper >= 0.
    """
    if i_delta < 1 or i_delta_prime < 1:
        raise DomainError("intersections with the twist curve must be positive")
    if cross_upper < 0:
        raise DomainError("cross intersection must be non-negative")
    product = i_delta * i_delta_prime
    return 2 + -(-(cross_upper + 1) // product)


# =============================================================================
# TWISTED CONCATENATION
# =============================================================================

def twisted_blocks(blocks: Sequence[TwistTuple]) -> list[tuple[TwistTuple, int]]:
    """Pair each block with its power index j = 1, 2, ..."""
    return [(block, j) for j, block in enumerate(blocks, start=1)]


def algebraic_power_estimate(base: TwistTuple, blocks: Sequence[TwistTuple]) -> int:
    """
    min_power_N over all entry pairs, with |algebraic| intersections in
    place of geometric ones.
    """
    delta = chain_classes(base.genus)[0]
    entries = list(base.entries)
    for block in blocks:
        entries.extend(block.entries)
    weights = [abs(intersection_pairing(x, delta)) for x in entries]
    estimate = 1
    for a in range(len(entries)):
        for b in range(a + 1, len(entries)):
            if weights[a] and weights[b]:
                cross = abs(intersection_pairing(entries[a], entries[b]))
                estimate = max(estimate, min_power_N(weights[a], weights[b], cross))
    return estimate


def twisted_concatenation_check(
    max_n: int = DEFAULT_MAX_POWER,
    cfg: Optional[SearchConfig] = None,
) -> VerificationReport:
    """
    Build D_1 . prod_j T_c1^{jN}(D_j) from the processed lemma tuples and
    find the first N <= max_n with all pairwise intersections nonzero.

    Raises:
        DomainError: If max_n < 1.
    """
    if max_n < 1:
        raise DomainError("max N must be positive")

    blocks, notes = processed_blocks(cfg)
    delta = chain_classes(2)[0]
    base = blocks[0]
    paired = twisted_blocks(blocks)

    found: Optional[int] = None
    for n in range(1, max_n + 1):
        t = twisted_concatenation(base, paired, delta, n)
        score = zero_pair_score(matrix_of_tuple(t))
        logger.debug("N=%d: %d zero pairs", n, score)
        if score == 0:
            found = n
            break

    length = len(base) + sum(len(b) for b in blocks)
    estimate = algebraic_power_estimate(base, blocks)
    lines = [
        f"tuple length {length}",
        f"first N with all pairs intersecting: {found if found is not None else 'none'} (scanned 1..{max_n})",
        f"sufficient N from the intersection estimate with algebraic counts: {estimate}",
    ]
    lines[1:1] = notes
    return VerificationReport("twisted", found is not None, found, "\n".join(lines))

