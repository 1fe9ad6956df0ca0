# -*- coding: utf-8 -*-
"""
Readers and writers for the plain-text data formats.

Formats handled here:
- Word files: `g<i>`, `g<i>^<e>`, `let <name> = <tokens>`, bare `<name>`
  or `<name>^<e>` expanding a macro, optional `genus <g>` directive
- Tuple files: `genus <g>`, then `gen <i>` or `class <2g integers>` lines
- Move files: whitespace-separated `L<k>` / `R<k>` tokens
- Matrix output: one line per row, comma-separated integers

`#` starts a comment in every input format. Shipped resources live in
the `monodromy_lab.data` package and are frozen by CHECKSUMS.sha256.
"""

from __future__ import annotations

import hashlib
import logging
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .constants import CHECKSUM_FILE, DATA_PACKAGE, DEFAULT_GENUS, MOVES_PER_LINE, RESOURCE_FILES
from .errors import DataFormatError, DomainError, UnknownNameError
from .models import (
    HomologyClass,
    HurwitzMove,
    IntersectionMatrix,
    MoveSequence,
    Side,
    SymplecticMatrix,
    TwistTuple,
    TwistWord,
)
from .symplectic import chain_classes, letter

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

_GENERATOR_RE = re.compile(r"^g(\d+)(?:\^(-?\d+))?$")
_MACRO_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")
_LET_RE = re.compile(r"^let\s+([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*)$")
_MOVE_RE = re.compile(r"^([LR])(\d+)$")
_RESERVED = {'let', 'genus'}


# =============================================================================
# FILE ACCESS
# =============================================================================

def _read_text_safe(path: Path) -> str:
    """
    Read a text file, trying several encodings.

    Raises:
        OSError: If the file cannot be read.
        DataFormatError: If no encoding decodes it.
    """
    for encoding in ('utf-8', 'latin-1'):
        try:
            return path.read_text(encoding=encoding)
        except UnicodeDecodeError:
            continue
    raise DataFormatError("could not decode file", source=path)


def read_resource_text(name: str) -> str:
    """
    Contents of a shipped resource.

    Raises:
        UnknownNameError: If the name is not a shipped resource.
        FileNotFoundError: If the installed package lacks the file.
    """
    if name not in RESOURCE_FILES and name != CHECKSUM_FILE:
        raise UnknownNameError(f"unknown resource '{name}'")
    resource = resources.files(DATA_PACKAGE).joinpath(name)
    if not resource.is_file():
        raise FileNotFoundError(f"shipped resource missing: {name}")
    return resource.read_text(encoding='utf-8')


def resolve_text(location: PathLike) -> tuple[str, str]:
    """
    Text of a user path, falling back to a shipped resource of that name.

    Returns:
        (text, source label)
    """
    path = Path(location)
    if path.exists():
        return _read_text_safe(path), str(path)
    if path.name == str(location) and path.name in RESOURCE_FILES:
        logger.debug("Using shipped resource %s", path.name)
        return read_resource_text(path.name), f"<{path.name}>"
    raise FileNotFoundError(f"no such file: {location}")


def _content_lines(text: str) -> list[tuple[int, str]]:
    """(1-based line number, stripped content) with comments removed."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split('#', 1)[0].strip()
        if content:
            lines.append((number, content))
    return lines


def _parse_int(token: str, source: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise DataFormatError(f"expected an integer, got '{token}'", source, line) from None


def _parse_genus(content: str, source: str, line: int) -> int:
    parts = content.split()
    if len(parts) != 2:
        raise DataFormatError("expected 'genus <g>'", source, line)
    genus = _parse_int(parts[1], source, line)
    if genus < 1:
        raise DataFormatError(f"genus must be positive, got {genus}", source, line)
    return genus


# =============================================================================
# WORD FILES
# =============================================================================

@dataclass(frozen=True)
class WordBook:
    """
    Parsed word file.

    Attributes:
        genus: Genus of the generators.
        macros: Named words, in definition order.
        body: Concatenation of all lines outside `let` definitions.
    """
    genus: int
    macros: dict[str, TwistWord] = field(default_factory=dict)
    body: TwistWord = field(default_factory=TwistWord)

    def word(self, name: str) -> TwistWord:
        """
        Macro by name.

        Raises:
            UnknownNameError: If the macro is not defined.
        """
        try:
            return self.macros[name]
        except KeyError:
            raise UnknownNameError(f"word '{name}' is not defined") from None


def _parse_word_tokens(
    tokens: list[str],
    macros: dict[str, TwistWord],
    genus: int,
    source: str,
    line: int
) -> TwistWord:
    word = TwistWord()
    for token in tokens:
        match = _GENERATOR_RE.match(token)
        if match:
            exponent = _parse_int(match.group(2), source, line) if match.group(2) else 1
            if exponent == 0:
                raise DataFormatError(f"zero exponent in '{token}'", source, line)
            try:
                word = word + TwistWord((letter(int(match.group(1)), exponent, genus),))
            except DomainError as e:
                raise DataFormatError(str(e), source, line) from None
            continue

        match = _MACRO_RE.match(token)
        if match and match.group(1) not in _RESERVED:
            name = match.group(1)
            if name not in macros:
                raise DataFormatError(f"undefined word '{name}'", source, line)
            exponent = _parse_int(match.group(2), source, line) if match.group(2) else 1
            if exponent == 0:
                raise DataFormatError(f"zero exponent in '{token}'", source, line)
            word = word + macros[name] ** exponent
            continue

        raise DataFormatError(f"unrecognized token '{token}'", source, line)
    return word


def parse_words(text: str, source: str = "<words>") -> WordBook:
    """
    Parse the word file format.

    Args:
        text: File contents.
        source: Label used in error messages.

    Returns:
        WordBook with macros and body.

    Raises:
        DataFormatError: On malformed tokens, undefined names, a zero
            exponent or a late `genus` directive.
    """
    genus = DEFAULT_GENUS
    macros: dict[str, TwistWord] = {}
    body = TwistWord()
    seen_words = False

    for number, content in _content_lines(text):
        if content.startswith('genus'):
            if seen_words:
                raise DataFormatError("'genus' must precede all words", source, number)
            genus = _parse_genus(content, source, number)
            continue

        seen_words = True
        let = _LET_RE.match(content)
        if let:
            name, rest = let.group(1), let.group(2)
            if name in _RESERVED or _GENERATOR_RE.match(name):
                raise DataFormatError(f"'{name}' cannot be used as a word name", source, number)
            macros[name] = _parse_word_tokens(rest.split(), macros, genus, source, number)
            continue
        if content.startswith('let'):
            raise DataFormatError("expected 'let <name> = <tokens>'", source, number)

        body = body + _parse_word_tokens(content.split(), macros, genus, source, number)

    logger.debug("Parsed %d words from %s", len(macros), source)
    return WordBook(genus, macros, body)


def read_words(location: PathLike) -> WordBook:
    """Read a word file from disk or from the shipped resources."""
    text, source = resolve_text(location)
    return parse_words(text, source)


# =============================================================================
# TUPLE FILES
# =============================================================================

def parse_tuple(text: str, source: str = "<tuple>") -> TwistTuple:
    """
    Parse the tuple file format.

    Raises:
        DataFormatError: On a missing `genus` line, bad entries or a
            class of the wrong length.
    """
    lines = _content_lines(text)
    if not lines or not lines[0][1].startswith('genus'):
        raise DataFormatError("tuple file must start with 'genus <g>'", source, lines[0][0] if lines else None)
    genus = _parse_genus(lines[0][1], source, lines[0][0])
    chain = chain_classes(genus)

    entries: list[HomologyClass] = []
    for number, content in lines[1:]:
        keyword, _, rest = content.partition(' ')
        rest = rest.strip()
        if keyword == 'gen':
            idx = _parse_int(rest, source, number)
            if not 1 <= idx <= len(chain):
                raise DataFormatError(f"chain curve {idx} does not exist in genus {genus}", source, number)
            entries.append(chain[idx - 1])
        elif keyword == 'class':
            coords = tuple(_parse_int(c.strip(), source, number) for c in rest.split(','))
            if len(coords) != 2 * genus:
                raise DataFormatError(
                    f"class needs {2 * genus} coordinates, got {len(coords)}", source, number
                )
            entries.append(HomologyClass(coords))
        else:
            raise DataFormatError(f"expected 'gen' or 'class', got '{keyword}'", source, number)

    return TwistTuple(tuple(entries), genus)


def read_tuple(location: PathLike) -> TwistTuple:
    """Read a tuple file from disk or from the shipped resources."""
    text, source = resolve_text(location)
    return parse_tuple(text, source)


def format_tuple(t: TwistTuple) -> str:
    """Tuple file text; chain classes are written as `gen <i>`."""
    chain = chain_classes(t.genus)
    lines = [f"genus {t.genus}"]
    for entry in t.entries:
        if entry in chain:
            lines.append(f"gen {chain.index(entry) + 1}")
        else:
            lines.append("class " + ",".join(str(c) for c in entry.coords))
    return "\n".join(lines) + "\n"


# =============================================================================
# MOVE FILES
# =============================================================================

def parse_moves(text: str, source: str = "<moves>") -> MoveSequence:
    """
    Parse the moves file format.

    Raises:
        DataFormatError: On a token that is not L<k> or R<k> with k >= 1.
    """
    moves: list[HurwitzMove] = []
    for number, content in _content_lines(text):
        for token in content.split():
            match = _MOVE_RE.match(token)
            if not match or int(match.group(2)) < 1:
                raise DataFormatError(f"invalid move token '{token}'", source, number)
            moves.append(HurwitzMove(Side(match.group(1)), int(match.group(2))))
    return MoveSequence(tuple(moves))


def read_moves(location: PathLike) -> MoveSequence:
    """Read a moves file from disk or from the shipped resources."""
    text, source = resolve_text(location)
    return parse_moves(text, source)


def format_moves(q: MoveSequence) -> str:
    """Moves file text, MOVES_PER_LINE tokens per line."""
    tokens = [str(mv) for mv in q]
    lines = [
        " ".join(tokens[i:i + MOVES_PER_LINE])
        for i in range(0, len(tokens), MOVES_PER_LINE)
    ]
    return "\n".join(lines) + "\n" if lines else ""


# =============================================================================
# MATRICES
# =============================================================================

def format_matrix(m: Union[IntersectionMatrix, SymplecticMatrix]) -> str:
    """One line per row of comma-separated integers."""
    return "\n".join(",".join(str(v) for v in row) for row in m.rows) + "\n"


def parse_matrix(text: str, source: str = "<matrix>") -> IntersectionMatrix:
    """Parse matrix output back into an IntersectionMatrix."""
    rows = []
    for number, content in _content_lines(text):
        rows.append(tuple(_parse_int(v.strip(), source, number) for v in content.split(',')))
    try:
        return IntersectionMatrix(tuple(rows))
    except ValueError as e:
        raise DataFormatError(str(e), source) from None


def write_text(path: PathLike, content: str) -> None:
    """Write output text, creating parent directories."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(content, encoding='utf-8')
    logger.info("Wrote %s", target)


# =============================================================================
# SHIPPED DATA INTEGRITY
# =============================================================================

def _recorded_checksums() -> dict[str, str]:
    recorded: dict[str, str] = {}
    for number, content in _content_lines(read_resource_text(CHECKSUM_FILE)):
        parts = content.split()
        if len(parts) != 2:
            raise DataFormatError("expected '<sha256>  <name>'", CHECKSUM_FILE, number)
        digest, name = parts
        recorded[name.lstrip('*')] = digest.lower()
    return recorded


def verify_checksums(names: Optional[tuple[str, ...]] = None) -> list[str]:
    """
    Compare shipped resources against CHECKSUMS.sha256.

    Args:
        names: Resources to check; all of them by default.

    Returns:
        Names whose digest is missing or does not match (empty if intact).
    """
    recorded = _recorded_checksums()
    mismatched = []
    for name in names or RESOURCE_FILES:
        data = resources.files(DATA_PACKAGE).joinpath(name).read_bytes()
        digest = hashlib.sha256(data).hexdigest()
        if recorded.get(name) != digest:
            logger.warning("Checksum mismatch for shipped resource %s", name)
            mismatched.append(name)
    return mismatched


def ensure_intact(*names: str) -> None:
    """
    Raise DataFormatError if any named shipped resource is corrupt.
    """
    bad = verify_checksums(names or None)
    if bad:
        raise DataFormatError("checksum mismatch: " + ", ".join(bad), source=CHECKSUM_FILE)
