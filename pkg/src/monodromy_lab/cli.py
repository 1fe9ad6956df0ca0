# -*- coding: utf-8 -*-
"""
Command-line interface.

Sub-commands:
- verify lemma|relation|example|twisted|triangle|checksums
- apply, matrix: replay moves on a tuple file, print intersection matrices
- search: seeded search for pairwise-intersecting move sequences
- bounds <name>: closed-form constants
- hplane check-lemma: Monte-Carlo check of the geodesic separation bound
- config show|set: stored defaults for search and hplane

Checkers end their output with `RESULT <name> PASS|FAIL`. Exit codes:
0 on success, 1 on a failed check or an unsuccessful search, 2 on usage,
data or I/O errors. Standard output carries no timestamps, so identical
invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import logging
import signal
from typing import Callable, Optional, Sequence

from .bounds import BoundRegistry, format_value
from .config import HPLANE_KEYS, SEARCH_KEYS, ConfigManager, parse_setting, search_config
from .constants import APP_NAME, APP_VERSION, DEFAULT_MAX_POWER
from .errors import MonodromyLabError
from .formats import (
    format_matrix,
    format_moves,
    format_tuple,
    read_moves,
    read_tuple,
    verify_checksums,
    write_text,
)
from .hplane import mc_check_separation_lemma
from .hurwitz import apply_sequence, matrix_of_tuple
from .models import BoundInputs, IntersectionMatrix, Level, Strategy, VerificationReport
from .search import HurwitzSearcher
from .verify import (
    LEMMA_CASES,
    RELATION_KEYS,
    check_relation,
    example1_check,
    example2_check,
    triangle_words_check,
    twisted_concatenation_check,
    verify_lemma_case,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

VERIFY_SUBJECTS: tuple[str, ...] = (
    'lemma', 'relation', 'example', 'twisted', 'triangle', 'checksums',
)


# =============================================================================
# PARSER
# =============================================================================

def _add_search_flags(parser: argparse.ArgumentParser) -> None:
    """Flags shared by `search` and `verify twisted`; unset means config/default."""
    parser.add_argument('--seed', type=int, help="unsigned 64-bit seed")
    parser.add_argument('--max-moves', type=int, help="moves per restart")
    parser.add_argument('--time-limit', type=float, help="wall-clock budget in seconds")
    parser.add_argument('--restarts', type=int, help="number of restarts")
    parser.add_argument(
        '--strategy', choices=[s.value for s in Strategy], help="search strategy"
    )
    parser.add_argument('--workers', type=int, help="parallel worker processes")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for all sub-commands."""
    parser = argparse.ArgumentParser(
        prog='monodromy-lab',
        description=f"{APP_NAME}: Hurwitz moves on Dehn twist tuples and related checks",
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {APP_VERSION}")
    parser.add_argument('-v', '--verbose', action='store_true', help="log progress to stderr")
    parser.add_argument('-d', '--debug', action='store_true', help="log debug output to stderr")
    commands = parser.add_subparsers(dest='command', required=True)

    verify = commands.add_parser('verify', help="run a checker on the shipped data")
    verify.add_argument('subject', choices=VERIFY_SUBJECTS)
    verify.add_argument('--case', type=int, help="lemma case 1|2|3 or example 1|2")
    verify.add_argument('--name', choices=RELATION_KEYS, help="relation name")
    verify.add_argument('--max-n', type=int, default=DEFAULT_MAX_POWER, help="largest N to scan")
    verify.add_argument('--out', help="write the witness matrix here")
    _add_search_flags(verify)

    apply = commands.add_parser('apply', help="apply a moves file to a tuple file")
    apply.add_argument('--tuple', required=True, help="tuple file or shipped name")
    apply.add_argument('--moves', required=True, help="moves file or shipped name")
    apply.add_argument('--level', choices=[lv.value for lv in Level], default=Level.FLAT.value)
    apply.add_argument('--out', help="output path; standard output when omitted")

    matrix = commands.add_parser('matrix', help="intersection matrix of a tuple file")
    matrix.add_argument('--tuple', required=True, help="tuple file or shipped name")
    matrix.add_argument('--out', help="output path; standard output when omitted")

    search = commands.add_parser('search', help="search for a pairwise-intersecting sequence")
    search.add_argument('--tuple', required=True, help="tuple file or shipped name")
    search.add_argument('--fixed-tail', type=int, default=0, help="trailing positions kept in place")
    search.add_argument('--out', help="write the found moves here")
    _add_search_flags(search)

    bounds = commands.add_parser('bounds', help="evaluate a closed-form bound")
    bounds.add_argument('name', choices=BoundRegistry.list_bounds())
    bounds.add_argument('--h', type=int, help="genus")
    bounds.add_argument('--mu', type=int, help="multi-twist power")
    bounds.add_argument('--mu2', type=int, help="second multi-twist power")
    bounds.add_argument('--k1', type=float, help="length/distance comparison constant")
    bounds.add_argument('--eps1', type=float, help="systole bound or horocycle length")
    bounds.add_argument('--eps2', type=float, help="second horocycle length")
    bounds.add_argument('--d', type=float, help="Teichmuller distance")
    bounds.add_argument('--l', type=float, help="geodesic length")
    bounds.add_argument('--sys', type=float, help="systole at the cusp-region boundary")

    hplane = commands.add_parser('hplane', help="half-plane Monte-Carlo checks")
    hplane.add_argument('check', choices=('check-lemma',))
    hplane.add_argument('--samples', type=int, help="number of samples")
    hplane.add_argument('--seed', type=int, help="unsigned 64-bit seed")

    config = commands.add_parser('config', help="show or change stored defaults")
    config.add_argument('action', choices=('show', 'set'))
    config.add_argument('key', nargs='?', help="e.g. search.seed or hplane.samples")
    config.add_argument('value', nargs='?', help="new value")

    return parser


# =============================================================================
# COMMANDS
# =============================================================================

def _search_overrides(args: argparse.Namespace) -> dict[str, object]:
    return {
        'seed': args.seed,
        'max_moves': args.max_moves,
        'time_limit_seconds': args.time_limit,
        'restarts': args.restarts,
        'strategy': args.strategy,
        'workers': args.workers,
    }


def _emit(report: VerificationReport) -> int:
    """Print a report and return its exit code."""
    if report.detail:
        print(report.detail)
    print(report.result_line())
    return EXIT_OK if report.passed else EXIT_FAIL


def _require(value: Optional[int], choices: Sequence[int], flag: str) -> int:
    if value not in choices:
        raise MonodromyLabError(
            f"{flag} must be one of {', '.join(str(c) for c in choices)}, got {value}"
        )
    return value


def cmd_verify(args: argparse.Namespace) -> int:
    subject = args.subject
    if subject == 'lemma':
        report = verify_lemma_case(_require(args.case, LEMMA_CASES, '--case'))
    elif subject == 'relation':
        if args.name is None:
            raise MonodromyLabError("--name is required for verify relation")
        report = check_relation(args.name)
    elif subject == 'example':
        case = _require(args.case, (1, 2), '--case')
        report = example1_check() if case == 1 else example2_check()
    elif subject == 'twisted':
        report = twisted_concatenation_check(args.max_n, search_config(**_search_overrides(args)))
    elif subject == 'triangle':
        report = triangle_words_check()
    else:
        mismatches = verify_checksums()
        detail = "\n".join(f"checksum mismatch: {name}" for name in mismatches)
        report = VerificationReport(
            'checksums', not mismatches, mismatches or None,
            detail or "all shipped resources match their recorded checksums",
        )

    if args.out and isinstance(report.witness, IntersectionMatrix):
        write_text(args.out, format_matrix(report.witness))
    return _emit(report)


def cmd_apply(args: argparse.Namespace) -> int:
    t = read_tuple(args.tuple)
    q = read_moves(args.moves)
    level = Level(args.level)
    if level is Level.SHARP:
        content = format_tuple(apply_sequence(t, q, level))
    else:
        content = format_matrix(apply_sequence(matrix_of_tuple(t), q, level))

    if args.out:
        write_text(args.out, content)
        print(f"applied {len(q)} moves at the {level.value} level to a tuple of length {len(t)}")
    else:
        print(content, end='')
    return EXIT_OK


def cmd_matrix(args: argparse.Namespace) -> int:
    content = format_matrix(matrix_of_tuple(read_tuple(args.tuple)))
    if args.out:
        write_text(args.out, content)
    else:
        print(content, end='')
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    t = read_tuple(args.tuple)
    cfg = search_config(**_search_overrides(args))
    searcher = HurwitzSearcher(cfg)
    searcher.set_progress_callback(
        lambda message, percent: logger.debug("%s (%d%%)", message, percent)
    )
    # Ctrl-C ends the search; the outcome so far is still printed
    previous = signal.signal(signal.SIGINT, lambda signum, frame: searcher.cancel())
    try:
        outcome = searcher.search(t, fixed_tail=args.fixed_tail)
    finally:
        signal.signal(signal.SIGINT, previous)

    print(f"strategy: {cfg.strategy.value}, seed: {cfg.seed}")
    print(f"restarts used: {outcome.restarts_used}")
    print(f"candidates explored: {outcome.explored}")
    if outcome.detail:
        print(outcome.detail)
    if outcome.found and outcome.sequence is not None:
        print(f"sequence of {len(outcome.sequence)} moves:")
        if args.out:
            write_text(args.out, format_moves(outcome.sequence))
        else:
            print(format_moves(outcome.sequence), end='')
    print(VerificationReport('search', outcome.found).result_line())
    return EXIT_OK if outcome.found else EXIT_FAIL


def cmd_bounds(args: argparse.Namespace) -> int:
    inputs = BoundInputs(
        h=args.h,
        mu=args.mu,
        mu2=args.mu2,
        epsilon=args.eps1,
        eps2=args.eps2,
        K1=args.k1,
        d=args.d,
        l=args.l,
        sys_max=args.sys,
    )
    for label, value in BoundRegistry.evaluate(args.name, inputs):
        print(f"{label}={format_value(value)}")
    return EXIT_OK


def cmd_hplane(args: argparse.Namespace) -> int:
    samples, seed = ConfigManager().hplane_defaults()
    if args.samples is not None:
        samples = args.samples
    if args.seed is not None:
        seed = args.seed
    report = mc_check_separation_lemma(
        samples, seed,
        progress=lambda message, percent: logger.debug("%s (%d%%)", message, percent),
    )
    return _emit(report)


def cmd_config(args: argparse.Namespace) -> int:
    manager = ConfigManager()
    if args.action == 'show':
        for key in (*SEARCH_KEYS, *HPLANE_KEYS):
            value = manager.get(key)
            if value is not None:
                print(f"{key}={json.dumps(value)}")
        return EXIT_OK

    if args.key is None or args.value is None:
        raise MonodromyLabError("config set needs a key and a value")
    value = parse_setting(args.key, args.value)
    manager.set(args.key, value)
    print(f"{args.key}={json.dumps(value)}")
    return EXIT_OK


COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    'verify': cmd_verify,
    'apply': cmd_apply,
    'matrix': cmd_matrix,
    'search': cmd_search,
    'bounds': cmd_bounds,
    'hplane': cmd_hplane,
    'config': cmd_config,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments and dispatch to a sub-command.

    Args:
        argv: Arguments without the program name; sys.argv[1:] when None.

    Returns:
        Exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # --help and --version exit 0, usage errors exit 2
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        return COMMANDS[args.command](args)
    except (MonodromyLabError, ValueError, OSError) as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except Exception as e:
        logger.exception("Fatal error: %s", e)
        return EXIT_USAGE
