#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Monodromy Lab - Entry Point.

This module provides the main entry point for the command line.
It sets up logging and dispatches to the sub-commands.
"""

from __future__ import annotations

import logging
import sys
from typing import Optional, Sequence


def setup_logging(debug: bool = False, verbose: bool = False) -> None:
    """
    Configure application logging.

    Records go to stderr; standard output is reserved for results.

    Args:
        debug: If True, set log level to DEBUG.
        verbose: If True, set log level to INFO.
    """
    log_format = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    if debug:
        log_level = logging.DEBUG
    elif verbose:
        log_level = logging.INFO
    else:
        log_level = logging.WARNING

    logging.basicConfig(
        level=log_level,
        format=log_format,
        handlers=[logging.StreamHandler(sys.stderr)]
    )


def check_dependencies() -> bool:
    """Check if required dependencies are installed."""
    logger = logging.getLogger(__name__)

    try:
        import numpy  # noqa: F401
    except ImportError:
        logger.error("NumPy not found. Install with: pip install numpy")
        return False

    return True


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main entry point.

    Returns:
        Exit code (0 success, 1 failed check, 2 usage or I/O error).
    """
    args = list(sys.argv[1:] if argv is None else argv)
    debug = "--debug" in args or "-d" in args
    verbose = "--verbose" in args or "-v" in args

    setup_logging(debug=debug, verbose=verbose)
    logger = logging.getLogger(__name__)

    if not check_dependencies():
        logger.error("Cannot start: missing required dependencies")
        return 2

    from .cli import run

    return run(args)


if __name__ == "__main__":
    sys.exit(main())
