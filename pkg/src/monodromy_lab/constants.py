# -*- coding: utf-8 -*-
"""
Constants and configuration values for Monodromy Lab.

This module contains all application-wide constants including:
- Application metadata
- Configuration paths
- Shipped resource names
- Search and Monte-Carlo defaults
- Numeric tolerances
"""

from __future__ import annotations

from pathlib import Path


# Application metadata
APP_NAME: str = "Monodromy Lab"
APP_VERSION: str = "1.0.0"
APP_AUTHOR: str = "Monodromy Lab developers"

# Configuration paths
CONFIG_DIR: Path = Path.home() / ".monodromy_lab"
CONFIG_FILE: Path = CONFIG_DIR / "config.json"

# Shipped resources (package data under monodromy_lab/data)
DATA_PACKAGE: str = "monodromy_lab.data"
CHECKSUM_FILE: str = "CHECKSUMS.sha256"

STANDARD_TUPLE_FILES: dict[str, str] = {
    'A1': 'a1.tup',
    'A2': 'a2.tup',
    'A3': 'a3.tup',
}

# A_i concatenated with (gamma_1), the inputs of the nonzero-intersection lemma
LEMMA_TUPLE_FILES: dict[int, str] = {
    1: 'a1g1.tup',
    2: 'a2g1.tup',
    3: 'a3g1.tup',
}

LEMMA_MOVE_FILES: dict[int, str] = {
    1: 'q1.mov',
    2: 'q2.mov',
    3: 'q3.mov',
}

# Transcription sizes of the shipped move listings
LEMMA_MOVE_COUNTS: dict[int, int] = {1: 83, 2: 53, 3: 129}

EXAMPLE_WORD_FILES: dict[int, str] = {
    1: 'example1.words',
    2: 'example2.words',
}

RESOURCE_FILES: tuple[str, ...] = (
    'a1.tup', 'a2.tup', 'a3.tup',
    'a1g1.tup', 'a2g1.tup', 'a3g1.tup',
    'q1.mov', 'q2.mov', 'q3.mov',
    'example1.words', 'example2.words',
)

# Default genus of word and tuple files without a `genus` directive
DEFAULT_GENUS: int = 2

# Search defaults (overridable through the config file and CLI flags)
DEFAULT_SEED: int = 42
DEFAULT_MAX_MOVES: int = 200
DEFAULT_RESTARTS: int = 50
DEFAULT_TIME_LIMIT: float = 60.0
DEFAULT_WORKERS: int = 1
CANDIDATE_CAP: int = 16
STAGNATION_WINDOW: int = 30
MAX_SEED: int = 2**64 - 1

# Twisted-concatenation scan
DEFAULT_MAX_POWER: int = 100

# Half-plane Monte-Carlo
DEFAULT_MC_SAMPLES: int = 10_000
DEFAULT_MC_SEED: int = 1
MC_BATCH_SIZE: int = 1_000
MAX_REJECTIONS: int = 64
TRANSLATION_RANGE: tuple[float, float] = (0.1, 3.0)
POWER_RANGE: tuple[int, int] = (3, 6)

# Numeric tolerances
DISTANCE_SLACK: float = 1e-9
ON_GEODESIC_TOL: float = 1e-12
SEPARATION_MARGIN: float = 1e-9

# Bounds output
BOUNDS_SIGNIFICANT_DIGITS: int = 12

# Move files are written with this many tokens per line
MOVES_PER_LINE: int = 20
