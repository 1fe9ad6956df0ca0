# -*- coding: utf-8 -*-
"""
Pytest configuration and fixtures for Monodromy Lab tests.
"""

from __future__ import annotations

import sys
import tempfile
from pathlib import Path
from typing import Generator

import pytest

# Add src to path for imports - ensure our src package takes precedence
src_path = str(Path(__file__).parent.parent / "src")
if src_path not in sys.path:
    sys.path.insert(0, src_path)


@pytest.fixture
def temp_dir() -> Generator[Path, None, None]:
    """
    Create a temporary directory for tests.

    Yields:
        Path to temporary directory.
    """
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def mock_config_dir(temp_dir: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """
    Create a mock configuration directory and a fresh ConfigManager.

    Args:
        temp_dir: Temporary directory fixture.
        monkeypatch: Pytest monkeypatch fixture.

    Returns:
        Path to mock config directory.
    """
    config_dir = temp_dir / ".monodromy_lab"
    config_dir.mkdir()

    # Monkeypatch the config paths
    from monodromy_lab import constants
    from monodromy_lab.config import ConfigManager
    monkeypatch.setattr(constants, 'CONFIG_DIR', config_dir)
    monkeypatch.setattr(constants, 'CONFIG_FILE', config_dir / "config.json")
    monkeypatch.setattr(ConfigManager, '_instance', None)

    return config_dir


@pytest.fixture
def genus2_chain() -> list:
    """
    Chain classes c1..c5 of genus 2.

    Returns:
        List of five HomologyClass objects.
    """
    from monodromy_lab.symplectic import chain_classes
    return chain_classes(2)


@pytest.fixture
def tuple_file(temp_dir: Path) -> Path:
    """
    Write a small genus-2 tuple file mixing chain and explicit entries.

    Returns:
        Path to the tuple file.
    """
    path = temp_dir / "small.tup"
    path.write_text(
        "# three entries\n"
        "genus 2\n"
        "gen 1\n"
        "gen 2\n"
        "class 1,1,0,-1  # a1 + b1 - b2\n",
        encoding='utf-8'
    )
    return path
