# -*- coding: utf-8 -*-
"""
Tests for constants module.
"""

from __future__ import annotations

from importlib import resources

from monodromy_lab.constants import (
    APP_AUTHOR,
    APP_NAME,
    APP_VERSION,
    CANDIDATE_CAP,
    CHECKSUM_FILE,
    CONFIG_DIR,
    DATA_PACKAGE,
    EXAMPLE_WORD_FILES,
    LEMMA_MOVE_COUNTS,
    LEMMA_MOVE_FILES,
    LEMMA_TUPLE_FILES,
    POWER_RANGE,
    RESOURCE_FILES,
    STANDARD_TUPLE_FILES,
    TRANSLATION_RANGE,
)


class TestAppConstants:
    """Tests for application metadata constants."""

    def test_app_name_is_string(self) -> None:
        """App name should be a non-empty string."""
        assert isinstance(APP_NAME, str)
        assert len(APP_NAME) > 0

    def test_app_version_format(self) -> None:
        """App version should follow semantic versioning."""
        parts = APP_VERSION.split(".")
        assert len(parts) >= 2
        for part in parts:
            assert part.isdigit()

    def test_app_author_is_string(self) -> None:
        """App author should be a non-empty string."""
        assert isinstance(APP_AUTHOR, str)
        assert len(APP_AUTHOR) > 0

    def test_config_dir_in_home(self) -> None:
        """Config directory should be a hidden folder."""
        assert CONFIG_DIR.name.startswith(".")


class TestResourceConstants:
    """Tests for the shipped resource tables."""

    def test_every_table_entry_is_shipped(self) -> None:
        """All referenced files should be listed as resources."""
        referenced = (
            list(STANDARD_TUPLE_FILES.values())
            + list(LEMMA_TUPLE_FILES.values())
            + list(LEMMA_MOVE_FILES.values())
            + list(EXAMPLE_WORD_FILES.values())
        )
        assert sorted(referenced) == sorted(RESOURCE_FILES)

    def test_resources_exist_in_package(self) -> None:
        """Every resource and the checksum file should be installed."""
        data = resources.files(DATA_PACKAGE)
        for name in RESOURCE_FILES + (CHECKSUM_FILE,):
            assert data.joinpath(name).is_file(), name

    def test_lemma_tables_cover_same_cases(self) -> None:
        """Tuple, move and count tables should share keys 1..3."""
        assert set(LEMMA_TUPLE_FILES) == set(LEMMA_MOVE_FILES) == set(LEMMA_MOVE_COUNTS) == {1, 2, 3}


class TestSamplingConstants:
    """Tests for search and Monte-Carlo ranges."""

    def test_translation_range(self) -> None:
        """Translation lengths should be drawn from [0.1, 3]."""
        assert TRANSLATION_RANGE == (0.1, 3.0)

    def test_power_range_starts_at_three(self) -> None:
        """Powers k should include the boundary case 3."""
        assert POWER_RANGE == (3, 6)

    def test_candidate_cap_positive(self) -> None:
        """Candidate cap should be positive."""
        assert CANDIDATE_CAP > 0
