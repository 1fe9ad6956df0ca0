# -*- coding: utf-8 -*-
"""
Tests for the command-line interface.
"""

from __future__ import annotations

import os
import signal
import subprocess
import sys
from pathlib import Path

import pytest

from monodromy_lab.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, build_parser, run
from monodromy_lab.formats import parse_matrix, read_moves
from monodromy_lab.main import main
from monodromy_lab.search import HurwitzSearcher

SRC_DIR = Path(__file__).parent.parent / "src"


@pytest.fixture(autouse=True)
def isolated_config(mock_config_dir: Path) -> Path:
    """Keep the user's config file out of CLI runs."""
    return mock_config_dir


def _lines(capsys: pytest.CaptureFixture) -> list[str]:
    return capsys.readouterr().out.splitlines()


class TestParser:
    """Tests for argument parsing."""

    def test_subcommands(self) -> None:
        """Every sub-command parses."""
        parser = build_parser()
        assert parser.parse_args(['verify', 'lemma', '--case', '2']).command == 'verify'
        assert parser.parse_args(['bounds', 'bers', '--h', '3']).h == 3
        assert parser.parse_args(['hplane', 'check-lemma']).samples is None

    def test_unknown_flag(self) -> None:
        """Unknown flags are usage errors."""
        assert run(['verify', 'lemma', '--bogus']) == EXIT_USAGE

    def test_missing_command(self) -> None:
        """A sub-command is required."""
        assert run([]) == EXIT_USAGE

    def test_version(self, capsys: pytest.CaptureFixture) -> None:
        """--version exits cleanly."""
        assert run(['--version']) == EXIT_OK
        assert "monodromy-lab" in capsys.readouterr().out


class TestVerify:
    """Tests for the verify sub-command."""

    def test_lemma_pass(self, capsys: pytest.CaptureFixture) -> None:
        """Case 2 passes and ends with its RESULT line."""
        assert run(['verify', 'lemma', '--case', '2']) == EXIT_OK
        assert _lines(capsys)[-1] == "RESULT lemma-2 PASS"

    def test_lemma_case_one(self, capsys: pytest.CaptureFixture) -> None:
        """Case 1 certifies every pair."""
        assert run(['verify', 'lemma', '--case', '1']) == EXIT_OK
        lines = _lines(capsys)
        assert lines[-1] == "RESULT lemma-1 PASS"
        assert "420 of 420 off-diagonal entries nonzero" in lines

    def test_failed_check_exits_one(self, temp_dir: Path, capsys: pytest.CaptureFixture) -> None:
        """A search that cannot succeed exits 1."""
        path = temp_dir / "zero.tup"
        path.write_text("genus 2\ngen 1\nclass 0,0,0,0\ngen 2\n", encoding='utf-8')
        assert run(['search', '--tuple', str(path)]) == EXIT_FAIL
        assert _lines(capsys)[-1] == "RESULT search FAIL"

    def test_bad_case(self) -> None:
        """Unknown lemma cases are usage errors."""
        assert run(['verify', 'lemma', '--case', '9']) == EXIT_USAGE

    def test_relation_requires_name(self) -> None:
        """verify relation needs --name."""
        assert run(['verify', 'relation']) == EXIT_USAGE

    def test_relation(self, capsys: pytest.CaptureFixture) -> None:
        """A named relation passes."""
        assert run(['verify', 'relation', '--name', 'chain4-pow5']) == EXIT_OK
        assert _lines(capsys)[-1].endswith("PASS")

    def test_witness_out(self, temp_dir: Path, capsys: pytest.CaptureFixture) -> None:
        """--out writes the final intersection matrix."""
        out = temp_dir / "witness.mat"
        assert run(['verify', 'lemma', '--case', '2', '--out', str(out)]) == EXIT_OK
        matrix = parse_matrix(out.read_text(encoding='utf-8'))
        assert matrix.size == 21

    def test_checksums(self, capsys: pytest.CaptureFixture) -> None:
        """Shipped data matches its checksums."""
        assert run(['verify', 'checksums']) == EXIT_OK
        assert _lines(capsys)[-1] == "RESULT checksums PASS"


class TestDataCommands:
    """Tests for apply and matrix."""

    def test_apply_to_file(self, temp_dir: Path, capsys: pytest.CaptureFixture) -> None:
        """apply --out writes the matrix and prints a summary."""
        out = temp_dir / "after.mat"
        code = run(['apply', '--tuple', 'a1g1.tup', '--moves', 'q1.mov', '--out', str(out)])
        assert code == EXIT_OK
        moves = len(read_moves('q1.mov'))
        assert _lines(capsys) == [
            f"applied {moves} moves at the flat level to a tuple of length 21"
        ]
        assert parse_matrix(out.read_text(encoding="utf-8")).size == 21

    def test_apply_sharp(self, tuple_file: Path, temp_dir: Path, capsys: pytest.CaptureFixture) -> None:
        """The sharp level prints a tuple file."""
        moves = temp_dir / "one.mov"
        moves.write_text("L1\n", encoding='utf-8')
        assert run(['apply', '--tuple', str(tuple_file), '--moves', str(moves), '--level', 'sharp']) == EXIT_OK
        lines = _lines(capsys)
        assert lines[0] == "genus 2"
        assert len(lines) == 4

    def test_apply_out_of_range(self, tuple_file: Path, temp_dir: Path) -> None:
        """Moves past the tuple length are data errors."""
        moves = temp_dir / "far.mov"
        moves.write_text("R7\n", encoding='utf-8')
        assert run(['apply', '--tuple', str(tuple_file), '--moves', str(moves)]) == EXIT_USAGE

    def test_missing_file(self, temp_dir: Path) -> None:
        """Missing files exit 2."""
        assert run(['matrix', '--tuple', str(temp_dir / "nope.tup")]) == EXIT_USAGE

    def test_matrix(self, tuple_file: Path, capsys: pytest.CaptureFixture) -> None:
        """matrix prints the antisymmetric pairing matrix."""
        assert run(['matrix', '--tuple', str(tuple_file)]) == EXIT_OK
        rows = [[int(v) for v in line.split(',')] for line in _lines(capsys)]
        assert len(rows) == 3
        for i in range(3):
            assert rows[i][i] == 0
            for j in range(3):
                assert rows[i][j] == -rows[j][i]
        assert rows[0][1] == 1


class TestBoundsCommand:
    """Tests for the bounds sub-command."""

    def test_lmax(self, capsys: pytest.CaptureFixture) -> None:
        """lmax prints one labelled value."""
        assert run(['bounds', 'lmax', '--h', '2', '--mu', '1']) == EXIT_OK
        (line,) = _lines(capsys)
        label, value = line.split('=')
        assert label == 'lmax'
        assert float(value) == pytest.approx(63 * (1 + 8886110.520507872), rel=1e-9)

    def test_cusp_bracket(self, capsys: pytest.CaptureFixture) -> None:
        """Two-valued bounds print two lines."""
        assert run(['bounds', 'cusp-bracket', '--eps1', '2', '--eps2', '2']) == EXIT_OK
        assert _lines(capsys) == ["lower=0", "upper=4"]

    def test_missing_parameter(self) -> None:
        """Missing inputs exit 2."""
        assert run(['bounds', 'penner']) == EXIT_USAGE

    def test_domain_error(self) -> None:
        """Out-of-domain inputs exit 2."""
        assert run(['bounds', 'penner', '--h', '1']) == EXIT_USAGE


class TestSearchCommand:
    """Tests for the search and hplane sub-commands."""

    def test_search_small_tuple(self, temp_dir: Path, capsys: pytest.CaptureFixture) -> None:
        """A small tuple with one zero pair is repaired."""
        path = temp_dir / "pair.tup"
        path.write_text("genus 2\ngen 1\ngen 1\ngen 2\n", encoding='utf-8')
        assert run(['search', '--tuple', str(path), '--seed', '7', '--time-limit', '30']) == EXIT_OK
        lines = _lines(capsys)
        assert lines[0] == "strategy: greedy-random, seed: 7"
        assert lines[-1] == "RESULT search PASS"

    def test_search_bad_strategy(self, tuple_file: Path) -> None:
        """Unknown strategies are usage errors."""
        assert run(['search', '--tuple', str(tuple_file), '--strategy', 'annealing']) == EXIT_USAGE

    def test_hplane(self, capsys: pytest.CaptureFixture) -> None:
        """A short Monte-Carlo run passes."""
        assert run(['hplane', 'check-lemma', '--samples', '100', '--seed', '3']) == EXIT_OK
        lines = _lines(capsys)
        assert lines[-1] == "RESULT hplane-separation PASS"
        assert lines[0].startswith("trials=")

    def test_hplane_zero_samples(self) -> None:
        """--samples 0 exits 2."""
        assert run(['hplane', 'check-lemma', '--samples', '0']) == EXIT_USAGE


class TestEntryPoint:
    """Tests for main() and python -m."""

    def test_main_flags(self, capsys: pytest.CaptureFixture) -> None:
        """main accepts the logging flags in front of a command."""
        assert main(['-v', 'bounds', 'bers', '--h', '2']) == EXIT_OK
        assert _lines(capsys) == ["bers_constant=21"]

    def test_module_output_is_reproducible(self, temp_dir: Path) -> None:
        """Two runs of python -m print identical bytes."""
        env = dict(os.environ)
        env['PYTHONPATH'] = str(SRC_DIR) + os.pathsep + env.get('PYTHONPATH', '')
        env['HOME'] = str(temp_dir)
        command = [sys.executable, '-m', 'monodromy_lab', 'verify', 'lemma', '--case', '3']
        first = subprocess.run(command, capture_output=True, env=env, check=False)
        second = subprocess.run(command, capture_output=True, env=env, check=False)
        assert first.returncode == 0
        assert first.stdout == second.stdout
        assert first.stdout.decode().splitlines()[-1] == "RESULT lemma-3 PASS"


class TestConfigCommand:
    """Tests for the config sub-command."""

    def test_set_and_show(self, mock_config_dir: Path, capsys: pytest.CaptureFixture) -> None:
        """Stored values are echoed, persisted and listed."""
        assert run(['config', 'set', 'search.seed', '9']) == EXIT_OK
        assert _lines(capsys) == ["search.seed=9"]
        assert (mock_config_dir / "config.json").exists()
        assert run(['config', 'show']) == EXIT_OK
        assert _lines(capsys) == ["search.seed=9"]

    def test_stored_samples_used(self, capsys: pytest.CaptureFixture) -> None:
        """hplane picks up a stored sample count."""
        assert run(['config', 'set', 'hplane.samples', '50']) == EXIT_OK
        capsys.readouterr()
        assert run(['hplane', 'check-lemma']) == EXIT_OK
        values = dict(line.split('=') for line in _lines(capsys)[:4])
        assert int(values['trials']) + int(values['skips']) == 50

    def test_stored_seed_used(self, temp_dir: Path, capsys: pytest.CaptureFixture) -> None:
        """search reports a stored seed."""
        path = temp_dir / "pair.tup"
        path.write_text("genus 2\ngen 1\ngen 1\ngen 2\n", encoding='utf-8')
        assert run(['config', 'set', 'search.seed', '5']) == EXIT_OK
        capsys.readouterr()
        assert run(['search', '--tuple', str(path)]) == EXIT_OK
        assert _lines(capsys)[0] == "strategy: greedy-random, seed: 5"

    @pytest.mark.parametrize("argv", [
        ['config', 'set', 'api.key', 'x'],
        ['config', 'set', 'search.restarts', '0'],
        ['config', 'set', 'search.seed'],
    ])
    def test_rejected(self, argv: list[str]) -> None:
        """Unknown keys, bad values and missing values exit 2."""
        assert run(argv) == EXIT_USAGE


class TestInterrupt:
    """Tests for Ctrl-C during a search."""

    def test_sigint_cancels_search(
        self, temp_dir: Path, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture
    ) -> None:
        """SIGINT ends the search with a cancelled outcome."""
        path = temp_dir / "triple.tup"
        path.write_text("genus 2\ngen 1\ngen 1\ngen 1\ngen 2\n", encoding='utf-8')
        monkeypatch.setattr(
            HurwitzSearcher, '_report_progress',
            lambda self, message, percent: signal.raise_signal(signal.SIGINT),
        )
        handler = signal.getsignal(signal.SIGINT)
        code = run(['search', '--tuple', str(path), '--max-moves', '1', '--restarts', '20'])
        assert code == EXIT_FAIL
        lines = _lines(capsys)
        assert "restarts used: 1" in lines
        assert "search cancelled" in lines
        assert signal.getsignal(signal.SIGINT) is handler
