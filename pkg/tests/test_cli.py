"""Test suite for the command-line interface."""

import csv
import io
import json
from pathlib import Path

import pytest

from supercode_mlsd.cli import build_parser, exit_code_for, run
from supercode_mlsd.commands.simulate import sim_config_from_args
from supercode_mlsd.constants import SIM_ROW_FIELDS
from supercode_mlsd.exceptions import DecodingError, InvalidCodeError


class TestRun:
    """Test suite for running commands end to end."""

    def test_decode(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Test decoding an all +1 vector under RM(1,3)."""
        received = tmp_path / "r.txt"
        received.write_text("1.0\n" * 8)
        assert run(["decode", "--rm", "1,2,3", "--received", str(received)]) == 0
        result = json.loads(capsys.readouterr().out)
        assert result["codeword"] == "00000000"
        assert result["metric"] == 0.0

    def test_decode_to_file(self, tmp_path: Path, hamming_file: Path) -> None:
        """Test writing the decode report to a file."""
        received = tmp_path / "r.txt"
        received.write_text("-0.9\n1.1\n0.2\n0.8\n-1.2\n-0.7\n1.0\n")
        out = tmp_path / "out" / "report.json"
        argv = ["decode", "--parity-check", str(hamming_file), "--prefix", "1", "--received", str(received)]
        assert run([*argv, "--out", str(out)]) == 0
        assert json.loads(out.read_text())["codeword"] == "1000110"

    def test_wrong_length_is_usage_error(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Test that a received vector of the wrong length exits with 2."""
        received = tmp_path / "r.txt"
        received.write_text("1.0\n" * 7)
        assert run(["decode", "--rm", "1,2,3", "--received", str(received)]) == 2
        assert "error:" in capsys.readouterr().err

    def test_missing_file_is_usage_error(self, tmp_path: Path) -> None:
        """Test that a missing received file exits with 2."""
        assert run(["decode", "--rm", "1,2,3", "--received", str(tmp_path / "none.txt")]) == 2

    def test_invalid_orders_are_usage_error(self, tmp_path: Path) -> None:
        """Test that an impossible Reed-Muller pair exits with 2."""
        received = tmp_path / "r.txt"
        received.write_text("1.0\n" * 8)
        assert run(["decode", "--rm", "2,1,3", "--received", str(received)]) == 2

    def test_simulate_csv(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test a small noiseless sweep written as CSV."""
        code = run(["simulate", "--rm", "1,2,4", "--snr-db", "1,2", "--trials", "10", "--sigma", "0"])
        assert code == 0
        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert tuple(rows[0]) == SIM_ROW_FIELDS
        assert len(rows) == 3
        assert rows[1][SIM_ROW_FIELDS.index("bit_errors")] == "0"

    def test_simulate_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test a sweep written as JSON."""
        code = run(["simulate", "--rm", "1,2,4", "--snr-db", "3", "--trials", "5", "--format", "json"])
        assert code == 0
        rows = json.loads(capsys.readouterr().out)
        assert len(rows) == 1
        assert rows[0]["trials"] == 5

    def test_simulate_without_code(self) -> None:
        """Test that a sweep needs a code."""
        assert run(["simulate", "--snr-db", "3"]) == 2

    def test_trellis_stats(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the statistics output."""
        assert run(["trellis-stats", "--rm", "1,2,4"]) == 0
        stats = json.loads(capsys.readouterr().out)
        assert stats["n"] == 16
        assert len(stats["levels"]) == 17

    def test_trellis_dump(self, hamming_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the supertrellis branch dump."""
        assert run(["trellis-stats", "--parity-check", str(hamming_file), "--prefix", "1", "--dump", "super"]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "0 0 0 0"

    def test_selftest(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the self-test command."""
        assert run(["selftest", "--pairs", "3", "--max-n", "8"]) == 0
        assert json.loads(capsys.readouterr().out)["passed"] is True

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["frobnicate"],
            ["decode", "--rm", "1,2", "--received", "r.txt"],
            ["simulate", "--rm", "1,2,4", "--snr-db", "x"],
            ["decode", "--rm", "1,2,3", "--parity-check", "h.txt", "--received", "r.txt"],
            ["selftest", "--max-n", "3"],
            ["selftest", "--pairs", "0"],
        ],
    )
    def test_usage_errors(self, argv: list[str]) -> None:
        """Test that argument errors exit with 2."""
        assert run(argv) == 2

    def test_help(self) -> None:
        """Test that --help exits with 0."""
        assert run(["--help"]) == 0


class TestArguments:
    """Test suite for argument handling."""

    def test_preset_supplies_defaults(self) -> None:
        """Test that the table1 preset fills code, SNRs and trials."""
        args = build_parser().parse_args(["simulate", "--preset", "table1"])
        cfg = sim_config_from_args(args)
        assert cfg.code.rm == (2, 4, 6)
        assert cfg.snr_b_db_list == [3.0, 3.5, 4.0, 4.5, 5.0]
        assert cfg.trials_per_point == 1000

    def test_explicit_flags_override_preset(self) -> None:
        """Test that explicit flags win over the preset."""
        args = build_parser().parse_args(["simulate", "--preset", "table1", "--trials", "10", "--snr-db", "4"])
        cfg = sim_config_from_args(args)
        assert cfg.trials_per_point == 10
        assert cfg.snr_b_db_list == [4.0]

    def test_missing_snr(self) -> None:
        """Test that a sweep needs SNR points."""
        args = build_parser().parse_args(["simulate", "--rm", "1,2,4"])
        with pytest.raises(InvalidCodeError):
            sim_config_from_args(args)


class TestExitCodes:
    """Test suite for exception to exit code mapping."""

    def test_input_error(self) -> None:
        """Test that input errors map to 2."""
        assert exit_code_for(InvalidCodeError("bad")) == 2

    def test_internal_error(self) -> None:
        """Test that decoder failures map to 1."""
        assert exit_code_for(DecodingError("bad")) == 1

    def test_unexpected_error(self) -> None:
        """Test that unexpected exceptions map to 1."""
        assert exit_code_for(RuntimeError("boom")) == 1
