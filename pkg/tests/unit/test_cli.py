"""Unit tests for foliamod.cli and the command implementations."""

import json
from pathlib import Path

import pytest

from foliamod.cli import build_parser, main
from foliamod.commands.darboux import parse_complex_pair, parse_k_grid
from foliamod.core.errors import ParseError
from foliamod.foliation.field import VectorField
from foliamod.io.fieldfile import load_field_text, write_field_file


def _run(argv: list[str], capsys: pytest.CaptureFixture[str]) -> tuple[int, str]:
    code = main(argv)
    return code, capsys.readouterr().out


class TestParser:
    def test_json_and_csv_exclusive(self) -> None:
        with pytest.raises(SystemExit):
            build_parser().parse_args(["singular", "--json", "--csv"])

    def test_defaults(self) -> None:
        args = build_parser().parse_args(["fiber", "--random"])
        assert (args.seed, args.degree, args.count, args.restarts) == (0, 2, 1, 8)
        assert not args.cold

    def test_command_required(self) -> None:
        with pytest.raises(SystemExit):
            build_parser().parse_args([])


class TestArgumentParsing:
    def test_complex_pair(self) -> None:
        assert parse_complex_pair("2,0.5") == 2 + 0.5j
        assert parse_complex_pair("3") == 3

    def test_complex_pair_invalid(self) -> None:
        with pytest.raises(ParseError):
            parse_complex_pair("1,2,3")

    def test_linear_grid(self) -> None:
        assert parse_k_grid("lin:1:2:3") == [1, 1.5, 2]

    def test_literal_grid(self) -> None:
        assert parse_k_grid("0.3; 1.1+0.2j") == [0.3, 1.1 + 0.2j]

    def test_bad_grid(self) -> None:
        with pytest.raises(ParseError):
            parse_k_grid("lin:1:2")


class TestCommands:
    def test_indices(self, separable_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        code, out = _run(["indices", "--input", str(separable_file)], capsys)
        data = json.loads(out)
        assert code == 0
        assert data["command"] == "indices"
        assert data["results"]["max_baum_bott_residual"] < 1e-10
        assert data["results"]["max_camacho_sad_residual"] < 1e-10
        assert data["errors"] == []

    def test_singular_csv(self, separable_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        code, out = _run(["singular", "--input", str(separable_file), "--csv"], capsys)
        lines = out.strip().splitlines()
        assert code == 0
        assert len(lines) == 8
        assert "nu_re" in lines[0].split(",")

    def test_digest_stable(self, separable_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        _, first = _run(["indices", "--input", str(separable_file)], capsys)
        _, second = _run(["indices", "--input", str(separable_file)], capsys)
        assert json.loads(first)["input_digest"] == json.loads(second)["input_digest"]

    def test_verify(self, separable_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
        code, out = _run(["verify", "--input", str(separable_file)], capsys)
        assert code == 0
        assert json.loads(out)["errors"] == []

    def test_rank_reports_sigmas(
        self, separable_file: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        code, out = _run(["rank", "--input", str(separable_file)], capsys)
        row = json.loads(out)["results"]["rows"][0]
        assert code == 0
        assert {"rank", "sigma1", "sigma6", "radial_residual"} <= set(row)

    def test_random_batch(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out = _run(["indices", "--random", "--count", "3", "--seed", "1"], capsys)
        data = json.loads(out)
        assert code == 0
        assert data["results"]["samples"] == 3
        assert len(data["results"]["rows"]) == 3

    def test_dimension(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out = _run(["dimension", "--degree", "3"], capsys)
        row = json.loads(out)["results"]["rows"][0]
        assert code == 0
        assert (row["dim_source"], row["dim_target_bound"], row["gap"]) == (13, 11, 2)

    def test_random_writes_field_file(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out = _run(["random", "--seed", "3"], capsys)
        spec = load_field_text(out)
        assert code == 0
        assert spec.seed == 3 and spec.degree == 2

    def test_darboux_scan(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out = _run(["darboux", "--alpha", "2,0", "--k-grid", "0.3;0.7"], capsys)
        results = json.loads(out)["results"]
        assert code == 0
        assert results["blow_down"] is True
        assert len(results["rows"]) == 2


class TestFailures:
    def test_missing_input(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out = _run(["singular"], capsys)
        assert code == 2
        assert json.loads(out)["errors"][0]["code"] == "InputRejected"

    def test_malformed_file(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        path = tmp_path / "bad.json"
        path.write_text("{", encoding="utf-8")
        code, out = _run(["singular", "--input", str(path)], capsys)
        assert code == 2
        assert json.loads(out)["errors"][0]["code"] == "ParseError"

    def test_unreadable_file(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        code, out = _run(["singular", "--input", str(tmp_path / "missing.json")], capsys)
        assert code == 2
        error = json.loads(out)["errors"][0]
        assert error["code"] == "InputUnreadable"
        assert "missing.json" in error["message"]

    def test_dicritical_rejected(
        self, tmp_path: Path, dicritical: VectorField, capsys: pytest.CaptureFixture[str]
    ) -> None:
        path = tmp_path / "radial.json"
        write_field_file(dicritical, path)
        code, out = _run(["indices", "--input", str(path)], capsys)
        data = json.loads(out)
        assert code == 2
        assert data["errors"][0]["code"] == "DicriticalAtInfinity"
        assert data["results"]["rejected"] == 1
