# -*- coding: UTF-8 -*-
"""
Test the command line
=====================
@ Ext Ring - Tests

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The tests of the `ext` command: the sub-commands, the input documents, the
report formats, and the exit codes.
"""

import os
import json
import logging

from typing import Any

import pytest

from ext_ring.errors import InputError, StructureError
from ext_ring.linalg import PrimeField
from ext_ring.resolutions import GroupTable, AlgebraPresentation
from ext_ring.cli import RunConfig, main, parse_input

from .utils import write_document


__all__ = ("TestGroupCommand", "TestOtherCommands", "TestInput")


DUAL_NUMBERS = {
    "dim": 2,
    "constants": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1]],
    "unit": [1, 0],
    "labels": ["1", "x"],
}


def _read_report(path: Any) -> Any:
    with open(path, "r", encoding="utf-8") as fobj:
        return json.load(fobj)


class TestGroupCommand:
    """Test the `group` sub-command."""

    def test_named(self, tmp_path) -> None:
        """Test the full report of a named group."""
        log = logging.getLogger("ext_ring.test")
        out = os.path.join(str(tmp_path), "report.json")
        code = main(
            ["group", "--named", "cyclic:2", "--max-degree", "3", "--verify"]
            + ["--out", out]
        )
        assert code == 0
        report = _read_report(out)
        log.info("Get the report of {0}.".format(report["subject"]))
        assert report["command"] == "group"
        assert report["field"] == "GF(2)"
        assert "cyclic:2" in report["subject"]
        assert report["dims"] == [1, 1, 1, 1]
        assert report["passed"] is True
        assert report["checks"]
        assert "timing" not in report
        methods = set(item["method"] for item in report["products"])
        assert methods == {"yoneda", "cup", "composition", "star"}
        assert [item["labels"] for item in report["basis"]] == [
            ["h0_0"],
            ["h1_0"],
            ["h2_0"],
            ["h3_0"],
        ]

    def test_deterministic(self, tmp_path) -> None:
        """Test that two runs give the same bytes."""
        paths = [os.path.join(str(tmp_path), name) for name in ("a.json", "b.json")]
        for path in paths:
            code = main(
                ["group", "--named", "cyclic:3", "--field", "3", "--max-degree", "3"]
                + ["--products", "yoneda,cup", "--out", path]
            )
            assert code == 0
        with open(paths[0], "rb") as fobj:
            first = fobj.read()
        with open(paths[1], "rb") as fobj:
            second = fobj.read()
        assert first == second
        assert first.endswith(b"\n")

    def test_timing(self, tmp_path) -> None:
        """Test that the timing is only written on request."""
        out = os.path.join(str(tmp_path), "report.json")
        code = main(
            ["group", "--named", "cyclic:2", "--max-degree", "1", "--timing"]
            + ["--products", "cup", "--out", out]
        )
        assert code == 0
        timing = _read_report(out)["timing"]
        assert set(timing) == {"resolution", "cohomology", "products"}

    def test_formats(self, tmp_path, capsys: pytest.CaptureFixture) -> None:
        """Test the csv and the text reports."""
        out = os.path.join(str(tmp_path), "report.csv")
        args = ["group", "--named", "cyclic:2", "--max-degree", "2"]
        assert main(args + ["--products", "cup", "--format", "csv", "--out", out]) == 0
        with open(out, "r", encoding="utf-8") as fobj:
            rows = fobj.read().splitlines()
        assert rows[0] == "method,p,i,q,j,coefficients"
        assert rows[1] == "cup,0,0,0,0,1"
        assert len(rows) == 1 + 6
        assert main(args + ["--products", "yoneda", "--format", "text"]) == 0
        text = capsys.readouterr().out
        assert text.startswith("group ")
        assert "dims: 1 1 1" in text
        assert "yoneda products:" in text

    def test_errors(self, capsys: pytest.CaptureFixture) -> None:
        """Test the exit code of the invalid inputs."""
        for args in (
            ["group", "--named", "cyclic:2", "--products", "wedge"],
            ["group", "--named", "cyclic:2", "--field", "4"],
            ["group", "--named", "cyclic:2", "--max-degree", "-1"],
            ["group", "--named", "unknown"],
            ["group", "--named", "cyclic:2", "--cache-size", "0"],
        ):
            assert main(args) == 2
            assert "ext: error:" in capsys.readouterr().err
        with pytest.raises(SystemExit):
            main(["group"])
        with pytest.raises(SystemExit):
            main(["--version"])


class TestOtherCommands:
    """Test the `hochschild` and the `axioms` sub-commands."""

    def test_hochschild(self, tmp_path) -> None:
        """Test the Hochschild cohomology of the dual numbers."""
        out = os.path.join(str(tmp_path), "report.json")
        code = main(
            ["hochschild", "--named", "dualnumbers", "--field", "3"]
            + ["--max-degree", "3", "--verify", "--out", out]
        )
        assert code == 0
        report = _read_report(out)
        assert report["command"] == "hochschild"
        assert report["dims"] == [2, 1, 1, 1]
        assert report["passed"] is True

    def test_axioms(self, tmp_path) -> None:
        """Test the axiom checks of the complexes."""
        out = os.path.join(str(tmp_path), "report.json")
        code = main(
            ["axioms", "--field", "3", "--samples", "2", "--seed", "1", "--out", out]
        )
        assert code == 0
        report = _read_report(out)
        assert report["command"] == "axioms"
        assert report["products"] == []
        assert report["checks"]

    def test_negative_control(self, tmp_path) -> None:
        """Test that the category without the Koszul sign fails."""
        out = os.path.join(str(tmp_path), "report.json")
        code = main(
            ["axioms", "--drop-koszul-sign", "--field", "3", "--samples", "10"]
            + ["--out", out]
        )
        assert code == 1
        report = _read_report(out)
        assert report["passed"] is False
        failed = [item for item in report["checks"] if not item["passed"]]
        assert all(item["witness"] for item in failed)


class TestInput:
    """Test the JSON input documents."""

    def test_group_documents(self, tmp_path) -> None:
        """Test the groups given by a name or by a table."""
        path = write_document(
            tmp_path,
            "z3.json",
            {"field": {"p": 3}, "kind": "group-named", "data": "cyclic:3"},
        )
        out = os.path.join(str(tmp_path), "z3-report.json")
        code = main(
            ["group", "--input", path, "--max-degree", "2"]
            + ["--products", "cup", "--out", out]
        )
        assert code == 0
        report = _read_report(out)
        assert report["field"] == "GF(3)"
        assert report["dims"] == [1, 1, 1]

        path = write_document(
            tmp_path,
            "z2.json",
            {"field": "Q", "kind": "group-table", "data": [[0, 1], [1, 0]]},
        )
        out = os.path.join(str(tmp_path), "z2-report.json")
        code = main(
            ["group", "--input", path, "--max-degree", "2"]
            + ["--products", "yoneda", "--out", out]
        )
        assert code == 0
        assert _read_report(out)["dims"] == [1, 0, 0]

    def test_algebra_document(self, tmp_path) -> None:
        """Test an algebra given by its structure constants."""
        path = write_document(
            tmp_path,
            "dual.json",
            {"field": {"p": 3}, "kind": "algebra", "data": DUAL_NUMBERS},
        )
        out = os.path.join(str(tmp_path), "report.json")
        code = main(
            ["hochschild", "--algebra", path, "--max-degree", "2"]
            + ["--products", "cup", "--out", out]
        )
        assert code == 0
        assert _read_report(out)["dims"] == [2, 1, 1]
        assert main(["hochschild", "--algebra", path, "--field", "2"]) == 2
        assert main(["group", "--input", path, "--max-degree", "1"]) == 2

    def test_parse(self) -> None:
        """Test the parsed objects."""
        res = parse_input(json.dumps({"kind": "group-table", "data": [[0]]}))
        assert isinstance(res, GroupTable)
        res = parse_input(
            json.dumps({"kind": "algebra", "data": DUAL_NUMBERS}), PrimeField(5)
        )
        assert isinstance(res, AlgebraPresentation)
        assert res.dim == 2

    def test_parse_errors(self) -> None:
        """Test the malformed documents."""
        field = PrimeField(3)
        bad_index = dict(DUAL_NUMBERS, constants=[[0, 0, 2, 1]])
        # x y = x and y y = x break the associativity.
        bad_assoc = {
            "dim": 3,
            "constants": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1], [0, 2, 2, 1]]
            + [[2, 0, 2, 1], [1, 2, 1, 1], [2, 2, 1, 1]],
            "unit": [1, 0, 0],
        }
        for raw in (
            "{",
            "[]",
            json.dumps({"kind": "ring", "data": {}}),
            json.dumps({"kind": "algebra"}),
            json.dumps({"kind": "algebra", "data": dict(DUAL_NUMBERS, dim=0)}),
            json.dumps({"kind": "algebra", "data": bad_index}),
            json.dumps({"kind": "algebra", "data": dict(DUAL_NUMBERS, unit=[1])}),
        ):
            with pytest.raises(InputError):
                parse_input(raw, field)
        with pytest.raises(StructureError):
            parse_input(
                json.dumps({"kind": "group-table", "data": [[0, 0], [0, 0]]}), field
            )
        with pytest.raises(StructureError):
            parse_input(json.dumps({"kind": "algebra", "data": bad_assoc}), field)

    def test_config(self) -> None:
        """Test the validation of the run options."""
        config = RunConfig(command="group", named="cyclic:2")
        assert config.field is None
        assert config.max_degree == 6
        with pytest.raises(ValueError):
            RunConfig(command="group", named="cyclic:2", input_path="a.json")
        with pytest.raises(ValueError):
            RunConfig(command="ring")  # type: ignore[arg-type]
