#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (c) 2023 motkit developers

# motkit is free software: you can redistribute it and/or modify it under the
# terms of the GNU General Public License as published by the Free Software
# Foundation, either version 3 of the License, or (at your option) any later
# version.
#
# motkit is distributed in the hope that it will be useful, but WITHOUT ANY
# WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR
# A PARTICULAR PURPOSE. See the GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along with
# motkit. If not, see <http://www.gnu.org/licenses/>.
"""Tests of the motkit command line interface."""

import json

import pytest

from motkit.cli import EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE, get_parser, main
from motkit.checks import ValidityWarning


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _run_json(capsys, *argv):
    code, out, _ = _run(capsys, *argv)
    assert code == EXIT_OK
    return json.loads(out)


def test_help_of_every_subcommand(capsys):
    from motkit.info import available_subcommands

    assert main(["--help"]) == EXIT_OK
    for command in available_subcommands():
        code, out, _ = _run(capsys, command, "--help")
        assert code == EXIT_OK
        assert command in out
    assert get_parser().prog == "motkit"


def test_weyl(capsys):
    payload = _run_json(capsys, "weyl", "--type", "A2")
    assert payload["schema"] == 1
    assert payload["command"] == "weyl"
    assert payload["order"] == 6
    assert payload["poincare"] == [1, 2, 2, 1]
    assert payload["coxeter_number"] == 3
    assert payload["lattice"] == "simply_connected"


def test_weyl_with_type_and_rank(capsys):
    payload = _run_json(capsys, "weyl", "--type", "B", "--rank", "2", "--elements")
    assert payload["order"] == 8
    assert payload["elements"][0] == ["e"]


def test_kl(capsys):
    payload = _run_json(capsys, "kl", "--element", "s1 s2 s1", "--y", "e")
    assert payload["h"] == [[3, 1]]
    assert payload["mu"] == 0
    assert payload["kl_basis"]["s1 s2 s1"] == [[0, 1]]


def test_bschar(capsys):
    payload = _run_json(capsys, "bschar", "--word", "121")
    assert payload["kl_expansion"] == {"s1": [[0, 1]], "s1 s2 s1": [[0, 1]]}


def test_coinv(capsys):
    payload = _run_json(capsys, "coinv", "--type", "A2", "--prime", "5")
    assert payload["dims"] == {"0": 1, "2": 2, "4": 2, "6": 1}
    assert payload["matches_weyl"] is True
    assert payload["prime_ok"] is True


def test_weyl_flags(capsys):
    payload = _run_json(capsys, "weyl", "--type", "A2", "--list", "--poincare", "--reduced-words", "1-2-1")
    assert payload["rank"] == 2
    assert payload["lengths"] == [1, 2, 2, 1]
    assert len(payload["words"]) == 6
    assert payload["words"][0] == "e"
    assert {"s1", "s2"} <= set(payload["words"])
    assert payload["poincare_matches_degrees"] is True
    assert payload["reduced_words"] == ["s1 s2 s1", "s2 s1 s2"]


def test_coinv_views(capsys):
    payload = _run_json(capsys, "coinv", "--type", "A2", "--prime", "5", "--poincare")
    assert "dims" not in payload
    assert payload["dimension_discrepancy"] == 0
    payload = _run_json(capsys, "coinv", "--type", "A2", "--prime", "5", "--dims")
    assert "poincare" not in payload
    code, _, _ = _run(capsys, "coinv", "--poincare", "--dims")
    assert code == EXIT_USAGE


def test_bs(capsys):
    payload = _run_json(capsys, "bs", "--word", "s1 s2 s1")
    assert payload["dims"] == {"0": 1, "2": 3, "4": 3, "6": 1}
    assert payload["word"] == [1, 2, 1]


def test_decompose(capsys):
    payload = _run_json(capsys, "decompose", "--word", "1 2 1")
    assert payload["summands"] == [
        {"element": "s1 s2 s1", "shift": 0, "certified": True},
        {"element": "s1", "shift": 2, "certified": True},
    ]
    assert payload["heuristic"] is False


@pytest.mark.parametrize(
    "argv",
    [
        ["decompose", "--word", "1-2-1", "--seed", "42"],
        ["weyl", "--type", "B2", "--list"],
        ["simples", "--type", "A2", "--prime", "5"],
        ["milnork", "--q", "9", "--n", "2"],
    ],
)
def test_outputs_are_deterministic(capsys, argv):
    first = _run(capsys, *argv)
    second = _run(capsys, *argv)
    assert first[0] == EXIT_OK
    assert first == second


def test_pcan(capsys, tmp_path):
    payload = _run_json(capsys, "pcan", "--element", "121", "--cache", str(tmp_path))
    assert payload["equals_kl"] is True
    assert payload["defect"] == {}
    assert payload["gdim"] == [[0, 1], [1, 2], [2, 2], [3, 1]]
    listing = _run_json(capsys, "cache", "--list", "--cache", str(tmp_path))
    assert len(listing["records"]) == 6


def test_decmat(capsys):
    payload = _run_json(capsys, "decmat", "--type", "A2", "--prime", "5")
    index = payload["elements"]
    assert payload["matrix"][index.index("e")][index.index("s1 s2 s1")] == [[3, 1]]
    assert payload["valid"] is True


def test_decmat_refuses_small_primes(capsys):
    code, out, err = _run(capsys, "decmat", "--type", "A2", "--prime", "2")
    assert code == EXIT_PRECONDITION
    assert json.loads(out)["error"] == "precondition"
    assert "Coxeter number" in err


def test_simples(capsys):
    payload = _run_json(capsys, "simples", "--type", "A2")
    index = payload["elements"]
    assert payload["multiplicities"][index.index("e")][index.index("s1")] == 1
    assert payload["characters"][index.index("s1")][index.index("e")] == -1


def test_cellmot(capsys):
    payload = _run_json(capsys, "cellmot", "--flag", "A2", "--projective", "2", "--closed", "e")
    assert payload["cohomology"] == [[0, 0, 1], [2, 1, 2], [4, 2, 2], [6, 3, 1]]
    assert payload["extrapolated"] is False
    assert payload["projective_bundle"][:2] == [[0, 0, 1], [2, 1, 3]]
    assert payload["localization"]["passed"] is True


def test_cellmot_from_poset_file(capsys, tmp_path):
    fpath = tmp_path / "p1.json"
    fpath.write_text(json.dumps({"strata": [{"label": "pt", "dim": 0}, {"label": "A1", "dim": 1}], "closure": [["pt", "A1"]]}))
    payload = _run_json(capsys, "cellmot", "--poset", str(fpath))
    assert payload["cohomology"] == [[0, 0, 1], [2, 1, 1]]


def test_strata(capsys):
    payload = _run_json(capsys, "strata", "--type", "A2", "--parabolic", "s1")
    assert [stratum["dim"] for stratum in payload["strata"]] == [0, 1, 2]


def test_milnork(capsys):
    assert _run_json(capsys, "milnork", "--q", "4", "--n", "1")["invariants"] == [3]
    assert _run_json(capsys, "milnork", "--q", "5", "--n", "2")["invariants"] == []
    code, _, _ = _run(capsys, "milnork", "--q", "128", "--n", "1")
    assert code == EXIT_PRECONDITION


def test_tatehom(capsys):
    payload = _run_json(capsys, "tatehom", "--prime", "5", "--i", "0", "--j", "0")
    assert payload["dim"] == 1
    assert [level["q"] for level in payload["levels"]] == [5, 25]
    assert _run_json(capsys, "tatehom", "--prime", "5", "--i", "1", "--j", "1")["dim"] == 0


def test_table_format(capsys):
    code, out, _ = _run(capsys, "weyl", "--format", "table")
    assert code == EXIT_OK
    assert "count" in out
    with pytest.raises(json.JSONDecodeError):
        json.loads(out)


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["weyl", "--rank", "x"],
        ["weyl", "--type", "Q2"],
        ["weyl", "--prime", "4"],
        ["kl", "--element", "s9"],
        ["cache", "--list"],
        ["weyl", "--type", "A2", "--rank", "3"],
        ["milnork", "--q", "6", "--n", "1"],
        ["cellmot", "--flag", "A2", "--projective", "0"],
        ["cellmot", "--flag", "A2", "--closed", "t"],
        ["unknown"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = _run(capsys, *argv)
    assert code == EXIT_USAGE
    assert err


def test_missing_poset_file(capsys, tmp_path):
    code, _, err = _run(capsys, "cellmot", "--poset", str(tmp_path / "missing.json"))
    assert code == EXIT_USAGE
    assert err


def test_weyl_always_lists_words(capsys):
    payload = _run_json(capsys, "weyl", "--type", "A2")
    assert len(payload["words"]) == 6
    assert payload["words"][0] == "e"
    assert {"s1", "s2"} <= set(payload["words"])
    assert "elements" not in payload


def test_forced_decomposition_matrix_warns_once(capsys):
    with pytest.warns(ValidityWarning) as record:
        payload = _run_json(capsys, "decmat", "--type", "A2", "--prime", "3", "--force")
    assert payload["valid"] is False
    assert len([w for w in record if issubclass(w.category, ValidityWarning)]) == 1
