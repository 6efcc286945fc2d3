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
"""Tests of argument checks and the available_* helpers."""

import pytest

import motkit
from motkit.checks import (
    PreconditionError,
    _check_cache_dir,
    _check_flag,
    _check_n_threads,
    _check_output_format,
    _check_prime,
    _check_prime_power,
    _check_protocol,
    _check_seed,
)
from motkit.info import available_ranks, parse_labels, word_label


def test_available_helpers():
    assert motkit.available_cartan_types() == ["A", "B", "C", "D", "E", "F", "G"]
    assert motkit.available_output_formats() == ["json", "table"]
    assert "decmat" in motkit.available_subcommands()
    assert available_ranks("E") == [6, 7, 8]
    assert available_ranks("Sp", max_rank=4) == [2, 3, 4]


def test_check_flag():
    assert _check_flag("A2") == ("A", 2)
    assert _check_flag("b3") == ("B", 3)
    with pytest.raises(ValueError):
        _check_flag("A")
    with pytest.raises(ValueError):
        _check_flag("G3")
    with pytest.raises(TypeError):
        _check_flag(2)


def test_check_primes():
    assert _check_prime(5) == 5
    with pytest.raises(ValueError):
        _check_prime(4)
    with pytest.raises(TypeError):
        _check_prime(True)
    assert _check_prime_power(27) == 27
    with pytest.raises(ValueError):
        _check_prime_power(12)


def test_check_misc():
    assert _check_seed(None) == 0
    with pytest.raises(ValueError):
        _check_seed(-1)
    assert _check_n_threads(0) == 1
    assert _check_n_threads(100) == 50
    assert _check_output_format("JSON") == "json"
    with pytest.raises(ValueError):
        _check_output_format("xml")
    assert _check_protocol("local") == "file"
    assert _check_cache_dir(None) is None


def test_check_cache_dir(tmp_path):
    target = tmp_path / "nested" / "cache"
    assert _check_cache_dir(str(target)) == str(target)
    assert target.is_dir()
    with pytest.raises(OSError):
        _check_cache_dir(str(tmp_path / "absent"), create=False)
    (tmp_path / "file.txt").write_text("")
    with pytest.raises(OSError):
        _check_cache_dir(str(tmp_path / "file.txt"))


def test_labels():
    assert parse_labels("e; s1 ;") == ["e", "s1"]
    assert parse_labels(None) == []
    assert word_label((0, 1)) == "s1 s2"
    assert word_label(()) == "e"


def test_precondition_error_is_a_value_error():
    assert issubclass(PreconditionError, ValueError)
