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
"""Tests of the cache file layout and record I/O."""

import os

import pytest

from motkit.checks import CacheSchemaWarning
from motkit.io import (
    get_cache_dir,
    get_cache_fname,
    get_cache_fpath,
    get_filesystem,
    get_info_from_filepath,
    list_cache_records,
    read_record,
    write_record,
)


def test_cache_fname():
    assert get_cache_fname("A", 2, 5, "1-2-1") == "A2_p5_w1-2-1.json"
    assert get_cache_fname("B", 3, 7, "e") == "B3_p7_we.json"
    assert get_cache_fpath("/tmp/cache", "A", 2, 5, "e") == os.path.join("/tmp/cache", "A2_p5_we.json")


def test_info_from_filepath():
    info = get_info_from_filepath("/some/dir/B2_p3_w2-1-2.json")
    assert info["cartan_type"] == "B"
    assert info["rank"] == 2
    assert info["prime"] == 3
    assert info["word"] == "2-1-2"
    assert info["fpath"] == "/some/dir/B2_p3_w2-1-2.json"
    with pytest.raises(ValueError):
        get_info_from_filepath("notes.txt")
    with pytest.raises(TypeError):
        get_info_from_filepath(["A2_p5_we.json"])


def test_get_cache_dir(tmp_path, monkeypatch):
    assert get_cache_dir() is None
    monkeypatch.setenv("MOTKIT_CACHE", str(tmp_path / "from_env"))
    assert get_cache_dir() == str(tmp_path / "from_env")
    assert os.path.isdir(tmp_path / "from_env")
    assert get_cache_dir(str(tmp_path)) == str(tmp_path)


def test_get_filesystem():
    assert get_filesystem("local").protocol[0] == "file"
    with pytest.raises(ValueError):
        get_filesystem("s3")
    with pytest.raises(TypeError):
        get_filesystem("file", fs_args=[])


def test_write_and_read_record(tmp_path):
    fpath = str(tmp_path / "A2_p5_we.json")
    record = {"schema": 1, "element": "e"}
    assert write_record(fpath, record) == fpath
    assert read_record(fpath) == record
    assert os.listdir(tmp_path) == ["A2_p5_we.json"]
    assert read_record(str(tmp_path / "missing.json")) is None


def test_read_record_with_wrong_schema(tmp_path):
    fpath = str(tmp_path / "A2_p5_we.json")
    write_record(fpath, {"schema": 0})
    with pytest.warns(CacheSchemaWarning):
        assert read_record(fpath) is None


def test_list_cache_records(tmp_path):
    for word in ["e", "1", "1-2"]:
        write_record(get_cache_fpath(str(tmp_path), "A", 2, 5, word), {"schema": 1})
    (tmp_path / "README.txt").write_text("not a record")
    records = list_cache_records(str(tmp_path))
    assert list(records.columns) == ["cartan_type", "rank", "prime", "word", "fpath"]
    assert sorted(records["word"]) == ["1", "1-2", "e"]
    assert list_cache_records(None).empty
