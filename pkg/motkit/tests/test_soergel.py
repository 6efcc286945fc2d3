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
"""Tests of indecomposable Soergel modules, p-canonical bases and modular category O."""

import json

import pytest

from motkit.checks import CacheSchemaWarning, ConsistencyError, PreconditionError, ValidityWarning
from motkit.coxeter import build_root_datum, element_from_word, identity, longest_element, weyl_elements
from motkit.decompose import _has_nontrivial_idempotent, endomorphism_basis
from motkit.hecke import ONE, V, kl_basis
from motkit.io import list_cache_records
from motkit.smod import trivial_module
from motkit.soergel import (
    IndecompRecord,
    SoergelStore,
    _check_category_o,
    cache_roundtrip,
    decompose_reduced_words,
    decomposition_matrix,
    get_store,
    graded_simple_multiplicities,
    indecomposable_soergel,
    p_canonical,
    p_canonical_defect,
    record_to_dict,
    simple_characters,
    simple_multiplicities,
)


@pytest.fixture
def w0(a2):
    return longest_element(a2)


@pytest.fixture
def s1(a2):
    return element_from_word(a2, (0,))


####--------------------------------------------------------------------------.
#### Indecomposables


def test_indecomposable_of_longest_element(w0, s1):
    record = indecomposable_soergel(w0, 5)
    assert record.gdim().to_list() == [[0, 1], [1, 2], [2, 2], [3, 1]]
    assert record.summands == [(w0, 0), (s1, 2)]
    assert record.certified
    assert record.word == (0, 1, 0)


def test_indecomposable_of_simple_reflection(s1):
    record = indecomposable_soergel(s1, 5)
    assert record.module.dims == {0: 1, 2: 1}
    assert record.summands == [(s1, 0)]


def test_record_validation(a2, s1, c_a2):
    record = IndecompRecord(s1, trivial_module(c_a2), 5, (0,), [(s1, 0)])
    with pytest.raises(ConsistencyError):
        record.validate()


def test_record_serialization(w0):
    record = indecomposable_soergel(w0, 5)
    data = record_to_dict(record)
    assert data["word"] == [1, 2, 1]
    assert data["element"] == "s1 s2 s1"
    assert data["summands"] == [[[1, 2, 1], 0], [[1], 2]]
    assert data["heuristic"] is False
    rebuilt = cache_roundtrip(record)
    assert rebuilt.element == w0
    assert rebuilt.module.dims == record.module.dims
    assert rebuilt.summands == record.summands


def test_store_is_shared(a2):
    assert get_store(a2, 5) is get_store(a2, 5)
    assert get_store(a2, 5) is not get_store(a2, 7)


def test_decompose_word(a2, s1):
    store = get_store(a2, 5)
    assert store.decompose_word((0, 0)) == [(s1, 0, True), (s1, 2, True)]
    summands = store.decompose_word((0, 1, 0, 1))
    assert sum(1 for x, _, _ in summands if x == longest_element(a2)) == 2


def test_decompose_reduced_words(w0):
    result = decompose_reduced_words(w0, 5, n_threads=2)
    assert result == {
        (0, 1, 0): (("s1", 2), ("s1 s2 s1", 0)),
        (1, 0, 1): (("s1 s2 s1", 0), ("s2", 2)),
    }


####--------------------------------------------------------------------------.
#### p-canonical basis


def test_p_canonical_equals_kl_in_type_a2(a2):
    for w in weyl_elements(a2):
        assert p_canonical(w, 5) == kl_basis(w)
        assert p_canonical_defect(w, 5) == {}


def test_p_canonical_in_type_a1_at_two():
    datum = build_root_datum("A", 1)
    for w in weyl_elements(datum):
        assert p_canonical(w, 2) == kl_basis(w)


@pytest.mark.slow
def test_p_canonical_equals_kl_in_type_b2_at_three():
    datum = build_root_datum("B", 2)
    for w in weyl_elements(datum):
        assert p_canonical(w, 3) == kl_basis(w)


####--------------------------------------------------------------------------.
#### Cache


def test_cache_is_written_and_listed(a2, w0, tmp_path):
    store = SoergelStore(a2, 5, cache_dir=str(tmp_path))
    store.record(w0)
    records = list_cache_records(str(tmp_path))
    assert len(records) == 6
    assert set(records["word"]) == {"e", "1", "2", "1-2", "2-1", "1-2-1"}
    assert set(records["prime"]) == {5}


def test_cache_is_read_back(a2, w0, tmp_path, monkeypatch):
    SoergelStore(a2, 5, cache_dir=str(tmp_path)).record(w0)
    store = SoergelStore(a2, 5, cache_dir=str(tmp_path))

    def _fail(*args, **kwargs):
        raise AssertionError("The record should come from the cache.")

    monkeypatch.setattr(store, "_compute", _fail)
    assert store.record(w0).gdim().to_list() == [[0, 1], [1, 2], [2, 2], [3, 1]]


def test_corrupt_cache_record_is_ignored(a2, tmp_path):
    e = identity(a2)
    store = SoergelStore(a2, 5, cache_dir=str(tmp_path))
    store.record(e)
    fpath = store._fpath(e)
    with open(fpath, "w") as f:
        f.write("{not json")
    fresh = SoergelStore(a2, 5, cache_dir=str(tmp_path))
    with pytest.warns(CacheSchemaWarning):
        record = fresh.record(e)
    assert record.module.dims == {0: 1}


def test_cache_record_with_other_schema_is_ignored(a2, tmp_path):
    e = identity(a2)
    store = SoergelStore(a2, 5, cache_dir=str(tmp_path))
    store.record(e)
    fpath = store._fpath(e)
    with open(fpath) as f:
        data = json.load(f)
    data["schema"] = 999
    with open(fpath, "w") as f:
        json.dump(data, f)
    with pytest.warns(CacheSchemaWarning):
        SoergelStore(a2, 5, cache_dir=str(tmp_path)).record(e)


####--------------------------------------------------------------------------.
#### Modular category O


def test_category_o_preconditions(a2):
    assert _check_category_o(a2, 5) is True
    with pytest.raises(PreconditionError):
        _check_category_o(a2, 2)
    with pytest.raises(PreconditionError):
        _check_category_o(build_root_datum("G", 2), 5)
    with pytest.warns(ValidityWarning):
        assert _check_category_o(a2, 3, force=True) is False


def test_decomposition_matrix(a2):
    matrix = decomposition_matrix(a2, 5)
    labels = ["e", "s1", "s2", "s1 s2", "s2 s1", "s1 s2 s1"]
    assert list(matrix.index) == labels
    assert list(matrix.columns) == labels
    assert matrix.loc["e", "s1 s2 s1"] == V**3
    assert matrix.loc["s1", "s1 s2"] == V
    assert matrix.loc["s1 s2", "s1 s2"] == ONE
    assert matrix.loc["s1", "s2"].is_zero()
    with pytest.raises(PreconditionError):
        decomposition_matrix(a2, 2)


def test_simple_multiplicities(a2):
    multiplicities = simple_multiplicities(a2, 5)
    assert multiplicities.loc["e", "s1 s2 s1"] == 1
    assert multiplicities.loc["s1", "s2"] == 0
    assert int(multiplicities.to_numpy().sum()) == 19
    graded = graded_simple_multiplicities(a2, 5)
    assert graded.equals(decomposition_matrix(a2, 5))


def test_simple_characters(a2):
    characters = simple_characters(a2, 5)
    assert characters.loc["e", "e"] == 1
    assert characters.loc["s1", "e"] == -1
    assert characters.loc["s1 s2 s1", "e"] == -1
    assert characters.loc["e", "s1"] == 0
    graded = simple_characters(a2, 5, graded=True)
    assert graded.loc["s1", "e"] == -V
    assert graded.loc["s1 s2 s1", "s1 s2 s1"] == ONE


@pytest.mark.parametrize("prime", [2, 3, 5])
def test_top_summand_is_independent_of_reduced_word(w0, prime):
    result = decompose_reduced_words(w0, prime, n_threads=2)
    assert len(result) == 2
    for summands in result.values():
        assert summands.count(("s1 s2 s1", 0)) == 1


def test_indecomposables_have_no_idempotents(a2):
    for w in weyl_elements(a2):
        module = indecomposable_soergel(w, 5).module
        assert not _has_nontrivial_idempotent(module, endomorphism_basis(module))


@pytest.mark.slow
@pytest.mark.parametrize("prime", [2, 3, 5])
def test_top_summand_is_independent_of_reduced_word_in_type_b2(b2, prime):
    w = longest_element(b2)
    result = decompose_reduced_words(w, prime, n_threads=2)
    assert len(result) == 2
    for summands in result.values():
        assert summands.count((w.label, 0)) == 1


def test_p_canonical_equals_kl_in_type_a2_at_seven(a2):
    for w in weyl_elements(a2):
        assert p_canonical(w, 7) == kl_basis(w)


@pytest.mark.slow
def test_p_canonical_equals_kl_in_type_b2_at_five(b2):
    for w in weyl_elements(b2):
        assert p_canonical(w, 5) == kl_basis(w)


@pytest.mark.slow
def test_p_canonical_differs_from_kl_in_type_b2_at_two(b2):
    w = element_from_word(b2, (1, 0, 1))
    s2 = element_from_word(b2, (1,))
    defect = p_canonical(w, 2) - kl_basis(w)
    assert defect == kl_basis(s2)
    assert defect.coefficient(identity(b2)) == V
    assert defect.coefficient(s2) == ONE


@pytest.mark.slow
def test_indecomposables_are_local_in_type_b2(b2):
    for w in weyl_elements(b2):
        module = indecomposable_soergel(w, 5).module
        basis = endomorphism_basis(module)
        assert len(basis) == 1
        assert not _has_nontrivial_idempotent(module, basis)
