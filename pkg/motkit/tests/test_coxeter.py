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
"""Tests of root data, Weyl group elements, Bruhat order and reduced words."""

import numpy as np
import pytest

from motkit.checks import PreconditionError
from motkit.coxeter import (
    bruhat_interval,
    bruhat_leq,
    build_root_datum,
    demazure_product,
    element_from_word,
    enumerate_weyl,
    identity,
    inverse,
    inversion_count,
    longest_element,
    minimal_coset_representatives,
    parse_element,
    poincare_counts,
    poincare_from_degrees,
    reduced_words,
    simple_reflection,
    torsion_primes,
    weyl_elements,
)
from motkit.info import parse_word


def test_cartan_matrix_a2(a2):
    np.testing.assert_array_equal(a2.cartan_matrix, [[2, -1], [-1, 2]])
    assert a2.simple_roots == ((2, -1), (-1, 2))


@pytest.mark.parametrize(
    ("cartan_type", "rank", "order", "coxeter_number", "longest_length"),
    [("A", 1, 2, 2, 1), ("A", 2, 6, 3, 3), ("B", 2, 8, 4, 4), ("G", 2, 12, 6, 6), ("A", 3, 24, 4, 6)],
)
def test_weyl_group_invariants(cartan_type, rank, order, coxeter_number, longest_length):
    datum = build_root_datum(cartan_type, rank)
    assert datum.weyl_order == order
    assert datum.coxeter_number == coxeter_number
    assert datum.longest_length == longest_length
    assert len(weyl_elements(datum)) == order
    assert longest_element(datum).length == longest_length


def test_poincare_counts_match_degrees():
    for cartan_type, rank in [("A", 2), ("B", 2), ("G", 2), ("A", 3), ("B", 3)]:
        datum = build_root_datum(cartan_type, rank)
        assert poincare_counts(datum) == poincare_from_degrees(datum)
    assert poincare_counts(build_root_datum("A", 2)) == [1, 2, 2, 1]


def test_torsion_primes():
    assert torsion_primes(build_root_datum("A", 3)) == set()
    assert torsion_primes(build_root_datum("B", 2)) == set()
    assert torsion_primes(build_root_datum("B", 3)) == {2}
    assert torsion_primes(build_root_datum("G", 2)) == {2}


def test_invalid_root_data():
    with pytest.raises(ValueError):
        build_root_datum("D", 3)
    with pytest.raises(ValueError):
        build_root_datum("X", 2)
    with pytest.raises(TypeError):
        build_root_datum("A", 2.0)
    assert build_root_datum("SL", 3) == build_root_datum("A", 3)


def test_canonical_words_are_shortlex(a2):
    w0 = longest_element(a2)
    assert w0.word == (0, 1, 0)
    assert w0.label == "s1 s2 s1"
    assert w0.word_string == "1-2-1"
    assert element_from_word(a2, (1, 0, 1)) == w0
    assert identity(a2).label == "e"
    assert parse_element(a2, "s2 s1 s2") == w0


def test_descents(a2):
    s1s2 = element_from_word(a2, (0, 1))
    assert s1s2.left_descents == {0}
    assert s1s2.right_descents == {1}
    assert longest_element(a2).left_descents == {0, 1}


def test_group_law(b2):
    for w in weyl_elements(b2):
        assert w * inverse(w) == identity(b2)
        assert inversion_count(w) == w.length
    s = simple_reflection(b2, 0)
    assert s * s == identity(b2)


def test_enumeration_bound(a2):
    with pytest.raises(PreconditionError):
        enumerate_weyl(a2, bound=5)


def test_bruhat_order(a2):
    s1, s2 = simple_reflection(a2, 0), simple_reflection(a2, 1)
    w0 = longest_element(a2)
    assert bruhat_leq(identity(a2), s1)
    assert bruhat_leq(s1, w0)
    assert not bruhat_leq(s1, s2)
    assert not bruhat_leq(w0, s1)
    assert [x.label for x in bruhat_interval(element_from_word(a2, (0, 1)))] == ["e", "s1", "s2", "s1 s2"]
    assert len(bruhat_interval(w0)) == 6


def test_reduced_words(a2, b2):
    assert reduced_words(longest_element(a2)) == [[0, 1, 0], [1, 0, 1]]
    assert reduced_words(identity(a2)) == [[]]
    assert len(reduced_words(longest_element(b2))) == 2
    with pytest.raises(PreconditionError):
        reduced_words(longest_element(a2), bound=2)


def test_demazure_product(a2):
    assert demazure_product(a2, (0, 0)) == simple_reflection(a2, 0)
    assert demazure_product(a2, (0, 1, 0, 1)) == longest_element(a2)
    assert demazure_product(a2, ()) == identity(a2)


def test_minimal_coset_representatives(a2):
    representatives = minimal_coset_representatives(a2, 0)
    assert [w.label for w in representatives] == ["e", "s2", "s1 s2"]


def test_parse_word():
    assert parse_word("s1 s2 s1") == (0, 1, 0)
    assert parse_word("121") == (0, 1, 0)
    assert parse_word("1,2,1") == (0, 1, 0)
    assert parse_word("s1s2") == (0, 1)
    assert parse_word("e") == ()
    with pytest.raises(ValueError):
        parse_word("s3", rank=2)
    with pytest.raises(ValueError):
        parse_word("s0")
    with pytest.raises(ValueError):
        parse_word("abc")
