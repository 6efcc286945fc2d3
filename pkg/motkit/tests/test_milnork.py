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
"""Tests of Milnor K-groups of finite fields and Hom groups of Tate objects."""

import math
from functools import reduce

import pytest

from motkit.checks import PreconditionError
from motkit.milnork import (
    AbGroupInvariants,
    milnor_k,
    milnor_k_table,
    steinberg_relations,
    tate_hom,
    tate_levels,
    unit_group,
)


def test_unit_group():
    units = unit_group(8)
    assert units.order == 7
    assert sorted(units.log.values()) == list(range(7))
    assert units.log[1] == 0
    assert unit_group(8) is units


def test_abelian_group_invariants():
    group = AbGroupInvariants([4, 2, 1])
    assert group.to_list() == [2, 4]
    assert group.order == 8
    assert group.dim_mod(2) == 2
    assert group.dim_mod(3) == 0
    assert AbGroupInvariants(free_rank=1).order is None
    assert AbGroupInvariants(free_rank=1).to_list() == [0]
    assert AbGroupInvariants().is_trivial()
    with pytest.raises(ValueError):
        AbGroupInvariants([0])


@pytest.mark.parametrize(("q", "invariants"), [(2, []), (3, [2]), (4, [3]), (9, [8]), (16, [15]), (64, [63])])
def test_first_milnor_k_group_is_the_unit_group(q, invariants):
    assert milnor_k(q, 1).to_list() == invariants


def test_zeroth_milnor_k_group():
    assert milnor_k(5, 0).to_list() == [0]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32])
def test_higher_milnor_k_groups_vanish(q):
    assert milnor_k(q, 2).is_trivial()
    assert milnor_k(q, 3).is_trivial()


def test_steinberg_relations_generate():
    assert steinberg_relations(5, 1) == []
    relations = steinberg_relations(5, 2)
    assert reduce(math.gcd, relations + [4]) == 1


def test_milnor_bounds():
    with pytest.raises(PreconditionError):
        milnor_k(67, 1)
    with pytest.raises(PreconditionError):
        milnor_k(5, 4)
    with pytest.raises(ValueError):
        milnor_k(6, 1)
    with pytest.raises(ValueError):
        milnor_k(5, -1)


def test_milnor_k_table():
    table = milnor_k_table([4, 5], [0, 1, 2])
    assert list(table.columns) == ["q", "n", "invariants", "order"]
    assert len(table) == 6
    row = table[(table["q"] == 4) & (table["n"] == 1)].iloc[0]
    assert row["invariants"] == [3]
    assert row["order"] == 3


def test_tate_levels():
    levels = tate_levels(2, 1)
    assert [level["q"] for level in levels] == [2, 4, 8]
    assert all(level["dim"] == 0 for level in levels)
    assert [level["dim"] for level in tate_levels(3, 0)] == [1, 1, 1]
    assert [level["q"] for level in tate_levels(5, 2)] == [5, 25]


def test_tate_hom():
    assert tate_hom(5, 0, 0) == 1
    assert tate_hom(5, 1, 1) == 0
    assert tate_hom(2, 2, 2) == 0
    assert tate_hom(3, 1, 0) == 0
    assert tate_hom(3, -1, -1) == 0
