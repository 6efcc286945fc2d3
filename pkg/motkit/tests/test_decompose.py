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
"""Tests of Fitting splittings, locality of endomorphism rings and isomorphism tests."""

import warnings

import numpy as np
import pytest

from motkit.checks import HeuristicResultWarning
from motkit.decompose import (
    Summand,
    _primary_split,
    decompose,
    endomorphism_basis,
    fitting_split,
    is_isomorphic,
    is_local,
)
from motkit.linalg import characteristic_poly
from motkit.smod import (
    bott_samelson,
    direct_sum,
    graded_dimension,
    identity_morphism,
    shift_module,
    trivial_module,
)


def test_trivial_module_is_local(c_a2):
    k = trivial_module(c_a2)
    assert len(endomorphism_basis(k)) == 1
    assert is_local(k) is True


def test_bott_samelson_of_simple_reflection_is_local(c_a2):
    assert is_local(bott_samelson(c_a2, (0,))) is True
    assert is_local(bott_samelson(c_a2, (0, 1))) is True


def test_split_module_is_not_local(c_a1):
    assert is_local(bott_samelson(c_a1, (0, 0))) is False


def test_fitting_split_of_identity_is_trivial(c_a2):
    M = bott_samelson(c_a2, (0, 0))
    assert fitting_split(M, identity_morphism(M)) is None


def test_decompose_bs_ss(c_a1):
    summands = decompose(bott_samelson(c_a1, (0, 0)))
    assert [summand.shift for summand in summands] == [0, 2]
    assert all(summand.module.dims == {0: 1, 2: 1} for summand in summands)
    assert all(summand.certified for summand in summands)
    assert summands[1].gdim().to_list() == [[1, 1], [2, 1]]


def test_decompose_bs_sts(c_a2):
    with warnings.catch_warnings():
        warnings.simplefilter("error", HeuristicResultWarning)
        summands = decompose(bott_samelson(c_a2, (0, 1, 0)))
    assert len(summands) == 2
    top, bottom = summands
    assert (top.shift, top.module.dims) == (0, {0: 1, 2: 2, 4: 2, 6: 1})
    assert (bottom.shift, bottom.module.dims) == (2, {0: 1, 2: 1})


def test_decompose_direct_sum(c_a2):
    M = bott_samelson(c_a2, (1,))
    summands = decompose(direct_sum([M, shift_module(M, -2), trivial_module(c_a2, 4)]))
    assert [summand.shift for summand in summands] == [-2, 0, 4]
    assert sum(graded_dimension(s.module).evaluate(1) for s in summands) == 5


def test_decompose_is_reproducible(c_a2):
    M = bott_samelson(c_a2, (0, 1, 0))
    first = [(s.shift, s.module.dims) for s in decompose(M, seed=3)]
    second = [(s.shift, s.module.dims) for s in decompose(M, seed=3)]
    assert first == second


def test_decompose_zero_module(c_a2):
    from motkit.smod import GradedModule

    assert decompose(GradedModule(c_a2, {})) == []


def test_summand_is_frozen(c_a2):
    summand = Summand(trivial_module(c_a2), 2)
    with pytest.raises(AttributeError):
        summand.shift = 4


def test_is_isomorphic(c_a2):
    st = bott_samelson(c_a2, (0, 1))
    ts = bott_samelson(c_a2, (1, 0))
    assert is_isomorphic(st, bott_samelson(c_a2, (0, 1)))
    assert not is_isomorphic(st, ts)
    assert not is_isomorphic(st, shift_module(st, 2))


def test_is_isomorphic_ignores_basis_choice(c_a2):
    M = bott_samelson(c_a2, (0, 1, 0))
    summands = decompose(M)
    rebuilt = direct_sum([shift_module(s.module, s.shift) for s in summands])
    assert is_isomorphic(M, rebuilt)
    assert np.all([s.certified for s in summands])


def test_primary_split_handles_one_dimensional_degrees(c_a1, c_a2):
    for M in (bott_samelson(c_a1, (0,)), bott_samelson(c_a2, (0, 1, 0))):
        assert M.dim(0) == 1
        for phi in endomorphism_basis(M):
            for d in M.degrees:
                assert characteristic_poly(phi.block(d), M.prime).degree == M.dim(d)
            split = _primary_split(M, phi)
            if split is not None:
                A, B = split
                assert A.total_dimension + B.total_dimension == M.total_dimension


def test_primary_split_of_bs_ss(c_a1):
    M = bott_samelson(c_a1, (0, 0))
    splits = [_primary_split(M, phi) for phi in endomorphism_basis(M)]
    assert any(split is not None for split in splits)
