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
"""Shared fixtures of the motkit test suite."""

import pytest

from motkit.coinv import build_coinvariant
from motkit.coxeter import build_root_datum


@pytest.fixture
def a1():
    return build_root_datum("A", 1)


@pytest.fixture
def a2():
    return build_root_datum("A", 2)


@pytest.fixture
def b2():
    return build_root_datum("B", 2)


@pytest.fixture
def c_a1(a1):
    return build_coinvariant(a1, 5)


@pytest.fixture
def c_a2(a2):
    return build_coinvariant(a2, 5)


@pytest.fixture(autouse=True)
def no_cache_env(monkeypatch):
    monkeypatch.delenv("MOTKIT_CACHE", raising=False)
