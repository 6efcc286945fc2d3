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
"""Define input argument aliases and default numeric settings."""

_cartan_types = {
    "A": ["A", "SL", "SU", "PGL"],
    "B": ["B", "SO_ODD", "SPIN_ODD"],
    "C": ["C", "SP", "PSP"],
    "D": ["D", "SO_EVEN", "SPIN_EVEN"],
    "E": ["E"],
    "F": ["F"],
    "G": ["G"],
}

# Spellings accepted for the identity element of the Weyl group
_identity_words = ["", "E", "ID", "1_W", "()"]

OUTPUT_FORMATS = ["json", "table"]

PROTOCOLS = ["file", "local"]

SUBCOMMANDS = [
    "weyl",
    "kl",
    "bschar",
    "coinv",
    "bs",
    "decompose",
    "pcan",
    "decmat",
    "simples",
    "cellmot",
    "strata",
    "milnork",
    "tatehom",
    "cache",
]

####--------------------------------------------------------------------------.
#### Defaults

DEFAULT_CARTAN_TYPE = "A"
DEFAULT_RANK = 2
DEFAULT_PRIME = 5
DEFAULT_SEED = 0

CACHE_ENV_VAR = "MOTKIT_CACHE"
CACHE_SCHEMA = 1
JSON_SCHEMA = 1

####--------------------------------------------------------------------------.
#### Bounds

WEYL_ORDER_BOUND = 10**6
REDUCED_WORDS_LENGTH_BOUND = 16
KL_LENGTH_BOUND = 36
COINVARIANT_MAX_RANK = 4
COINVARIANT_DEGREE_FACTOR = 2
POSET_DOWN_SETS_BOUND = 20

# Decomposition of graded modules
FITTING_TRIALS = 200
EXHAUSTIVE_END_DIM = 12
ISO_EXHAUSTIVE_DIM = 6
EXHAUSTIVE_SEARCH_BUDGET = 2**16

# Milnor K-theory
MILNOR_MAX_Q = 64
MILNOR_MAX_N = 3
