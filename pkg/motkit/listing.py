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

#-----------------------------------------------------------------------------.
# Tables of the irreducible finite crystallographic root systems.
# Nodes follow the Bourbaki numbering:
# - B_n : the last simple root is short
# - C_n : the last simple root is long
# - D_n : nodes n-1 and n hang off node n-2
# - E_n : chain 1-3-4-5-...-n, node 2 attached to node 4
# - F_4 : roots 3 and 4 are short
# - G_2 : root 1 is short
#-----------------------------------------------------------------------------.

# Admissible ranks: (min, max). None means unbounded.
RANK_RESTRICTIONS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

# Degrees of the fundamental invariants of the exceptional Weyl groups
EXCEPTIONAL_DEGREES = {
    ("E", 6): [2, 5, 6, 8, 9, 12],
    ("E", 7): [2, 6, 8, 10, 12, 14, 18],
    ("E", 8): [2, 8, 12, 14, 18, 20, 24, 30],
    ("F", 4): [2, 6, 8, 12],
    ("G", 2): [2, 6],
}

# Prime divisors of the torsion index
# - A_l, C_l --> 1
# - B_l (l>=3), D_l (l>=4), G_2 --> 2
# - E_6, E_7, F_4 --> 2, 3
# - E_8 --> 2, 3, 5
TORSION_PRIMES = {
    "A": [],
    "B": [2],
    "C": [],
    "D": [2],
    "E": [2, 3],
    "F": [2, 3],
    "G": [2],
}
TORSION_PRIMES_EXCEPTIONS = {
    ("B", 2): [],
    ("E", 8): [2, 3, 5],
}


def get_fundamental_degrees(cartan_type, rank):
    """Return the degrees of the fundamental invariants of the Weyl group."""
    if cartan_type == "A":
        return list(range(2, rank + 2))
    if cartan_type in ["B", "C"]:
        return list(range(2, 2 * rank + 1, 2))
    if cartan_type == "D":
        return sorted(list(range(2, 2 * rank - 1, 2)) + [rank])
    return list(EXCEPTIONAL_DEGREES[(cartan_type, rank)])


def get_torsion_primes(cartan_type, rank):
    """Return the sorted list of torsion primes of a Cartan type."""
    primes = TORSION_PRIMES_EXCEPTIONS.get((cartan_type, rank), TORSION_PRIMES[cartan_type])
    return sorted(primes)


#-----------------------------------------------------------------------------.
# File name of a cached indecomposable Soergel module
# - word : 1-based generator indices joined by "-", "e" for the identity
CACHE_FNAME_PATTERN = "{cartan_type:1s}{rank:d}_p{prime:d}_w{word}.json"
CACHE_GLOB_PATTERN = "*_p*_w*.json"
