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

import warnings

from motkit import (
    build_root_datum,
    build_coinvariant,
    bott_samelson,
    graded_dimension,
    hom_graded,
    decompose,
    is_isomorphic,
    HeuristicResultWarning,
)

###---------------------------------------------------------------------------.
#### Define the root datum and the characteristic
datum = build_root_datum("A", 2)
prime = 5

###---------------------------------------------------------------------------.
#### Build the coinvariant algebra over F_p
C = build_coinvariant(datum, prime, verbose=True)
print("Graded dimensions:", {d: C.dim(d) for d in C.degrees})
print("Total dimension:", C.total_dimension)

###---------------------------------------------------------------------------.
#### Bott-Samelson modules
# - Words are 0-based generator indices
M = bott_samelson(C, [0, 1, 0])
print("gdim BS(s1 s2 s1):", graded_dimension(M).to_string())

###---------------------------------------------------------------------------.
#### Graded Hom spaces
# - hom_graded returns {degree: [morphisms]}
homs = hom_graded(M, M, degrees=[0, 2])
print({degree: len(basis) for degree, basis in homs.items()})

###---------------------------------------------------------------------------.
#### Decompose into indecomposable Soergel modules
# - Summands that could not be certified local raise HeuristicResultWarning
with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always", HeuristicResultWarning)
    summands = decompose(M, seed=0)
print("Heuristic summands:", len(caught))

for summand in summands:
    print(summand.shift, graded_dimension(summand.module).to_string())

###---------------------------------------------------------------------------.
#### Compare two Bott-Samelson modules
M1 = bott_samelson(C, [0, 1])
M2 = bott_samelson(C, [1, 0])
print("BS(s1 s2) ~ BS(s2 s1):", is_isomorphic(M1, M2))
