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

from motkit import (
    build_root_datum,
    parse_element,
    indecomposable_soergel,
    p_canonical,
    p_canonical_defect,
    decompose_reduced_words,
    decomposition_matrix,
    simple_multiplicities,
    simple_characters,
)

###---------------------------------------------------------------------------.
#### Define the root datum, the characteristic and the cache
# - Indecomposable Soergel modules are cached as JSON files
# - If cache_dir is None, the MOTKIT_CACHE environment variable is used (if set)
datum = build_root_datum("A", 2)
prime = 5
cache_dir = None

###---------------------------------------------------------------------------.
#### Indecomposable Soergel modules
w0 = parse_element(datum, "s1 s2 s1")
record = indecomposable_soergel(w0, prime, cache_dir=cache_dir, verbose=True)
print("gdim D_w0:", record.gdim().to_string())
print("BS summands:", [(x.label, shift) for x, shift in record.summands])

###---------------------------------------------------------------------------.
#### p-canonical basis
pb = p_canonical(w0, prime, cache_dir=cache_dir)
print(pb.to_dict())
print("Defect from the KL basis:", p_canonical_defect(w0, prime, cache_dir=cache_dir))

###---------------------------------------------------------------------------.
#### Independence of the reduced word
results = decompose_reduced_words(w0, prime, progress_bar=True, cache_dir=cache_dir)
print(results)

###---------------------------------------------------------------------------.
#### Principal block of category O in characteristic p
# - Requires p bigger than the Coxeter number and not a torsion prime
# - force=True computes anyway and raises ValidityWarning
matrix = decomposition_matrix(datum, prime, cache_dir=cache_dir)
print(matrix.map(lambda poly: poly.to_string()))

print(simple_multiplicities(datum, prime, cache_dir=cache_dir))
print(simple_characters(datum, prime, cache_dir=cache_dir))
