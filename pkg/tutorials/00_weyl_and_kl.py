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
    longest_element,
    weyl_elements,
    bruhat_leq,
    reduced_words,
    kl_basis,
    kl_polynomial,
    mu_coefficient,
    bs_character,
)

###---------------------------------------------------------------------------.
#### Define the root datum
# - Cartan types A, B, C, D, E, F, G
# - Aliases such as "SL" or "Sp" are accepted
datum = build_root_datum("B", 2)
print(datum)

###---------------------------------------------------------------------------.
#### List the Weyl group
# - Elements are sorted by length, then by their shortlex reduced word
for w in weyl_elements(datum):
    print(w.label, w.length, sorted(w.left_descents))

w0 = longest_element(datum)
print("Longest element:", w0.label)
print("Reduced words:", [list(word) for word in reduced_words(w0)])

###---------------------------------------------------------------------------.
#### Bruhat order
x = parse_element(datum, "s1")
y = parse_element(datum, "s1 s2 s1")
print(f"{x.label} <= {y.label}:", bruhat_leq(x, y))

###---------------------------------------------------------------------------.
#### Kazhdan-Lusztig basis
b_w0 = kl_basis(w0)
for w in b_w0.support:
    print(w.label, b_w0.coefficient(w).to_string())

print("h_{e,w0} =", kl_polynomial(parse_element(datum, "e"), w0).to_string())
print("mu(s1, s1 s2 s1) =", mu_coefficient(x, y))

###---------------------------------------------------------------------------.
#### Character of a Bott-Samelson bimodule
# - Words are 0-based generator indices, the first letter is applied first
character = bs_character(datum, [0, 1, 0])
print(character.to_dict())
