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

from motkit import milnor_k, milnor_k_table, tate_hom

###---------------------------------------------------------------------------.
#### Milnor K-groups of a finite field
# - Invariants are elementary divisors, Z is written as 0
for n in range(4):
    print(f"K_{n}(F_9) =", milnor_k(9, n).to_list())

###---------------------------------------------------------------------------.
#### Table over several fields
qs = [2, 3, 4, 5, 7, 8, 9]
ns = [0, 1, 2]
print(milnor_k_table(qs, ns))

###---------------------------------------------------------------------------.
#### Hom between Tate objects over the algebraic closure of F_p
# - The value is checked against K_i(F_q) (x) F_p over q = p, p^2, p^3
prime = 5
for i in range(3):
    print(i, [tate_hom(prime, i, j) for j in range(3)])
