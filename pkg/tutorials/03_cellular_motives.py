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
    StrataPoset,
    flag_strata,
    partial_flag_strata,
    motivic_cohomology,
    projective_bundle,
    localization_check,
    ExtrapolatedResultWarning,
)

###---------------------------------------------------------------------------.
#### Stratification of the flag variety G/B
datum = build_root_datum("A", 2)
X = flag_strata(datum)
print(X, X.labels)

###---------------------------------------------------------------------------.
#### Motivic cohomology table
# - Entries are [j, i, dim] of H^j(X, k(i))
print(motivic_cohomology(X).to_list())

###---------------------------------------------------------------------------.
#### Partial flag variety G/P_s
# - s is a 0-based generator index
P = partial_flag_strata(datum, 0)
print(P.labels, motivic_cohomology(P).to_list())

###---------------------------------------------------------------------------.
#### Projective bundle over the projective plane
P2 = StrataPoset([("pt", 0), ("A1", 1), ("A2", 2)], [("pt", "A1"), ("A1", "A2")])
print(projective_bundle(P2, 2).to_list())

###---------------------------------------------------------------------------.
#### Localization for a closed union of cells
result = localization_check(X, closed=["e", "s1"])
print(result)

###---------------------------------------------------------------------------.
#### Posets with several maximal strata
# - The table is obtained by additivity and flagged as extrapolated
two_points = StrataPoset([("a", 0), ("b", 0)])
with warnings.catch_warnings():
    warnings.simplefilter("ignore", ExtrapolatedResultWarning)
    table = motivic_cohomology(two_points)
print(table.to_list(), table.extrapolated)
