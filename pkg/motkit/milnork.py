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
"""Define Milnor K-groups of small finite fields and the Hom table of Tate objects.

The unit group of F_q is cyclic of order m = q - 1, so its n-fold tensor power
is Z/m, with a_1 (x) ... (x) a_n sent to the product of the discrete logarithms.
K_n is the quotient by the Steinberg elements a (x) (1 - a) in adjacent slots.
"""

import functools
import itertools

import galois
import pandas as pd
from sympy import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import invariant_factors

from motkit.alias import MILNOR_MAX_N, MILNOR_MAX_Q
from motkit.checks import ConsistencyError, PreconditionError, _check_prime, _check_prime_power

####--------------------------------------------------------------------------.
#### Finite fields


class FqUnits:
    """Unit group of F_q with a primitive element and its discrete logarithm table."""

    def __init__(self, q):
        self.q = _check_prime_power(q)
        self.field = galois.GF(self.q)
        self.generator = self.field.primitive_element
        self.order = self.q - 1
        self.log = {}
        x = self.field(1)
        for exponent in range(self.order):
            self.log[int(x)] = exponent
            x = x * self.generator
        if len(self.log) != self.order:
            raise ConsistencyError(f"The primitive element of F_{self.q} does not generate the units.")

    def units(self):
        return [self.field(value) for value in sorted(self.log)]

    def __repr__(self):
        return f"FqUnits(q={self.q}, generator={int(self.generator)})"


@functools.lru_cache(maxsize=None)
def unit_group(q):
    """Return the FqUnits of F_q."""
    return FqUnits(q)


####--------------------------------------------------------------------------.
#### Milnor K-theory


class AbGroupInvariants:
    """Finitely generated abelian group Z^free_rank + sum Z/d_i with d_1 | d_2 | ..."""

    def __init__(self, divisors=(), free_rank=0):
        self.divisors = sorted(int(d) for d in divisors if int(d) != 1)
        if any(d <= 1 for d in self.divisors):
            raise ValueError("Elementary divisors must be bigger than 1.")
        self.free_rank = int(free_rank)

    @property
    def order(self):
        """Return the group order, or None if the group is infinite."""
        if self.free_rank:
            return None
        order = 1
        for d in self.divisors:
            order *= d
        return order

    def is_trivial(self):
        return self.free_rank == 0 and not self.divisors

    def dim_mod(self, p):
        """Return dim over F_p of the group tensored with F_p."""
        return self.free_rank + sum(1 for d in self.divisors if d % p == 0)

    def to_list(self):
        """Return the invariants, writing Z as the sentinel 0."""
        return [0] * self.free_rank + list(self.divisors)

    def __eq__(self, other):
        if not isinstance(other, AbGroupInvariants):
            return NotImplemented
        return (self.divisors, self.free_rank) == (other.divisors, other.free_rank)

    def __repr__(self):
        return f"AbGroupInvariants({self.to_list()})"


def _check_milnor_bounds(q, n):
    q = _check_prime_power(q)
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError("`n` must be a non-negative integer.")
    if q > MILNOR_MAX_Q or n > MILNOR_MAX_N:
        raise PreconditionError(
            f"Milnor K-groups are computed for q <= {MILNOR_MAX_Q} and n <= {MILNOR_MAX_N}, got q={q}, n={n}."
        )
    return q, n


def steinberg_relations(q, n):
    """Return the images in Z/(q-1) of the Steinberg elements of the n-th tensor power."""
    if n < 2:
        return []
    units = unit_group(q)
    m = units.order
    one = units.field(1)
    logs = sorted(units.log.values())
    steinberg = [
        units.log[int(a)] * units.log[int(one - a)] % m for a in units.units() if a != one
    ]
    # Every adjacent pair of slots gives the same image in Z/m
    values = set()
    for value in steinberg:
        for others in itertools.product(logs, repeat=n - 2):
            product = value
            for log in others:
                product = product * log % m
            values.add(product)
    return sorted(values)


def milnor_k(q, n):
    """Return the invariants of K^M_n(F_q).

    K_0 = Z, K_1 = Z/(q-1) and higher groups are computed as the quotient of
    Z/(q-1) by the Steinberg relations, via the integral Smith normal form.
    """
    q, n = _check_milnor_bounds(q, n)
    if n == 0:
        return AbGroupInvariants(free_rank=1)
    m = q - 1
    relations = [m] + steinberg_relations(q, n)
    matrix = DM([[value] for value in relations], ZZ)
    factors = [int(d) for d in invariant_factors(matrix)]
    return AbGroupInvariants([d for d in factors if d > 1])


def milnor_k_table(qs, ns):
    """Return a DataFrame with the invariants of K^M_n(F_q) for all pairs."""
    rows = []
    for q, n in itertools.product(qs, ns):
        group = milnor_k(q, n)
        rows.append({"q": q, "n": n, "invariants": group.to_list(), "order": group.order})
    return pd.DataFrame(rows, columns=["q", "n", "invariants", "order"])


####--------------------------------------------------------------------------.
#### Tate objects over the algebraic closure


def tate_levels(p, n):
    """Return [{q, invariants, dim}] for K^M_n(F_q) (x) F_p over q = p, p^2, p^3 within bounds."""
    p = _check_prime(p)
    levels = []
    for exponent in (1, 2, 3):
        q = p**exponent
        if q > MILNOR_MAX_Q:
            break
        group = milnor_k(q, n)
        levels.append({"q": q, "invariants": group.to_list(), "dim": group.dim_mod(p)})
    return levels


def tate_hom(p, i, j, verify=True):
    """Return dim Hom(1, 1(i)[j]) over the algebraic closure of F_p with F_p coefficients.

    It is 1 for i = j = 0 and 0 otherwise. With verify=True and 0 <= i = j <= 3,
    the value is checked against K^M_i(F_q) (x) F_p over the tower q = p, p^2, p^3.
    """
    p = _check_prime(p)
    value = int(i == 0 and j == 0)
    if verify and i == j and 0 <= i <= MILNOR_MAX_N:
        for level in tate_levels(p, i):
            if level["dim"] != value:
                raise ConsistencyError(
                    f"K^M_{i}(F_{level['q']}) (x) F_{p} has dimension {level['dim']}, expected {value}."
                )
    return value
