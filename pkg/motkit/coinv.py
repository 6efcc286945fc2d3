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
"""Define the symmetric algebra S(X(T)), Demazure operators and the coinvariant algebra.

Polynomials are sympy ring elements in x1..xr, where xi is the i-th
fundamental weight and has degree 2. The coinvariant algebra

    C = (S(X(T)) / S(X(T))^W_+) (x) F_p

is built from the integral invariants, reduced mod p afterwards.
Its elements are dictionaries {even degree: coordinate vector}.
"""

import functools
import itertools
import sys
import threading
import time

import numpy as np
from sympy import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import ring
from tqdm import tqdm

from motkit.alias import COINVARIANT_DEGREE_FACTOR, COINVARIANT_MAX_RANK
from motkit.checks import ConsistencyError, PreconditionError, _check_generator, _check_prime
from motkit.coxeter import simple_reflection, torsion_primes
from motkit.hecke import LaurentPoly
from motkit.linalg import integer_kernel, matmul, rank, rref

####--------------------------------------------------------------------------.
#### Symmetric algebra


@functools.lru_cache(maxsize=None)
def polynomial_ring(datum):
    """Return the ring Z[x1, ..., xr] of the root datum."""
    names = ",".join(f"x{i + 1}" for i in range(datum.rank))
    return ring(names, ZZ)[0]


def fundamental_weight(datum, i):
    """Return the degree-2 generator x_i."""
    return polynomial_ring(datum).gens[i]


def simple_root_polynomial(datum, s):
    """Return alpha_s = sum_m A[m, s] x_m."""
    poly_ring = polynomial_ring(datum)
    alpha = poly_ring.zero
    for m, gen in enumerate(poly_ring.gens):
        alpha += int(datum.cartan_matrix[m, s]) * gen
    return alpha


def weyl_act(w, f):
    """Return w.f, the substitution x_j -> w(x_j) = sum_m w[m, j] x_m."""
    gens = f.ring.gens
    images = []
    for j in range(len(gens)):
        image = f.ring.zero
        for m, gen in enumerate(gens):
            image += int(w.matrix[m, j]) * gen
        images.append(image)
    return f.compose(list(zip(gens, images)))


def demazure(datum, s, f):
    """Return the Demazure operator (f - s.f) / alpha_s over Z.

    Parameters
    ----------
    datum : RootDatum
        The root datum.
    s : int
        Simple reflection index (0-based).
    f : sympy.polys.rings.PolyElement
        Integral polynomial of Z[x1..xr].
    """
    s = _check_generator(s, datum.rank)
    if f.ring.domain != ZZ:
        raise PreconditionError("Demazure operators are applied to integral polynomials only.")
    difference = f - weyl_act(simple_reflection(datum, s), f)
    try:
        return difference.exquo(simple_root_polynomial(datum, s))
    except ExactQuotientFailed:
        raise ConsistencyError(f"Division by alpha_{s + 1} is not exact for {f}.")


def _monomials(rank, degree):
    """Return the exponent vectors of total degree `degree`, in descending lex order."""
    exponents = []
    for combo in itertools.combinations_with_replacement(range(rank), degree):
        exponent = [0] * rank
        for i in combo:
            exponent[i] += 1
        exponents.append(tuple(exponent))
    return exponents


def _add_exponents(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _unit_exponent(rank, j):
    return tuple(int(k == j) for k in range(rank))


def _reflection_matrix(datum, s, monomials, index):
    """Return the integer matrix of s acting on the monomials of one degree."""
    poly_ring = polynomial_ring(datum)
    reflection = simple_reflection(datum, s)
    matrix = np.zeros((len(monomials), len(monomials)), dtype=np.int64)
    for col, monomial in enumerate(monomials):
        image = weyl_act(reflection, poly_ring.from_dict({monomial: 1}))
        for exponent, coeff in image.items():
            matrix[index[exponent], col] += int(coeff)
    return matrix


####--------------------------------------------------------------------------.
#### Coinvariant algebra


class CoinvariantAlgebra:
    """The coinvariant algebra C over F_p with a standard-monomial basis per degree.

    Attributes
    ----------
    datum : RootDatum
    prime : int
    dims : dict
        {even degree: dimension} for the nonzero components.
    basis : dict
        {even degree: list of standard monomials (exponent tuples)}.
    generator_actions : list
        generator_actions[j][d] is the matrix of x_j from C_d to C_{d+2}.
    generator_images : list
        Coordinates of x_j in C_2.
    invariant_ranks : dict
        {polynomial degree: rank of the integral invariants}.
    """

    def __init__(self, datum, prime, verbose=False, progress_bar=False):
        self.datum = datum
        self.prime = prime
        self.ring = polynomial_ring(datum)
        self._lock = threading.RLock()
        self._mult_cache = {}
        self._demazure_cache = {}
        self._reflection_cache = {}
        self._split_cache = {}
        self._build(verbose=verbose, progress_bar=progress_bar)

    ####----------------------------------------------------------------------.
    #### Construction

    def _build(self, verbose, progress_bar):
        datum, p = self.datum, self.prime
        rank_ = datum.rank
        # C vanishes above degree 2N away from torsion primes, and is finite in any case
        max_k = COINVARIANT_DEGREE_FACTOR * (datum.longest_length + 1)
        t_i = time.time()
        if verbose:
            print("-------------------------------------------------------------------- ", file=sys.stderr)
            print(f"Starting building the coinvariant algebra of {datum.label} at p={p}.", file=sys.stderr)

        self._monomials = {}
        self._index = {}
        self._ideal = {0: (np.zeros((0, 1), dtype=np.int64), [])}
        self._normal_forms = {}
        self.invariant_ranks = {}
        standard_columns = {}

        self._monomials[0] = _monomials(rank_, 0)
        self._index[0] = {self._monomials[0][0]: 0}
        self._normal_forms[0] = np.ones((1, 1), dtype=np.int64)
        standard_columns[0] = [0]

        degrees = range(1, max_k + 1)
        if progress_bar:
            degrees = tqdm(degrees)
        for k in degrees:
            monomials = _monomials(rank_, k)
            index = {monomial: i for i, monomial in enumerate(monomials)}
            self._monomials[k] = monomials
            self._index[k] = index
            n_monomials = len(monomials)

            # Integral invariants: the integer kernel of the stacked (s_i - 1)
            stacked = np.vstack(
                [
                    _reflection_matrix(datum, s, monomials, index) - np.eye(n_monomials, dtype=np.int64)
                    for s in range(rank_)
                ]
            )
            invariants = integer_kernel(stacked)
            self.invariant_ranks[k] = int(invariants.shape[0])

            # Ideal in degree k: x_j * I_{k-1} + invariants mod p
            rows = [np.mod(invariants, p)]
            previous, _ = self._ideal[k - 1]
            if previous.shape[0] > 0:
                for j in range(rank_):
                    unit = _unit_exponent(rank_, j)
                    target = [index[_add_exponents(m, unit)] for m in self._monomials[k - 1]]
                    shifted = np.zeros((previous.shape[0], n_monomials), dtype=np.int64)
                    shifted[:, target] = previous
                    rows.append(shifted)
            reduced, pivots = rref(np.vstack(rows), p)
            self._ideal[k] = (reduced, pivots)

            # Normal forms of monomials modulo the ideal
            pivot_set = set(pivots)
            standard = [c for c in range(n_monomials) if c not in pivot_set]
            normal_form = np.zeros((n_monomials, len(standard)), dtype=np.int64)
            for position, c in enumerate(standard):
                normal_form[c, position] = 1
            for row, c in enumerate(pivots):
                normal_form[c, :] = np.mod(-reduced[row, standard], p)
            self._normal_forms[k] = normal_form
            standard_columns[k] = standard
            if verbose:
                print(
                    f" - degree {2 * k}: {n_monomials} monomials, "
                    f"{self.invariant_ranks[k]} integral invariants, dim {len(standard)}",
                    file=sys.stderr,
                )

            if not standard:
                break

        top_k = max(standard_columns)
        if standard_columns[top_k]:
            dims = [len(standard_columns[k]) for k in range(top_k + 1)]
            raise ConsistencyError(
                f"The coinvariant algebra of {datum.label} at p={p} does not vanish up to degree "
                f"{2 * top_k}. Dimensions by degree: {dims}. "
                f"Integral invariant ranks: {self.invariant_ranks}."
            )

        self.top_degree = 2 * (top_k - 1)
        self.dims = {}
        self.basis = {}
        for k in range(top_k):
            if standard_columns[k]:
                self.dims[2 * k] = len(standard_columns[k])
                self.basis[2 * k] = [self._monomials[k][c] for c in standard_columns[k]]

        # Multiplication by the degree-2 generators
        self.generator_actions = []
        for j in range(rank_):
            unit = _unit_exponent(rank_, j)
            actions = {}
            for d, basis in self.basis.items():
                k = d // 2
                columns = [self._normal_forms[k + 1][self._index[k + 1][_add_exponents(b, unit)]] for b in basis]
                if self.dim(d + 2) == 0:
                    actions[d] = np.zeros((0, len(basis)), dtype=np.int64)
                else:
                    actions[d] = np.array(columns, dtype=np.int64).T.reshape(self.dim(d + 2), len(basis))
            self.generator_actions.append(actions)
        self.generator_images = [self.reduce(gen).get(2, np.zeros(self.dim(2), dtype=np.int64)) for gen in self.ring.gens]

        if verbose:
            t_elapsed = round(time.time() - t_i)
            print(
                f"--> Coinvariant algebra of total dimension {self.total_dimension} built in {t_elapsed} seconds !",
                file=sys.stderr,
            )
            print("-------------------------------------------------------------------- ", file=sys.stderr)

    ####----------------------------------------------------------------------.
    #### Basic accessors

    def dim(self, degree):
        return self.dims.get(degree, 0)

    @property
    def degrees(self):
        return sorted(self.dims)

    @property
    def total_dimension(self):
        return sum(self.dims.values())

    @property
    def rank(self):
        return self.datum.rank

    def zero(self, degree):
        return np.zeros(self.dim(degree), dtype=np.int64)

    def ideal_relations(self, poly_degree):
        """Return (rows, monomials): an echelonized spanning set of the ideal in one degree."""
        reduced, _ = self._ideal.get(poly_degree, (np.zeros((0, 0), dtype=np.int64), []))
        return reduced, self._monomials.get(poly_degree, [])

    ####----------------------------------------------------------------------.
    #### Conversions

    def reduce(self, f):
        """Return the class of an integral polynomial as {even degree: vector}."""
        element = {}
        for exponent, coeff in f.items():
            k = sum(exponent)
            if 2 * k > self.top_degree or self.dim(2 * k) == 0:
                continue
            row = self._normal_forms[k][self._index[k][exponent]]
            element[2 * k] = np.mod(element.get(2 * k, self.zero(2 * k)) + int(coeff) * row, self.prime)
        return {d: v for d, v in element.items() if v.any()}

    def lift(self, degree, vector):
        """Return the integral standard-monomial lift of a homogeneous element."""
        poly = self.ring.zero
        for coeff, monomial in zip(vector, self.basis.get(degree, [])):
            if coeff:
                poly += self.ring.from_dict({monomial: int(coeff)})
        return poly

    def element_from_polynomial(self, f):
        return self.reduce(f)

    def element_to_polynomial(self, element):
        poly = self.ring.zero
        for degree, vector in element.items():
            poly += self.lift(degree, vector)
        return poly

    ####----------------------------------------------------------------------.
    #### Multiplication

    def multiplication_table(self, d1, d2):
        """Return T with T[i, j] the coordinates of basis_i(d1) * basis_j(d2)."""
        with self._lock:
            key = (d1, d2)
            if key not in self._mult_cache:
                target = d1 + d2
                table = np.zeros((self.dim(d1), self.dim(d2), self.dim(target)), dtype=np.int64)
                if self.dim(target) > 0:
                    k = target // 2
                    for i, b1 in enumerate(self.basis.get(d1, [])):
                        for j, b2 in enumerate(self.basis.get(d2, [])):
                            table[i, j] = self._normal_forms[k][self._index[k][_add_exponents(b1, b2)]]
                self._mult_cache[key] = table
            return self._mult_cache[key]

    @property
    def mult_table(self):
        """Return the full table of structure constants {(d1, d2): array}."""
        return {(d1, d2): self.multiplication_table(d1, d2) for d1 in self.degrees for d2 in self.degrees}

    def multiply(self, a, b):
        """Return the product of two elements {degree: vector}."""
        product = {}
        for d1, v1 in a.items():
            for d2, v2 in b.items():
                target = d1 + d2
                if self.dim(target) == 0:
                    continue
                table = self.multiplication_table(d1, d2)
                value = np.einsum("i,j,ijk->k", v1, v2, table)
                product[target] = np.mod(product.get(target, self.zero(target)) + value, self.prime)
        return {d: v for d, v in product.items() if v.any()}

    def add(self, a, b, scale=1):
        """Return a + scale * b."""
        result = {d: v.copy() for d, v in a.items()}
        for d, v in b.items():
            result[d] = np.mod(result.get(d, self.zero(d)) + scale * v, self.prime)
        return {d: v for d, v in result.items() if v.any()}

    ####----------------------------------------------------------------------.
    #### Weyl group action and Demazure operators on C

    def reflection_matrices(self, s):
        """Return {d: matrix of s on C_d}."""
        s = _check_generator(s, self.rank)
        with self._lock:
            if s not in self._reflection_cache:
                reflection = simple_reflection(self.datum, s)
                matrices = {}
                for d, basis in self.basis.items():
                    columns = [
                        self.reduce(weyl_act(reflection, self.ring.from_dict({b: 1}))).get(d, self.zero(d))
                        for b in basis
                    ]
                    matrices[d] = np.array(columns, dtype=np.int64).T.reshape(self.dim(d), len(basis))
                self._reflection_cache[s] = matrices
            return self._reflection_cache[s]

    def demazure_matrices(self, s):
        """Return {d: matrix of the Demazure operator from C_d to C_{d-2}}."""
        s = _check_generator(s, self.rank)
        with self._lock:
            if s not in self._demazure_cache:
                matrices = {}
                for d, basis in self.basis.items():
                    columns = [
                        self.reduce(demazure(self.datum, s, self.ring.from_dict({b: 1}))).get(d - 2, self.zero(d - 2))
                        for b in basis
                    ]
                    matrices[d] = np.array(columns, dtype=np.int64).T.reshape(self.dim(d - 2), len(basis))
                self._demazure_cache[s] = matrices
            return self._demazure_cache[s]

    def split_element(self, s):
        """Return a degree-2 integral polynomial x with d_s(x) = 1.

        Candidates are tried in a fixed order: x_s, then x_s +- x_j for j != s.
        """
        s = _check_generator(s, self.rank)
        with self._lock:
            if s not in self._split_cache:
                gens = self.ring.gens
                candidates = [gens[s]]
                for j in range(self.rank):
                    if j != s:
                        candidates.extend([gens[s] + gens[j], gens[s] - gens[j]])
                for x in candidates:
                    if demazure(self.datum, s, x) == self.ring.one:
                        self._split_cache[s] = x
                        break
                else:
                    raise PreconditionError(
                        f"No degree-2 element x with d_s(x) = 1 found for s{s + 1} at p={self.prime}."
                    )
            return self._split_cache[s]

    def multiplication_by_linear(self, x, degree):
        """Return the matrix of multiplication by a linear polynomial from C_d to C_{d+2}."""
        matrix = np.zeros((self.dim(degree + 2), self.dim(degree)), dtype=np.int64)
        for exponent, coeff in x.items():
            j = exponent.index(1)
            matrix = matrix + int(coeff) * self.generator_actions[j].get(degree, np.zeros_like(matrix))
        return np.mod(matrix, self.prime)

    def __repr__(self):
        return f"CoinvariantAlgebra({self.datum.label}, p={self.prime}, dims={self.dims})"


_COINVARIANT_ALGEBRAS = {}
_COINVARIANT_LOCK = threading.Lock()


def build_coinvariant(datum, prime, verbose=False, progress_bar=False):
    """Build the coinvariant algebra C of a root datum over F_p.

    Parameters
    ----------
    datum : RootDatum
        Root datum of rank at most 4.
    prime : int
        Characteristic of the coefficient field.
    verbose : bool, optional
        If True, print the per-degree construction summary on stderr.
        The default is False.
    progress_bar : bool, optional
        If True, display a tqdm progress bar over degrees. The default is False.

    Returns
    -------
    CoinvariantAlgebra
    """
    prime = _check_prime(prime)
    if datum.rank > COINVARIANT_MAX_RANK:
        raise PreconditionError(
            f"Coinvariant algebras are built up to rank {COINVARIANT_MAX_RANK}, got {datum.label}."
        )
    key = (datum, prime)
    with _COINVARIANT_LOCK:
        if key not in _COINVARIANT_ALGEBRAS:
            _COINVARIANT_ALGEBRAS[key] = CoinvariantAlgebra(
                datum, prime, verbose=verbose, progress_bar=progress_bar
            )
        return _COINVARIANT_ALGEBRAS[key]


####--------------------------------------------------------------------------.
#### Operations on C


def cs_split(C, s, c):
    """Split c = a + x*b with a, b in C^s and b = d_s(c).

    Parameters
    ----------
    C : CoinvariantAlgebra
    s : int
        Simple reflection index (0-based).
    c : dict
        Element {even degree: vector}.

    Returns
    -------
    tuple
        (a, b) as elements {even degree: vector}.
    """
    x = C.split_element(s)
    demazure_matrices = C.demazure_matrices(s)
    b = {}
    for d, vector in c.items():
        if d - 2 < 0 or C.dim(d - 2) == 0:
            continue
        image = matmul(demazure_matrices[d], vector, C.prime)
        if image.any():
            b[d - 2] = image
    xb = {}
    for d, vector in b.items():
        image = matmul(C.multiplication_by_linear(x, d), vector, C.prime)
        if image.any():
            xb[d + 2] = image
    a = C.add(c, xb, scale=-1)
    return a, b


def s_action(C, s, c):
    """Return s.c for an element of C."""
    matrices = C.reflection_matrices(s)
    result = {d: matmul(matrices[d], v, C.prime) for d, v in c.items()}
    return {d: v for d, v in result.items() if v.any()}


def demazure_C(C, s, c):
    """Return d_s(c) for an element of C."""
    matrices = C.demazure_matrices(s)
    result = {d - 2: matmul(matrices[d], v, C.prime) for d, v in c.items() if d >= 2}
    return {d: v for d, v in result.items() if v.any()}


def poincare_poly(C):
    """Return sum_d dim(C_d) t^d as a LaurentPoly in t."""
    return LaurentPoly(C.dims)


def invariant_subalgebra_dims(C, s):
    """Return {even degree: dim C^s_d} with C^s the kernel of d_s."""
    matrices = C.demazure_matrices(s)
    dims = {}
    for d in C.degrees:
        value = C.dim(d) - rank(matrices[d], C.prime)
        if value:
            dims[d] = value
    return dims


def prime_ok(C):
    """Return True if the characteristic is not a torsion prime."""
    return C.prime not in torsion_primes(C.datum)
