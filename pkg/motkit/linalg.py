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
"""Define exact linear algebra over F_p (galois) and over Z (sympy).

Matrices are exchanged as numpy int64 arrays with entries in [0, p).
Empty shapes are handled here so that callers never special-case them.
"""

import functools

import galois
import numpy as np
from sympy import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import smith_normal_decomp

####--------------------------------------------------------------------------.
#### Finite fields


@functools.lru_cache(maxsize=None)
def get_field(prime):
    """Return the galois field class GF(prime)."""
    return galois.GF(prime)


def as_int_matrix(matrix, ncols=None):
    """Return matrix as a 2D int64 array."""
    matrix = np.asarray(matrix, dtype=np.int64)
    if matrix.ndim == 1:
        matrix = matrix.reshape(1, -1) if ncols is None else matrix.reshape(-1, ncols)
    return matrix


def to_field(matrix, prime):
    """Return the galois FieldArray of an integer matrix reduced mod prime."""
    field = get_field(prime)
    return field(np.mod(np.asarray(matrix, dtype=np.int64), prime))


def from_field(array):
    """Return the integer representatives of a galois FieldArray."""
    return np.asarray(array.view(np.ndarray), dtype=np.int64)


def mod(matrix, prime):
    return np.mod(matrix, prime)


def matmul(a, b, prime):
    """Return (a @ b) mod prime, supporting empty shapes."""
    return np.mod(np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64), prime)


def matrix_power(matrix, exponent, prime):
    """Return matrix**exponent mod prime by repeated squaring."""
    n = matrix.shape[0]
    result = np.eye(n, dtype=np.int64)
    base = np.mod(matrix, prime)
    while exponent > 0:
        if exponent & 1:
            result = matmul(result, base, prime)
        base = matmul(base, base, prime)
        exponent >>= 1
    return result


def characteristic_poly(matrix, prime):
    """Return det(x - matrix) as a galois Poly over GF(prime)."""
    field = get_field(prime)
    matrix = np.mod(np.asarray(matrix, dtype=np.int64), prime)
    if matrix.shape == (1, 1):
        # galois cannot take the characteristic polynomial of a 1x1 matrix
        return galois.Poly([1, int(-matrix[0, 0]) % prime], field=field)
    return field(matrix).characteristic_poly()


def poly_at_matrix(poly, matrix, prime):
    """Return g(matrix) mod prime for a galois Poly g, by Horner's rule."""
    matrix = np.mod(np.asarray(matrix, dtype=np.int64), prime)
    identity = np.eye(matrix.shape[0], dtype=np.int64)
    result = np.zeros_like(identity)
    for coeff in poly.coeffs:
        result = np.mod(matmul(result, matrix, prime) + int(coeff) * identity, prime)
    return result


####--------------------------------------------------------------------------.
#### Echelon forms


def rref(matrix, prime):
    """Return (R, pivots): the nonzero rows of the reduced row echelon form.

    Parameters
    ----------
    matrix : array-like
        Integer matrix, reduced mod prime.
    prime : int
        Characteristic.

    Returns
    -------
    tuple
        R is an int64 array with one row per pivot. pivots lists the pivot columns.
    """
    matrix = np.mod(np.asarray(matrix, dtype=np.int64), prime)
    nrows, ncols = matrix.shape
    if nrows == 0 or ncols == 0 or not matrix.any():
        return np.zeros((0, ncols), dtype=np.int64), []
    reduced = from_field(to_field(matrix, prime).row_reduce())
    reduced = reduced[reduced.any(axis=1)]
    pivots = [int(np.flatnonzero(row)[0]) for row in reduced]
    return reduced, pivots


def rank(matrix, prime):
    """Return the rank over F_p."""
    matrix = np.asarray(matrix, dtype=np.int64)
    if matrix.size == 0:
        return 0
    return len(rref(matrix, prime)[1])


def null_space(matrix, prime):
    """Return a basis (as rows) of {x : matrix @ x = 0} over F_p."""
    matrix = np.mod(np.asarray(matrix, dtype=np.int64), prime)
    nrows, ncols = matrix.shape
    if ncols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if nrows == 0 or not matrix.any():
        return np.eye(ncols, dtype=np.int64)
    basis = from_field(to_field(matrix, prime).null_space())
    return basis.reshape(-1, ncols)


def row_space(vectors, prime):
    """Return (R, pivots), an echelonized basis of the span of the rows."""
    return rref(vectors, prime)


def column_space(matrix, prime):
    """Return (R, pivots), an echelonized basis (as rows) of the column span."""
    matrix = np.asarray(matrix, dtype=np.int64)
    return rref(matrix.T, prime)


def coordinates(basis_pivots, vectors):
    """Return coordinates of column vectors lying in an echelonized span.

    For R in reduced row echelon form, v = sum_r v[pivot_r] R_r.
    """
    return np.asarray(vectors, dtype=np.int64)[list(basis_pivots), :]


def inverse(matrix, prime):
    """Return the inverse over F_p."""
    matrix = np.asarray(matrix, dtype=np.int64)
    if matrix.size == 0:
        return matrix.copy()
    return from_field(np.linalg.inv(to_field(matrix, prime)))


def is_invertible(matrix, prime):
    matrix = np.asarray(matrix, dtype=np.int64)
    if matrix.shape[0] != matrix.shape[1]:
        return False
    return rank(matrix, prime) == matrix.shape[0]


####--------------------------------------------------------------------------.
#### Integral lattices


def integer_kernel(matrix):
    """Return a Z-basis (as rows) of {x in Z^n : matrix @ x = 0}.

    Uses the Smith decomposition D = U M V: the kernel is spanned by the
    columns of V beyond the rank of D.
    """
    matrix = np.asarray(matrix, dtype=np.int64)
    nrows, ncols = matrix.shape
    if ncols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if nrows == 0 or not matrix.any():
        return np.eye(ncols, dtype=np.int64)
    smf, _, right = smith_normal_decomp(DM(matrix.tolist(), ZZ))
    diagonal = smf.to_list()
    matrix_rank = sum(1 for i in range(min(nrows, ncols)) if diagonal[i][i] != 0)
    right = right.to_list()
    kernel = [[int(right[i][j]) for i in range(ncols)] for j in range(matrix_rank, ncols)]
    return np.array(kernel, dtype=np.int64).reshape(-1, ncols)
