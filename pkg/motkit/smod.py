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
"""Define graded C-modules, translation functors, Bott-Samelson modules and Homs.

A graded module is described by its dimensions in even degrees and, for each
degree-2 generator x_j of C, the matrices of x_j from M_d to M_{d+2}.
Vectors are columns; matrices have entries in [0, p).
"""

import numpy as np

from motkit.checks import ConsistencyError, PreconditionError, _check_even_shift, _check_generator
from motkit.coinv import demazure
from motkit.hecke import LaurentPoly
from motkit.linalg import coordinates, matmul, null_space, rank

####--------------------------------------------------------------------------.
#### Graded modules


class GradedModule:
    """Finite dimensional graded module over a coinvariant algebra.

    Parameters
    ----------
    algebra : CoinvariantAlgebra
        The algebra C acting on the module.
    dims : dict
        {even degree: dimension}.
    action : list
        action[j] is a dictionary {d: matrix of x_j from M_d to M_{d+2}}.
        Missing matrices are zero.
    validate : bool, optional
        Check commutativity and sampled relations of C. The default is True.
    full_check : bool, optional
        Evaluate every relation of C instead of one random combination
        per degree. The default is False.
    """

    def __init__(self, algebra, dims, action=None, validate=True, full_check=False):
        self.algebra = algebra
        self.dims = {}
        for degree, dim in dims.items():
            degree, dim = int(degree), int(dim)
            if dim < 0:
                raise ValueError("Module dimensions must be non-negative.")
            if dim == 0:
                continue
            if degree % 2 != 0:
                raise PreconditionError(f"Graded modules live in even degrees, got degree {degree}.")
            self.dims[degree] = dim
        action = action if action is not None else [{} for _ in range(algebra.rank)]
        if len(action) != algebra.rank:
            raise ValueError(f"Expected {algebra.rank} generator actions, got {len(action)}.")
        self.action = []
        for generator_action in action:
            matrices = {}
            for degree in self.dims:
                shape = (self.dim(degree + 2), self.dim(degree))
                matrix = generator_action.get(degree)
                if matrix is None:
                    matrix = np.zeros(shape, dtype=np.int64)
                matrix = np.mod(np.asarray(matrix, dtype=np.int64).reshape(shape), algebra.prime)
                matrices[degree] = matrix
            self.action.append(matrices)
        self._fingerprint = None
        if validate:
            validate_module(self, full=full_check)

    @property
    def prime(self):
        return self.algebra.prime

    @property
    def degrees(self):
        return sorted(self.dims)

    @property
    def bottom_degree(self):
        return min(self.dims) if self.dims else 0

    @property
    def top_degree(self):
        return max(self.dims) if self.dims else 0

    @property
    def total_dimension(self):
        return sum(self.dims.values())

    def dim(self, degree):
        return self.dims.get(degree, 0)

    def is_zero(self):
        return not self.dims

    def matrix(self, j, degree):
        """Return the matrix of x_j from M_degree to M_{degree+2}."""
        matrix = self.action[j].get(degree)
        if matrix is None:
            return np.zeros((self.dim(degree + 2), self.dim(degree)), dtype=np.int64)
        return matrix

    def gdim(self):
        return graded_dimension(self)

    def __repr__(self):
        return f"GradedModule(dims={dict(sorted(self.dims.items()))}, p={self.prime})"


def graded_dimension(M):
    """Return sum_d dim(M_d) v^(d/2), counting degrees in units of 2."""
    return LaurentPoly({d // 2: n for d, n in M.dims.items()})


def _monomial_operator(M, exponent, degree, memo):
    """Return the matrix of x^exponent from M_degree to M_{degree + 2|exponent|}."""
    key = (degree, exponent)
    if key in memo:
        return memo[key]
    if sum(exponent) == 0:
        result = np.eye(M.dim(degree), dtype=np.int64)
    else:
        j = next(i for i, e in enumerate(exponent) if e > 0)
        rest = tuple(e - int(i == j) for i, e in enumerate(exponent))
        inner = _monomial_operator(M, rest, degree, memo)
        result = matmul(M.matrix(j, degree + 2 * sum(rest)), inner, M.prime)
    memo[key] = result
    return result


def terms_operator(M, terms, poly_degree, degree, memo=None):
    """Return the matrix of sum c * x^e from M_degree to M_{degree + 2 poly_degree}.

    Parameters
    ----------
    terms : iterable
        Pairs (exponent tuple, integer coefficient) of a homogeneous polynomial.
    """
    memo = {} if memo is None else memo
    result = np.zeros((M.dim(degree + 2 * poly_degree), M.dim(degree)), dtype=np.int64)
    for exponent, coeff in terms:
        coeff = int(coeff) % M.prime
        if coeff:
            result = result + coeff * _monomial_operator(M, tuple(exponent), degree, memo)
    return np.mod(result, M.prime)


def polynomial_operator(M, f, poly_degree, degree, memo=None):
    """Return the matrix of an integral homogeneous polynomial acting on M_degree."""
    return terms_operator(M, f.items(), poly_degree, degree, memo=memo)


def validate_module(M, full=False, seed=0):
    """Check that the generator matrices commute and that the relations of C act by zero.

    With full=False one random combination of the ideal basis is evaluated per degree.
    """
    p = M.prime
    rank_ = M.algebra.rank
    for degree in M.degrees:
        for i in range(rank_):
            for j in range(i + 1, rank_):
                left = matmul(M.matrix(i, degree + 2), M.matrix(j, degree), p)
                right = matmul(M.matrix(j, degree + 2), M.matrix(i, degree), p)
                if not np.array_equal(left, right):
                    raise ValueError(f"The actions of x{i + 1} and x{j + 1} do not commute in degree {degree}.")
    if M.is_zero():
        return
    rng = np.random.default_rng(seed)
    span = (M.top_degree - M.bottom_degree) // 2
    memo = {}
    for poly_degree in range(1, span + 1):
        rows, monomials = M.algebra.ideal_relations(poly_degree)
        if rows.shape[0] == 0:
            continue
        if not full:
            weights = rng.integers(0, p, size=rows.shape[0])
            rows = np.mod(weights @ rows, p).reshape(1, -1)
        for row in rows:
            terms = [(monomials[c], row[c]) for c in np.flatnonzero(row)]
            for degree in M.degrees:
                if M.dim(degree + 2 * poly_degree) == 0:
                    continue
                if terms_operator(M, terms, poly_degree, degree, memo).any():
                    raise ValueError(
                        f"A relation of C of degree {2 * poly_degree} acts nontrivially on degree {degree}."
                    )


####--------------------------------------------------------------------------.
#### Constructions


def trivial_module(C, shift=0):
    """Return the one-dimensional module k placed in degree `shift`."""
    shift = _check_even_shift(shift)
    return GradedModule(C, {shift: 1}, validate=False)


def shift_module(M, shift):
    """Return M<shift>, i.e. the module with dims[d + shift] = M.dims[d]."""
    shift = _check_even_shift(shift)
    dims = {d + shift: n for d, n in M.dims.items()}
    action = [{d + shift: m for d, m in matrices.items()} for matrices in M.action]
    return GradedModule(M.algebra, dims, action, validate=False)


def normalize(M):
    """Return (M shifted to bottom degree 0, original bottom degree)."""
    bottom = M.bottom_degree
    return shift_module(M, -bottom), bottom


def direct_sum(modules):
    """Return the direct sum of modules over the same algebra (block diagonal actions)."""
    modules = list(modules)
    if not modules:
        raise ValueError("At least one module is required.")
    algebra = modules[0].algebra
    if any(M.algebra is not algebra for M in modules):
        raise ValueError("Direct sums require modules over the same algebra.")
    dims = {}
    for M in modules:
        for d, n in M.dims.items():
            dims[d] = dims.get(d, 0) + n
    action = []
    for j in range(algebra.rank):
        matrices = {}
        for d in dims:
            matrix = np.zeros((dims.get(d + 2, 0), dims[d]), dtype=np.int64)
            row, col = 0, 0
            for M in modules:
                block = M.matrix(j, d)
                matrix[row : row + block.shape[0], col : col + block.shape[1]] = block
                row += M.dim(d + 2)
                col += M.dim(d)
            matrices[d] = matrix
        action.append(matrices)
    return GradedModule(algebra, dims, action, validate=False)


def submodule(M, bases):
    """Return the module structure on a graded C-stable subspace.

    Parameters
    ----------
    bases : dict
        {degree: (R, pivots)} echelonized row bases of the subspace per degree.
    """
    dims = {d: R.shape[0] for d, (R, _) in bases.items() if R.shape[0] > 0}
    action = []
    for j in range(M.algebra.rank):
        matrices = {}
        for d in dims:
            R, _ = bases[d]
            images = matmul(M.matrix(j, d), R.T, M.prime)
            if d + 2 in dims:
                matrices[d] = coordinates(bases[d + 2][1], images)
        action.append(matrices)
    return GradedModule(M.algebra, dims, action, validate=False)


def translate(s, M, validate=True):
    """Return C (x)_{C^s} M.

    The underlying space is N_d = M_d (1 (x) M) + M_{d-2} (x (x) M), with x the
    degree-2 element with d_s(x) = 1. For a generator x_j:

    - x_j (1 (x) m) = 1 (x) a0 m + x (x) b0 m with b0 = d_s(x_j), a0 = x_j - x b0,
    - x_j (x (x) m) = 1 (x) a m + x (x) b m with b = d_s(x_j x), a = x_j x - x b.
    """
    C = M.algebra
    s = _check_generator(s, C.rank)
    datum, p = C.datum, C.prime
    x = C.split_element(s)

    dims = {}
    for d, n in M.dims.items():
        dims[d] = dims.get(d, 0) + n
        dims[d + 2] = dims.get(d + 2, 0) + n

    memo = {}
    action = []
    for generator in C.ring.gens:
        b0 = demazure(datum, s, generator)
        a0 = generator - x * b0
        product = generator * x
        b = demazure(datum, s, product)
        a = product - x * b
        matrices = {}
        for d in dims:
            target = d + 2
            matrix = np.zeros((dims.get(target, 0), dims[d]), dtype=np.int64)
            first_target = M.dim(target)
            m_d, m_below = M.dim(d), M.dim(d - 2)
            if m_d:
                matrix[:first_target, :m_d] += polynomial_operator(M, a0, 1, d, memo)
                matrix[first_target:, :m_d] += polynomial_operator(M, b0, 0, d, memo)
            if m_below:
                matrix[:first_target, m_d:] += polynomial_operator(M, a, 2, d - 2, memo)
                matrix[first_target:, m_d:] += polynomial_operator(M, b, 1, d - 2, memo)
            matrices[d] = np.mod(matrix, p)
        action.append(matrices)
    try:
        return GradedModule(C, dims, action, validate=validate)
    except ValueError as error:
        raise ConsistencyError(f"Translation by s{s + 1} produced an invalid module: {error}")


def bott_samelson(C, word, validate=True):
    """Return the Bott-Samelson module C (x)_{C^{s_l}} ... C (x)_{C^{s_1}} k.

    The first letter of the word is the innermost factor and is applied first.
    """
    M = trivial_module(C, 0)
    for s in word:
        M = translate(s, M, validate=validate)
    return M


####--------------------------------------------------------------------------.
#### Morphisms


class GradedMorphism:
    """C-linear map of a fixed degree between graded modules.

    blocks[d] is the matrix from source_d to target_{d + degree}.
    """

    def __init__(self, source, target, degree, blocks=None):
        self.source = source
        self.target = target
        self.degree = int(degree)
        self.blocks = {}
        blocks = blocks or {}
        for d in source.degrees:
            shape = (target.dim(d + self.degree), source.dim(d))
            block = blocks.get(d)
            if block is None:
                block = np.zeros(shape, dtype=np.int64)
            self.blocks[d] = np.mod(np.asarray(block, dtype=np.int64).reshape(shape), source.prime)

    @property
    def prime(self):
        return self.source.prime

    def block(self, degree):
        block = self.blocks.get(degree)
        if block is None:
            return np.zeros((self.target.dim(degree + self.degree), self.source.dim(degree)), dtype=np.int64)
        return block

    def is_zero(self):
        return not any(block.any() for block in self.blocks.values())

    def is_invertible(self):
        """Return True for a degree-0 isomorphism."""
        if self.degree != 0 or self.source.dims != self.target.dims:
            return False
        return all(rank(block, self.prime) == block.shape[0] for block in self.blocks.values())

    def to_vector(self):
        """Concatenate the row-major blocks in increasing source degree."""
        parts = [self.blocks[d].ravel() for d in self.source.degrees]
        if not parts:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate(parts)

    def __add__(self, other):
        blocks = {d: self.block(d) + other.block(d) for d in self.source.degrees}
        return GradedMorphism(self.source, self.target, self.degree, blocks)

    def __sub__(self, other):
        blocks = {d: self.block(d) - other.block(d) for d in self.source.degrees}
        return GradedMorphism(self.source, self.target, self.degree, blocks)

    def __rmul__(self, scalar):
        blocks = {d: int(scalar) * self.block(d) for d in self.source.degrees}
        return GradedMorphism(self.source, self.target, self.degree, blocks)

    def __repr__(self):
        return f"GradedMorphism(degree={self.degree}, source={self.source.dims}, target={self.target.dims})"


def identity_morphism(M):
    """Return the identity endomorphism of M."""
    return GradedMorphism(M, M, 0, {d: np.eye(n, dtype=np.int64) for d, n in M.dims.items()})


def compose(f, g):
    """Return f o g."""
    blocks = {d: matmul(f.block(d + g.degree), g.block(d), f.prime) for d in g.source.degrees}
    return GradedMorphism(g.source, f.target, f.degree + g.degree, blocks)


def linear_combination(morphisms, coefficients):
    """Return sum_i c_i f_i of morphisms sharing source, target and degree."""
    first = morphisms[0]
    blocks = {d: np.zeros_like(first.block(d)) for d in first.source.degrees}
    for coeff, f in zip(coefficients, morphisms):
        coeff = int(coeff) % first.prime
        if coeff:
            for d in blocks:
                blocks[d] = blocks[d] + coeff * f.block(d)
    return GradedMorphism(first.source, first.target, first.degree, blocks)


####--------------------------------------------------------------------------.
#### Hom spaces


def _hom_shift_range(M, N):
    if M.is_zero() or N.is_zero():
        return []
    return list(range(N.bottom_degree - M.top_degree, N.top_degree - M.bottom_degree + 1, 2))


def _hom_in_degree(M, N, shift):
    """Return a basis of the degree-`shift` C-linear maps M -> N."""
    p = M.prime
    offsets = {}
    n_unknowns = 0
    for d in M.degrees:
        size = N.dim(d + shift) * M.dim(d)
        if size:
            offsets[d] = (n_unknowns, N.dim(d + shift), M.dim(d))
            n_unknowns += size
    if n_unknowns == 0:
        return []
    equations = []
    for j in range(M.algebra.rank):
        for d in M.degrees:
            n_rows = N.dim(d + shift + 2) * M.dim(d)
            if n_rows == 0:
                continue
            equation = np.zeros((n_rows, n_unknowns), dtype=np.int64)
            if d in offsets:
                start, n, m = offsets[d]
                equation[:, start : start + n * m] += np.kron(
                    N.matrix(j, d + shift), np.eye(m, dtype=np.int64)
                )
            if d + 2 in offsets:
                start, n, m = offsets[d + 2]
                equation[:, start : start + n * m] -= np.kron(
                    np.eye(n, dtype=np.int64), M.matrix(j, d).T
                )
            equations.append(equation)
    if equations:
        solutions = null_space(np.vstack(equations), p)
    else:
        solutions = np.eye(n_unknowns, dtype=np.int64)
    morphisms = []
    for solution in solutions:
        blocks = {
            d: solution[start : start + n * m].reshape(n, m) for d, (start, n, m) in offsets.items()
        }
        morphisms.append(GradedMorphism(M, N, shift, blocks))
    return morphisms


def hom_graded(M, N, degrees=None):
    """Return {k: basis of degree-k C-linear maps M -> N}.

    Each Hom_k is the solution space of X^N_j F_d = F_{d+2} X^M_j for all
    generators j and degrees d, solved over F_p.

    Parameters
    ----------
    M, N : GradedModule
        Modules over the same algebra.
    degrees : list, optional
        Restrict to these shifts. By default every even shift with a possibly
        nonzero Hom is computed.
    """
    if M.algebra is not N.algebra:
        raise ValueError("Homs are computed between modules over the same algebra.")
    shifts = _hom_shift_range(M, N) if degrees is None else [int(k) for k in degrees]
    return {k: _hom_in_degree(M, N, k) for k in shifts}


def hom_dimensions(M, N, degrees=None):
    """Return {k: dim Hom_k(M, N)}."""
    return {k: len(basis) for k, basis in hom_graded(M, N, degrees=degrees).items()}


def graded_end_dimensions(M):
    """Return [dim Hom_k(M, M) for k = -w..w step 2] with w the width of M."""
    width = M.top_degree - M.bottom_degree
    shifts = list(range(-width, width + 1, 2))
    dims = hom_dimensions(M, M, degrees=shifts)
    return [dims[k] for k in shifts]


def fingerprint(M):
    """Return (graded dimension, graded End dimensions), cached on the module."""
    if M._fingerprint is None:
        M._fingerprint = (graded_dimension(M).to_list(), graded_end_dimensions(M))
    return M._fingerprint


####--------------------------------------------------------------------------.
#### Complexes


class ModuleComplex:
    """Bounded complex of graded modules with degree-0 differentials.

    Parameters
    ----------
    terms : dict
        {position: GradedModule}.
    differentials : dict, optional
        {position i: GradedMorphism from terms[i] to terms[i+1]}.
    """

    def __init__(self, terms, differentials=None):
        self.terms = {int(i): M for i, M in terms.items() if not M.is_zero()}
        self.differentials = {}
        for i, f in (differentials or {}).items():
            i = int(i)
            if f.degree != 0:
                raise PreconditionError("Differentials must have degree 0.")
            if i not in self.terms or i + 1 not in self.terms:
                if not f.is_zero():
                    raise ValueError(f"Differential at position {i} has a zero source or target.")
                continue
            if f.source is not self.terms[i] or f.target is not self.terms[i + 1]:
                raise ValueError(f"Differential at position {i} does not match the terms.")
            self.differentials[i] = f
        for i in self.differentials:
            if i + 1 in self.differentials:
                if not compose(self.differentials[i + 1], self.differentials[i]).is_zero():
                    raise ValueError(f"d^2 is not zero at position {i}.")

    @property
    def positions(self):
        return sorted(self.terms)

    def term(self, i):
        return self.terms.get(i)

    def differential(self, i):
        return self.differentials.get(i)


def one_term_complex(M, position=0):
    """Return the complex with M in a single position."""
    return ModuleComplex({position: M})


def _total_hom_basis(X, Y, a):
    """Return [(i, f)] with f running over a basis of Hom_0(X^i, Y^{i+a})."""
    basis = []
    for i in X.positions:
        target = Y.term(i + a)
        if target is None:
            continue
        for f in hom_graded(X.term(i), target, degrees=[0])[0]:
            basis.append((i, f))
    return basis


def _total_hom_layout(X, Y, a):
    """Return {i: (offset, size)} for the ambient space of prod_i Hom(X^i, Y^{i+a})."""
    layout = {}
    offset = 0
    for i in X.positions:
        target = Y.term(i + a)
        if target is None:
            continue
        size = sum(target.dim(d) * X.term(i).dim(d) for d in X.term(i).degrees)
        layout[i] = (offset, size)
        offset += size
    return layout, offset


def _total_differential_matrix(X, Y, a):
    """Return the matrix of D f = d_Y f - (-1)^a f d_X on a basis of Hom^a."""
    basis = _total_hom_basis(X, Y, a)
    layout, size = _total_hom_layout(X, Y, a + 1)
    columns = []
    sign = -1 if a % 2 else 1
    for i, f in basis:
        vector = np.zeros(size, dtype=np.int64)
        d_Y = Y.differential(i + a)
        if d_Y is not None and i in layout:
            start, length = layout[i]
            vector[start : start + length] += compose(d_Y, f).to_vector()
        d_X = X.differential(i - 1)
        if d_X is not None and i - 1 in layout:
            start, length = layout[i - 1]
            vector[start : start + length] -= sign * compose(f, d_X).to_vector()
        columns.append(np.mod(vector, X.terms[i].prime))
    if not columns:
        return np.zeros((size, 0), dtype=np.int64), 0
    return np.array(columns, dtype=np.int64).T, len(basis)


def hom_homotopy(X, Y, a):
    """Return dim H^a of the total Hom complex Hom^*(X, Y), i.e. degree-a maps up to homotopy."""
    differential, dim_hom = _total_differential_matrix(X, Y, a)
    if dim_hom == 0:
        return 0
    previous, dim_previous = _total_differential_matrix(X, Y, a - 1)
    p = X.terms[X.positions[0]].prime
    rank_out = rank(differential, p) if differential.size else 0
    rank_in = rank(previous, p) if dim_previous and previous.size else 0
    return dim_hom - rank_out - rank_in
