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
"""Define the decomposition of graded modules into indecomposables.

Splittings come from the Fitting lemma applied to g(phi), where phi is a
degree-0 endomorphism and g an irreducible factor of its characteristic
polynomial. Indecomposability is certified by locality of End_0.
"""

import itertools
import warnings
from dataclasses import dataclass

import numpy as np

from motkit.alias import (
    DEFAULT_SEED,
    EXHAUSTIVE_END_DIM,
    EXHAUSTIVE_SEARCH_BUDGET,
    FITTING_TRIALS,
    ISO_EXHAUSTIVE_DIM,
)
from motkit.checks import HeuristicResultWarning, _check_seed
from motkit.linalg import (
    characteristic_poly,
    column_space,
    matrix_power,
    null_space,
    poly_at_matrix,
    rref,
)
from motkit.smod import (
    GradedMorphism,
    compose,
    fingerprint,
    graded_dimension,
    hom_graded,
    identity_morphism,
    linear_combination,
    normalize,
    submodule,
)

####--------------------------------------------------------------------------.
#### Summands


@dataclass(frozen=True)
class Summand:
    """An indecomposable summand M<shift> with M normalized to bottom degree 0."""

    module: object
    shift: int
    certified: bool = True

    def gdim(self):
        return graded_dimension(self.module).shift(self.shift // 2)


def endomorphism_basis(M):
    """Return a basis of the degree-0 endomorphisms of M."""
    return hom_graded(M, M, degrees=[0])[0]


def _morphism_from_vector(M, N, degree, vector):
    blocks = {}
    start = 0
    for d in M.degrees:
        n, m = N.dim(d + degree), M.dim(d)
        blocks[d] = np.asarray(vector[start : start + n * m]).reshape(n, m)
        start += n * m
    return GradedMorphism(M, N, degree, blocks)


####--------------------------------------------------------------------------.
#### Fitting splittings


def fitting_split(M, phi):
    """Return (ker phi^n, im phi^n) as modules, or None if one of them vanishes.

    n is the total dimension of M, so the pair is the Fitting decomposition of phi.
    """
    p = M.prime
    n = M.total_dimension
    kernels, images = {}, {}
    for d in M.degrees:
        power = matrix_power(phi.block(d), n, p)
        kernels[d] = rref(null_space(power, p), p)
        images[d] = column_space(power, p)
    if not any(R.shape[0] for R, _ in kernels.values()):
        return None
    if not any(R.shape[0] for R, _ in images.values()):
        return None
    return submodule(M, kernels), submodule(M, images)


def _factor_key(poly):
    return tuple(int(c) for c in poly.coeffs)


def _primary_split(M, phi):
    """Split M along the first irreducible factor of the characteristic polynomial of phi."""
    p = M.prime
    factors = {}
    for d in M.degrees:
        charpoly = characteristic_poly(phi.block(d), p)
        for factor in charpoly.factors()[0]:
            factors.setdefault(_factor_key(factor), factor)
    if len(factors) < 2:
        return None
    factor = factors[min(factors)]
    blocks = {d: poly_at_matrix(factor, phi.block(d), p) for d in M.degrees}
    return fitting_split(M, GradedMorphism(M, M, 0, blocks))


def _candidate_endomorphisms(basis, prime, rng, trials):
    yield from basis
    for _ in range(trials):
        yield linear_combination(basis, rng.integers(0, prime, size=len(basis)))


####--------------------------------------------------------------------------.
#### Locality of End_0


def _is_nilpotent_algebra(M, morphisms):
    """Return True if the (non-unital) algebra generated by morphisms is nilpotent."""
    p = M.prime
    generators = list(morphisms)
    if not generators:
        return True
    current, _ = rref(np.array([f.to_vector() for f in generators]), p)
    while current.shape[0] > 0:
        elements = [_morphism_from_vector(M, M, 0, row) for row in current]
        products = [compose(x, y).to_vector() for x in elements for y in generators]
        following, _ = rref(np.array(products), p)
        if following.shape[0] == current.shape[0]:
            return False
        current = following
    return True


def _has_nontrivial_idempotent(M, basis):
    """Search End_0 exhaustively for an idempotent other than 0 and the identity."""
    p = M.prime
    identity = identity_morphism(M)
    for coefficients in itertools.product(range(p), repeat=len(basis)):
        e = linear_combination(basis, coefficients)
        if e.is_zero() or (e - identity).is_zero():
            continue
        if (compose(e, e) - e).is_zero():
            return True
    return False


def is_local(M, basis=None):
    """Decide whether End_0(M) is local.

    Returns True or False when decided exactly, None when out of budget.
    With a one-dimensional degree d, End_0 is local if and only if the kernel
    of the restriction End_0 -> End(M_d) = k is a nilpotent ideal.
    """
    basis = endomorphism_basis(M) if basis is None else basis
    if len(basis) <= 1:
        return len(basis) == 1
    p = M.prime
    line_degrees = [d for d in M.degrees if M.dim(d) == 1]
    if line_degrees:
        d = line_degrees[0]
        functional = np.array([[int(f.block(d)[0, 0]) for f in basis]], dtype=np.int64)
        kernel = null_space(functional, p)
        ideal = [linear_combination(basis, row) for row in kernel]
        return _is_nilpotent_algebra(M, ideal)
    if len(basis) <= EXHAUSTIVE_END_DIM and p ** len(basis) <= EXHAUSTIVE_SEARCH_BUDGET:
        return not _has_nontrivial_idempotent(M, basis)
    return None


####--------------------------------------------------------------------------.
#### Decomposition


def _split_once(M, rng, trials):
    """Return ((A, B), certified) with (A, B) None when M is taken as indecomposable."""
    basis = endomorphism_basis(M)
    local = is_local(M, basis)
    if local:
        return None, True
    for phi in _candidate_endomorphisms(basis, M.prime, rng, trials):
        split = _primary_split(M, phi)
        if split is not None:
            return split, True
    return None, False


def decompose(M, seed=DEFAULT_SEED, trials=FITTING_TRIALS):
    """Decompose a graded module into indecomposable summands.

    Parameters
    ----------
    M : GradedModule
        Module to decompose.
    seed : int, optional
        Seed of the random endomorphisms. The default is 0.
    trials : int, optional
        Number of random endomorphisms tried per summand before giving up.

    Returns
    -------
    list
        Summand objects sorted by shift and graded dimension. A summand whose
        indecomposability could not be certified has certified=False and a
        HeuristicResultWarning is emitted.
    """
    seed = _check_seed(seed)
    rng = np.random.default_rng(seed)
    summands = []
    pending = [] if M.is_zero() else [M]
    while pending:
        N = pending.pop()
        split, certified = _split_once(N, rng, trials)
        if split is not None:
            pending.extend(part for part in split if not part.is_zero())
            continue
        module, bottom = normalize(N)
        summands.append(Summand(module, bottom, certified))
    heuristic = [summand for summand in summands if not summand.certified]
    if heuristic:
        warnings.warn(
            f"{len(heuristic)} summand(s) are only heuristically indecomposable "
            f"after {trials} random endomorphisms.",
            HeuristicResultWarning,
        )
    return sorted(summands, key=lambda summand: (summand.shift, graded_dimension(summand.module).to_list()))


####--------------------------------------------------------------------------.
#### Isomorphism test


def is_isomorphic(M, N, seed=DEFAULT_SEED, trials=FITTING_TRIALS):
    """Return True if some degree-0 C-linear map M -> N is invertible.

    Modules with different graded dimensions or End dimensions are rejected
    directly. Otherwise basis elements and random combinations of Hom_0(M, N)
    are tried, then all of Hom_0 when it is small. An inconclusive search
    emits a HeuristicResultWarning and returns False.
    """
    if M.algebra is not N.algebra:
        raise ValueError("Isomorphisms are tested between modules over the same algebra.")
    if M.dims != N.dims:
        return False
    if M.is_zero():
        return True
    if fingerprint(M) != fingerprint(N):
        return False
    basis = hom_graded(M, N, degrees=[0])[0]
    if not basis:
        return False
    if any(f.is_invertible() for f in basis):
        return True
    rng = np.random.default_rng(_check_seed(seed))
    for _ in range(trials):
        f = linear_combination(basis, rng.integers(0, M.prime, size=len(basis)))
        if f.is_invertible():
            return True
    if len(basis) <= ISO_EXHAUSTIVE_DIM and M.prime ** len(basis) <= EXHAUSTIVE_SEARCH_BUDGET:
        return any(
            linear_combination(basis, coefficients).is_invertible()
            for coefficients in itertools.product(range(M.prime), repeat=len(basis))
        )
    warnings.warn(
        "No isomorphism found by randomized search; the modules are reported as non-isomorphic.",
        HeuristicResultWarning,
    )
    return False
