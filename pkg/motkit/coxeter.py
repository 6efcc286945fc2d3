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
"""Define root data, Weyl groups, reduced words and the Bruhat order.

All weights are written in the basis of fundamental weights, so the simple
root alpha_j is the j-th column of the Cartan matrix (simply connected
convention). Generators are indexed from 0 internally and printed from 1.
"""

import functools
from collections import deque

import numpy as np
from tqdm import tqdm

from motkit.alias import REDUCED_WORDS_LENGTH_BOUND, WEYL_ORDER_BOUND
from motkit.checks import (
    PreconditionError,
    _check_cartan_type,
    _check_generator,
    _check_rank,
    _check_same_datum,
)
from motkit.listing import get_fundamental_degrees, get_torsion_primes

####--------------------------------------------------------------------------.
#### Cartan matrices


def _dynkin_edges(cartan_type, rank):
    """Return the (0-based) edges of the Dynkin diagram."""
    if cartan_type == "D":
        edges = [(i, i + 1) for i in range(rank - 2)]
        edges.append((rank - 3, rank - 1))
        return edges
    if cartan_type == "E":
        return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, rank - 1)]
    return [(i, i + 1) for i in range(rank - 1)]


def get_cartan_matrix(cartan_type, rank):
    """Return the Cartan matrix A_ij = <alpha_i^vee, alpha_j>."""
    matrix = 2 * np.eye(rank, dtype=np.int64)
    for i, j in _dynkin_edges(cartan_type, rank):
        matrix[i, j] = -1
        matrix[j, i] = -1
    if cartan_type == "B":
        matrix[rank - 1, rank - 2] = -2
    elif cartan_type == "C":
        matrix[rank - 2, rank - 1] = -2
    elif cartan_type == "F":
        matrix[2, 1] = -2
    elif cartan_type == "G":
        matrix[0, 1] = -3
    return matrix


def _positive_roots(cartan_matrix):
    """Return the positive roots in simple-root coordinates, sorted by height."""
    rank = cartan_matrix.shape[0]
    simple = [tuple(int(k == i) for k in range(rank)) for i in range(rank)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        root = queue.popleft()
        pairings = cartan_matrix @ np.array(root, dtype=np.int64)
        for i in range(rank):
            image = list(root)
            image[i] -= int(pairings[i])
            image = tuple(image)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    positives = [root for root in seen if all(c >= 0 for c in root)]
    return sorted(positives, key=lambda root: (sum(root), tuple(-c for c in root)))


####--------------------------------------------------------------------------.
#### Root datum


class RootDatum:
    """Simply connected root datum of an irreducible Cartan type.

    Attributes
    ----------
    cartan_type : str
        One of 'A', 'B', 'C', 'D', 'E', 'F', 'G'.
    rank : int
        Number of simple roots.
    cartan_matrix : numpy.ndarray
        Integer Cartan matrix in Bourbaki numbering.
    simple_roots : tuple
        Simple roots in weight coordinates (columns of the Cartan matrix).
    positive_roots : tuple
        Positive roots in weight coordinates.
    coxeter_number : int
        Largest fundamental degree.
    """

    def __init__(self, cartan_type, rank):
        self.cartan_type = cartan_type
        self.rank = rank
        cartan_matrix = get_cartan_matrix(cartan_type, rank)
        cartan_matrix.setflags(write=False)
        self.cartan_matrix = cartan_matrix
        self.simple_roots = tuple(
            tuple(int(c) for c in cartan_matrix[:, j]) for j in range(rank)
        )
        self.positive_roots_root_coordinates = tuple(_positive_roots(cartan_matrix))
        self.positive_roots = tuple(
            tuple(int(c) for c in cartan_matrix @ np.array(root, dtype=np.int64))
            for root in self.positive_roots_root_coordinates
        )
        self.degrees = tuple(get_fundamental_degrees(cartan_type, rank))
        self.coxeter_number = max(self.degrees)
        self.rho = np.ones(rank, dtype=np.int64)
        self.rho.setflags(write=False)
        reflections = []
        for i in range(rank):
            reflection = np.eye(rank, dtype=np.int64)
            reflection[:, i] -= cartan_matrix[:, i]
            reflection.setflags(write=False)
            reflections.append(reflection)
        self.reflections = tuple(reflections)

    @property
    def label(self):
        return f"{self.cartan_type}{self.rank}"

    @property
    def weyl_order(self):
        return int(np.prod(self.degrees))

    @property
    def longest_length(self):
        return len(self.positive_roots)

    def simple_root(self, i):
        """Return the simple root alpha_i as an integer vector in weight coordinates."""
        return self.cartan_matrix[:, i]

    def __eq__(self, other):
        if not isinstance(other, RootDatum):
            return NotImplemented
        return (self.cartan_type, self.rank) == (other.cartan_type, other.rank)

    def __hash__(self):
        return hash(("RootDatum", self.cartan_type, self.rank))

    def __repr__(self):
        return f"RootDatum('{self.cartan_type}', {self.rank})"


@functools.lru_cache(maxsize=None)
def _build_root_datum(cartan_type, rank):
    return RootDatum(cartan_type, rank)


def build_root_datum(cartan_type, rank):
    """Build the simply connected root datum of type (cartan_type, rank).

    Parameters
    ----------
    cartan_type : str
        Cartan type letter. Aliases like 'SL' or 'Sp' are accepted.
        Use `motkit.available_cartan_types()` to list them.
    rank : int
        Rank of the root system. Standard restrictions apply (B,C >= 2, D >= 4, ...).

    Returns
    -------
    RootDatum
    """
    cartan_type = _check_cartan_type(cartan_type)
    rank = _check_rank(rank, cartan_type)
    return _build_root_datum(cartan_type, rank)


def torsion_primes(datum):
    """Return the set of torsion primes of the root datum."""
    return set(get_torsion_primes(datum.cartan_type, datum.rank))


####--------------------------------------------------------------------------.
#### Weyl group elements


def _descent_word(datum, weight):
    """Return the shortlex-minimal reduced word of the element sending rho to `weight`."""
    weight = np.array(weight, dtype=np.int64)
    word = []
    while True:
        negatives = np.flatnonzero(weight < 0)
        if negatives.size == 0:
            return tuple(word)
        i = int(negatives[0])
        word.append(i)
        weight = weight - weight[i] * datum.cartan_matrix[:, i]


class WeylElt:
    """Element of the Weyl group of a root datum.

    The element is stored through its action matrix on weight coordinates.
    Its canonical word is the shortlex-minimal reduced word and is always
    recomputed from the matrix.
    """

    __slots__ = ("datum", "matrix", "word", "_rho_image", "_key")

    def __init__(self, datum, matrix):
        matrix = np.array(matrix, dtype=np.int64)
        matrix.setflags(write=False)
        self.datum = datum
        self.matrix = matrix
        rho_image = matrix @ datum.rho
        self._rho_image = tuple(int(c) for c in rho_image)
        self.word = _descent_word(datum, rho_image)
        self._key = (datum.cartan_type, datum.rank, matrix.tobytes())

    @property
    def action_matrix(self):
        return self.matrix

    @property
    def canonical_word(self):
        return self.word

    @property
    def length(self):
        return len(self.word)

    @property
    def left_descents(self):
        """Generators s with l(sw) < l(w)."""
        return frozenset(i for i, c in enumerate(self._rho_image) if c < 0)

    @property
    def right_descents(self):
        """Generators s with l(ws) < l(w)."""
        return inverse(self).left_descents

    @property
    def label(self):
        if not self.word:
            return "e"
        return " ".join(f"s{i + 1}" for i in self.word)

    @property
    def word_string(self):
        """Filesystem friendly label, e.g. '1-2-1' or 'e'."""
        if not self.word:
            return "e"
        return "-".join(str(i + 1) for i in self.word)

    @property
    def sort_key(self):
        return (self.length, self.word)

    def __mul__(self, other):
        if not isinstance(other, WeylElt):
            return NotImplemented
        return weyl_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, WeylElt):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"WeylElt({self.datum.label}, '{self.label}')"


def identity(datum):
    """Return the identity element."""
    return WeylElt(datum, np.eye(datum.rank, dtype=np.int64))


def simple_reflection(datum, i):
    """Return the simple reflection s_i (0-based index)."""
    i = _check_generator(i, datum.rank)
    return WeylElt(datum, datum.reflections[i])


def element_from_word(datum, word):
    """Return the product s_{i1} s_{i2} ... of a (not necessarily reduced) word."""
    matrix = np.eye(datum.rank, dtype=np.int64)
    for i in word:
        i = _check_generator(i, datum.rank)
        matrix = matrix @ datum.reflections[i]
    return WeylElt(datum, matrix)


def parse_element(datum, text):
    """Parse an element from a word like 's1 s2 s1', '1 2 1', '121' or 'e'."""
    from motkit.info import parse_word

    return element_from_word(datum, parse_word(text, rank=datum.rank))


def weyl_mul(x, y):
    """Return the product x*y."""
    _check_same_datum(x, y)
    return WeylElt(x.datum, x.matrix @ y.matrix)


def inverse(w):
    """Return the inverse of w."""
    return element_from_word(w.datum, tuple(reversed(w.word)))


def longest_element(datum):
    """Return the longest element w0, which sends rho to -rho."""
    return element_from_word(datum, _descent_word(datum, -datum.rho))


def demazure_product(datum, word):
    """Return the Demazure product of a word: y -> ys if l(ys) > l(y), else y."""
    y = identity(datum)
    for i in word:
        i = _check_generator(i, datum.rank)
        if i not in y.right_descents:
            y = _right_mul(y, i)
    return y


def _left_mul(i, w):
    """Return s_i * w."""
    return WeylElt(w.datum, w.datum.reflections[i] @ w.matrix)


def _right_mul(w, i):
    """Return w * s_i."""
    return WeylElt(w.datum, w.matrix @ w.datum.reflections[i])


def inversion_count(w):
    """Return #{beta > 0 : w(beta) < 0}, computed on simple-root coordinates."""
    cartan_matrix = w.datum.cartan_matrix
    count = 0
    for root in w.datum.positive_roots_root_coordinates:
        image = np.array(root, dtype=np.int64)
        for i in reversed(w.word):
            image[i] -= int((cartan_matrix @ image)[i])
        if np.all(image <= 0):
            count += 1
    return count


####--------------------------------------------------------------------------.
#### Enumeration


@functools.lru_cache(maxsize=None)
def _enumerate_weyl(datum, progress_bar=False):
    levels = [(identity(datum),)]
    pbar = tqdm(total=datum.longest_length + 1) if progress_bar else None
    while True:
        if pbar is not None:
            pbar.update(1)
        next_level = {}
        for w in levels[-1]:
            for i in range(datum.rank):
                if w._rho_image[i] > 0:
                    u = _left_mul(i, w)
                    next_level.setdefault(u, u)
        if not next_level:
            break
        levels.append(tuple(sorted(next_level, key=lambda u: u.sort_key)))
    if pbar is not None:
        pbar.close()
    return tuple(levels)


def enumerate_weyl(datum, bound=WEYL_ORDER_BOUND, progress_bar=False):
    """Enumerate the Weyl group, grouped by length.

    Parameters
    ----------
    datum : RootDatum
        The root datum.
    bound : int, optional
        Refuse to enumerate groups of larger order. The default is 10**6.
    progress_bar : bool, optional
        Whether to display a tqdm progress bar over lengths. The default is False.

    Returns
    -------
    list
        levels[i] is the list of elements of length i, sorted by canonical word.
    """
    order = datum.weyl_order
    if order > bound:
        raise PreconditionError(
            f"The Weyl group of {datum.label} has order {order}, above the bound {bound}."
        )
    return [list(level) for level in _enumerate_weyl(datum, progress_bar)]


def weyl_elements(datum, bound=WEYL_ORDER_BOUND):
    """Return all elements as a flat list sorted by (length, canonical word)."""
    return [w for level in enumerate_weyl(datum, bound=bound) for w in level]


def poincare_counts(datum):
    """Return [#{w : l(w) = i} for i = 0..l(w0)]."""
    return [len(level) for level in enumerate_weyl(datum)]


def poincare_from_degrees(datum):
    """Return the coefficients of prod_i (1 + v + ... + v^(d_i - 1))."""
    coefficients = np.array([1], dtype=np.int64)
    for degree in datum.degrees:
        coefficients = np.convolve(coefficients, np.ones(degree, dtype=np.int64))
    return [int(c) for c in coefficients]


def minimal_coset_representatives(datum, s):
    """Return the elements w with l(ws) > l(w), i.e. the cells of G/P_s."""
    s = _check_generator(s, datum.rank)
    return [w for w in weyl_elements(datum) if s not in w.right_descents]


####--------------------------------------------------------------------------.
#### Bruhat order and reduced words


@functools.lru_cache(maxsize=None)
def _bruhat_leq(x, y):
    if x.length > y.length:
        return False
    if x.length == 0:
        return True
    if x.length == y.length:
        return x == y
    # Lifting property with s a left descent of y
    s = min(y.left_descents)
    sy = _left_mul(s, y)
    if s in x.left_descents:
        return _bruhat_leq(_left_mul(s, x), sy)
    return _bruhat_leq(x, sy)


def bruhat_leq(x, y):
    """Return True if x <= y in the Bruhat order."""
    _check_same_datum(x, y)
    return _bruhat_leq(x, y)


def bruhat_interval(w):
    """Return the elements x <= w sorted by (length, canonical word)."""
    return [x for x in weyl_elements(w.datum) if _bruhat_leq(x, w)]


@functools.lru_cache(maxsize=None)
def _reduced_words(w):
    if w.length == 0:
        return ((),)
    words = []
    for i in sorted(w.left_descents):
        for rest in _reduced_words(_left_mul(i, w)):
            words.append((i,) + rest)
    return tuple(sorted(words))


def reduced_words(w, bound=REDUCED_WORDS_LENGTH_BOUND):
    """Return all reduced words of w, sorted lexicographically.

    Words are tuples of 0-based generator indices.
    """
    if w.length > bound:
        raise PreconditionError(
            f"Reduced words are enumerated up to length {bound}, got length {w.length}."
        )
    return [list(word) for word in _reduced_words(w)]
