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
"""Define motivic cohomology tables of cellular varieties from their stratification posets.

A poset file is JSON of the form
{"strata": [{"label": "pt", "dim": 0}, ...], "closure": [["pt", "A1"], ...]}
where ["a", "b"] means that the stratum a lies in the closure of b.
"""

import json
import warnings

from motkit.alias import POSET_DOWN_SETS_BOUND
from motkit.checks import ExtrapolatedResultWarning, PreconditionError
from motkit.coxeter import bruhat_leq, minimal_coset_representatives, weyl_elements
from motkit.hecke import LaurentPoly
from motkit.io import get_filesystem

####--------------------------------------------------------------------------.
#### Bigraded dimensions


class BigradedDims:
    """Finitely supported table (cohomological degree j, twist i) -> dimension."""

    def __init__(self, entries=None, extrapolated=False):
        self.entries = {}
        for (j, i), n in dict(entries or {}).items():
            if n < 0:
                raise ValueError("Dimensions must be non-negative.")
            if n:
                self.entries[(int(j), int(i))] = int(n)
        self.extrapolated = bool(extrapolated)

    @classmethod
    def from_list(cls, triples, extrapolated=False):
        entries = {}
        for j, i, n in triples:
            entries[(j, i)] = entries.get((j, i), 0) + n
        return cls(entries, extrapolated=extrapolated)

    def __getitem__(self, key):
        return self.entries.get(tuple(key), 0)

    def to_list(self):
        """Return [[j, i, dim], ...] sorted by (j, i)."""
        return [[j, i, n] for (j, i), n in sorted(self.entries.items())]

    def shift(self, j, i):
        """Return the table of the Tate twist (i)[j]."""
        return BigradedDims({(a + j, b + i): n for (a, b), n in self.entries.items()}, self.extrapolated)

    def diagonal_poincare(self):
        """Return sum over (2i, i) entries of dim * v^i."""
        return LaurentPoly({i: n for (j, i), n in self.entries.items() if j == 2 * i})

    def total(self):
        return sum(self.entries.values())

    def __add__(self, other):
        entries = dict(self.entries)
        for key, n in other.entries.items():
            entries[key] = entries.get(key, 0) + n
        return BigradedDims(entries, self.extrapolated or other.extrapolated)

    def __eq__(self, other):
        if isinstance(other, dict):
            other = BigradedDims(other)
        if not isinstance(other, BigradedDims):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"BigradedDims({self.to_list()})"


####--------------------------------------------------------------------------.
#### Stratification posets


class StrataPoset:
    """Finite stratification of a variety into affine cells.

    Parameters
    ----------
    strata : list
        Pairs (label, dimension).
    closure : list, optional
        Pairs (a, b) meaning that a lies in the closure of b. The order is the
        reflexive transitive closure of these pairs.
    """

    def __init__(self, strata, closure=()):
        self.strata = []
        self._dims = {}
        for label, dim in strata:
            label = str(label)
            if label in self._dims:
                raise ValueError(f"Duplicated stratum label '{label}'.")
            if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
                raise ValueError(f"The dimension of '{label}' must be a non-negative integer.")
            self.strata.append((label, dim))
            self._dims[label] = dim
        self.closure = []
        self._below = {label: set() for label in self._dims}
        for a, b in closure:
            a, b = str(a), str(b)
            for label in (a, b):
                if label not in self._dims:
                    raise ValueError(f"Unknown stratum '{label}' in the closure relation.")
            if a == b:
                continue
            if self._dims[a] >= self._dims[b]:
                raise ValueError(
                    f"'{a}' lies in the closure of '{b}' but dim {self._dims[a]} >= dim {self._dims[b]}."
                )
            self.closure.append((a, b))
            self._below[b].add(a)
        # Transitive closure, processing strata by increasing dimension
        for label in sorted(self._dims, key=self._dims.get):
            for lower in list(self._below[label]):
                self._below[label] |= self._below[lower]

    @property
    def labels(self):
        return [label for label, _ in self.strata]

    def __len__(self):
        return len(self.strata)

    def dim(self, label=None):
        """Return the dimension of a stratum, or of the variety if label is None."""
        if label is None:
            return max(self._dims.values()) if self._dims else -1
        return self._dims[label]

    def leq(self, a, b):
        """Return True if the stratum a lies in the closure of b."""
        return a == b or a in self._below[b]

    def below(self, label):
        return set(self._below[label])

    def is_down_set(self, labels):
        labels = set(labels)
        return all(self._below[label] <= labels for label in labels)

    def maximal_strata(self):
        return [label for label in self.labels if not any(label in self._below[b] for b in self.labels)]

    def is_irreducible(self):
        """Return True if a single stratum contains every other one in its closure."""
        return len(self.maximal_strata()) == 1

    def restrict(self, labels):
        """Return the sub-poset on the given labels with the induced order."""
        labels = set(labels)
        strata = [(label, dim) for label, dim in self.strata if label in labels]
        closure = [(a, b) for b in labels for a in self._below[b] if a in labels]
        return StrataPoset(strata, closure)

    def __repr__(self):
        return f"StrataPoset({len(self)} strata, dim {self.dim()})"


def poset_from_dict(data):
    """Build a StrataPoset from the JSON schema {strata: [{label, dim}], closure: [[a, b], ...]}."""
    try:
        strata = [(item["label"], item["dim"]) for item in data["strata"]]
    except (KeyError, TypeError):
        raise ValueError("A poset needs a 'strata' list of {'label', 'dim'} objects.")
    return StrataPoset(strata, [tuple(pair) for pair in data.get("closure", [])])


def poset_to_dict(X):
    return {
        "strata": [{"label": label, "dim": dim} for label, dim in X.strata],
        "closure": [[a, b] for a, b in X.closure],
    }


def load_poset(fpath, protocol="file"):
    """Read a poset JSON file."""
    fs = get_filesystem(protocol)
    with fs.open(fpath, "r") as f:
        return poset_from_dict(json.load(f))


def _element_strata(elements):
    strata = [(w.label, w.length) for w in elements]
    closure = [
        (x.label, y.label)
        for y in elements
        for x in elements
        if x.length == y.length - 1 and bruhat_leq(x, y)
    ]
    return StrataPoset(strata, closure)


def flag_strata(datum):
    """Return the Bruhat cells of G/B: one stratum per w of dimension l(w), ordered by Bruhat order."""
    return _element_strata(weyl_elements(datum))


def partial_flag_strata(datum, s):
    """Return the Bruhat cells of G/P_s, indexed by the minimal coset representatives of W/<s>."""
    return _element_strata(minimal_coset_representatives(datum, s))


def down_sets(X, bound=POSET_DOWN_SETS_BOUND):
    """Yield every closure-downward subset of strata, as frozensets."""
    n = len(X)
    if n > bound:
        raise PreconditionError(f"Down-sets are enumerated for at most {bound} strata, got {n}.")
    labels = X.labels
    index = {label: k for k, label in enumerate(labels)}
    below_masks = [sum(1 << index[a] for a in X.below(label)) for label in labels]
    for mask in range(1 << n):
        if all(below_masks[k] & ~mask == 0 for k in range(n) if mask >> k & 1):
            yield frozenset(labels[k] for k in range(n) if mask >> k & 1)


####--------------------------------------------------------------------------.
#### Motivic cohomology


def motivic_cohomology(X):
    """Return the table of H^j(X, k(i)) of a cellular variety.

    The only nonzero entries are (2i, i), counting the strata of dimension i.
    For posets with several maximal strata the table is obtained by additivity
    and flagged as extrapolated.
    """
    entries = {}
    for _, dim in X.strata:
        entries[(2 * dim, dim)] = entries.get((2 * dim, dim), 0) + 1
    extrapolated = len(X) > 0 and not X.is_irreducible()
    if extrapolated:
        warnings.warn(
            "The poset is not irreducible; its table is extrapolated by disjoint-union additivity.",
            ExtrapolatedResultWarning,
        )
    return BigradedDims(entries, extrapolated=extrapolated)


def projective_bundle(X, n):
    """Return the table of a projective bundle of rank n over X: sum_{t<n} (t)[2t] shifts."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError("The rank of the projective bundle must be a positive integer.")
    base = motivic_cohomology(X) if isinstance(X, StrataPoset) else X
    result = BigradedDims(extrapolated=base.extrapolated)
    for t in range(n):
        result = result + base.shift(2 * t, t)
    return result


def _codimension_table(X, labels, ambient_dim):
    entries = {}
    for label in labels:
        k = ambient_dim - X.dim(label)
        entries[(2 * k, k)] = entries.get((2 * k, k), 0) + 1
    return BigradedDims(entries)


def localization_check(X, closed):
    """Check additivity of cohomology for the decomposition X = U u Z with Z closed.

    Tables are indexed by codimension: a cell of codimension k contributes to
    (2k, k). The closed part Z is read in its own codimension and twisted by
    its codimension c in X, i.e. shifted by (2c, c).

    Returns
    -------
    dict
        Keys 'X', 'U', 'Z', 'Z_twisted' (lists of [j, i, dim]), 'codimension',
        'passed' and 'extrapolated'.
    """
    closed = {str(label) for label in closed}
    unknown = closed - set(X.labels)
    if unknown:
        raise ValueError(f"Unknown strata {sorted(unknown)}.")
    if not X.is_down_set(closed):
        raise PreconditionError("The closed part must be a union of strata closed under taking closures.")
    opened = [label for label in X.labels if label not in closed]
    dim_X = X.dim()
    table_X = _codimension_table(X, X.labels, dim_X)
    table_U = _codimension_table(X, opened, dim_X)
    if closed:
        dim_Z = max(X.dim(label) for label in closed)
        codimension = dim_X - dim_Z
        table_Z = _codimension_table(X, closed, dim_Z)
    else:
        codimension = 0
        table_Z = BigradedDims()
    twisted = table_Z.shift(2 * codimension, codimension)
    return {
        "X": table_X.to_list(),
        "U": table_U.to_list(),
        "Z": table_Z.to_list(),
        "Z_twisted": twisted.to_list(),
        "codimension": codimension,
        "passed": table_X == table_U + twisted,
        "extrapolated": len(X) > 0 and not X.is_irreducible(),
    }
