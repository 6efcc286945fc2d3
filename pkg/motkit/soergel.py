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
"""Define indecomposable Soergel modules, the p-canonical basis and category O data."""

import concurrent.futures
import json
import sys
import threading
import time
import warnings
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pandas as pd
import sympy
from tqdm import tqdm

from motkit.alias import CACHE_SCHEMA, DEFAULT_SEED
from motkit.checks import (
    CacheSchemaWarning,
    ConsistencyError,
    PreconditionError,
    ValidityWarning,
    _check_cache_dir,
    _check_n_threads,
    _check_prime,
    _check_seed,
)
from motkit.coinv import build_coinvariant
from motkit.coxeter import (
    bruhat_interval,
    demazure_product,
    element_from_word,
    reduced_words,
    torsion_primes,
    weyl_elements,
)
from motkit.decompose import decompose, is_isomorphic
from motkit.hecke import ONE, LaurentPoly, bar, bs_character, express_in_kl_basis, is_unitriangular, kl_basis
from motkit.io import get_cache_fpath, read_record, write_record
from motkit.smod import GradedModule, bott_samelson, fingerprint, graded_dimension

####--------------------------------------------------------------------------.
#### Records


class IndecompRecord:
    """Indecomposable Soergel module D_w, normalized to bottom degree 0.

    Attributes
    ----------
    element : WeylElt
    module : GradedModule
    prime : int
    word : tuple
        The reduced word whose Bott-Samelson module was decomposed.
    summands : list
        [(x, bottom degree)] of the decomposition of BS(word), D_w included.
    certified : bool
        False if some summand was only heuristically indecomposable.
    """

    def __init__(self, element, module, prime, word, summands, certified=True):
        self.element = element
        self.module = module
        self.prime = prime
        self.word = tuple(word)
        self.summands = sorted(summands, key=lambda item: (item[1], item[0].sort_key))
        self.certified = bool(certified)

    @property
    def fingerprint(self):
        return fingerprint(self.module)

    def gdim(self):
        return graded_dimension(self.module)

    def validate(self):
        """Check bottom degree 0 with a line there, top degree 2 l(w) and a palindromic gdim."""
        M, w = self.module, self.element
        gdim = self.gdim()
        if M.bottom_degree != 0 or M.dim(0) != 1:
            raise ConsistencyError(f"D_{w.label} does not have a one-dimensional bottom degree 0.")
        if M.top_degree != 2 * w.length or not gdim.is_palindromic():
            raise ConsistencyError(f"D_{w.label} has a graded dimension {gdim} of the wrong shape.")
        return self

    def __repr__(self):
        return f"IndecompRecord(D_{{{self.element.label}}}, p={self.prime}, gdim={self.gdim()})"


def record_to_dict(record):
    """Return the versioned JSON payload of a record."""
    datum = record.element.datum
    M = record.module
    gdim, end_dims = record.fingerprint
    return {
        "schema": CACHE_SCHEMA,
        "type": datum.cartan_type,
        "rank": datum.rank,
        "prime": record.prime,
        "element": record.element.label,
        "word": [i + 1 for i in record.word],
        "dims": {str(d): n for d, n in sorted(M.dims.items())},
        "action": [{str(d): M.matrix(j, d).tolist() for d in M.degrees} for j in range(M.algebra.rank)],
        "fingerprint": {"gdim": gdim, "end": end_dims},
        "summands": [[[i + 1 for i in x.word], shift] for x, shift in record.summands],
        "heuristic": not record.certified,
    }


def record_from_dict(data, algebra):
    """Rebuild a record from its JSON payload. Raise ValueError if it does not fit the algebra."""
    datum = algebra.datum
    if data.get("schema") != CACHE_SCHEMA:
        raise ValueError(f"Unsupported cache schema {data.get('schema')}.")
    if (data["type"], int(data["rank"]), int(data["prime"])) != (datum.cartan_type, datum.rank, algebra.prime):
        raise ValueError("The record belongs to another root datum or prime.")
    element = element_from_word(datum, [i - 1 for i in data["word"]])
    dims = {int(d): int(n) for d, n in data["dims"].items()}
    action = [{int(d): np.array(m, dtype=np.int64) for d, m in matrices.items()} for matrices in data["action"]]
    module = GradedModule(algebra, dims, action, validate=True)
    stored = data["fingerprint"]
    if fingerprint(module) != ([list(pair) for pair in stored["gdim"]], list(stored["end"])):
        raise ValueError(f"The fingerprint of D_{element.label} does not match its module.")
    summands = [(element_from_word(datum, [i - 1 for i in word]), int(shift)) for word, shift in data["summands"]]
    record = IndecompRecord(element, module, algebra.prime, element.word, summands, not data["heuristic"])
    return record.validate()


def cache_roundtrip(record):
    """Serialize a record to JSON text and read it back."""
    return record_from_dict(json.loads(json.dumps(record_to_dict(record))), record.module.algebra)


####--------------------------------------------------------------------------.
#### Store of indecomposables


class SoergelStore:
    """Indecomposable Soergel modules of a root datum at a prime.

    Records are computed in Bruhat order on demand and, if a cache directory is
    given, read from and written to it. A store can be shared between threads.
    """

    def __init__(self, datum, prime, cache_dir=None, seed=DEFAULT_SEED, verbose=False):
        self.datum = datum
        self.prime = _check_prime(prime)
        self.seed = _check_seed(seed)
        self.cache_dir = _check_cache_dir(cache_dir)
        self.verbose = verbose
        self.algebra = build_coinvariant(datum, self.prime)
        self._records = {}
        self._p_canonical = {}
        self._lock = threading.RLock()

    ####----------------------------------------------------------------------.
    #### Cache

    def _fpath(self, w):
        return get_cache_fpath(self.cache_dir, self.datum.cartan_type, self.datum.rank, self.prime, w.word_string)

    def _load(self, w):
        if self.cache_dir is None:
            return None
        fpath = self._fpath(w)
        data = read_record(fpath)
        if data is None:
            return None
        try:
            record = record_from_dict(data, self.algebra)
        except (ValueError, KeyError, TypeError, ConsistencyError) as error:
            warnings.warn(f"Ignoring cache record {fpath}: {error}", CacheSchemaWarning)
            return None
        if record.element != w:
            warnings.warn(f"Ignoring cache record {fpath}: it describes D_{record.element.label}.", CacheSchemaWarning)
            return None
        return record

    def _save(self, record):
        if self.cache_dir is not None:
            write_record(self._fpath(record.element), record_to_dict(record))

    ####----------------------------------------------------------------------.
    #### Indecomposables

    def record(self, w):
        """Return the record of D_w, computing D_x for all x < w first."""
        with self._lock:
            if w in self._records:
                return self._records[w]
            record = self._load(w)
            if record is None:
                lower = [x for x in bruhat_interval(w) if x != w]
                for x in lower:
                    self.record(x)
                t_i = time.time()
                record = self._compute(w, lower)
                if self.verbose:
                    t_elapsed = round(time.time() - t_i)
                    print(
                        f" - D_{{{w.label}}} with gdim {record.gdim()} computed in {t_elapsed} seconds",
                        file=sys.stderr,
                    )
                self._save(record)
            self._records[w] = record
            return record

    def _compute(self, w, lower):
        word = w.word
        summands = decompose(bott_samelson(self.algebra, word), seed=self.seed)
        found, new = [], []
        for summand in summands:
            x = self.identify(summand.module, lower)
            if x is None:
                new.append(summand)
            else:
                found.append((x, summand.shift))
        if len(new) != 1:
            raise ConsistencyError(
                f"BS({w.word_string}) has {len(new)} summands not isomorphic to a shifted D_x "
                f"with x < {w.label}; exactly one is expected."
            )
        certified = all(summand.certified for summand in summands)
        record = IndecompRecord(w, new[0].module, self.prime, word, found + [(w, new[0].shift)], certified)
        return record.validate()

    def identify(self, module, candidates):
        """Return the x among candidates with D_x isomorphic to a module normalized to bottom 0."""
        for x in candidates:
            reference = self._records[x].module
            if reference.dims == module.dims and is_isomorphic(module, reference, seed=self.seed):
                return x
        return None

    def records(self, elements=None):
        """Return {w: record} for the given elements, by default the whole Weyl group."""
        elements = weyl_elements(self.datum) if elements is None else elements
        return {w: self.record(w) for w in elements}

    def decompose_word(self, word):
        """Return [(x, shift, certified)] describing BS(word) as a sum of shifted D_x."""
        word = tuple(word)
        top = demazure_product(self.datum, word)
        self.record(top)
        candidates = bruhat_interval(top)
        summands = decompose(bott_samelson(self.algebra, word), seed=self.seed)
        result = []
        for summand in summands:
            x = self.identify(summand.module, candidates)
            if x is None:
                raise ConsistencyError(f"A summand of BS({word}) is not a shifted D_x with x <= {top.label}.")
            result.append((x, summand.shift, summand.certified))
        return result

    ####----------------------------------------------------------------------.
    #### p-canonical basis

    def p_canonical(self, w):
        """Return pb_w = bs_character(word) - sum v^(B + l(x) - l) pb_x over the other summands."""
        with self._lock:
            if w in self._p_canonical:
                return self._p_canonical[w]
            record = self.record(w)
            length = len(record.word)
            result = bs_character(self.datum, record.word)
            for x, shift in record.summands:
                if x == w:
                    if shift != 0:
                        raise ConsistencyError(f"D_{w.label} appears in BS({w.word_string}) with shift {shift}.")
                    continue
                result = result - self.p_canonical(x) * LaurentPoly.monomial(shift + x.length - length)
            _check_p_canonical(result, w)
            self._p_canonical[w] = result
            return result


def _check_p_canonical(element, w):
    if bar(element) != element:
        raise ConsistencyError(f"The p-canonical element of {w.label} is not bar-invariant.")
    if not is_unitriangular(element, w):
        raise ConsistencyError(f"The p-canonical element of {w.label} is not unitriangular.")
    if not all(coeff.is_nonnegative() for coeff in element.terms.values()):
        raise ConsistencyError(f"The p-canonical element of {w.label} has negative coefficients.")


_STORES = {}
_STORES_LOCK = threading.Lock()


def get_store(datum, prime, cache_dir=None, seed=DEFAULT_SEED, verbose=False):
    """Return the shared store of (datum, prime, cache_dir, seed)."""
    key = (datum, _check_prime(prime), _check_cache_dir(cache_dir), _check_seed(seed))
    with _STORES_LOCK:
        if key not in _STORES:
            _STORES[key] = SoergelStore(datum, prime, cache_dir=cache_dir, seed=seed, verbose=verbose)
        store = _STORES[key]
    store.verbose = verbose
    return store


def indecomposable_soergel(w, prime, cache_dir=None, seed=DEFAULT_SEED, verbose=False):
    """Return the record of the indecomposable Soergel module D_w at the prime."""
    return get_store(w.datum, prime, cache_dir=cache_dir, seed=seed, verbose=verbose).record(w)


def p_canonical(w, prime, cache_dir=None, seed=DEFAULT_SEED, verbose=False):
    """Return the p-canonical basis element pb_w."""
    return get_store(w.datum, prime, cache_dir=cache_dir, seed=seed, verbose=verbose).p_canonical(w)


def p_canonical_defect(w, prime, cache_dir=None, seed=DEFAULT_SEED):
    """Return pb_w - b_w expanded in the Kazhdan-Lusztig basis, as {x: LaurentPoly}."""
    difference = p_canonical(w, prime, cache_dir=cache_dir, seed=seed) - kl_basis(w)
    return express_in_kl_basis(difference)


def decompose_reduced_words(w, prime, seed=DEFAULT_SEED, n_threads=4, progress_bar=False, cache_dir=None):
    """Decompose BS(word) for every reduced word of w, concurrently.

    Returns
    -------
    dict
        {word tuple: sorted tuple of (label of x, bottom degree)}.
    """
    n_threads = _check_n_threads(n_threads)
    store = get_store(w.datum, prime, cache_dir=cache_dir, seed=seed)
    store.record(w)
    words = [tuple(word) for word in reduced_words(w)]

    def _summary(word):
        return tuple(sorted((x.label, shift) for x, shift, _ in store.decompose_word(word)))

    results = {}
    if progress_bar:
        pbar = tqdm(total=len(words))
    with ThreadPoolExecutor(max_workers=n_threads) as executor:
        dict_futures = {executor.submit(_summary, word): word for word in words}
        for future in concurrent.futures.as_completed(dict_futures.keys()):
            if progress_bar:
                pbar.update(1)
            results[dict_futures[future]] = future.result()
    if progress_bar:
        pbar.close()
    return dict(sorted(results.items()))


####--------------------------------------------------------------------------.
#### Modular category O


def _check_category_o(datum, prime, force=False):
    """Refuse (or warn, if forced) when p <= h or p is a torsion prime."""
    reasons = []
    if prime <= datum.coxeter_number:
        reasons.append(f"p={prime} must be bigger than the Coxeter number h={datum.coxeter_number}")
    if prime in torsion_primes(datum):
        reasons.append(f"p={prime} is a torsion prime of {datum.label}")
    if not reasons:
        return True
    msg = "The category O dictionary requires: " + "; ".join(reasons) + "."
    if not force:
        raise PreconditionError(msg)
    warnings.warn(msg + " Results are printed without validity guarantee.", ValidityWarning)
    return False


def decomposition_matrix(datum, prime, force=False, cache_dir=None, seed=DEFAULT_SEED, verbose=False):
    """Return the graded decomposition matrix (P_x : M_y) = coefficient of H_y in pb_x.

    Rows are indexed by y, columns by x, both sorted by (length, word).
    Entries are LaurentPoly objects.
    """
    prime = _check_prime(prime)
    _check_category_o(datum, prime, force=force)
    store = get_store(datum, prime, cache_dir=cache_dir, seed=seed, verbose=verbose)
    elements = weyl_elements(datum)
    labels = [w.label for w in elements]
    columns = {}
    for x in elements:
        element = store.p_canonical(x)
        columns[x.label] = [element.coefficient(y) for y in elements]
    return pd.DataFrame(columns, index=labels, columns=labels)


def simple_multiplicities(datum, prime, graded=False, force=False, cache_dir=None, seed=DEFAULT_SEED):
    """Return [M_y : L_x] = (P_x : M_y), graded or evaluated at v = 1."""
    matrix = decomposition_matrix(datum, prime, force=force, cache_dir=cache_dir, seed=seed)
    if graded:
        return matrix
    return matrix.map(lambda poly: poly.evaluate(1)).astype(int)


def graded_simple_multiplicities(datum, prime, force=False, cache_dir=None, seed=DEFAULT_SEED):
    return simple_multiplicities(datum, prime, graded=True, force=force, cache_dir=cache_dir, seed=seed)


def _invert_unitriangular(matrix):
    """Invert an upper unitriangular DataFrame of LaurentPoly entries by back substitution."""
    labels = list(matrix.index)
    n = len(labels)
    values = matrix.to_numpy()
    result = [[LaurentPoly() for _ in range(n)] for _ in range(n)]
    for j in range(n):
        result[j][j] = ONE
        for i in range(j - 1, -1, -1):
            total = LaurentPoly()
            for k in range(i + 1, j + 1):
                total = total + values[i][k] * result[k][j]
            result[i][j] = -total
    return pd.DataFrame(result, index=labels, columns=labels)


def simple_characters(datum, prime, graded=False, force=False, cache_dir=None, seed=DEFAULT_SEED):
    """Return the characters of the simple modules in terms of standard modules.

    Entry (y, x) is the coefficient of [M_y] in [L_x]: the transpose of the
    inverse of the multiplicity matrix.
    """
    multiplicities = simple_multiplicities(
        datum, prime, graded=graded, force=force, cache_dir=cache_dir, seed=seed
    )
    labels = list(multiplicities.index)
    if graded:
        inverse = _invert_unitriangular(multiplicities)
        return inverse.T
    matrix = sympy.Matrix(multiplicities.to_numpy().tolist())
    if matrix.det() not in (1, -1):
        raise ConsistencyError("The simple multiplicity matrix is not invertible over Z.")
    inverse = matrix.inv()
    values = [[int(inverse[i, j]) for i in range(len(labels))] for j in range(len(labels))]
    return pd.DataFrame(values, index=labels, columns=labels)
