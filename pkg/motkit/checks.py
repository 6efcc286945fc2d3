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
"""Define functions checking motkit inputs and the motkit exceptions."""

import os

import galois
import numpy as np
from sympy import isprime

from motkit.alias import OUTPUT_FORMATS, PROTOCOLS, _cartan_types

####--------------------------------------------------------------------------.
#### Exceptions and warnings


class PreconditionError(ValueError):
    """A documented precondition of a computation is not satisfied."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed. This always signals a bug."""


class HeuristicResultWarning(UserWarning):
    """A randomized certification exhausted its budget without a proof."""


class CacheSchemaWarning(UserWarning):
    """A cache record was ignored because it is stale or unreadable."""


class ExtrapolatedResultWarning(UserWarning):
    """A result was extended beyond the irreducible case by additivity."""


class ValidityWarning(UserWarning):
    """A result was forced outside its standing assumptions."""


####--------------------------------------------------------------------------.
#### Root data


def _check_cartan_type(cartan_type):
    """Check cartan_type validity."""
    if not isinstance(cartan_type, str):
        raise TypeError("`cartan_type` must be a string.")
    # Retrieve type key accounting for possible aliases
    type_key = None
    for key, possible_values in _cartan_types.items():
        if cartan_type.upper() in possible_values:
            type_key = key
            break
    if type_key is None:
        valid_type_keys = list(_cartan_types.keys())
        raise ValueError(f"Available Cartan types: {valid_type_keys}")
    return type_key


def _check_rank(rank, cartan_type):
    """Check rank validity for a given Cartan type."""
    from motkit.listing import RANK_RESTRICTIONS

    if isinstance(rank, (bool, np.bool_)) or not isinstance(rank, (int, np.integer)):
        raise TypeError("`rank` must be an integer.")
    rank = int(rank)
    min_rank, max_rank = RANK_RESTRICTIONS[cartan_type]
    if rank < min_rank or (max_rank is not None and rank > max_rank):
        upper = "inf" if max_rank is None else max_rank
        raise ValueError(
            f"Type {cartan_type} requires a rank in [{min_rank}, {upper}], got {rank}."
        )
    return rank


def _check_flag(flag):
    """Check a compact Cartan type such as 'A2' and return (cartan_type, rank)."""
    if not isinstance(flag, str):
        raise TypeError("`flag` must be a string like 'A2'.")
    flag = flag.strip()
    if len(flag) < 2 or not flag[1:].isdigit():
        raise ValueError(f"Invalid Cartan type '{flag}'. Expected a letter and a rank, e.g. 'B2'.")
    cartan_type = _check_cartan_type(flag[0])
    rank = _check_rank(int(flag[1:]), cartan_type)
    return cartan_type, rank


def _check_same_datum(x, y):
    """Check two Weyl group objects live on the same root datum."""
    if x.datum != y.datum:
        raise ValueError(
            f"Objects belong to different root data: {x.datum.label} and {y.datum.label}."
        )


def _check_generator(generator, rank):
    """Check a simple reflection index (0-based) is valid for the rank."""
    if isinstance(generator, (bool, np.bool_)) or not isinstance(generator, (int, np.integer)):
        raise TypeError("A simple reflection must be given by its integer index.")
    generator = int(generator)
    if generator < 0 or generator >= rank:
        raise ValueError(f"Simple reflection index must be in [0, {rank - 1}], got {generator}.")
    return generator


####--------------------------------------------------------------------------.
#### Arithmetic


def _check_prime(prime):
    """Check prime validity."""
    if isinstance(prime, (bool, np.bool_)) or not isinstance(prime, (int, np.integer)):
        raise TypeError("`prime` must be an integer.")
    prime = int(prime)
    if not isprime(prime):
        raise ValueError(f"`prime` must be a prime number, got {prime}.")
    return prime


def _check_prime_power(q):
    """Check q is a prime power."""
    if isinstance(q, (bool, np.bool_)) or not isinstance(q, (int, np.integer)):
        raise TypeError("`q` must be an integer.")
    q = int(q)
    if not galois.is_prime_power(q):
        raise ValueError(f"`q` must be a prime power, got {q}.")
    return q


def _check_even_shift(shift):
    """Check a grading shift is an even integer."""
    if isinstance(shift, (bool, np.bool_)) or not isinstance(shift, (int, np.integer)):
        raise TypeError("A grading shift must be an integer.")
    shift = int(shift)
    if shift % 2 != 0:
        raise PreconditionError(
            f"Only even shifts of grading are allowed, got {shift}."
        )
    return shift


def _check_seed(seed):
    """Check seed validity."""
    if seed is None:
        return 0
    if isinstance(seed, (bool, np.bool_)) or not isinstance(seed, (int, np.integer)):
        raise TypeError("`seed` must be an integer.")
    if seed < 0:
        raise ValueError("`seed` must be non-negative.")
    return int(seed)


def _check_n_threads(n_threads):
    """Check n_threads and clip it to [1, 50]."""
    if not isinstance(n_threads, (int, np.integer)):
        raise TypeError("`n_threads` must be an integer.")
    return int(min(max(n_threads, 1), 50))


####--------------------------------------------------------------------------.
#### Outputs and storage


def _check_output_format(output_format):
    """Check output_format validity."""
    if not isinstance(output_format, str):
        raise TypeError("`output_format` must be a string.")
    output_format = output_format.lower()
    if output_format not in OUTPUT_FORMATS:
        raise ValueError(f"Valid `output_format` are {OUTPUT_FORMATS}.")
    return output_format


def _check_protocol(protocol):
    """Check protocol validity."""
    if not isinstance(protocol, str):
        raise TypeError("`protocol` must be a string.")
    if protocol not in PROTOCOLS:
        raise ValueError(f"Valid `protocol` are {PROTOCOLS}.")
    if protocol == "local":
        protocol = "file"  # for fsspec LocalFS compatibility
    return protocol


def _check_cache_dir(cache_dir, create=True):
    """Check cache_dir validity."""
    if cache_dir is None:
        return None
    if not isinstance(cache_dir, (str, os.PathLike)):
        raise TypeError("`cache_dir` must be a string.")
    cache_dir = os.fspath(cache_dir)
    if not os.path.exists(cache_dir):
        if not create:
            raise OSError(f"`cache_dir` {cache_dir} does not exist.")
        os.makedirs(cache_dir, exist_ok=True)
    if not os.path.isdir(cache_dir):
        raise OSError(f"`cache_dir` {cache_dir} is not a directory.")
    return cache_dir
