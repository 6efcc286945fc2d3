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
"""Define motkit discovery functions and label parsing utilities."""

import re

from motkit.alias import OUTPUT_FORMATS, PROTOCOLS, SUBCOMMANDS, _cartan_types, _identity_words
from motkit.checks import _check_cartan_type

####--------------------------------------------------------------------------.
#### Dictionary retrievals


def get_dict_cartan_type_ranks():
    """Return a dictionary {cartan_type: (min_rank, max_rank)}.

    A max_rank of None means the family is unbounded.
    """
    from motkit.listing import RANK_RESTRICTIONS

    return dict(RANK_RESTRICTIONS)


def get_dict_cartan_type_torsion_primes(rank=None):
    """Return a dictionary {cartan_type: torsion primes}.

    If `rank` is specified, only the types admitting that rank are reported.
    """
    from motkit.listing import RANK_RESTRICTIONS, get_torsion_primes

    dict_torsion = {}
    for cartan_type, (min_rank, max_rank) in RANK_RESTRICTIONS.items():
        type_rank = min_rank if rank is None else rank
        if type_rank < min_rank or (max_rank is not None and type_rank > max_rank):
            continue
        dict_torsion[cartan_type] = get_torsion_primes(cartan_type, type_rank)
    return dict_torsion


####--------------------------------------------------------------------------.
#### Available options


def available_cartan_types():
    """Return a list of available Cartan types."""
    return list(_cartan_types.keys())


def available_ranks(cartan_type, max_rank=8):
    """Return the admissible ranks of a Cartan type, truncated at `max_rank`."""
    from motkit.listing import RANK_RESTRICTIONS

    cartan_type = _check_cartan_type(cartan_type)
    min_rank, type_max_rank = RANK_RESTRICTIONS[cartan_type]
    upper = max_rank if type_max_rank is None else min(type_max_rank, max_rank)
    return list(range(min_rank, upper + 1))


def available_output_formats():
    """Return a list of available output formats."""
    return list(OUTPUT_FORMATS)


def available_protocols():
    """Return a list of available cache filesystem protocols."""
    return list(PROTOCOLS)


def available_subcommands():
    """Return the list of motkit command line subcommands."""
    return list(SUBCOMMANDS)


####--------------------------------------------------------------------------.
#### Word parsing


def parse_word(text, rank=None):
    """Parse a word of simple reflections.

    Accepted spellings are 's1 s2 s1', '1 2 1', '1,2,1', '1-2-1' and, when all
    indices are single digits, '121' or 's1s2s1'. The identity is 'e' or ''.

    Parameters
    ----------
    text : str or sequence of int
        The word. A sequence of integers is read as 0-based indices.
    rank : int, optional
        If specified, indices are checked to be at most `rank`.

    Returns
    -------
    tuple
        0-based generator indices.
    """
    if not isinstance(text, str):
        word = tuple(int(i) for i in text)
    else:
        cleaned = text.strip()
        if cleaned.upper() in _identity_words:
            return ()
        tokens = [token for token in re.split(r"[\s,\-*\.]+", cleaned) if token]
        indices = []
        for token in tokens:
            token = token.lower().replace("s_", "s")
            if re.fullmatch(r"s?\d+", token) and (token.startswith("s") or len(tokens) > 1):
                indices.append(int(token.lstrip("s")))
            elif re.fullmatch(r"(s\d)+", token):
                indices.extend(int(c) for c in token[1::2])
            elif re.fullmatch(r"\d+", token):
                indices.extend(int(c) for c in token)
            else:
                raise ValueError(f"Unable to parse the word '{text}'.")
        if any(i < 1 for i in indices):
            raise ValueError(f"Generators are numbered from 1, got '{text}'.")
        word = tuple(i - 1 for i in indices)
    if rank is not None and any(i < 0 or i >= rank for i in word):
        raise ValueError(f"The word '{text}' uses generators outside s1..s{rank}.")
    return word


def word_label(word):
    """Return the display label of a word of 0-based indices, e.g. 's1 s2'."""
    if len(word) == 0:
        return "e"
    return " ".join(f"s{i + 1}" for i in word)


def parse_labels(text):
    """Split a ';'-separated list of element labels."""
    if text is None:
        return []
    return [label.strip() for label in text.split(";") if label.strip()]
