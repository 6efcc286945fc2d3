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
"""Define the on-disk cache of indecomposable Soergel modules."""

import json
import os
import threading
import warnings

import fsspec
import pandas as pd
from trollsift import Parser

from motkit.alias import CACHE_ENV_VAR, CACHE_SCHEMA
from motkit.checks import CacheSchemaWarning, _check_cache_dir, _check_protocol
from motkit.listing import CACHE_FNAME_PATTERN, CACHE_GLOB_PATTERN

# Serializes cache writes within the process
_CACHE_WRITE_LOCK = threading.Lock()


def get_filesystem(protocol="file", fs_args=None):
    """
    Define fsspec filesystem.

    protocol : str
       Only local storage is supported.
       Use `motkit.available_protocols()` to retrieve available protocols.
    fs_args : dict, optional
       Dictionary specifying optional settings to initiate the fsspec.filesystem.
    """
    fs_args = {} if fs_args is None else fs_args
    if not isinstance(fs_args, dict):
        raise TypeError("fs_args must be a dictionary.")
    protocol = _check_protocol(protocol)
    return fsspec.filesystem(protocol, **fs_args)


def get_cache_dir(cache_dir=None):
    """Return the cache directory from the argument, else from $MOTKIT_CACHE, else None."""
    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_ENV_VAR) or None
    return _check_cache_dir(cache_dir)


####--------------------------------------------------------------------------.
#### File names


def get_cache_fname(cartan_type, rank, prime, word):
    """Compose the file name of a cached record.

    `word` is the word string of the element, e.g. '1-2-1' or 'e'.
    """
    p = Parser(CACHE_FNAME_PATTERN)
    return p.compose({"cartan_type": cartan_type, "rank": rank, "prime": prime, "word": word})


def get_cache_fpath(cache_dir, cartan_type, rank, prime, word):
    return os.path.join(cache_dir, get_cache_fname(cartan_type, rank, prime, word))


def get_info_from_filepath(fpath):
    """Retrieve the record key dictionary from a cache file path."""
    if not isinstance(fpath, str):
        raise TypeError("Expecting a single file path string.")
    fname = os.path.basename(fpath)
    p = Parser(CACHE_FNAME_PATTERN)
    try:
        info_dict = p.parse(fname)
    except ValueError:
        raise ValueError(f"{fname} is not a motkit cache file name.")
    info_dict["fpath"] = fpath
    return info_dict


def list_cache_records(cache_dir=None, protocol="file"):
    """Return a DataFrame describing the records found in the cache directory."""
    columns = ["cartan_type", "rank", "prime", "word", "fpath"]
    cache_dir = get_cache_dir(cache_dir)
    if cache_dir is None:
        return pd.DataFrame(columns=columns)
    fs = get_filesystem(protocol)
    fpaths = sorted(fs.glob(os.path.join(cache_dir, CACHE_GLOB_PATTERN)))
    rows = []
    for fpath in fpaths:
        try:
            rows.append(get_info_from_filepath(fpath))
        except ValueError:
            continue
    return pd.DataFrame(rows, columns=columns)


####--------------------------------------------------------------------------.
#### Read and write


def write_record(fpath, record, protocol="file"):
    """Write a JSON record atomically: to a temporary file first, then renamed."""
    fs = get_filesystem(protocol)
    tmp_fpath = f"{fpath}.{os.getpid()}.{threading.get_ident()}.tmp"
    with _CACHE_WRITE_LOCK:
        with fs.open(tmp_fpath, "w") as f:
            json.dump(record, f, sort_keys=True)
        fs.mv(tmp_fpath, fpath)
    return fpath


def read_record(fpath, protocol="file"):
    """Read a JSON record.

    Returns None if the file does not exist. Unreadable records and records
    with another schema are ignored with a CacheSchemaWarning.
    """
    fs = get_filesystem(protocol)
    if not fs.exists(fpath):
        return None
    try:
        with fs.open(fpath, "r") as f:
            record = json.load(f)
    except (OSError, ValueError) as error:
        warnings.warn(f"Ignoring unreadable cache record {fpath}: {error}", CacheSchemaWarning)
        return None
    if not isinstance(record, dict) or record.get("schema") != CACHE_SCHEMA:
        found = record.get("schema") if isinstance(record, dict) else None
        warnings.warn(
            f"Ignoring cache record {fpath} with schema {found} (expected {CACHE_SCHEMA}).",
            CacheSchemaWarning,
        )
        return None
    return record
