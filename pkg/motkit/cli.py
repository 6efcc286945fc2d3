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
"""Define the motkit command line interface.

Exit codes: 0 on success, 2 when a precondition is refused, 1 on internal
failures and 64 on malformed arguments.
"""

import argparse
import json
import sys
import warnings
from dataclasses import dataclass

import pandas as pd

from motkit.alias import (
    DEFAULT_CARTAN_TYPE,
    DEFAULT_PRIME,
    DEFAULT_RANK,
    DEFAULT_SEED,
    JSON_SCHEMA,
    MILNOR_MAX_N,
    OUTPUT_FORMATS,
)
from motkit.checks import (
    ConsistencyError,
    PreconditionError,
    ValidityWarning,
    _check_cartan_type,
    _check_flag,
    _check_output_format,
    _check_prime,
    _check_rank,
    _check_seed,
)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PRECONDITION = 2
EXIT_USAGE = 64


class UsageError(Exception):
    """Malformed command line arguments."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


####--------------------------------------------------------------------------.
#### Configuration


@dataclass(frozen=True)
class RunConfig:
    """Resolved global options of a motkit run."""

    cartan_type: str = DEFAULT_CARTAN_TYPE
    rank: int = DEFAULT_RANK
    prime: int = DEFAULT_PRIME
    seed: int = DEFAULT_SEED
    cache_dir: str = None
    output_format: str = "json"
    force: bool = False
    verbose: bool = False

    @classmethod
    def from_args(cls, args):
        from motkit.io import get_cache_dir

        try:
            if args.type is not None and len(args.type) > 1 and args.type[1:].isdigit():
                cartan_type, rank = _check_flag(args.type)
                if args.rank is not None and args.rank != rank:
                    raise ValueError(f"--type {args.type} conflicts with --rank {args.rank}.")
            else:
                cartan_type = _check_cartan_type(args.type or DEFAULT_CARTAN_TYPE)
                rank = _check_rank(args.rank if args.rank is not None else DEFAULT_RANK, cartan_type)
            return cls(
                cartan_type=cartan_type,
                rank=rank,
                prime=_check_prime(args.prime),
                seed=_check_seed(args.seed),
                cache_dir=get_cache_dir(args.cache),
                output_format=_check_output_format(args.format),
                force=args.force,
                verbose=args.verbose,
            )
        except (TypeError, ValueError, OSError) as error:
            raise UsageError(str(error))

    @property
    def label(self):
        return f"{self.cartan_type}{self.rank}"

    def datum(self):
        from motkit.coxeter import build_root_datum

        return build_root_datum(self.cartan_type, self.rank)

    def store(self):
        from motkit.soergel import get_store

        return get_store(self.datum(), self.prime, cache_dir=self.cache_dir, seed=self.seed, verbose=self.verbose)


def _parse_word(text, datum):
    from motkit.info import parse_word

    try:
        return parse_word(text, rank=datum.rank)
    except ValueError as error:
        raise UsageError(str(error))


def _parse_element(text, datum):
    from motkit.coxeter import element_from_word

    return element_from_word(datum, _parse_word(text, datum))


def _poly_table(df):
    return df.map(lambda poly: poly.to_string("v"))


####--------------------------------------------------------------------------.
#### Subcommands
# Each handler returns (payload, table) with table a DataFrame or None.


def _run_weyl(args, config):
    from motkit.coxeter import enumerate_weyl, poincare_from_degrees, reduced_words, torsion_primes
    from motkit.hecke import LaurentPoly
    from motkit.info import word_label

    datum = config.datum()
    levels = enumerate_weyl(datum)
    counts = [len(level) for level in levels]
    payload = {
        "lattice": "simply_connected",
        "rank": datum.rank,
        "order": datum.weyl_order,
        "coxeter_number": datum.coxeter_number,
        "degrees": list(datum.degrees),
        "longest_length": datum.longest_length,
        "lengths": counts,
        "poincare": counts,
        "torsion_primes": sorted(torsion_primes(datum)),
        "cartan_matrix": datum.cartan_matrix.tolist(),
        "words": [w.label for level in levels for w in level],
    }
    table = pd.DataFrame({"length": range(len(levels)), "count": counts})
    if args.elements:
        payload["elements"] = [[w.label for w in level] for level in levels]
        table = pd.DataFrame([{"element": w.label, "length": w.length} for level in levels for w in level])
    if args.poincare:
        coefficients = poincare_from_degrees(datum)
        payload["poincare_from_degrees"] = coefficients
        payload["poincare_matches_degrees"] = coefficients == counts
        payload["poincare_polynomial"] = LaurentPoly(dict(enumerate(coefficients))).to_string("v")
    if args.reduced_words is not None:
        w = _parse_element(args.reduced_words, datum)
        words = [word_label(word) for word in reduced_words(w)]
        payload["element"] = w.label
        payload["reduced_words"] = words
        table = pd.DataFrame({"reduced word": words})
    return payload, table


def _sorted_terms(terms):
    return sorted(terms.items(), key=lambda item: item[0].sort_key)


def _run_kl(args, config):
    from motkit.hecke import kl_basis, kl_polynomial, mu_coefficient

    datum = config.datum()
    w = _parse_element(args.element, datum)
    element = kl_basis(w)
    payload = {"element": w.label, "kl_basis": element.to_dict()}
    if args.y is not None:
        y = _parse_element(args.y, datum)
        payload["y"] = y.label
        payload["h"] = kl_polynomial(y, w).to_list()
        payload["mu"] = mu_coefficient(y, w)
    table = pd.DataFrame(
        [{"y": y.label, "h_y,w": coeff.to_string("v")} for y, coeff in _sorted_terms(element.terms)]
    )
    return payload, table


def _run_bschar(args, config):
    from motkit.hecke import bs_character, express_in_kl_basis

    datum = config.datum()
    word = _parse_word(args.word, datum)
    character = bs_character(datum, word)
    expansion = _sorted_terms(express_in_kl_basis(character))
    payload = {
        "word": [i + 1 for i in word],
        "character": character.to_dict(),
        "kl_expansion": {x.label: coeff.to_list() for x, coeff in expansion},
    }
    table = pd.DataFrame([{"x": x.label, "coefficient of b_x": coeff.to_string("v")} for x, coeff in expansion])
    return payload, table


def _run_coinv(args, config):
    from motkit.coinv import build_coinvariant, poincare_poly, prime_ok
    from motkit.coxeter import poincare_counts, torsion_primes

    datum = config.datum()
    C = build_coinvariant(datum, config.prime, verbose=config.verbose, progress_bar=config.verbose)
    counts = poincare_counts(datum)
    n_degrees = max(len(counts), C.top_degree // 2 + 1)
    counts_padded = counts + [0] * (n_degrees - len(counts))
    dims = [C.dim(2 * i) for i in range(n_degrees)]
    payload = {
        "lattice": "simply_connected",
        "dims": {str(d): n for d, n in sorted(C.dims.items())},
        "poincare": poincare_poly(C).to_list(),
        "total_dimension": C.total_dimension,
        "weyl_counts": counts,
        "matches_weyl": dims == counts_padded,
        "dimension_discrepancy": C.total_dimension - sum(counts),
        "prime_ok": prime_ok(C),
        "torsion_primes": sorted(torsion_primes(datum)),
    }
    table = pd.DataFrame(
        {"degree": [2 * i for i in range(n_degrees)], "dim C": dims, "#{l(w)=i}": counts_padded}
    )
    if args.poincare:
        del payload["dims"]
        table = pd.DataFrame({"poincare": [poincare_poly(C).to_string("t")]})
    elif args.dims:
        del payload["poincare"]
        table = table[["degree", "dim C"]]
    return payload, table


def _module_payload(M):
    from motkit.smod import graded_dimension

    return {
        "dims": {str(d): n for d, n in sorted(M.dims.items())},
        "gdim": graded_dimension(M).to_list(),
        "total_dimension": M.total_dimension,
    }


def _run_bs(args, config):
    from motkit.coinv import build_coinvariant
    from motkit.smod import bott_samelson

    datum = config.datum()
    word = _parse_word(args.word, datum)
    M = bott_samelson(build_coinvariant(datum, config.prime), word)
    payload = {"word": [i + 1 for i in word], **_module_payload(M)}
    table = pd.DataFrame({"degree": M.degrees, "dim": [M.dim(d) for d in M.degrees]})
    return payload, table


def _run_decompose(args, config):
    datum = config.datum()
    word = _parse_word(args.word, datum)
    summands = config.store().decompose_word(word)
    rows = [
        {"element": x.label, "shift": shift, "certified": certified}
        for x, shift, certified in summands
    ]
    payload = {
        "word": [i + 1 for i in word],
        "summands": rows,
        "heuristic": not all(row["certified"] for row in rows),
    }
    return payload, pd.DataFrame(rows, columns=["element", "shift", "certified"])


def _run_pcan(args, config):
    from motkit.hecke import kl_basis
    from motkit.soergel import p_canonical_defect

    datum = config.datum()
    w = _parse_element(args.element, datum)
    store = config.store()
    element = store.p_canonical(w)
    record = store.record(w)
    defect = p_canonical_defect(w, config.prime, cache_dir=config.cache_dir, seed=config.seed)
    payload = {
        "element": w.label,
        "p_canonical": element.to_dict(),
        "equals_kl": element == kl_basis(w),
        "defect": {x.label: coeff.to_list() for x, coeff in _sorted_terms(defect)},
        "gdim": record.gdim().to_list(),
        "heuristic": not record.certified,
    }
    table = pd.DataFrame(
        [{"y": y.label, "ph_y,w": coeff.to_string("v")} for y, coeff in _sorted_terms(element.terms)]
    )
    return payload, table


def _checked_category_o(config):
    """Return (datum, valid), warning at most once when --force overrides the assumptions."""
    from motkit.soergel import _check_category_o

    datum = config.datum()
    return datum, _check_category_o(datum, config.prime, force=config.force)


def _run_decmat(args, config):
    from motkit.soergel import decomposition_matrix

    datum, valid = _checked_category_o(config)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ValidityWarning)
        matrix = decomposition_matrix(
            datum, config.prime, force=True, cache_dir=config.cache_dir, seed=config.seed, verbose=config.verbose
        )
    payload = {
        "elements": list(matrix.index),
        "matrix": [[poly.to_list() for poly in row] for row in matrix.to_numpy().tolist()],
        "valid": valid,
    }
    return payload, _poly_table(matrix)


def _run_simples(args, config):
    from motkit.soergel import simple_characters, simple_multiplicities

    datum, valid = _checked_category_o(config)
    kwargs = {"force": True, "cache_dir": config.cache_dir, "seed": config.seed}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ValidityWarning)
        multiplicities = simple_multiplicities(datum, config.prime, **kwargs)
        graded = simple_multiplicities(datum, config.prime, graded=True, **kwargs)
        characters = simple_characters(datum, config.prime, **kwargs)
    payload = {
        "elements": list(multiplicities.index),
        "multiplicities": multiplicities.to_numpy().tolist(),
        "graded_multiplicities": [[poly.to_list() for poly in row] for row in graded.to_numpy().tolist()],
        "characters": characters.to_numpy().tolist(),
        "valid": valid,
    }
    return payload, multiplicities


def _run_cellmot(args, config):
    from motkit.cellmot import (
        flag_strata,
        load_poset,
        localization_check,
        motivic_cohomology,
        projective_bundle,
    )
    from motkit.coxeter import build_root_datum
    from motkit.info import parse_labels

    if args.poset is not None:
        X = load_poset(args.poset)
    elif args.flag is not None:
        try:
            X = flag_strata(build_root_datum(*_check_flag(args.flag)))
        except (TypeError, ValueError) as error:
            raise UsageError(str(error))
    else:
        X = flag_strata(config.datum())
    table = motivic_cohomology(X)
    payload = {"strata": len(X), "cohomology": table.to_list(), "extrapolated": table.extrapolated}
    if args.projective is not None:
        payload["projective_bundle"] = projective_bundle(X, args.projective).to_list()
    if args.closed is not None:
        payload["localization"] = localization_check(X, parse_labels(args.closed))
    return payload, pd.DataFrame(table.to_list(), columns=["j", "i", "dim"])


def _run_strata(args, config):
    from motkit.cellmot import flag_strata, partial_flag_strata, poset_to_dict

    datum = config.datum()
    if args.parabolic is not None:
        word = _parse_word(args.parabolic, datum)
        if len(word) != 1:
            raise UsageError("--parabolic expects a single generator, e.g. 's1'.")
        X = partial_flag_strata(datum, word[0])
    else:
        X = flag_strata(datum)
    payload = poset_to_dict(X)
    return payload, pd.DataFrame(X.strata, columns=["label", "dim"])


def _run_milnork(args, config):
    from motkit.milnork import milnor_k

    group = milnor_k(args.q, args.n)
    payload = {"q": args.q, "n": args.n, "invariants": group.to_list(), "order": group.order}
    return payload, pd.DataFrame([payload])


def _run_tatehom(args, config):
    from motkit.milnork import tate_hom, tate_levels

    dim = tate_hom(config.prime, args.i, args.j)
    payload = {"prime": config.prime, "i": args.i, "j": args.j, "dim": dim}
    if args.i == args.j and 0 <= args.i <= MILNOR_MAX_N:
        payload["levels"] = tate_levels(config.prime, args.i)
    return payload, pd.DataFrame([{"i": args.i, "j": args.j, "dim": dim}])


def _run_cache(args, config):
    from motkit.io import list_cache_records

    if config.cache_dir is None:
        raise UsageError("No cache directory: pass --cache DIR or set MOTKIT_CACHE.")
    records = list_cache_records(config.cache_dir)
    payload = {"cache_dir": config.cache_dir, "records": records.drop(columns="fpath").to_dict(orient="records")}
    return payload, records


####--------------------------------------------------------------------------.
#### Parser


def _global_options():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--type", default=None, help="Cartan type letter, or compact form such as 'A2'.")
    parent.add_argument("--rank", type=int, default=None, help=f"Rank (default {DEFAULT_RANK}).")
    parent.add_argument("--prime", type=int, default=DEFAULT_PRIME, help=f"Characteristic (default {DEFAULT_PRIME}).")
    parent.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed of randomized decompositions.")
    parent.add_argument("--cache", default=None, help="Cache directory (default: $MOTKIT_CACHE).")
    parent.add_argument("--format", default="json", choices=OUTPUT_FORMATS, help="Output format.")
    parent.add_argument("--force", action="store_true", help="Print category O data outside its assumptions.")
    parent.add_argument("--verbose", action="store_true", help="Print progress information on stderr.")
    return parent


def get_parser():
    """Return the motkit argument parser."""
    parent = _global_options()
    parser = _ArgumentParser(prog="motkit", description="Soergel modules, p-canonical bases and cellular motives.")
    subparsers = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)
    subparsers.required = True

    def add(name, handler, help_text):
        subparser = subparsers.add_parser(name, parents=[parent], help=help_text)
        subparser.set_defaults(handler=handler)
        return subparser

    weyl = add("weyl", _run_weyl, "Weyl group data.")
    weyl.add_argument("--list", "--elements", dest="elements", action="store_true", help="List all elements.")
    weyl.add_argument("--poincare", action="store_true", help="Compare with the product of the degrees.")
    weyl.add_argument("--reduced-words", default=None, help="List the reduced words of an element.")
    kl = add("kl", _run_kl, "Kazhdan-Lusztig basis element b_w.")
    kl.add_argument("--element", required=True)
    kl.add_argument("--y", default=None, help="Also report h_{y,w} and mu(y,w).")
    add("bschar", _run_bschar, "Character of a Bott-Samelson module.").add_argument("--word", required=True)
    coinv = add("coinv", _run_coinv, "Graded dimensions of the coinvariant algebra.")
    coinv_view = coinv.add_mutually_exclusive_group()
    coinv_view.add_argument("--poincare", action="store_true", help="Print the Poincare polynomial only.")
    coinv_view.add_argument("--dims", action="store_true", help="Print the graded dimensions only.")
    add("bs", _run_bs, "Bott-Samelson module.").add_argument("--word", required=True)
    add("decompose", _run_decompose, "Decompose a Bott-Samelson module.").add_argument("--word", required=True)
    add("pcan", _run_pcan, "p-canonical basis element.").add_argument("--element", required=True)
    add("decmat", _run_decmat, "Decomposition matrix of modular category O.")
    add("simples", _run_simples, "Simple multiplicities and characters.")
    cellmot = add("cellmot", _run_cellmot, "Motivic cohomology of a cellular variety.")
    cellmot.add_argument("--poset", default=None, help="JSON poset file.")
    cellmot.add_argument("--flag", default=None, help="Flag variety, e.g. 'A2'.")
    cellmot.add_argument("--projective", type=int, default=None, help="Rank of a projective bundle over X.")
    cellmot.add_argument("--closed", default=None, help="';'-separated labels of a closed union of strata.")
    add("strata", _run_strata, "Bruhat cells of G/B or G/P_s.").add_argument("--parabolic", default=None)
    milnork = add("milnork", _run_milnork, "Milnor K-group of a finite field.")
    milnork.add_argument("--q", type=int, required=True)
    milnork.add_argument("--n", type=int, required=True)
    tatehom = add("tatehom", _run_tatehom, "Hom between Tate objects over the algebraic closure.")
    tatehom.add_argument("--i", type=int, required=True)
    tatehom.add_argument("--j", type=int, required=True)
    add("cache", _run_cache, "List cached indecomposables.").add_argument("--list", action="store_true")
    return parser


####--------------------------------------------------------------------------.
#### Entry point


def _emit(payload, table, command, config):
    if config.output_format == "table" and table is not None:
        print(table.to_string())
        return
    payload = {"schema": JSON_SCHEMA, "command": command, "type": config.label, "prime": config.prime, **payload}
    print(json.dumps(payload, sort_keys=True))


def _emit_error(kind, error, output_format):
    message = str(error)
    print(f"motkit: {kind}: {message}", file=sys.stderr)
    if output_format == "json":
        print(json.dumps({"schema": JSON_SCHEMA, "error": kind, "message": message}, sort_keys=True))


def main(argv=None):
    """Run the motkit command line and return the exit code."""
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
        config = RunConfig.from_args(args)
    except UsageError as error:
        print(f"motkit: {error}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as error:
        return EXIT_OK if not error.code else EXIT_USAGE
    try:
        payload, table = args.handler(args, config)
    except UsageError as error:
        print(f"motkit: {error}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as error:
        _emit_error("precondition", error, config.output_format)
        return EXIT_PRECONDITION
    except ConsistencyError as error:
        _emit_error("consistency", error, config.output_format)
        return EXIT_INTERNAL
    except (ValueError, TypeError, OSError) as error:
        # Invalid argument values and unreadable input files
        _emit_error("usage", error, config.output_format)
        return EXIT_USAGE
    except Exception as error:  # noqa: BLE001
        _emit_error("internal", error, config.output_format)
        return EXIT_INTERNAL
    _emit(payload, table, args.command, config)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
