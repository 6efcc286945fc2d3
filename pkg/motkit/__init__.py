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

from .info import (
    available_cartan_types,
    available_ranks,
    available_output_formats,
    available_protocols,
    available_subcommands,
    parse_word,
)
from .checks import (
    PreconditionError,
    ConsistencyError,
    HeuristicResultWarning,
    CacheSchemaWarning,
    ExtrapolatedResultWarning,
    ValidityWarning,
)
from .coxeter import (
    build_root_datum,
    element_from_word,
    parse_element,
    longest_element,
    enumerate_weyl,
    weyl_elements,
    bruhat_leq,
    reduced_words,
    demazure_product,
)
from .hecke import (
    LaurentPoly,
    kl_basis,
    kl_polynomial,
    mu_coefficient,
    bs_character,
    express_in_kl_basis,
)
from .coinv import build_coinvariant, demazure
from .smod import (
    GradedModule,
    bott_samelson,
    translate,
    hom_graded,
    hom_homotopy,
    graded_dimension,
)
from .decompose import decompose, is_isomorphic, is_local
from .soergel import (
    indecomposable_soergel,
    p_canonical,
    p_canonical_defect,
    decompose_reduced_words,
    decomposition_matrix,
    simple_multiplicities,
    simple_characters,
)
from .cellmot import (
    StrataPoset,
    BigradedDims,
    flag_strata,
    partial_flag_strata,
    motivic_cohomology,
    projective_bundle,
    localization_check,
    load_poset,
)
from .milnork import milnor_k, milnor_k_table, tate_hom

__all__ = [
    "available_cartan_types",
    "available_ranks",
    "available_output_formats",
    "available_protocols",
    "available_subcommands",
    "parse_word",
    "PreconditionError",
    "ConsistencyError",
    "HeuristicResultWarning",
    "CacheSchemaWarning",
    "ExtrapolatedResultWarning",
    "ValidityWarning",
    "build_root_datum",
    "element_from_word",
    "parse_element",
    "longest_element",
    "enumerate_weyl",
    "weyl_elements",
    "bruhat_leq",
    "reduced_words",
    "demazure_product",
    "LaurentPoly",
    "kl_basis",
    "kl_polynomial",
    "mu_coefficient",
    "bs_character",
    "express_in_kl_basis",
    "build_coinvariant",
    "demazure",
    "GradedModule",
    "bott_samelson",
    "translate",
    "hom_graded",
    "hom_homotopy",
    "graded_dimension",
    "decompose",
    "is_isomorphic",
    "is_local",
    "indecomposable_soergel",
    "p_canonical",
    "p_canonical_defect",
    "decompose_reduced_words",
    "decomposition_matrix",
    "simple_multiplicities",
    "simple_characters",
    "StrataPoset",
    "BigradedDims",
    "flag_strata",
    "partial_flag_strata",
    "motivic_cohomology",
    "projective_bundle",
    "localization_check",
    "load_poset",
    "milnor_k",
    "milnor_k_table",
    "tate_hom",
]
