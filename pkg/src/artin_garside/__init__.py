"""Garside and relative Garside elements of spherical Artin monoids."""

from .coxeter import (
    CatalogId, ChainStep, CoxeterGraph, DomainError, GraphEmbedding, GraphParseError,
    catalog_graph, disjoint_union, expected_reflection_count, find_embedding,
    inclusion_chain, parse_graph, parse_graph_arg, relabel_word,
)
from .formulas import delta_formula, relative_formula
from .garside import (
    GarsideRecord, PartialPermutation, RelativeRecord, Status, build_garside_record,
    certify_relative_length, certify_relative_squarefree, check_relative_properties,
    delta_by_lcm, delta_of_union, garside_element, relative_by_quotient, relative_record,
    sigma_permutation,
)
from .words import (
    DEFAULT_BUDGET, Budget, BudgetExhausted, EngineError, Fraction, NotADivisor, Word,
    common_left_multiple, equivalence_class, format_word, garside_head, is_rigid,
    is_square_free, left_divides, lexmin_representative, parse_word, reverse_fraction,
    rewrite_neighbors, right_divides, right_quotient, words_equal,
)

__all__ = [
    "CatalogId",
    "ChainStep",
    "CoxeterGraph",
    "DomainError",
    "GraphEmbedding",
    "GraphParseError",
    "catalog_graph",
    "disjoint_union",
    "expected_reflection_count",
    "find_embedding",
    "inclusion_chain",
    "parse_graph",
    "parse_graph_arg",
    "relabel_word",
    "delta_formula",
    "relative_formula",
    "GarsideRecord",
    "PartialPermutation",
    "RelativeRecord",
    "Status",
    "build_garside_record",
    "certify_relative_length",
    "certify_relative_squarefree",
    "check_relative_properties",
    "delta_by_lcm",
    "delta_of_union",
    "garside_element",
    "relative_by_quotient",
    "relative_record",
    "sigma_permutation",
    "DEFAULT_BUDGET",
    "Budget",
    "BudgetExhausted",
    "EngineError",
    "Fraction",
    "NotADivisor",
    "Word",
    "common_left_multiple",
    "equivalence_class",
    "format_word",
    "garside_head",
    "is_rigid",
    "is_square_free",
    "left_divides",
    "lexmin_representative",
    "parse_word",
    "reverse_fraction",
    "rewrite_neighbors",
    "right_divides",
    "right_quotient",
    "words_equal",
]
