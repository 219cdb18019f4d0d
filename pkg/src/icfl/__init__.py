"""Lyndon, anti-Lyndon and inverse Lyndon factorizations of words.

The main entry point is :func:`icfl`, the canonical inverse Lyndon
factorization, computed in linear time.
"""

from .core_text import (
    DEFAULT_ALPHABET,
    Alphabet,
    LexRelation,
    compare_inv_lex,
    compare_lex,
    is_border_free,
    is_prefix,
    is_sharply_less,
)
from .errors import AlphabetError, ContractError, EmptyWordError, FactorizationError, ResourceLimitError
from .groupings import PmcDecomposition, enumerate_groupings, is_grouping, pmc_decompose
from .inverse_lyndon import (
    BreResult,
    InverseWord,
    Split,
    border_chain,
    border_table,
    find_bre,
    find_prefix,
    icfl,
    is_inverse_lyndon,
)
from .lyndon import (
    FactorKind,
    Factorization,
    cfl,
    cfl_in,
    is_anti_lyndon,
    is_lyndon,
    is_strict_sesquipower_of_anti_lyndon,
)
from .suffix_sort import OrderTag, Scope, SuffixOrderList, check_compatibility, merge_sort_suffixes, sort_suffixes

__all__ = [
    "DEFAULT_ALPHABET",
    "Alphabet",
    "AlphabetError",
    "BreResult",
    "ContractError",
    "EmptyWordError",
    "FactorKind",
    "Factorization",
    "FactorizationError",
    "InverseWord",
    "LexRelation",
    "OrderTag",
    "PmcDecomposition",
    "ResourceLimitError",
    "Scope",
    "Split",
    "SuffixOrderList",
    "border_chain",
    "border_table",
    "cfl",
    "cfl_in",
    "check_compatibility",
    "compare_inv_lex",
    "compare_lex",
    "enumerate_groupings",
    "find_bre",
    "find_prefix",
    "icfl",
    "is_anti_lyndon",
    "is_border_free",
    "is_grouping",
    "is_inverse_lyndon",
    "is_lyndon",
    "is_prefix",
    "is_sharply_less",
    "is_strict_sesquipower_of_anti_lyndon",
    "merge_sort_suffixes",
    "pmc_decompose",
    "sort_suffixes",
]
