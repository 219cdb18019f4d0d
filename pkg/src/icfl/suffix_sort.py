"""Local and global suffix orders, the compatibility test, and merge-based sorting.

A *local* suffix at position ``i`` relative to a factor ``u = w[lo:hi]`` is
``w[i:hi]``; its *global* suffix is ``w[i:]``.  Factorizations whose
consecutive-factor products sort their local suffixes the same way as the
global ones let a suffix list be built by sorting factor groups
independently and merging.

Positions are 0-based offsets into ``w``.  Suffixes of one word starting at
different offsets are different strings, so every order here is strict and
needs no tie-breaking.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core_text import DEFAULT_ALPHABET, Alphabet, as_word
from .errors import ContractError, EmptyWordError
from .lyndon import FactorKind, Factorization

__all__ = [
    "OrderTag",
    "Scope",
    "SuffixOrderList",
    "check_compatibility",
    "merge_sort_suffixes",
    "sort_suffixes",
]


class OrderTag(enum.Enum):
    LEX = "lex"
    INV_LEX = "inv-lex"


class Scope(enum.Enum):
    LOCAL = "local"
    GLOBAL = "global"


@dataclass(frozen=True)
class SuffixOrderList:
    positions: tuple[int, ...]
    order: OrderTag
    scope: Scope
    span: tuple[int, int]

    def one_based(self) -> list[int]:
        return [p + 1 for p in self.positions]

    def suffixes(self, w) -> list[bytes]:
        w = as_word(w)
        end = self.span[1] if self.scope is Scope.LOCAL else len(w)
        return [w[p:end] for p in self.positions]


def _order_ranks(w: bytes, alpha: Alphabet | None, order: OrderTag) -> bytes:
    alpha = alpha or DEFAULT_ALPHABET
    if order is OrderTag.INV_LEX:
        alpha = alpha.inverse()
    return alpha.ranks(w)


def sort_suffixes(
    w,
    span: tuple[int, int] | None = None,
    alpha: Alphabet | None = None,
    order: OrderTag = OrderTag.LEX,
    scope: Scope = Scope.GLOBAL,
) -> SuffixOrderList:
    """Sort the start positions in ``span`` (half-open, default all of ``w``) by comparison.

    With ``Scope.LOCAL`` the suffixes are cut at the end of the span.
    """
    w = as_word(w)
    lo, hi = span if span is not None else (0, len(w))
    if not 0 <= lo < hi <= len(w):
        raise EmptyWordError(f"span {lo, hi} is empty or outside the word")
    r = _order_ranks(w, alpha, order)
    end = hi if scope is Scope.LOCAL else len(r)
    positions = sorted(range(lo, hi), key=lambda i: r[i:end])
    return SuffixOrderList(tuple(positions), order, scope, (lo, hi))


def check_compatibility(
    w,
    f: Factorization,
    start: int,
    stop: int,
    alpha: Alphabet | None = None,
    order: OrderTag = OrderTag.LEX,
) -> bool:
    """Whether the local suffixes of ``u = f.factors[start:stop]`` sort like their global suffixes.

    Both orders are strict total orders on the same positions, so pairwise
    agreement is the same as the two sorted position lists being equal.
    """
    w = as_word(w)
    if f.word != w:
        raise ContractError("factorization does not belong to this word")
    if not 0 <= start < stop <= len(f):
        raise ContractError(f"factor range [{start}, {stop}) is invalid for {len(f)} factors")
    lo, hi = f.starts[start], f.ends[stop - 1]
    r = _order_ranks(w, alpha, order)
    local = sorted(range(lo, hi), key=lambda i: r[i:hi])
    glob = sorted(range(lo, hi), key=lambda i: r[i:])
    return local == glob


def merge_sort_suffixes(w, f: Factorization, alpha: Alphabet | None = None) -> SuffixOrderList:
    """Global inverse-lexicographic suffix order by divide and conquer over the factors of ``f``.

    The factor list is halved at ``ceil(k/2)``; each half is sorted
    recursively as a local list, and the two lists are merged comparing the
    suffixes extended to the end of the combined range.  Only factorizations
    that are groupings of CFL_in (ICFL among them) guarantee the local
    orders survive the extension, so other kinds are refused.
    """
    w = as_word(w)
    if f.kind not in (FactorKind.ICFL, FactorKind.CFL_IN):
        raise ContractError(f"merge sorting needs an ICFL or CFL_in factorization, got {f.kind.value}")
    if f.word != w:
        raise ContractError("factorization does not belong to this word")
    r = _order_ranks(w, alpha, OrderTag.INV_LEX)
    starts, ends = f.starts, f.ends

    def rec(a: int, b: int) -> list[int]:
        if b - a == 1:
            lo, hi = starts[a], ends[a]
            return sorted(range(lo, hi), key=lambda i: r[i:hi])
        mid = a + math.ceil((b - a) / 2)
        left, right = rec(a, mid), rec(mid, b)
        return _merge(left, right, r, ends[b - 1])

    positions = rec(0, len(f))
    return SuffixOrderList(tuple(positions), OrderTag.INV_LEX, Scope.GLOBAL, (0, len(w)))


def _merge(left: list[int], right: list[int], r: bytes, end: int) -> list[int]:
    out = []
    i = j = 0
    while i < len(left) and j < len(right):
        if r[left[i] : end] < r[right[j] : end]:
            out.append(left[i])
            i += 1
        else:
            out.append(right[j])
            j += 1
    out.extend(left[i:])
    out.extend(right[j:])
    return out
