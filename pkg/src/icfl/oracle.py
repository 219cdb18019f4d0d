"""Brute-force reference implementations.

Everything here is re-derived from the definitions with plain loops and
shares no code with the fast paths (only the alphabet's rank translation).
These functions are polynomial or exponential and are meant for short
words; the exhaustive ones enforce a length cap.
"""

from __future__ import annotations

import functools

from .core_text import DEFAULT_ALPHABET, Alphabet, as_word, require_nonempty
from .errors import ResourceLimitError
from .inverse_lyndon import BreResult
from .lyndon import FactorKind, Factorization

__all__ = [
    "has_raurb_prefix",
    "naive_border_table",
    "naive_cfl",
    "naive_icfl",
    "naive_is_inverse_lyndon",
    "naive_is_lyndon",
    "naive_pref_bre",
    "naive_pref_bre_all",
    "naive_smallest_suffix",
    "enumerate_inverse_lyndon_factorizations",
]


def _precedes(x, y) -> bool:
    """Lexicographic x < y, straight from the definition."""
    for a, b in zip(x, y):
        if a != b:
            return a < b
    return len(x) < len(y)


def _is_proper_prefix(x, y) -> bool:
    return len(x) < len(y) and all(a == b for a, b in zip(x, y))


def _sharply_less(x, y) -> bool:
    return _precedes(x, y) and not _is_proper_prefix(x, y)


def _lcp(x, y) -> int:
    k = 0
    for a, b in zip(x, y):
        if a != b:
            break
        k += 1
    return k


@functools.lru_cache(maxsize=None)
def _inv(r: bytes) -> bool:
    return all(_precedes(r[i:], r) for i in range(1, len(r)))


@functools.lru_cache(maxsize=None)
def _lyn(r: bytes) -> bool:
    return all(_precedes(r, r[i:]) for i in range(1, len(r)))


def _ranks(w, alpha):
    w = as_word(w)
    require_nonempty(w)
    return w, (alpha or DEFAULT_ALPHABET).ranks(w)


def naive_is_inverse_lyndon(w, alpha: Alphabet | None = None) -> bool:
    """Compare ``w`` against every proper nonempty suffix."""
    _, r = _ranks(w, alpha)
    return _inv(r)


def naive_is_lyndon(w, alpha: Alphabet | None = None) -> bool:
    _, r = _ranks(w, alpha)
    return _lyn(r)


@functools.lru_cache(maxsize=None)
def _pref_bre_pairs(r: bytes) -> tuple[tuple[int, int, int], ...]:
    n = len(r)
    inv_prefix = [False] + [_inv(r[:k]) for k in range(1, n + 1)]
    pairs = []
    for pl in range(1, n):
        if not inv_prefix[pl]:
            continue
        p = r[:pl]
        for ql in range(1, n - pl + 1):
            q = r[pl : pl + ql]
            if inv_prefix[pl + ql]:  # p p_bar must not be inverse Lyndon
                continue
            if not all(inv_prefix[pl + k] for k in range(1, ql)):
                continue
            if not _sharply_less(p, q):
                continue
            if not _inv(q):
                continue
            pairs.append((pl, ql, _lcp(p, q)))
    return tuple(pairs)


def naive_pref_bre_all(w, alpha: Alphabet | None = None) -> list[BreResult]:
    """Every pair ``(p, p_bar)`` satisfying the four bounded-right-extension conditions."""
    w, r = _ranks(w, alpha)
    return [BreResult(w[:pl], w[pl : pl + ql], w[pl + ql :], rl) for pl, ql, rl in _pref_bre_pairs(r)]


def naive_pref_bre(w, alpha: Alphabet | None = None) -> BreResult | None:
    """The unique bounded-right-extension pair of ``w``, or None for inverse Lyndon words."""
    found = naive_pref_bre_all(w, alpha)
    if len(found) > 1:
        raise AssertionError(f"{len(found)} bre pairs for {w!r}; expected at most one")
    return found[0] if found else None


@functools.lru_cache(maxsize=None)
def _naive_icfl(r: bytes) -> tuple[int, ...]:
    if _inv(r):
        return (len(r),)
    pairs = _pref_bre_pairs(r)
    if len(pairs) != 1:
        raise AssertionError(f"expected exactly one bre pair, found {len(pairs)}")
    pl, ql, rl = pairs[0]
    rest = _naive_icfl(r[pl:])
    m1 = r[pl : pl + rest[0]]
    rb = r[pl : pl + ql]
    if m1[: len(rb)] == rb:
        return (pl,) + rest
    if r[pl : pl + rl][: len(m1)] == m1:
        return (pl + rest[0],) + rest[1:]
    raise AssertionError("r b and the first factor of the remainder are prefix-incomparable")


def naive_icfl(w, alpha: Alphabet | None = None) -> Factorization:
    """ICFL by literal recursion over the bounded right extension."""
    w, r = _ranks(w, alpha)
    return Factorization.from_lengths(w, _naive_icfl(r), FactorKind.ICFL)


def naive_cfl(w, alpha: Alphabet | None = None) -> Factorization:
    """Lyndon factorization by repeatedly removing the longest Lyndon prefix."""
    w, r = _ranks(w, alpha)
    lengths = []
    s = 0
    while s < len(r):
        best = max(k for k in range(1, len(r) - s + 1) if _lyn(r[s : s + k]))
        lengths.append(best)
        s += best
    return Factorization.from_lengths(w, lengths, FactorKind.CFL)


def naive_smallest_suffix(w, alpha: Alphabet | None = None) -> int:
    """Start offset of the lexicographically smallest nonempty suffix."""
    _, r = _ranks(w, alpha)
    best = 0
    for i in range(1, len(r)):
        if _precedes(r[i:], r[best:]):
            best = i
    return best


def naive_border_table(w) -> list[int]:
    """O(n^2) border lengths by direct comparison of every prefix with every suffix."""
    w = as_word(w)
    require_nonempty(w)
    return [max(k for k in range(i) if w[:k] == w[i - k : i]) for i in range(1, len(w) + 1)]


def has_raurb_prefix(w, alpha: Alphabet | None = None) -> bool:
    """Whether some prefix of ``w`` reads ``r a u r b`` with letters ``a < b``."""
    _, r = _ranks(w, alpha)
    n = len(r)
    for end in range(2, n + 1):  # x = r[:end], last letter b = r[end-1]
        for rl in range(0, end - 1):
            # r occupies x[:rl] and x[end-1-rl:end-1]; a sits at x[rl].
            second = end - 1 - rl
            if second <= rl:
                break
            if r[:rl] == r[second : end - 1] and r[rl] < r[end - 1]:
                return True
    return False


def enumerate_inverse_lyndon_factorizations(
    w, alpha: Alphabet | None = None, cap: int = 20
) -> list[Factorization]:
    """All factorizations into inverse Lyndon words with ``m1 << m2 << ... << mk``."""
    w, r = _ranks(w, alpha)
    if len(r) > cap:
        raise ResourceLimitError(f"word of length {len(r)} exceeds the enumeration cap of {cap}")
    found = []

    def extend(start, prev, lengths):
        if start == len(r):
            found.append(Factorization.from_lengths(w, lengths))
            return
        for end in range(start + 1, len(r) + 1):
            m = r[start:end]
            if not _inv(m):
                continue
            if prev is not None and not _sharply_less(prev, m):
                continue
            extend(end, m, lengths + [end - start])

    extend(0, None, [])
    return found
