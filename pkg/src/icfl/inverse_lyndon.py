"""Inverse Lyndon words and the canonical inverse Lyndon factorization ICFL.

An inverse Lyndon word is strictly greater than each of its proper nonempty
suffixes.  :func:`icfl` computes the canonical factorization in linear time
from three pieces:

* :func:`find_prefix` scans ``w`` for its shortest prefix ``x = r a u r b``
  with ``a < b``, or certifies that ``w`` is an inverse Lyndon word;
* :func:`find_bre` splits ``x`` into ``p = r a u`` and its bounded right
  extension ``p_bar = r b``, taking ``r`` as the shortest border of
  ``x[:-1]`` followed by a letter smaller than ``b``;
* the driver cuts ``p`` off, factors the rest, and either keeps ``p`` as a
  factor or glues it to the next one, depending on whether that factor is
  longer than ``r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .core_text import DEFAULT_ALPHABET, Alphabet, as_word, failure_function, require_nonempty
from .errors import ContractError
from .lyndon import FactorKind, Factorization

__all__ = [
    "BreResult",
    "FindPrefixResult",
    "InverseWord",
    "Split",
    "border_chain",
    "border_table",
    "find_bre",
    "find_prefix",
    "icfl",
    "icfl_lengths",
    "is_inverse_lyndon",
]


@dataclass(frozen=True)
class InverseWord:
    """``find_prefix`` outcome: the whole input is an inverse Lyndon word."""

    word: bytes


@dataclass(frozen=True)
class Split:
    """``find_prefix`` outcome: ``x`` is the shortest prefix that is not an inverse Lyndon word."""

    x: bytes
    y: bytes

    @property
    def x_len(self) -> int:
        return len(self.x)


FindPrefixResult = Union[InverseWord, Split]


@dataclass(frozen=True)
class BreResult:
    """A prefix ``p = r a u`` and its bounded right extension ``p_bar = r b``."""

    p: bytes
    p_bar: bytes
    y: bytes
    r_len: int

    @property
    def p_len(self) -> int:
        return len(self.p)

    @property
    def pbar_len(self) -> int:
        return len(self.p_bar)

    @property
    def r(self) -> bytes:
        return self.p_bar[:-1]

    def as_tuple(self) -> tuple[bytes, bytes, bytes, int]:
        return self.p, self.p_bar, self.y, self.r_len


# Fast paths.  ``r`` is a rank string and ``s`` the offset where the word
# under consideration starts, so that the driver never copies suffixes.


def _find_prefix(r: bytes, s: int) -> tuple[int, int]:
    """Scan ``r[s:]`` for its shortest non-inverse-Lyndon prefix ``x``.

    Returns ``(len(x), q)``, or ``(0, 0)`` if there is none.  ``q`` is the
    period the scan maintains: ``x[:-1]`` is a prefix of a power of the
    anti-Lyndon (hence unbordered) word ``r[s:s+q]``.
    """
    n = len(r)
    last = n - 1
    if s == last:
        return 0, 0
    i, j = s, s + 1
    while j < last and r[j] <= r[i]:
        if r[j] < r[i]:
            i = s
        else:
            i += 1
        j += 1
    if j == last and r[j] <= r[i]:
        return 0, 0
    return j + 1 - s, j - i


def _find_bre(r: bytes, s: int, x_len: int, q: int) -> tuple[int, int]:
    """``(|p|, |r|)`` for the prefix ``x = r[s:s+x_len]`` returned by ``_find_prefix``.

    Walks the border chain ``f(n), f(f(n)), ...`` of ``z = x[:-1]`` and keeps
    the last border followed by a letter smaller than ``b = x[-1]``.  Since
    ``z`` has the unbordered period ``q``, ``f(i) = i - q`` for ``i >= q``;
    only the failure table of ``z[:n mod q]`` is materialized.
    """
    n = x_len - 1
    b = r[s + n]
    f = failure_function(r[s : s + n % q])
    i = n
    last = n + 1
    while i > 0:
        fi = i - q if i >= q else f[i - 1]
        if r[s + fi] < b:
            last = fi
        i = fi
    if last > n:
        raise ContractError("no border of x[:-1] is followed by a letter smaller than the last letter of x")
    return n - last, last


def icfl_lengths(r: bytes) -> list[int]:
    """Factor lengths of ICFL for a nonempty rank string, in O(len(r))."""
    n = len(r)
    s = 0
    steps = []
    while True:
        x_len, q = _find_prefix(r, s)
        if not x_len:
            break
        p_len, r_len = _find_bre(r, s, x_len, q)
        steps.append((p_len, r_len))
        s += p_len
    # Unwind right to left: p becomes its own factor when the first factor of
    # the remainder extends past r (so r b is a prefix of it), and is
    # prepended to that factor otherwise.
    rev = [n - s]
    for p_len, r_len in reversed(steps):
        if rev[-1] > r_len:
            rev.append(p_len)
        else:
            rev[-1] += p_len
    rev.reverse()
    return rev


def _ranks(w, alpha):
    w = as_word(w)
    require_nonempty(w)
    return w, (alpha or DEFAULT_ALPHABET).ranks(w)


def find_prefix(w, alpha: Alphabet | None = None) -> FindPrefixResult:
    """Shortest prefix of ``w`` that is not an inverse Lyndon word.

    Returns :class:`InverseWord` when there is none, otherwise
    :class:`Split` with ``x = p p_bar`` and the remaining suffix ``y``.
    Runs in O(len(x)).
    """
    w, r = _ranks(w, alpha)
    x_len, _ = _find_prefix(r, 0)
    if not x_len:
        return InverseWord(w)
    return Split(w[:x_len], w[x_len:])


def border_table(w) -> list[int]:
    """Failure function of ``w``: entry ``i`` is the longest proper border of ``w[:i+1]``."""
    w = as_word(w)
    require_nonempty(w)
    return failure_function(w)


def border_chain(table: list[int], i: int) -> Iterator[int]:
    """Iterate ``f(i), f(f(i)), ..., 0``: every border length of a length-``i`` prefix, longest first."""
    while i > 0:
        i = table[i - 1]
        yield i


def find_bre(x, y=b"", alpha: Alphabet | None = None) -> BreResult:
    """Split the prefix ``x`` produced by :func:`find_prefix` into ``p`` and ``p_bar``.

    ``x`` must have the shape ``r a u r b`` with ``a < b`` and ``x[:-1]`` an
    inverse Lyndon word.  ``y`` is carried through unchanged.
    """
    alpha = alpha or DEFAULT_ALPHABET
    x = as_word(x)
    y = as_word(y)
    if len(x) < 2:
        raise ContractError("find_bre needs a prefix of length at least 2")
    rx = alpha.ranks(x)
    alpha.check(y)
    x_len, q = _find_prefix(rx, 0)
    if x_len != len(x):
        raise ContractError(f"{x!r} is not the shortest non-inverse-Lyndon prefix of itself")
    p_len, r_len = _find_bre(rx, 0, x_len, q)
    return BreResult(x[:p_len], x[p_len:], y, r_len)


def is_inverse_lyndon(w, alpha: Alphabet | None = None) -> bool:
    """True iff every proper nonempty suffix of ``w`` is strictly smaller than ``w``."""
    _, r = _ranks(w, alpha)
    return _find_prefix(r, 0)[0] == 0


def icfl(w, alpha: Alphabet | None = None) -> Factorization:
    """Canonical inverse Lyndon factorization of ``w``.

    >>> icfl(b"dabadabdabdadac").render()
    'daba|dabdab|dadac'
    """
    w, r = _ranks(w, alpha)
    return Factorization.from_lengths(w, icfl_lengths(r), FactorKind.ICFL)
