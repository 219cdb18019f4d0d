"""Lyndon and anti-Lyndon words, and the Chen-Fox-Lyndon factorization.

Duval's algorithm is written once over rank strings; the factorization
under the inverse order is the same routine fed the ranks of the inverted
alphabet.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .core_text import DEFAULT_ALPHABET, Alphabet, as_word, require_nonempty
from .errors import ContractError, ResourceLimitError

__all__ = [
    "FactorKind",
    "Factorization",
    "cfl",
    "cfl_in",
    "duval_ends",
    "is_anti_lyndon",
    "is_lyndon",
    "is_strict_sesquipower_of_anti_lyndon",
]


class FactorKind(enum.Enum):
    CFL = "cfl"
    CFL_IN = "cfl-in"
    ICFL = "icfl"
    CUSTOM = "custom"


@dataclass(frozen=True)
class Factorization:
    """A word cut into nonempty consecutive factors.

    ``ends`` holds the exclusive end offset of every factor, so factor ``i``
    is ``word[ends[i-1]:ends[i]]`` (with ``ends[-1] == 0``) and the last
    entry is ``len(word)``.
    """

    word: bytes
    ends: tuple[int, ...]
    kind: FactorKind = FactorKind.CUSTOM

    def __post_init__(self):
        object.__setattr__(self, "word", as_word(self.word))
        object.__setattr__(self, "ends", tuple(self.ends))
        require_nonempty(self.word)
        prev = 0
        for e in self.ends:
            if e <= prev:
                raise ContractError(f"factor ends must be strictly increasing and positive, got {self.ends}")
            prev = e
        if prev != len(self.word):
            raise ContractError(f"last factor must end at {len(self.word)}, not {prev}")

    @classmethod
    def from_factors(cls, factors: Iterable, kind: FactorKind = FactorKind.CUSTOM) -> "Factorization":
        parts = [as_word(f) for f in factors]
        ends, total = [], 0
        for part in parts:
            total += len(part)
            ends.append(total)
        return cls(b"".join(parts), tuple(ends), kind)

    @classmethod
    def from_lengths(cls, word, lengths: Iterable[int], kind: FactorKind = FactorKind.CUSTOM) -> "Factorization":
        ends, total = [], 0
        for n in lengths:
            total += n
            ends.append(total)
        return cls(word, tuple(ends), kind)

    def __len__(self) -> int:
        return len(self.ends)

    def __iter__(self) -> Iterator[bytes]:
        return iter(self.factors)

    @property
    def starts(self) -> tuple[int, ...]:
        return (0,) + self.ends[:-1]

    @property
    def spans(self) -> list[tuple[int, int]]:
        return list(zip(self.starts, self.ends))

    @property
    def lengths(self) -> list[int]:
        return [e - s for s, e in self.spans]

    @property
    def factors(self) -> tuple[bytes, ...]:
        w = self.word
        return tuple(w[s:e] for s, e in self.spans)

    def render(self, sep: str = "|") -> str:
        return sep.join(f.decode("latin-1") for f in self.factors)

    def __str__(self) -> str:
        return "(" + ", ".join(f.decode("latin-1") for f in self.factors) + ")"


def duval_ends(r: bytes) -> list[int]:
    """Factor ends of the nonincreasing Lyndon factorization of a rank string."""
    n = len(r)
    ends = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and r[k] <= r[j]:
            if r[k] < r[j]:
                k = i
            else:
                k += 1
            j += 1
        period = j - k
        while i <= k:
            i += period
            ends.append(i)
    return ends


def _ranks_nonempty(w, alpha):
    w = as_word(w)
    require_nonempty(w)
    return w, (alpha or DEFAULT_ALPHABET).ranks(w)


def is_lyndon(w, alpha: Alphabet | None = None) -> bool:
    """True iff ``w`` is strictly smaller than each of its proper nonempty suffixes."""
    w, r = _ranks_nonempty(w, alpha)
    return duval_ends(r) == [len(r)]


def is_anti_lyndon(w, alpha: Alphabet | None = None) -> bool:
    """True iff ``w`` is a Lyndon word for the inverse order."""
    return is_lyndon(w, (alpha or DEFAULT_ALPHABET).inverse())


def cfl(w, alpha: Alphabet | None = None) -> Factorization:
    """Lyndon factorization: Lyndon factors in nonincreasing order, O(|w|)."""
    w, r = _ranks_nonempty(w, alpha)
    return Factorization(w, tuple(duval_ends(r)), FactorKind.CFL)


def cfl_in(w, alpha: Alphabet | None = None) -> Factorization:
    """Lyndon factorization under the inverse order; the factors are anti-Lyndon."""
    w, r = _ranks_nonempty(w, (alpha or DEFAULT_ALPHABET).inverse())
    return Factorization(w, tuple(duval_ends(r)), FactorKind.CFL_IN)


def _naive_is_lyndon(r: bytes) -> bool:
    return all(r < r[i:] for i in range(1, len(r)))


def is_strict_sesquipower_of_anti_lyndon(w, alpha: Alphabet | None = None, max_len: int | None = 64) -> bool:
    """Brute-force test for ``w = (uv)^n u`` with ``uv`` anti-Lyndon, ``v`` nonempty, ``n >= 1``.

    Every split ``(|u|, |v|, n)`` is tried, so this is an oracle and refuses
    words longer than ``max_len`` unless ``max_len`` is None.
    """
    w, _ = _ranks_nonempty(w, alpha)
    if max_len is not None and len(w) > max_len:
        raise ResourceLimitError(f"word of length {len(w)} exceeds the sesquipower cap of {max_len}")
    inv = (alpha or DEFAULT_ALPHABET).inverse().ranks(w)
    n = len(w)
    for ulen in range(n):
        for vlen in range(1, n - ulen + 1):
            q = ulen + vlen
            if (n - ulen) % q:
                continue
            reps = (n - ulen) // q
            root = w[:q]
            if root * reps + root[:ulen] == w and _naive_is_lyndon(inv[:q]):
                return True
    return False
