"""Alphabets, words and the two lexicographic orders.

Words are ``bytes``. An :class:`Alphabet` lists its admissible symbols in
increasing order and maps every word to a *rank string*: the byte string in
which each symbol is replaced by its 0-based rank.  Because ranks are dense
and order-preserving, comparing rank strings with the built-in ``bytes``
ordering is exactly the lexicographic order over the alphabet (a proper
prefix sorts first).  Every algorithm in the package works on rank strings.

Positions inside the library are 0-based Python offsets.  Anything printed
for a user (the CLI) is converted to 1-based positions.
"""

from __future__ import annotations

import enum

from .errors import AlphabetError, EmptyWordError

__all__ = [
    "Alphabet",
    "DEFAULT_ALPHABET",
    "LexRelation",
    "as_word",
    "compare_inv_lex",
    "compare_lex",
    "failure_function",
    "is_border_free",
    "is_prefix",
    "is_sharply_less",
    "require_nonempty",
]


def as_word(w) -> bytes:
    """Coerce ``w`` to ``bytes``.

    ``str`` input is accepted for convenience when every character fits in a
    byte (code point < 256); anything wider must be transcoded by the caller.
    """
    if isinstance(w, bytes):
        return w
    if isinstance(w, str):
        try:
            return w.encode("latin-1")
        except UnicodeEncodeError as exc:
            raise AlphabetError(
                f"character {w[exc.start]!r} at offset {exc.start} is not a single byte",
                offset=exc.start,
            ) from None
    return bytes(w)


def require_nonempty(w: bytes, what: str = "word") -> None:
    if not w:
        raise EmptyWordError(f"{what} must be nonempty")


class Alphabet:
    """A total order over a set of byte symbols.

    ``Alphabet(b"abcd")`` means a < b < c < d.  Bytes outside the list are
    rejected, never silently appended to the order.
    """

    __slots__ = ("symbols", "_table", "_identity", "_inverse")

    def __init__(self, symbols):
        symbols = as_word(symbols)
        if not symbols:
            raise AlphabetError("an alphabet needs at least one symbol")
        seen = set()
        for pos, s in enumerate(symbols):
            if s in seen:
                raise AlphabetError(f"duplicate symbol {bytes([s])!r} in alphabet", offset=pos, symbol=s)
            seen.add(s)
        table = bytearray(256)
        for rank, s in enumerate(symbols):
            table[s] = rank
        self.symbols = symbols
        self._table = bytes(table)
        self._identity = symbols == bytes(range(256))
        self._inverse = None

    @classmethod
    def from_text(cls, text) -> "Alphabet":
        """Parse the one-line text format: symbols listed in increasing order."""
        raw = as_word(text)
        if raw.endswith(b"\n"):
            raw = raw[:-1]
            if raw.endswith(b"\r"):
                raw = raw[:-1]
        if b"\n" in raw:
            raise AlphabetError("alphabet text must be a single line")
        return cls(raw)

    @classmethod
    def bytewise(cls) -> "Alphabet":
        return cls(bytes(range(256)))

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol) -> bool:
        if isinstance(symbol, int):
            return symbol in self.symbols
        return len(symbol) == 1 and as_word(symbol) in self.symbols

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and other.symbols == self.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        if self._identity:
            return "Alphabet.bytewise()"
        return f"Alphabet({self.symbols!r})"

    def inverse(self) -> "Alphabet":
        """The inverse order: ``b <_in a`` iff ``a < b``."""
        if self._inverse is None:
            inv = Alphabet(self.symbols[::-1])
            inv._inverse = self
            self._inverse = inv
        return self._inverse

    def rank(self, symbol) -> int:
        code = symbol if isinstance(symbol, int) else as_word(symbol)[0]
        if code not in self.symbols:
            raise AlphabetError(f"symbol {bytes([code])!r} is not in the alphabet", symbol=code)
        return self._table[code]

    def check(self, w: bytes) -> None:
        """Raise :class:`AlphabetError` at the first inadmissible byte of ``w``."""
        if self._identity:
            return
        bad = w.translate(None, self.symbols)
        if bad:
            offset = w.index(bad[:1])
            raise AlphabetError(
                f"byte {bad[:1]!r} at offset {offset} is not in the alphabet",
                offset=offset,
                symbol=bad[0],
            )

    def ranks(self, w) -> bytes:
        """Validate ``w`` and return its rank string."""
        w = as_word(w)
        if self._identity:
            return w
        self.check(w)
        return w.translate(self._table)


DEFAULT_ALPHABET = Alphabet.bytewise()


class LexRelation(enum.Enum):
    """How ``x`` relates to ``y``; exactly one member holds for any pair."""

    EQUAL = "equal"
    PROPER_PREFIX_OF = "proper-prefix-of"  # x is a proper prefix of y
    HAS_PROPER_PREFIX = "has-proper-prefix"  # y is a proper prefix of x
    LESS_SHARP = "less-sharp"  # x << y
    GREATER_SHARP = "greater-sharp"  # y << x

    @property
    def is_less(self) -> bool:
        return self in (LexRelation.PROPER_PREFIX_OF, LexRelation.LESS_SHARP)

    @property
    def is_greater(self) -> bool:
        return self in (LexRelation.HAS_PROPER_PREFIX, LexRelation.GREATER_SHARP)


def _classify(rx: bytes, ry: bytes) -> LexRelation:
    if rx == ry:
        return LexRelation.EQUAL
    if ry.startswith(rx):
        return LexRelation.PROPER_PREFIX_OF
    if rx.startswith(ry):
        return LexRelation.HAS_PROPER_PREFIX
    return LexRelation.LESS_SHARP if rx < ry else LexRelation.GREATER_SHARP


def compare_lex(x, y, alpha: Alphabet | None = None) -> LexRelation:
    """Classify ``(x, y)`` under the lexicographic order of ``alpha``.

    >>> compare_lex(b"aabab", b"abaab")
    <LexRelation.LESS_SHARP: 'less-sharp'>
    """
    alpha = alpha or DEFAULT_ALPHABET
    return _classify(alpha.ranks(x), alpha.ranks(y))


def compare_inv_lex(x, y, alpha: Alphabet | None = None) -> LexRelation:
    """Classify ``(x, y)`` under the inverse lexicographic order of ``alpha``."""
    alpha = alpha or DEFAULT_ALPHABET
    return compare_lex(x, y, alpha.inverse())


def is_prefix(x, y) -> bool:
    """``x`` is a (not necessarily proper) prefix of ``y``."""
    return as_word(y).startswith(as_word(x))


def is_sharply_less(x, y, alpha: Alphabet | None = None) -> bool:
    """``x << y``: x precedes y and is not a proper prefix of it."""
    return compare_lex(x, y, alpha) is LexRelation.LESS_SHARP


def failure_function(w) -> list[int]:
    """KMP failure function: ``f[i]`` is the longest proper border of ``w[:i+1]``."""
    m = len(w)
    f = [0] * m
    k = 0
    for q in range(1, m):
        c = w[q]
        while k and w[k] != c:
            k = f[k - 1]
        if w[k] == c:
            k += 1
        f[q] = k
    return f


def is_border_free(w) -> bool:
    """True iff no proper nonempty prefix of ``w`` is also a suffix of it."""
    w = as_word(w)
    require_nonempty(w)
    return failure_function(w)[-1] == 0
