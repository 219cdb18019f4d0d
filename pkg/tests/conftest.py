import itertools
import sys
import random

import pytest
from hypothesis import strategies as st

from icfl import Alphabet

AB = Alphabet(b"ab")
ABC = Alphabet(b"abc")
ABCD = Alphabet(b"abcd")


def all_words(symbols: bytes, max_len: int, min_len: int = 1):
    for n in range(min_len, max_len + 1):
        for t in itertools.product(symbols, repeat=n):
            yield bytes(t)


def random_words(seed: int, count: int, max_len: int, max_letters: int = 4):
    rng = random.Random(seed)
    for _ in range(count):
        k = rng.randint(1, max_letters)
        n = rng.randint(1, max_len)
        yield bytes(rng.choice(b"abcd"[:k]) for _ in range(n))


def words(symbols: bytes = b"abcd", max_size: int = 30):
    return st.binary(min_size=1, max_size=max_size).map(lambda b: bytes(symbols[x % len(symbols)] for x in b))


@pytest.fixture(scope="session")
def small_corpus():
    """Every word over {a,b} up to length 10 and over {a,b,c} up to length 6."""
    return list(all_words(b"ab", 10)) + list(all_words(b"abc", 6))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
