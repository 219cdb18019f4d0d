import pytest
from hypothesis import given

from icfl import (
    BreResult,
    ContractError,
    EmptyWordError,
    FactorKind,
    InverseWord,
    Split,
    border_chain,
    border_table,
    cfl,
    find_bre,
    find_prefix,
    icfl,
    is_inverse_lyndon,
    is_lyndon,
    is_sharply_less,
)
from icfl.oracle import has_raurb_prefix, naive_border_table, naive_icfl, naive_is_inverse_lyndon, naive_pref_bre

from conftest import AB, ABC, ABCD, all_words, words


def test_is_inverse_lyndon_examples():
    for w in (b"a", b"b", b"bbba", b"baaab", b"bbaba", b"bbababbaa"):
        assert is_inverse_lyndon(w, AB)
    assert not is_inverse_lyndon(b"aaba", AB)
    assert not is_inverse_lyndon(b"aabba", AB)
    with pytest.raises(EmptyWordError):
        is_inverse_lyndon(b"")


def test_find_prefix_examples():
    assert find_prefix(b"bac", ABC) == Split(b"bac", b"")
    assert find_prefix(b"bab", AB) == InverseWord(b"bab")
    assert find_prefix(b"baa", AB) == InverseWord(b"baa")
    assert find_prefix(b"dabadabdabdadac", ABCD) == Split(b"dabadabd", b"abdadac")
    assert find_prefix(b"bbabbabbb", AB) == Split(b"bbabbabbb", b"")
    assert find_prefix(b"a") == InverseWord(b"a")


def test_find_prefix_trace_rows():
    assert find_prefix(b"cbabacaacbabacbac", ABC) == Split(b"cbabacaacbabacb", b"ac")
    assert find_prefix(b"cbabacbac", ABC) == Split(b"cbabacbac", b"")
    assert find_prefix(b"cbac", ABC) == InverseWord(b"cbac")


def test_border_table_examples():
    assert border_table(b"bbabbabbb") == [0, 1, 0, 1, 2, 3, 4, 5, 2]
    assert border_table(b"aaaa") == [0, 1, 2, 3]
    assert border_table(b"abcabd") == [0, 0, 0, 1, 2, 0]
    with pytest.raises(EmptyWordError):
        border_table(b"")


def test_border_chain_lists_all_borders():
    t = border_table(b"abaababaab")
    assert list(border_chain(t, 10)) == [5, 2, 0]
    assert list(border_chain(t, 1)) == [0]


def test_find_bre_examples():
    assert find_bre(b"bbabbabbb", b"", AB).as_tuple() == (b"bbabba", b"bbb", b"", 2)
    assert find_bre(b"cbabacbac", b"", ABC).as_tuple() == (b"cbaba", b"cbac", b"", 3)
    assert find_bre(b"cbabacaacbabacb", b"ac", ABC).as_tuple() == (b"cbabacaa", b"cbabacb", b"ac", 6)


def test_find_bre_with_empty_r():
    res = find_bre(b"cbabcbad", b"", ABCD)
    assert (res.p, res.p_bar, res.r_len) == (b"cbabcba", b"d", 0)
    assert res == naive_pref_bre(b"cbabcbad", ABCD)


def test_find_bre_contract():
    with pytest.raises(ContractError):
        find_bre(b"bab", b"", AB)  # an inverse Lyndon word
    with pytest.raises(ContractError):
        find_bre(b"a")
    with pytest.raises(ContractError):
        find_bre(b"bacc", b"", ABC)  # bac is already not inverse Lyndon


def test_bre_result_shape():
    res = find_bre(b"dabdabdad", b"ac", ABCD)
    assert (res.p, res.p_bar) == (b"dabdab", b"dad")
    assert res.pbar_len == res.r_len + 1
    assert res.r == b"da"
    assert ABCD.rank(res.p_bar[-1]) > ABCD.rank(res.p[res.r_len])


def test_icfl_examples():
    cases = {
        b"dabadabdabdadac": (b"daba", b"dabdab", b"dadac"),
        b"dabdabdadac": (b"dabdab", b"dadac"),
        b"cbabacaacbabacbac": (b"cbabacaacbaba", b"cbac"),
        b"dabadabdabdabdadac": (b"daba", b"dabdabdab", b"dadac"),
        b"dabdadacddbdc": (b"dab", b"dadac", b"ddbdc"),
        b"cbabacbac": (b"cbaba", b"cbac"),
    }
    for w, expected in cases.items():
        f = icfl(w, ABCD)
        assert f.factors == expected
        assert f.kind is FactorKind.ICFL


def test_icfl_frozen_oracle_values():
    # expected values computed once with the brute-force oracle
    cases = {
        b"abcabcabd": (b"a", b"b", b"cabcab", b"d"),
        b"bacbacbd": (b"ba", b"cbacb", b"d"),
        b"aabaabac": (b"aa", b"baaba", b"c"),
        b"ccbcbacbca": (b"ccbcbacbca",),
        b"babbabab": (b"ba", b"bbabab"),
    }
    for w, expected in cases.items():
        assert icfl(w, ABCD).factors == expected


def test_icfl_deep_input_is_iterative():
    w = b"ab" * 200_000
    f = icfl(w, AB)
    assert b"".join(f.factors) == w


def test_icfl_rejects_empty():
    with pytest.raises(EmptyWordError):
        icfl(b"")
    with pytest.raises(EmptyWordError):
        find_prefix(b"", AB)


def test_matches_oracles_exhaustively(small_corpus):
    for w in small_corpus:
        assert icfl(w, ABC) == naive_icfl(w, ABC)
        assert is_inverse_lyndon(w, ABC) == naive_is_inverse_lyndon(w, ABC)
        fp = find_prefix(w, ABC)
        expected = naive_pref_bre(w, ABC)
        if isinstance(fp, InverseWord):
            assert expected is None
            assert not has_raurb_prefix(w, ABC)
        else:
            assert find_bre(fp.x, fp.y, ABC) == expected
            assert has_raurb_prefix(w, ABC)


def test_border_table_matches_naive(small_corpus):
    for w in small_corpus:
        assert border_table(w) == naive_border_table(w)


@given(words())
def test_icfl_invariants(w):
    f = icfl(w, ABCD)
    assert b"".join(f.factors) == w
    assert all(is_inverse_lyndon(m, ABCD) for m in f.factors)
    assert all(is_sharply_less(x, y, ABCD) for x, y in zip(f.factors, f.factors[1:]))


@given(words())
def test_find_prefix_returns_shortest_non_inverse_prefix(w):
    fp = find_prefix(w, ABCD)
    if isinstance(fp, InverseWord):
        assert naive_is_inverse_lyndon(w, ABCD)
    else:
        assert fp.x + fp.y == w
        assert 2 <= fp.x_len <= len(w)
        assert not naive_is_inverse_lyndon(fp.x, ABCD)
        assert naive_is_inverse_lyndon(fp.x[:-1], ABCD)


@given(words())
def test_inverse_lyndon_is_prefix_closed(w):
    if is_inverse_lyndon(w, ABCD):
        assert all(is_inverse_lyndon(w[:k], ABCD) for k in range(1, len(w)))


def test_lyndon_and_inverse_lyndon_split_each_other(small_corpus):
    for w in small_corpus:
        if len(w) > 1 and is_lyndon(w, ABC):
            assert len(icfl(w, ABC)) >= 2
        if len(w) > 1 and is_inverse_lyndon(w, ABC):
            assert len(cfl(w, ABC)) >= 2


def test_bre_result_properties():
    r = BreResult(b"dabdab", b"dad", b"ac", 2)
    assert (r.p_len, r.pbar_len, r.r) == (6, 3, b"da")


def _literal_find_bre(x: bytes):
    # the border-table walk over a freshly computed table of x[:-1], with no shortcut
    n = len(x) - 1
    z, b = x[:n], x[n]
    f = naive_border_table(z)
    i, last = n, n + 1
    while i > 0:
        if z[f[i - 1]] < b:
            last = f[i - 1]
        i = f[i - 1]
    return n - last, last


def test_period_shortcut_matches_full_border_table(small_corpus):
    extra = [b"dab" * 7 + b"dad", b"cbabacaacbabacb", b"bbabbabbb", b"aab" * 5 + b"b"]
    for w in small_corpus + extra:
        fp = find_prefix(w, ABCD)
        if isinstance(fp, Split):
            res = find_bre(fp.x, fp.y, ABCD)
            assert (res.p_len, res.r_len) == _literal_find_bre(fp.x)
