"""Prefix chains of CFL_in and the groupings built from them.

The factors of CFL_in(w) split into maximal runs in which every factor is a
prefix of the one before it.  A grouping replaces each run by consecutive
blocks that are inverse Lyndon words in strictly ``<<``-increasing order;
ICFL(w) is always one of them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core_text import DEFAULT_ALPHABET, Alphabet
from .errors import ContractError, ResourceLimitError
from .inverse_lyndon import is_inverse_lyndon
from .lyndon import FactorKind, Factorization, is_anti_lyndon

__all__ = ["PmcDecomposition", "enumerate_groupings", "is_grouping", "pmc_decompose"]


@dataclass(frozen=True)
class PmcDecomposition:
    """Maximal prefix chains as half-open ranges of factor indices."""

    factorization: Factorization
    chains: tuple[tuple[int, int], ...]

    def chain_factors(self) -> list[tuple[bytes, ...]]:
        fs = self.factorization.factors
        return [fs[a:b] for a, b in self.chains]

    def cut_offsets(self) -> set[int]:
        """Word offsets at which one chain ends and the next begins."""
        ends = self.factorization.ends
        return {ends[b - 1] for _, b in self.chains[:-1]}


def pmc_decompose(f: Factorization, alpha: Alphabet | None = None) -> PmcDecomposition:
    """Partition the factors of a CFL_in factorization into maximal prefix chains."""
    alpha = alpha or DEFAULT_ALPHABET
    if f.kind is not FactorKind.CFL_IN:
        raise ContractError(f"expected a CFL_in factorization, got {f.kind.value}")
    factors = f.factors
    inv = alpha.inverse()
    for i, m in enumerate(factors):
        if not is_anti_lyndon(m, alpha):
            raise ContractError(f"factor {i} ({m!r}) is not anti-Lyndon")
    chains = []
    start = 0
    for i in range(1, len(factors)):
        prev, cur = factors[i - 1], factors[i]
        if prev.startswith(cur):
            continue
        rp, rc = alpha.ranks(prev), alpha.ranks(cur)
        if not rp < rc or rc.startswith(rp):
            raise ContractError(f"factors {i - 1} and {i} are neither prefix-chained nor << ordered")
        if inv.ranks(prev) < inv.ranks(cur):
            raise ContractError(f"factors {i - 1} and {i} are not nonincreasing in the inverse order")
        chains.append((start, i))
        start = i
    chains.append((start, len(factors)))
    return PmcDecomposition(f, tuple(chains))


def _blocks_ok(blocks: list[bytes], alpha: Alphabet) -> bool:
    ranks = [alpha.ranks(b) for b in blocks]
    for a, b in zip(ranks, ranks[1:]):
        if not (a < b and not b.startswith(a)):
            return False
    return all(is_inverse_lyndon(b, alpha) for b in blocks)


def is_grouping(candidate: Factorization, f_in: Factorization, alpha: Alphabet | None = None) -> bool:
    """Whether ``candidate`` is obtained from ``f_in`` by grouping each prefix chain."""
    alpha = alpha or DEFAULT_ALPHABET
    if candidate.word != f_in.word:
        raise ContractError("candidate and CFL_in factorize different words")
    pmc = pmc_decompose(f_in, alpha)
    cand_ends = set(candidate.ends)
    # cheap index checks first: every candidate cut is a CFL_in cut, and no block crosses a chain
    if not cand_ends <= set(f_in.ends):
        return False
    if not pmc.cut_offsets() <= cand_ends:
        return False
    w = candidate.word
    for a, b in pmc.chains:
        lo = f_in.starts[a]
        hi = f_in.ends[b - 1]
        cuts = [e for e in candidate.ends if lo < e <= hi]
        bounds = [lo] + cuts
        blocks = [w[s:e] for s, e in zip(bounds, cuts)]
        if not _blocks_ok(blocks, alpha):
            return False
    return True


def _chain_groupings(factors: tuple[bytes, ...], alpha: Alphabet) -> list[list[int]]:
    """Block lengths of every valid grouping of one prefix chain."""
    h = len(factors)
    word = b"".join(factors)
    out = []
    for mask in itertools.product((False, True), repeat=h - 1):
        lengths, acc = [], 0
        for i, m in enumerate(factors):
            acc += len(m)
            if i == h - 1 or mask[i]:
                lengths.append(acc)
                acc = 0
        blocks, pos = [], 0
        for n in lengths:
            blocks.append(word[pos : pos + n])
            pos += n
        if _blocks_ok(blocks, alpha):
            out.append(lengths)
    return out


def enumerate_groupings(f_in: Factorization, alpha: Alphabet | None = None, cap: int = 20) -> list[Factorization]:
    """Every grouping of a CFL_in factorization (exponential; refuses more than ``cap`` factors)."""
    alpha = alpha or DEFAULT_ALPHABET
    if len(f_in) > cap:
        raise ResourceLimitError(f"{len(f_in)} CFL_in factors exceeds the grouping cap of {cap}")
    pmc = pmc_decompose(f_in, alpha)
    per_chain = [_chain_groupings(chain, alpha) for chain in pmc.chain_factors()]
    return [
        Factorization.from_lengths(f_in.word, [n for part in combo for n in part])
        for combo in itertools.product(*per_chain)
    ]
