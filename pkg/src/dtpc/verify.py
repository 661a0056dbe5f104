"""Zero-error checks: confusability, code verification, exact optimality search."""

from __future__ import annotations

import itertools
import random
from collections import defaultdict
from typing import Callable, NamedTuple, Optional, Sequence

from .codes import zero_padded_candidates
from .model import BudgetExceeded, ChannelParams, Codebook, ParticleSeq, cumsum, weight

DEFAULT_SEQUENCE_BUDGET = 10**5
DEFAULT_VERTEX_LIMIT = 64

Confusable = Callable[[ChannelParams, Sequence[int], Sequence[int]], Optional[ParticleSeq]]


class Confusion(NamedTuple):
    x: ParticleSeq
    y: ParticleSeq
    witness: ParticleSeq


class SequenceConfusion(NamedTuple):
    x_blocks: tuple[ParticleSeq, ...]
    y_blocks: tuple[ParticleSeq, ...]
    witness: ParticleSeq

    @property
    def x(self) -> ParticleSeq:
        return tuple(itertools.chain.from_iterable(self.x_blocks))

    @property
    def y(self) -> ParticleSeq:
        return tuple(itertools.chain.from_iterable(self.y_blocks))


def _profiles(params: ChannelParams, x: Sequence[int], y: Sequence[int]):
    length = max(len(x), len(y)) + params.K
    return length, cumsum(x, length), cumsum(y, length)


def _covers(params: ChannelParams, sz: list[int], sx: list[int], sy: list[int]) -> bool:
    # every particle of x and of y must have arrived within K slots
    K, length = params.K, len(sz)
    for j in range(length):
        later = sz[min(j + K, length - 1)]
        if later < sx[j] or later < sy[j]:
            return False
    return True


def _increments(profile: list[int]) -> ParticleSeq:
    return tuple(b - a for a, b in zip([0] + profile[:-1], profile))


def confusable(params: ChannelParams, x: Sequence[int], y: Sequence[int]) -> ParticleSeq | None:
    """A common channel output of ``x`` and ``y``, or None if there is none.

    Any common output z has running totals Sz <= min(Sx, Sy), and the
    pointwise largest such profile is the easiest to make arrive in time, so
    it is the only candidate that needs checking.
    """
    if weight(x) != weight(y):
        return None
    length, sx, sy = _profiles(params, x, y)
    sz = [min(a, b) for a, b in zip(sx, sy)]
    if not _covers(params, sz, sx, sy):
        return None
    return _increments(sz)


def confusable_membrane(params: ChannelParams, x: Sequence[int], y: Sequence[int]) -> ParticleSeq | None:
    """As :func:`confusable`, but the common output may hold at most N per slot."""
    if weight(x) != weight(y):
        return None
    length, sx, sy = _profiles(params, x, y)
    sz = []
    prev = 0
    for a, b in zip(sx, sy):
        prev = min(a, b, prev + params.N)
        sz.append(prev)
    if not _covers(params, sz, sx, sy):
        return None
    return _increments(sz)


def _first_confusion(params: ChannelParams, items, test: Confusable):
    # items: (key, sequence) pairs; only equal weights can be confused
    groups = defaultdict(list)
    for key, seq in items:
        groups[weight(seq)].append((key, seq))
    for w in sorted(groups, reverse=True):
        group = groups[w]
        for (ka, a), (kb, b) in itertools.combinations(group, 2):
            z = test(params, a, b)
            if z is not None:
                return ka, kb, z
    return None


def is_zero_error_padded(cb: Codebook, test: Confusable = confusable) -> Confusion | None:
    """Pairwise check, complete for zero-padded codes; returns a counterexample or None."""
    if not cb.is_zero_padded():
        raise ValueError("codebook is not zero-padded; use is_zero_error_sequences")
    hit = _first_confusion(cb.params, ((w, w) for w in cb), test)
    return None if hit is None else Confusion(*hit)


def is_zero_error_sequences(
    cb: Codebook,
    m: int,
    budget: int = DEFAULT_SEQUENCE_BUDGET,
    test: Confusable = confusable,
) -> SequenceConfusion | None:
    """Compare all distinct concatenations of k codewords, for k = 1..m.

    Only a partial check for codes that are not zero-padded, since confusion
    may first appear at some k > m.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    for k in range(1, m + 1):
        required = len(cb) ** k
        if required > budget:
            raise BudgetExceeded(f"{k}-fold concatenations", required, budget)
        items = (
            (blocks, tuple(itertools.chain.from_iterable(blocks)))
            for blocks in itertools.product(cb.words, repeat=k)
        )
        hit = _first_confusion(cb.params, items, test)
        if hit is not None:
            return SequenceConfusion(*hit)
    return None


def membrane_equivalent(cb: Codebook, m: int, budget: int = DEFAULT_SEQUENCE_BUDGET) -> bool:
    """Whether ``cb`` is zero-error with and without the per-slot output cap alike.

    Compared for every concatenation depth up to ``m``.
    """
    for k in range(1, m + 1):
        plain = is_zero_error_sequences(cb, k, budget) is None
        capped = is_zero_error_sequences(cb, k, budget, test=confusable_membrane) is None
        if plain != capped:
            return False
    return True


def random_codebook(params: ChannelParams, n: int, size: int, seed: int) -> Codebook:
    """A uniformly chosen ``size``-subset of ``{0..N}^n``."""
    base = params.N + 1
    total = base**n
    if size > total:
        raise ValueError(f"cannot pick {size} distinct words from {total}")
    rng = random.Random(seed)
    words = []
    for idx in rng.sample(range(total), size):
        digits = []
        for _ in range(n):
            idx, d = divmod(idx, base)
            digits.append(d)
        words.append(tuple(reversed(digits)))
    return Codebook(params, n, tuple(words))


def confusability_graph(params: ChannelParams, n: int, vertex_limit: int = DEFAULT_VERTEX_LIMIT):
    """Zero-padded length-``n`` sequences and their confusability adjacency bitmasks."""
    cands = zero_padded_candidates(params, n, budget=vertex_limit)
    verts = [tuple(int(v) for v in row) for row in cands]
    adj = [0] * len(verts)
    for i, j in itertools.combinations(range(len(verts)), 2):
        if confusable(params, verts[i], verts[j]) is not None:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return verts, adj


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _greedy_independent(adj: list[int], cand: int) -> int:
    size = 0
    while cand:
        v = min(_bits(cand), key=lambda u: (adj[u] & cand).bit_count())
        size += 1
        cand &= ~(adj[v] | (1 << v))
    return size


def _components(adj: list[int], cand: int):
    while cand:
        seed = cand & -cand
        comp = seed
        frontier = seed
        while frontier:
            grown = 0
            for v in _bits(frontier):
                grown |= adj[v]
            frontier = grown & cand & ~comp
            comp |= frontier
        yield comp
        cand &= ~comp


def max_independent_set_size(adj: list[int]) -> int:
    """Exact maximum independent set size of a graph given as adjacency bitmasks."""

    def solve(cand: int) -> int:
        total = 0
        for comp in _components(adj, cand):
            total += solve_connected(comp)
        return total

    def solve_connected(cand: int) -> int:
        best = _greedy_independent(adj, cand)

        def branch(cand: int, size: int) -> None:
            nonlocal best
            if size + cand.bit_count() <= best:
                return
            if not cand:
                best = size
                return
            v = min(_bits(cand), key=lambda u: (adj[u] & cand).bit_count())
            nbrs = adj[v] & cand
            if nbrs.bit_count() <= 1:
                branch(cand & ~(nbrs | (1 << v)), size + 1)
                return
            # some maximum set contains v or one of its neighbours
            for u in [v, *_bits(nbrs)]:
                branch(cand & ~(adj[u] | (1 << u)), size + 1)
                cand &= ~(1 << u)

        branch(cand, 0)
        return best

    return solve((1 << len(adj)) - 1)


def max_zero_error_padded(params: ChannelParams, n: int, vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> int:
    """Size of the largest zero-padded zero-error code of length ``n``, by exact search."""
    _, adj = confusability_graph(params, n, vertex_limit)
    return max_independent_set_size(adj)
