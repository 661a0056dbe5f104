"""Optimal zero-padded zero-error codes C_{N,K}(n).

Two constructions are provided and must agree as sets: the recursive one,

    C(n) = N o C(n-1)  U  U_{i<N} i o 0^K o C(n-K-1)    for n > K,
    C(n) = {0^n}                                       for n <= K,

and a greedy one that walks all zero-padded sequences in inverse
lexicographic order, keeping a sequence and striking out everything it can
turn into.  Ranks follow the same recursion: the N branch first, then the
``i o 0^K`` branches for i = N-1 down to 0, which is inverse lexicographic
order on the codewords.
"""

from __future__ import annotations

import enum
from typing import Sequence

import numpy as np

from .model import BudgetExceeded, ChannelParams, Codebook, ParticleSeq, as_seq

DEFAULT_GREEDY_BUDGET = 1 << 20


class ConstructionMethod(enum.Enum):
    RECURSIVE = "recursive"
    GREEDY = "greedy"


def cardinalities(params: ChannelParams, n: int) -> list[int]:
    """``[|C(0)|, ..., |C(n)|]`` from |C(m)| = |C(m-1)| + N |C(m-K-1)|."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    N, K = params.N, params.K
    counts = []
    for m in range(n + 1):
        counts.append(1 if m <= K else counts[m - 1] + N * counts[m - K - 1])
    return counts


def cardinality(params: ChannelParams, n: int) -> int:
    """Exact size of C_{N,K}(n)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    N, K = params.N, params.K
    if n <= K:
        return 1
    # sliding window over the last K+1 values
    window = [1] * (K + 1)
    for _ in range(K + 1, n + 1):
        window.append(window[-1] + N * window[0])
        window.pop(0)
    return window[-1]


def _recursive_words(params: ChannelParams, n: int) -> list[ParticleSeq]:
    N, K = params.N, params.K
    by_length: list[list[ParticleSeq]] = []
    for m in range(n + 1):
        if m <= K:
            by_length.append([(0,) * m])
            continue
        words = [(N,) + w for w in by_length[m - 1]]
        pad = (0,) * K
        for i in range(N - 1, -1, -1):
            words.extend((i,) + pad + w for w in by_length[m - K - 1])
        by_length.append(words)
    return by_length[n]


def build_recursive(params: ChannelParams, n: int) -> Codebook:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return Codebook(params, n, tuple(_recursive_words(params, n)))


def zero_padded_candidates(params: ChannelParams, n: int, budget: int = DEFAULT_GREEDY_BUDGET) -> np.ndarray:
    """All zero-padded length-``n`` sequences over ``{0..N}``, inverse lexicographic.

    Returned as an int array of shape ``((N+1)**free, n)``, where ``free`` is
    the number of slots before the zero tail.
    """
    N, K = params.N, params.K
    free = n - min(n, K)
    count = (N + 1) ** free
    if count > budget:
        raise BudgetExceeded("zero-padded candidates", count, budget)
    idx = np.arange(count, dtype=np.int64)
    out = np.zeros((count, n), dtype=np.int64)
    for k in range(free):
        place = (N + 1) ** (free - 1 - k)
        out[:, k] = N - (idx // place) % (N + 1)
    return out


def build_greedy(params: ChannelParams, n: int, budget: int = DEFAULT_GREEDY_BUDGET) -> Codebook:
    """Greedy construction over the inverse lexicographic candidate list."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    K = params.K
    cands = zero_padded_candidates(params, n, budget)
    count = len(cands)
    # running totals over the window n + K; beyond n they stay at the total
    sums = np.cumsum(cands, axis=1)
    if n:
        sums = np.concatenate([sums, np.repeat(sums[:, -1:], K, axis=1)], axis=1)
    else:
        sums = np.zeros((count, K), dtype=np.int64)
    excluded = np.zeros(count, dtype=bool)
    kept = []
    for pos in range(count):
        if excluded[pos]:
            continue
        kept.append(tuple(int(v) for v in cands[pos]))
        sx = sums[pos]
        rest = sums[pos + 1:]
        # y reachable from x: Sy <= Sx everywhere and Sx(j) <= Sy(j + K) for j < n
        hit = (rest <= sx).all(axis=1) & (sx[:n] <= rest[:, K:K + n]).all(axis=1)
        excluded[pos + 1:] |= hit
    return Codebook(params, n, tuple(kept))


def build(params: ChannelParams, n: int, method: ConstructionMethod = ConstructionMethod.RECURSIVE) -> Codebook:
    if method is ConstructionMethod.GREEDY:
        return build_greedy(params, n)
    return build_recursive(params, n)


def _move_to_front(u: Sequence[int], N: int) -> tuple[int, ...]:
    # pull particles into slot 1 until it holds N, taking from slot 2, then 3, ...
    head = list(u)
    need = N - head[0]
    head[0] = N
    for k in range(1, len(head)):
        take = min(need, head[k])
        head[k] -= take
        need -= take
        if need == 0:
            break
    return tuple(head)


def normalize_word(params: ChannelParams, word: Sequence[int]) -> ParticleSeq:
    """Rewrite the length-(K+1) prefix of ``word`` into the form ``N ...`` or ``q o 0^K``."""
    N, K = params.N, params.K
    w = as_seq(word)
    if len(w) <= K:
        return w
    u, v = w[:K + 1], w[K + 1:]
    q = sum(u)
    if q < N:
        return (q,) + (0,) * K + v
    return _move_to_front(u, N) + v


def normalize(cb: Codebook) -> Codebook:
    """Map a zero-padded zero-error code to one of the same size in the prefix form.

    Raises ``ValueError`` if two codewords collide, which can only happen when
    ``cb`` was not zero-error to begin with.
    """
    if cb.n <= cb.params.K:
        return cb
    seen: dict[ParticleSeq, ParticleSeq] = {}
    for w in cb:
        t = normalize_word(cb.params, w)
        if t in seen:
            raise ValueError(f"{seen[t]} and {w} both normalize to {t}; the code is not zero-error")
        seen[t] = w
    return Codebook(cb.params, cb.n, tuple(seen))


def rank(params: ChannelParams, w: Sequence[int]) -> int:
    """Index of codeword ``w`` within C_{N,K}(len(w)), 0 being the inverse-lex largest."""
    N, K = params.N, params.K
    w = as_seq(w)
    n = len(w)
    counts = cardinalities(params, n)
    idx = 0
    p = 0
    while p < n:
        left = n - p
        if left <= K:
            if any(w[p:]):
                raise ValueError(f"{w} is not a codeword: slots {p + 1}..{n} must be empty")
            break
        s = w[p]
        if s == N:
            p += 1
        elif s < N:
            if any(w[p + 1:p + K + 1]):
                raise ValueError(f"{w} is not a codeword: {s} at slot {p + 1} must be followed by {K} zeros")
            idx += counts[left - 1] + (N - 1 - s) * counts[left - K - 1]
            p += K + 1
        else:
            raise ValueError(f"{w} is not a codeword: slot {p + 1} exceeds N={N}")
    return idx


def unrank(params: ChannelParams, n: int, idx: int) -> ParticleSeq:
    """Codeword of C_{N,K}(n) with index ``idx``; inverse of :func:`rank`."""
    N, K = params.N, params.K
    counts = cardinalities(params, n)
    if not 0 <= idx < counts[n]:
        raise ValueError(f"index {idx} out of range for {counts[n]} codewords")
    out: list[int] = []
    left = n
    while left > K:
        if idx < counts[left - 1]:
            out.append(N)
            left -= 1
            continue
        idx -= counts[left - 1]
        block, idx = divmod(idx, counts[left - K - 1])
        out.append(N - 1 - block)
        out.extend([0] * K)
        left -= K + 1
    out.extend([0] * left)
    return tuple(out)
