"""Domain types for the discrete-time particle channel DTPC(N, K).

A particle sequence is a plain tuple of nonnegative ints, one entry per time
slot.  Codeword counts are Python ints, so they stay exact at any size.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

ParticleSeq = tuple[int, ...]
# delays[i] holds one delay per particle sent in slot i
DelayAssignment = tuple[tuple[int, ...], ...]


class BudgetExceeded(RuntimeError):
    """An exhaustive search would exceed its configured budget."""

    def __init__(self, what: str, required: int, budget: int) -> None:
        super().__init__(f"{what}: {required} required, budget is {budget}")
        self.required = required
        self.budget = budget


@dataclass(frozen=True)
class ChannelParams:
    """Channel parameters: at most ``N`` particles per slot, delays in ``0..K``."""

    N: int
    K: int

    def __post_init__(self) -> None:
        for name in ("N", "K"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {value!r}")
            if value < 0:
                raise ValueError(f"{name} must be >= 0, got {value}")


def as_seq(symbols: Iterable[int]) -> ParticleSeq:
    """Validate and freeze an iterable of particle counts."""
    seq = tuple(int(s) for s in symbols)
    for i, s in enumerate(seq):
        if s < 0:
            raise ValueError(f"negative particle count {s} at slot {i + 1}")
    return seq


def weight(s: Sequence[int]) -> int:
    return sum(s)


def concat(a: Sequence[int], b: Sequence[int]) -> ParticleSeq:
    return tuple(a) + tuple(b)


def is_zero_padded(s: Sequence[int], params: ChannelParams) -> bool:
    """True iff the last ``min(len(s), K)`` symbols are zero."""
    tail = min(len(s), params.K)
    return all(v == 0 for v in s[len(s) - tail:])


def cumsum(s: Sequence[int], length: int) -> list[int]:
    """Running totals of ``s``, zero-padded (so held constant) out to ``length``."""
    out = []
    total = 0
    for j in range(length):
        if j < len(s):
            total += s[j]
        out.append(total)
    return out


def inverse_lex_key(s: Sequence[int]) -> tuple[int, ...]:
    """Sort key placing the larger symbol at the first differing slot first."""
    return tuple(-v for v in s)


@dataclass(frozen=True)
class Codebook:
    """A set of equal-length words over ``{0..N}``.

    Words are kept in inverse-lexicographic order so that iteration and
    serialization are canonical.
    """

    params: ChannelParams
    n: int
    words: tuple[ParticleSeq, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"codeword length must be >= 0, got {self.n}")
        words = tuple(as_seq(w) for w in self.words)
        for w in words:
            if len(w) != self.n:
                raise ValueError(f"word {w} has length {len(w)}, expected {self.n}")
            if any(v > self.params.N for v in w):
                raise ValueError(f"word {w} has a symbol above N={self.params.N}")
        if len(set(words)) != len(words):
            raise ValueError("duplicate codewords")
        object.__setattr__(self, "words", tuple(sorted(words, key=inverse_lex_key)))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, word: object) -> bool:
        return tuple(word) in set(self.words)  # type: ignore[arg-type]

    def as_set(self) -> frozenset[ParticleSeq]:
        return frozenset(self.words)

    def is_zero_padded(self) -> bool:
        return all(is_zero_padded(w, self.params) for w in self.words)
