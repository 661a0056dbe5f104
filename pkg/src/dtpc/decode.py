"""Linear-time decoder for the codes C_{N,K}(n).

Each step looks at the next K+1 received slots.  If they hold q < N
particles the codeword block is ``q o 0^K``; otherwise the next codeword
symbol is N, and the N earliest arrivals are attributed to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .channel import reachable
from .model import ChannelParams, ParticleSeq, as_seq


class DecodeError(ValueError):
    """The received sequence is not an output of any codeword."""

    def __init__(self, message: str, slot: int | None = None, block: int | None = None) -> None:
        where = []
        if block is not None:
            where.append(f"block {block}")
        if slot is not None:
            where.append(f"slot {slot}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.reason = message
        self.slot = slot
        self.block = block


@dataclass(frozen=True)
class DecodeStep:
    slot: int  # 1-based position of the inspected window
    window: ParticleSeq  # received (adjusted) symbols before the step
    q: int
    decided: ParticleSeq  # codeword symbols fixed by this step


def _trim(params: ChannelParams, n: int, y: Sequence[int]) -> list[int]:
    y = list(as_seq(y))
    if len(y) == n + params.K and any(y[n:]):
        raise DecodeError(f"trailing {params.K} slots must be empty, got {tuple(y[n:])}", slot=n + 1)
    if len(y) not in (n, n + params.K):
        raise DecodeError(f"received length {len(y)}, expected {n} or {n + params.K}")
    return y[:n]


def decode_trace(params: ChannelParams, n: int, y: Sequence[int]) -> tuple[ParticleSeq, list[DecodeStep]]:
    """Decode ``y`` and return the codeword together with the per-step decisions."""
    N, K = params.N, params.K
    received = _trim(params, n, y)
    work = list(received)
    x: list[int] = []
    steps: list[DecodeStep] = []
    p = 0
    while p < n:
        if n - p <= K:
            if any(work[p:]):
                raise DecodeError(f"particles {tuple(work[p:])} found in the zero tail", slot=p + 1)
            x.extend([0] * (n - p))
            break
        window = tuple(work[p:p + K + 1])
        q = sum(window)
        if q < N:
            decided = (q,) + (0,) * K
            p += K + 1
        else:
            if work[p] > N:
                raise DecodeError(f"{work[p]} particles received where at most {N} can be due", slot=p + 1)
            need = N - work[p]
            for k in range(p + 1, p + K + 1):
                take = min(need, work[k])
                work[k] -= take
                need -= take
                if need == 0:
                    break
            decided = (N,)
            p += 1
        x.extend(decided)
        steps.append(DecodeStep(slot=p - len(decided) + 1, window=window, q=q, decided=decided))
    codeword = tuple(x)
    if not reachable(params, codeword, received):
        raise DecodeError(f"decoded {codeword} cannot produce the received {tuple(received)}")
    return codeword, steps


def decode(params: ChannelParams, n: int, y: Sequence[int]) -> ParticleSeq:
    """Recover the codeword of C_{N,K}(n) that produced ``y``.

    ``y`` has length n, or n + K with the last K slots empty.
    """
    return decode_trace(params, n, y)[0]


def decode_stream(params: ChannelParams, n: int, y: Sequence[int]) -> list[ParticleSeq]:
    """Decode a run of concatenated codewords block by block.

    The zero tail of every codeword keeps its particles inside its own block,
    so blocks decode independently.  A trailing K empty slots is accepted.
    """
    y = list(as_seq(y))
    if n <= 0:
        raise ValueError("block length must be positive")
    K = params.K
    body = y
    if len(y) % n and K and len(y) > K and (len(y) - K) % n == 0 and not any(y[-K:]):
        body = y[:-K]
    if not body or len(body) % n:
        raise DecodeError(f"received length {len(y)} is not a positive multiple of {n}")
    out = []
    for b in range(len(body) // n):
        try:
            out.append(decode(params, n, body[b * n:(b + 1) * n]))
        except DecodeError as err:
            slot = None if err.slot is None else err.slot + b * n
            raise DecodeError(err.reason, slot=slot, block=b + 1) from err
    return out
