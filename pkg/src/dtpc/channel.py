"""Simulation and reachability for the DTPC(N, K).

Output window convention: an input of length n produces an output of length
n + K, since every particle has arrived by then.  Reachability between
sequences of unequal length pads both with zeros to a common window.
"""

from __future__ import annotations

import random
from typing import Iterator, Sequence

from .model import BudgetExceeded, ChannelParams, DelayAssignment, ParticleSeq, cumsum, weight

DEFAULT_ENUMERATION_BUDGET = 10**7


def _check_input(params: ChannelParams, x: Sequence[int]) -> None:
    for i, v in enumerate(x):
        if v < 0 or v > params.N:
            raise ValueError(f"slot {i + 1} carries {v} particles, allowed range is 0..{params.N}")


def transmit(params: ChannelParams, x: Sequence[int], d: DelayAssignment) -> ParticleSeq:
    """Deliver the particles of ``x`` with the per-particle delays ``d``."""
    _check_input(params, x)
    if len(d) != len(x):
        raise ValueError(f"delay assignment covers {len(d)} slots, input has {len(x)}")
    y = [0] * (len(x) + params.K)
    for i, (count, delays) in enumerate(zip(x, d)):
        if len(delays) != count:
            raise ValueError(f"slot {i + 1} sends {count} particles but has {len(delays)} delays")
        for delay in delays:
            if not 0 <= delay <= params.K:
                raise ValueError(f"delay {delay} in slot {i + 1} outside 0..{params.K}")
            y[i + delay] += 1
    return tuple(y)


def random_delays(params: ChannelParams, x: Sequence[int], rng: random.Random) -> DelayAssignment:
    return tuple(tuple(rng.randint(0, params.K) for _ in range(count)) for count in x)


def simulate(params: ChannelParams, x: Sequence[int], seed: int) -> ParticleSeq:
    """One channel use with i.i.d. uniform delays drawn from a seeded stream."""
    _check_input(params, x)
    rng = random.Random(seed)
    return transmit(params, x, random_delays(params, x, rng))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    # ways to split `total` identical particles over `parts` delay values
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def enumerate_outputs(
    params: ChannelParams,
    x: Sequence[int],
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> set[ParticleSeq]:
    """Every output the channel can produce from ``x``, by exhaustive search.

    The particles are identical, so a slot's delays only matter through how
    many particles take each delay value; the search walks those splits slot
    by slot.  ``budget`` caps the number of raw delay assignments,
    ``(K + 1) ** weight(x)``.
    """
    _check_input(params, x)
    required = (params.K + 1) ** weight(x)
    if required > budget:
        raise BudgetExceeded("delay assignments", required, budget)
    length = len(x) + params.K
    outputs: set[ParticleSeq] = {(0,) * length}
    for i, count in enumerate(x):
        if count == 0:
            continue
        nxt: set[ParticleSeq] = set()
        splits = list(_compositions(count, params.K + 1))
        for out in outputs:
            for split in splits:
                y = list(out)
                for delay, c in enumerate(split):
                    y[i + delay] += c
                nxt.add(tuple(y))
        outputs = nxt
    return outputs


def reachable(params: ChannelParams, x: Sequence[int], y: Sequence[int]) -> bool:
    """Whether some delay assignment turns ``x`` into ``y``.

    Identical particles can be matched first-in first-out, so ``y`` is
    reachable iff no particle arrives before it could have been sent and
    none arrives more than K slots late, i.e. with running totals Sx, Sy:
    Sy(j) <= Sx(j) and Sx(j) <= Sy(j + K) for every slot j.
    """
    if weight(x) != weight(y):
        return False
    K = params.K
    length = max(len(x) + K, len(y))
    sx = cumsum(x, length)
    sy = cumsum(y, length)
    total = sx[-1] if length else 0
    for j in range(length):
        if sy[j] > sx[j]:
            return False
        later = sy[j + K] if j + K < length else total
        if sx[j] > later:
            return False
    return True


def reachable_membrane(params: ChannelParams, x: Sequence[int], y: Sequence[int]) -> bool:
    """Reachability in the variant whose output admits at most N particles per slot."""
    return all(v <= params.N for v in y) and reachable(params, x, y)


def push_forward(params: ChannelParams, z: Sequence[int]) -> ParticleSeq:
    """Delay surplus particles until no slot holds more than N.

    Sweeps left to right with a running carry.  The result may run up to K
    slots past ``z`` if the carry is still nonzero at its end.
    """
    N, K = params.N, params.K
    out: list[int] = []
    carry = 0
    for i in range(len(z) + K):
        here = (z[i] if i < len(z) else 0) + carry
        if i >= len(z) and here == 0:
            break
        keep = min(here, N)
        out.append(keep)
        carry = here - keep
    if carry:
        raise ValueError(
            f"{carry} particles still pending after {len(z) + K} slots; "
            f"{tuple(z)} is not a DTPC({N},{K}) output"
        )
    return tuple(out)
