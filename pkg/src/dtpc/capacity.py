"""Zero-error capacity log2(r), r the positive root of x^(K+1) - x^K - N."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable

from .model import ChannelParams

DEFAULT_TOL = 1e-12
# switch from bisection to Newton once the bracket is this narrow
NEWTON_SWITCH = 1e-3


class Axis(enum.Enum):
    VARY_N = "varyN"
    VARY_K = "varyK"


@dataclass(frozen=True)
class CapacityResult:
    N: float
    K: float
    root_r: float
    capacity_bits: float
    residual: float


def _params(params) -> tuple[float, float]:
    if isinstance(params, ChannelParams):
        return params.N, params.K
    N, K = params
    return N, K


def _residual(r: float, N: float, K: float) -> float:
    # r^K (r - 1) - N loses less to cancellation than r^(K+1) - r^K - N
    return r**K * (r - 1.0) - N


def _newton(r: float, N: float, K: float, lo: float, hi: float) -> float:
    # Newton steps, falling back to bisection whenever a step leaves [lo, hi]
    for _ in range(200):
        f = _residual(r, N, K)
        if f == 0:
            return r
        if f > 0:
            hi = r
        else:
            lo = r
        df = r ** (K - 1) * ((K + 1) * r - K)
        nxt = r - f / df
        if not lo < nxt < hi:
            nxt = 0.5 * (lo + hi)
        if nxt == r or hi - lo <= 4 * math.ulp(r):
            break
        r = nxt
    # walk to the nearby float whose residual is smallest
    def err(c: float) -> float:
        return abs(c ** (K + 1) - c**K - N)

    for _ in range(64):
        best = min((math.nextafter(r, 0.0), r, math.nextafter(r, math.inf)), key=err)
        if best == r:
            break
        r = best
    return r


def dominant_root(params, tol: float = DEFAULT_TOL) -> float:
    """The unique positive real root of x^(K+1) - x^K - N.

    ``params`` is a :class:`ChannelParams` or an ``(N, K)`` pair; real N > 0
    and K >= 0 are accepted.  Returns 1.0 for N = 0.
    """
    N, K = _params(params)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if N < 0 or K < 0:
        raise ValueError(f"N and K must be nonnegative, got N={N}, K={K}")
    if N == 0:
        return 1.0
    if K == 0:
        return float(N + 1)
    # r^K (r - 1) = N with r^K >= 1 puts the root in (1, N + 1]
    lo, hi = 1.0, float(N + 1)
    while hi - lo > NEWTON_SWITCH:
        mid = 0.5 * (lo + hi)
        if _residual(mid, N, K) > 0:
            hi = mid
        else:
            lo = mid
    return _newton(0.5 * (lo + hi), N, K, lo, hi)


def capacity(params, tol: float = DEFAULT_TOL) -> CapacityResult:
    N, K = _params(params)
    r = dominant_root((N, K), tol)
    bits = math.log2(r)
    res = abs(r ** (K + 1) - r**K - N) if N else 0.0
    return CapacityResult(N=N, K=K, root_r=r, capacity_bits=bits, residual=res)


def capacity_closed_form(params) -> float | None:
    """Closed-form capacity in bits for K = 0 or K = 1, else None."""
    N, K = _params(params)
    if K == 0:
        return math.log2(N + 1)
    if K == 1:
        return math.log2((1 + math.sqrt(1 + 4 * N)) / 2)
    return None


def capacity_curve(axis: Axis | str, fixed: int, values: Iterable[int], tol: float = DEFAULT_TOL) -> list[tuple[int, int, float]]:
    """Rows ``(N, K, capacity_bits)`` sweeping one parameter with the other held at ``fixed``."""
    axis = Axis(axis)
    rows = []
    for v in values:
        N, K = (v, fixed) if axis is Axis.VARY_N else (fixed, v)
        rows.append((N, K, capacity((N, K), tol).capacity_bits))
    return rows
