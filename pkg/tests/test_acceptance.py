"""Acceptance suite: one test per exit criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the report, or
``python tests/test_acceptance.py`` for a standalone summary.
"""

import io
import itertools
import math
import time
from contextlib import contextmanager
from functools import lru_cache

from dtpc.capacity import capacity, dominant_root
from dtpc.channel import enumerate_outputs, reachable, transmit
from dtpc.cli import main
from dtpc.codes import build_greedy, build_recursive, cardinality
from dtpc.decode import decode
from dtpc.model import ChannelParams, Codebook
from dtpc.verify import (
    confusable,
    is_zero_error_sequences,
    max_zero_error_padded,
    membrane_equivalent,
    random_codebook,
)

from oracles import delay_assignments, fibonacci, pad, sequences
from test_codes import C21_LEN5

CURVE_N = (1, 3, 7, 15, 31, 63)
CURVE_K = range(0, 11)


@contextmanager
def criterion(number, title, seconds=None):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        if seconds is not None:
            assert elapsed < seconds, f"took {elapsed:.1f}s, limit {seconds}s"
    except AssertionError as err:
        print(f"\n[criterion {number:2d}] FAIL  {title}: {err}")
        raise
    print(f"\n[criterion {number:2d}] PASS  {title} ({time.perf_counter() - start:.2f}s)")


def test_01_c21_listing(tmp_path):
    with criterion(1, "C_{2,1}(n) sizes and the length-5 codebook listing", seconds=1):
        p = ChannelParams(2, 1)
        assert [cardinality(p, n) for n in range(1, 6)] == [1, 3, 5, 11, 21]
        path = tmp_path / "c21.txt"
        assert main(["codebook", "2", "1", "5", "--out", str(path)], out=io.StringIO()) == 0
        words = [tuple(map(int, line.split())) for line in path.read_text().splitlines()[2:]]
        assert words == C21_LEN5
        assert words[0] == (2, 2, 2, 2, 0) and words[-1] == (0, 0, 0, 0, 0)


def test_02_greedy_equals_recursive():
    with criterion(2, "greedy and recursive constructions agree", seconds=60):
        for N in (1, 2, 3):
            for K in (1, 2):
                p = ChannelParams(N, K)
                for n in range(9):
                    assert build_greedy(p, n).as_set() == build_recursive(p, n).as_set(), (N, K, n)


def test_03_fibonacci():
    with criterion(3, "C_{1,1} sizes are Fibonacci numbers", seconds=1):
        p = ChannelParams(1, 1)
        assert [cardinality(p, n) for n in range(31)] == fibonacci(31)


def test_04_closed_forms():
    with criterion(4, "dominant root matches closed forms to 1e-9", seconds=1):
        phi = (1 + math.sqrt(5)) / 2
        assert abs(dominant_root((1, 1)) - phi) <= 1e-9
        for N in range(1, 64):
            assert abs(dominant_root((N, 0)) - (N + 1)) <= 1e-9
            assert abs(dominant_root((N, 1)) - (1 + math.sqrt(1 + 4 * N)) / 2) <= 1e-9


def test_05_growth_rate():
    with criterion(5, "|C(201)|/|C(200)| matches the root to 1e-6", seconds=5):
        for N in range(5):
            for K in range(4):
                p = ChannelParams(N, K)
                ratio = cardinality(p, 201) / cardinality(p, 200)
                assert abs(ratio - dominant_root((N, K))) <= 1e-6, (N, K)


def test_06_decoder_round_trip():
    with criterion(6, "decoder inverts every delay pattern on C_{2,1}(7), C_{1,2}(7)", seconds=120):
        failures = 0
        checked = 0
        for N, K in [(2, 1), (1, 2)]:
            p = ChannelParams(N, K)
            for x in build_recursive(p, 7):
                for d in delay_assignments(K, x):
                    checked += 1
                    if decode(p, 7, transmit(p, x, d)) != x:
                        failures += 1
        assert checked > 0
        assert failures == 0, f"{failures} of {checked} decodes failed"


@lru_cache(maxsize=None)
def _same_weight_candidates(length, total, cap):
    # every length-`length` sequence over 0..cap with the given weight
    out = []

    def grow(prefix, left, slots):
        if slots == 0:
            if left == 0:
                out.append(tuple(prefix))
            return
        for v in range(min(cap, left), -1, -1):
            if left - v <= cap * (slots - 1):
                prefix.append(v)
                grow(prefix, left - v, slots - 1)
                prefix.pop()

    grow([], total, length)
    return out


def test_07_reachability_criterion():
    with criterion(7, "cumulative-sum reachability agrees with enumeration", seconds=120):
        disagreements = 0
        for N in (0, 1, 2):
            for K in (0, 1, 2):
                p = ChannelParams(N, K)
                for length in range(6):
                    for x in sequences(N, length):
                        outs = enumerate_outputs(p, x)
                        window = length + K
                        for y in _same_weight_candidates(window, sum(x), (K + 1) * N):
                            if reachable(p, x, y) != (y in outs):
                                disagreements += 1
                        # outputs of a different weight are never reachable
                        for y in outs:
                            if any(v for v in y):
                                bumped = (y[0] + 1,) + y[1:]
                                assert not reachable(p, x, bumped)
        assert disagreements == 0


def test_08_confusability_criterion():
    with criterion(8, "confusability criterion agrees with output-set intersection", seconds=120):
        disagreements = 0
        bad_witness = 0
        cache = {}

        def outs(p, x, window):
            key = (p, x, window)
            if key not in cache:
                cache[key] = {pad(y, window) for y in enumerate_outputs(p, x)}
            return cache[key]

        for N in (0, 1, 2):
            for K in (0, 1, 2):
                p = ChannelParams(N, K)
                by_weight = {}
                for length in range(6):
                    for x in sequences(N, length):
                        by_weight.setdefault(sum(x), []).append(x)
                for group in by_weight.values():
                    for x, y in itertools.combinations_with_replacement(group, 2):
                        window = max(len(x), len(y)) + K
                        shared = bool(outs(p, x, window) & outs(p, y, window))
                        z = confusable(p, x, y)
                        if (z is not None) != shared:
                            disagreements += 1
                        if z is not None and not (reachable(p, x, z) and reachable(p, y, z)):
                            bad_witness += 1
        assert disagreements == 0 and bad_witness == 0, (disagreements, bad_witness)


def test_09_optimality():
    with criterion(9, "exact maximum zero-padded code size equals |C(n)|", seconds=120):
        for N, K, n_max in [(1, 1, 6), (1, 2, 6), (2, 1, 4)]:
            p = ChannelParams(N, K)
            for n in range(n_max + 1):
                assert max_zero_error_padded(p, n) == cardinality(p, n), (N, K, n)


def test_10_concatenation_counterexample():
    with criterion(10, "{000,100,001} is pairwise fine but confusable at m = 2"):
        cb = Codebook(ChannelParams(1, 1), 3, ((0, 0, 0), (1, 0, 0), (0, 0, 1)))
        assert is_zero_error_sequences(cb, 1) is None
        hit = is_zero_error_sequences(cb, 2)
        assert hit is not None
        assert {hit.x_blocks, hit.y_blocks} == {((0, 0, 1), (0, 0, 0)), ((0, 0, 0), (1, 0, 0))}


def test_11_membrane_equivalence():
    with criterion(11, "output cap leaves zero-error status unchanged", seconds=300):
        falses = []
        spaces = [(ChannelParams(2, 1), range(1, 6)), (ChannelParams(1, 1), range(1, 7))]
        for p, lengths in spaces:
            for n in lengths:
                if not membrane_equivalent(build_recursive(p, n), 2):
                    falses.append((p, n))
        seed = 0
        for p, lengths in spaces:
            for _ in range(50):
                n = lengths[seed % len(lengths)]
                size = min(2 + seed % 5, (p.N + 1) ** n)
                cb = random_codebook(p, n, size, seed)
                if not membrane_equivalent(cb, 2):
                    falses.append((p, n, cb.words))
                seed += 1
        assert seed == 100
        assert not falses, falses


def test_12_capacity_shape():
    with criterion(12, "capacity monotone/concave in N, monotone/convex in K on the curve grid"):
        c = {(N, K): capacity((N, K)).capacity_bits for N in CURVE_N for K in CURVE_K}
        for K in CURVE_K:
            col = [c[N, K] for N in CURVE_N]
            assert all(b > a for a, b in zip(col, col[1:]))
            # the N values are unevenly spaced, so compare successive slopes
            slopes = [(c[b, K] - c[a, K]) / (b - a) for a, b in zip(CURVE_N, CURVE_N[1:])]
            assert all(s2 <= s1 for s1, s2 in zip(slopes, slopes[1:]))
        for N in CURVE_N:
            row = [c[N, K] for K in CURVE_K]
            assert all(b < a for a, b in zip(row, row[1:]))
            assert all(a - 2 * b + d >= 0 for a, b, d in zip(row, row[1:], row[2:]))


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q", "-s"]))
