"""Command-line front end.

Exit status: 0 success (or zero-error), 1 verification counterexample,
2 usage or input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path
from typing import Sequence

from .capacity import DEFAULT_TOL, Axis, capacity, capacity_closed_form, capacity_curve
from .channel import simulate
from .codes import ConstructionMethod, build, cardinality, rank, unrank
from .decode import decode
from .model import BudgetExceeded, ChannelParams, Codebook, ParticleSeq, as_seq
from .verify import is_zero_error_padded, is_zero_error_sequences

EXIT_OK = 0
EXIT_CONFUSABLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

CODEBOOK_MAGIC = "# dtpc-codebook v1"
CURVE_N = (1, 3, 7, 15, 31, 63)
CURVE_K = range(0, 11)
MAX_CODEBOOK_WORDS = 10**6


class CodebookFormatError(ValueError):
    pass


def format_codebook(cb: Codebook) -> str:
    lines = [CODEBOOK_MAGIC, f"N={cb.params.N} K={cb.params.K} n={cb.n}"]
    lines.extend(" ".join(map(str, w)) for w in cb)
    return "\n".join(lines) + "\n"


def parse_codebook(text: str) -> Codebook:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 2 or lines[0] != CODEBOOK_MAGIC:
        raise CodebookFormatError(f"missing '{CODEBOOK_MAGIC}' header")
    try:
        fields = dict(item.split("=", 1) for item in lines[1].split())
        N, K, n = int(fields["N"]), int(fields["K"]), int(fields["n"])
    except (KeyError, ValueError) as err:
        raise CodebookFormatError(f"bad parameter line {lines[1]!r}") from err
    words = []
    for lineno, line in enumerate(lines[2:], start=3):
        try:
            words.append(as_seq(int(tok) for tok in line.split()))
        except ValueError as err:
            raise CodebookFormatError(f"line {lineno}: {err}") from err
    return Codebook(ChannelParams(N, K), n, tuple(words))


def write_codebook(cb: Codebook, path: str | Path) -> None:
    Path(path).write_bytes(format_codebook(cb).encode("ascii"))


def read_codebook(path: str | Path) -> Codebook:
    return parse_codebook(Path(path).read_bytes().decode("ascii"))


def parse_seq(text: str) -> ParticleSeq:
    return as_seq(int(tok) for tok in text.replace(",", " ").split())


def format_seq(s: Sequence[int]) -> str:
    return " ".join(map(str, s))


def _compact(s: Sequence[int]) -> str:
    # 001000 style when every symbol is a single digit
    return "".join(map(str, s)) if all(v < 10 for v in s) else format_seq(s)


def _seq_arg(value: str | None) -> ParticleSeq:
    if value is None or value == "-":
        value = sys.stdin.read()
    return parse_seq(value)


def _k_arg(text: str) -> int | None:
    if text.lower() in ("inf", "infinity"):
        return None
    return _nonneg(text)


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {text}")
    return value


def _int_list(text: str) -> list[int]:
    return [_nonneg(tok) for tok in text.split(",") if tok.strip()]


def _int_range(text: str) -> range:
    # "a:b" is inclusive of both ends; a bare "b" means 0..b
    lo, _, hi = text.partition(":")
    if not hi:
        return range(0, _nonneg(lo) + 1)
    return range(_nonneg(lo), _nonneg(hi) + 1)


def cmd_capacity(args, out) -> int:
    if args.K is None:
        out.write("N,K,r,capacity_bits\n")
        out.write(f"{args.N},inf,1.0,0.0\n")
        return EXIT_OK
    res = capacity((args.N, args.K), args.tol)
    header = "N,K,r,capacity_bits"
    row = f"{args.N},{args.K},{res.root_r!r},{res.capacity_bits!r}"
    if args.closed_form:
        closed = capacity_closed_form((args.N, args.K))
        header += ",closed_form_bits"
        row += "," + ("" if closed is None else repr(closed))
    out.write(header + "\n" + row + "\n")
    return EXIT_OK


def cmd_codebook(args, out) -> int:
    params = ChannelParams(args.N, args.K)
    size = cardinality(params, args.n)
    if size > MAX_CODEBOOK_WORDS:
        raise BudgetExceeded("codewords", size, MAX_CODEBOOK_WORDS)
    cb = build(params, args.n, ConstructionMethod(args.method))
    if args.out:
        write_codebook(cb, args.out)
        out.write(f"{len(cb)}\n")
    else:
        out.write(format_codebook(cb))
        sys.stderr.write(f"{len(cb)} codewords\n")
    return EXIT_OK


def cmd_encode(args, out) -> int:
    out.write(format_seq(unrank(ChannelParams(args.N, args.K), args.n, args.index)) + "\n")
    return EXIT_OK


def cmd_decode(args, out) -> int:
    params = ChannelParams(args.N, args.K)
    x = decode(params, args.n, _seq_arg(args.y))
    out.write((str(rank(params, x)) if args.index else format_seq(x)) + "\n")
    return EXIT_OK


def cmd_simulate(args, out) -> int:
    y = simulate(ChannelParams(args.N, args.K), _seq_arg(args.x), args.seed)
    out.write(format_seq(y) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    cb = read_codebook(args.codebook)
    if args.mode == "padded":
        hit = is_zero_error_padded(cb)
        if hit is None:
            out.write("ZERO-ERROR\n")
            return EXIT_OK
        x, y, z = hit
    else:
        seq_hit = is_zero_error_sequences(cb, args.m)
        if seq_hit is None:
            out.write("ZERO-ERROR\n")
            return EXIT_OK
        x, y, z = seq_hit.x, seq_hit.y, seq_hit.witness
    out.write("CONFUSABLE\n")
    out.write(f"{_compact(x)} / {_compact(y)}\n")
    out.write(f"witness {_compact(z)}\n")
    return EXIT_CONFUSABLE


def curve_rows(n_values: Sequence[int], k_values: Sequence[int], tol: float = DEFAULT_TOL):
    return [row for N in n_values for row in capacity_curve(Axis.VARY_K, N, k_values, tol)]


def cmd_curves(args, out) -> int:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["N", "K", "capacity_bits"])
    for N, K, bits in curve_rows(args.N_list, args.K_range, args.tol):
        writer.writerow([N, K, repr(bits)])
    if args.out:
        Path(args.out).write_bytes(buf.getvalue().encode("ascii"))
    else:
        out.write(buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dtpc", description="Zero-error coding for the discrete-time particle channel DTPC(N,K).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("capacity", help="zero-error capacity log2(r)")
    p.add_argument("N", type=_nonneg)
    p.add_argument("K", type=_k_arg, help="max delay, or 'inf'")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--closed-form", action="store_true", help="also print the K<=1 closed form")
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("codebook", help="generate the optimal zero-padded code")
    p.add_argument("N", type=_nonneg)
    p.add_argument("K", type=_nonneg)
    p.add_argument("n", type=_nonneg)
    p.add_argument("--method", choices=[m.value for m in ConstructionMethod], default="recursive")
    p.add_argument("--out", help="write the codebook file here instead of stdout")
    p.set_defaults(func=cmd_codebook)

    p = sub.add_parser("encode", help="codeword with the given index")
    p.add_argument("N", type=_nonneg)
    p.add_argument("K", type=_nonneg)
    p.add_argument("n", type=_nonneg)
    p.add_argument("index", type=_nonneg)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="recover the codeword from a channel output")
    p.add_argument("N", type=_nonneg)
    p.add_argument("K", type=_nonneg)
    p.add_argument("n", type=_nonneg)
    p.add_argument("y", nargs="?", help="received sequence; read from stdin if omitted or '-'")
    p.add_argument("--index", action="store_true", help="print the codeword index instead")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="one random channel use")
    p.add_argument("N", type=_nonneg)
    p.add_argument("K", type=_nonneg)
    p.add_argument("x", nargs="?", help="input sequence; read from stdin if omitted or '-'")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="check that a codebook file is zero-error")
    p.add_argument("--codebook", required=True)
    p.add_argument("--mode", choices=["padded", "sequences"], default="padded")
    p.add_argument("--m", type=int, default=2, help="max concatenation depth in sequences mode")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("curves", help="capacity grid as CSV")
    p.add_argument("--out")
    p.add_argument("--N-list", dest="N_list", type=_int_list, default=list(CURVE_N))
    p.add_argument("--K-range", dest="K_range", type=_int_range, default=CURVE_K, help="inclusive, e.g. 0:10")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_curves)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except BudgetExceeded as err:
        sys.stderr.write(f"dtpc: budget exceeded: {err}\n")
        return EXIT_BUDGET
    except (ValueError, OSError) as err:
        sys.stderr.write(f"dtpc: {err}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
