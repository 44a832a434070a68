"""Command line front end: basis export, spectral measures, walk sampling
and the verification report.

Every command is deterministic given its flags and seed; identical
invocations produce byte-identical output.  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import random
import sys

from .gz import iter_basis
from .markov import (
    BitPrefix,
    central_kernel,
    kernel_from_prefix,
    path_product_table,
    sample_path,
    spectral_measure,
    transition_counts,
    within_three_sigma,
)
from .serialize import (
    gz_vector_to_dict,
    json_text,
    kernel_to_csv,
    kernel_to_rows,
    summary_to_csv,
    table_to_dict,
    trace_to_csv,
)
from .verify import run_scope

MAX_BASIS_LEVEL = 16
MAX_SAMPLE_DEPTH = 64


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


def _thread_cap() -> int:
    """Honor the YM_THREADS cap.  The implementation is single process and
    single thread, so any positive cap is respected as written."""
    raw = os.environ.get("YM_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"YM_THREADS must be a positive integer, got {raw!r}")
    if cap < 1:
        raise ValueError(f"YM_THREADS must be a positive integer, got {raw!r}")
    return 1


def cmd_basis(args: argparse.Namespace) -> int:
    n, m = args.n, args.m
    if not 0 <= n <= MAX_BASIS_LEVEL:
        raise ValueError(f"n must lie in 0..{MAX_BASIS_LEVEL}, got {n}")
    if not 0 <= 2 * m <= n:
        raise ValueError(f"m must lie in 0..n/2, got n={n}, m={m}")
    vectors = [gz_vector_to_dict(vec) for vec in iter_basis(n, m)]
    _emit(json_text({"n": n, "m": m, "vectors": vectors}), args.out)
    return 0


def cmd_measure(args: argparse.Namespace) -> int:
    prefix = BitPrefix.from_string(args.xi)
    n = len(prefix) if args.n is None else args.n
    if not 1 <= n <= len(prefix):
        raise ValueError(f"n must lie in 1..|xi|={len(prefix)}, got {n}")
    if n > MAX_BASIS_LEVEL:
        raise ValueError(f"n must be at most {MAX_BASIS_LEVEL}, got {n}")
    table = spectral_measure(prefix, n)
    match = table == path_product_table(prefix, n)
    kernel = kernel_from_prefix(prefix, n)
    if args.format == "json":
        doc = {
            "xi": str(prefix),
            "level": n,
            "table": table_to_dict(table),
            "kernel": kernel_to_rows(kernel),
            "oracle_match": match,
        }
        _emit(json_text(doc), args.out)
    else:
        _emit(kernel_to_csv(kernel), args.out)
    return 0 if match else 1


def cmd_sample(args: argparse.Namespace) -> int:
    depth = args.depth
    if not 1 <= depth <= MAX_SAMPLE_DEPTH:
        raise ValueError(f"depth must lie in 1..{MAX_SAMPLE_DEPTH}, got {depth}")
    if args.count < 0:
        raise ValueError(f"count must be nonnegative, got {args.count}")
    if args.central:
        kernel = central_kernel(depth)
    else:
        kernel = kernel_from_prefix(BitPrefix.from_string(args.xi), depth)
    if args.mode == "summary":
        counts = transition_counts(kernel, depth, args.count, args.seed)
        rows = []
        for (n, k), (visits, ups) in counts.items():
            p_up = kernel.transition(n, k).p_up
            rows.append((n, k, visits, ups, p_up, within_three_sigma(visits, ups, p_up)))
        _emit(summary_to_csv(rows), args.out)
    else:
        rng = random.Random(args.seed)
        paths = [sample_path(kernel, depth, rng) for _ in range(args.count)]
        _emit(trace_to_csv(paths), args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_scope(args.scope, args.n_max)
    lines = []
    failures = 0
    for r in results:
        failures += 0 if r.ok else 1
        lines.append(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail}")
    lines.append(f"{len(results)} checks, {failures} failures")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tworow",
        description=(
            "Exact Gelfand-Tsetlin bases for two-row symmetric group "
            "representations, spectral Markov measures of induced vectors, "
            "and their random walks."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_basis = sub.add_parser(
        "basis", help="emit the degree-m Gelfand-Tsetlin basis with exact norms"
    )
    p_basis.add_argument("--n", type=int, required=True, help="number of variables")
    p_basis.add_argument("--m", type=int, required=True, help="form degree, at most n/2")
    p_basis.add_argument("--format", choices=["json"], default="json")
    p_basis.add_argument("--out", help="output path (default stdout)")
    p_basis.set_defaults(func=cmd_basis)

    p_measure = sub.add_parser(
        "measure",
        help="spectral table of a direction sequence, its kernel, and the "
        "exact oracle crosscheck",
    )
    p_measure.add_argument("--xi", required=True, help="direction bits, e.g. 0101")
    p_measure.add_argument("--n", type=int, help="level (default: the full length)")
    p_measure.add_argument("--format", choices=["json", "csv"], default="json")
    p_measure.add_argument("--out", help="output path (default stdout)")
    p_measure.set_defaults(func=cmd_measure)

    p_sample = sub.add_parser(
        "sample", help="run the random walk; CSV trace or frequency summary"
    )
    group = p_sample.add_mutually_exclusive_group(required=True)
    group.add_argument("--xi", help="direction bits driving the induced walk")
    group.add_argument(
        "--central", action="store_true", help="walk the two-frequency central kernel"
    )
    p_sample.add_argument("--depth", type=int, required=True, help="levels per path")
    p_sample.add_argument("--count", type=int, default=1000, help="number of paths")
    p_sample.add_argument("--seed", type=int, default=0)
    p_sample.add_argument("--mode", choices=["summary", "trace"], default="summary")
    p_sample.add_argument("--out", help="output path (default stdout)")
    p_sample.set_defaults(func=cmd_sample)

    p_verify = sub.add_parser("verify", help="run the exact self-check suites")
    p_verify.add_argument(
        "--scope", choices=["all", "gz", "markov", "central"], default="all"
    )
    p_verify.add_argument(
        "--n-max", type=int, help="cap the level bounds of every suite in scope"
    )
    p_verify.add_argument("--out", help="output path (default stdout)")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _thread_cap()
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
