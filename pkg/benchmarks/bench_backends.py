"""Time the exhaustive sweeps on the built-in example, pure vs compiled.

Usage:

    python benchmarks/bench_backends.py [--max-arity N] [--check direct|coderivation|both]

Runs each (check, arity) sweep once per backend and prints a table.  The
word count triples with every arity step, so the top arities dominate.
"""

from __future__ import annotations

import argparse
import os
import time

from ainfty import example_structure, kernel_available, verify_structure


def time_sweep(check: str, arity: int, pure: bool) -> float:
    if pure:
        os.environ["AINFTY_PURE"] = "1"
    else:
        os.environ.pop("AINFTY_PURE", None)
    try:
        start = time.perf_counter()
        report = verify_structure(example_structure(), arity, mode=check)
        elapsed = time.perf_counter() - start
        assert report.passed
        return elapsed
    finally:
        os.environ.pop("AINFTY_PURE", None)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-arity", type=int, default=8)
    parser.add_argument(
        "--check", choices=["direct", "coderivation", "both"], default="both"
    )
    args = parser.parse_args()
    checks = ["direct", "coderivation"] if args.check == "both" else [args.check]

    have_kernel = kernel_available()
    if not have_kernel:
        print("compiled kernel not built; timing the pure path only\n")

    header = f"{'check':>13} {'arity':>5} {'words':>8} {'pure [s]':>10}"
    if have_kernel:
        header += f" {'compiled [s]':>13} {'speedup':>8}"
    print(header)
    for check in checks:
        for arity in range(1, args.max_arity + 1):
            words = sum(3**n for n in range(1, arity + 1))
            pure_t = time_sweep(check, arity, pure=True)
            row = f"{check:>13} {arity:>5} {words:>8} {pure_t:>10.3f}"
            if have_kernel:
                comp_t = time_sweep(check, arity, pure=False)
                row += f" {comp_t:>13.3f} {pure_t / comp_t:>7.1f}x"
            print(row)
    print()


if __name__ == "__main__":
    main()
