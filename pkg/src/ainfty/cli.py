"""Command-line entry points.

Exit codes partition the outcomes: 0 = all requested checks pass, 1 = a
verification check failed, 2 = usage or parse error.  Reports go to
standard output, diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import sys

from .engine import AStructure, apply_map, d_squared, prime, verify_structure
from .errors import AinftyError
from .example import BUILTIN_STRUCTURES, lemma1_check
from .formats import parse_structure
from .graded import TensorPoly, Vector
from .linfty import verify_linfty
from .report import emit_report

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _load_structure(args) -> AStructure:
    if args.input is not None:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
        return parse_structure(text, name=args.input)
    name = args.builtin or "paper-example"
    try:
        factory = BUILTIN_STRUCTURES[name]
    except KeyError:
        raise AinftyError(
            f"unknown builtin {name!r}; available: {', '.join(sorted(BUILTIN_STRUCTURES))}"
        ) from None
    return factory()


def _add_structure_args(p: argparse.ArgumentParser, required: bool) -> None:
    group = p.add_mutually_exclusive_group(required=required)
    group.add_argument("--input", metavar="FILE", help="structure file to load")
    group.add_argument(
        "--builtin",
        metavar="NAME",
        help="built-in structure name (default: paper-example)",
    )


def _parse_word(s: AStructure, text: str) -> tuple[int, ...]:
    names = [t.strip() for t in text.split(",") if t.strip()]
    if not names:
        raise AinftyError("empty word")
    return tuple(s.space.index(nm) for nm in names)


def _format_vector(s: AStructure, vec: Vector) -> str:
    if not vec:
        return "0"
    return " + ".join(f"{c} {s.space.name(b)}" for b, c in sorted(vec.items()))


def _format_poly(p: TensorPoly) -> str:
    if p.is_zero():
        return "0"
    bits = []
    for w in sorted(p.terms, key=lambda w: (len(w), w)):
        bits.append(f"{p.terms[w]} {','.join(p.space.word_names(w))}")
    return " + ".join(bits)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ainfty",
        description="Exact verification of homotopy-associative structure data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="sweep the defining identities over all words")
    _add_structure_args(p, required=False)
    p.add_argument("--max-arity", type=int, required=True, metavar="N")
    p.add_argument(
        "--check",
        choices=["direct", "coderivation", "both"],
        default="both",
    )
    p.add_argument("--format", choices=["text", "machine"], default="text")

    p = sub.add_parser(
        "lemma1", help="compare transferred maps against their closed form"
    )
    p.add_argument("--max-arity", type=int, required=True, metavar="N")

    p = sub.add_parser("linfty", help="verify the induced symmetrized structure")
    _add_structure_args(p, required=False)
    p.add_argument("--max-arity", type=int, required=True, metavar="N")
    p.add_argument("--format", choices=["text", "machine"], default="text")

    p = sub.add_parser("apply", help="evaluate one structure map on one word")
    _add_structure_args(p, required=True)
    p.add_argument("--arity", type=int, required=True, metavar="K")
    p.add_argument("--word", required=True, metavar="a,b,c")
    p.add_argument(
        "--primed",
        action="store_true",
        help="apply the transferred degree-1 map instead",
    )

    p = sub.add_parser("d2", help="apply the coderivation twice to one word")
    _add_structure_args(p, required=True)
    p.add_argument("--word", required=True, metavar="a,b,c")
    return parser


def _cmd_verify(args) -> int:
    s = _load_structure(args)
    report = verify_structure(s, args.max_arity, mode=args.check)
    sys.stdout.buffer.write(emit_report(report, format=args.format))
    return EXIT_PASS if report.passed else EXIT_FAIL


def _cmd_lemma1(args) -> int:
    ok = True
    for n in range(1, args.max_arity + 1):
        good = lemma1_check(n)
        ok = ok and good
        print(f"arity {n}: transferred map matches closed form: {'yes' if good else 'NO'}")
    print(f"result: {'PASS' if ok else 'FAIL'}")
    return EXIT_PASS if ok else EXIT_FAIL


def _cmd_linfty(args) -> int:
    s = _load_structure(args)
    report = verify_linfty(s, args.max_arity)
    sys.stdout.buffer.write(emit_report(report, format=args.format))
    return EXIT_PASS if report.passed else EXIT_FAIL


def _cmd_apply(args) -> int:
    s = _load_structure(args)
    word = _parse_word(s, args.word)
    if len(word) != args.arity:
        raise AinftyError(
            f"--word has {len(word)} letters but --arity is {args.arity}"
        )
    m = s.map_at(args.arity)
    if args.primed and m is not None and not m.primed:
        m = prime(m)
    if m is None:
        print("0")
        return EXIT_PASS
    print(_format_vector(s, apply_map(m, word)))
    return EXIT_PASS


def _cmd_d2(args) -> int:
    s = _load_structure(args)
    word = _parse_word(s, args.word)
    result = d_squared(s.primed_version(), word)
    print(_format_poly(result))
    return EXIT_PASS if result.is_zero() else EXIT_FAIL


_COMMANDS = {
    "verify": _cmd_verify,
    "lemma1": _cmd_lemma1,
    "linfty": _cmd_linfty,
    "apply": _cmd_apply,
    "d2": _cmd_d2,
}


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except AinftyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
