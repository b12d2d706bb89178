"""``factorkit`` command line.

Exit codes: 0 success, 1 usage error, 2 invalid numeric input,
3 input proven prime.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import bench, rsa
from .errors import NotASemiprime
from .factorizer import Engine, Outcome, factorize
from .natnum import format_natural, parse_natural
from .primality import is_prime

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_PRIME = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="factorkit", description="Trial division and KNJ factorization, textbook RSA.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("trial", help="factor N by trial division")
    p.add_argument("n", metavar="N")

    p = sub.add_parser("knj", help="factor odd N by KNJ descent")
    p.add_argument("n", metavar="N")
    p.add_argument("--trace", action="store_true", help="print every candidate visited")

    p = sub.add_parser("bench", help="compare both engines over a corpus file")
    p.add_argument("--input", required=True, type=Path, help="one decimal modulus per line")
    p.add_argument("--format", choices=bench.FORMATS, default="csv")
    p.add_argument("--no-timing", action="store_true", help="zero the timing columns")
    p.add_argument("--serial", action="store_true", help="run rows one after another")

    p = sub.add_parser("rsa", help="textbook RSA operations")
    rsa_sub = p.add_subparsers(dest="rsa_command", required=True, parser_class=_Parser)

    k = rsa_sub.add_parser("keygen")
    source = k.add_mutually_exclusive_group(required=True)
    source.add_argument("--p")
    source.add_argument("--bits", type=int)
    k.add_argument("--q")
    k.add_argument("--e", default=str(rsa.DEFAULT_E))
    k.add_argument("--out", type=Path)
    k.add_argument("--seed", type=int, help="seed for --bits (default: OS entropy)")

    k = rsa_sub.add_parser("encrypt")
    k.add_argument("--key", required=True, type=Path)
    k.add_argument("--m", required=True)

    k = rsa_sub.add_parser("decrypt")
    k.add_argument("--key", required=True, type=Path)
    k.add_argument("--c", required=True)

    k = rsa_sub.add_parser("crack")
    k.add_argument("--n", required=True)
    k.add_argument("--e", required=True)
    k.add_argument("--method", choices=[e.value for e in Engine], default=Engine.KNJ.value)
    return parser


def _factor(args, out, err) -> int:
    report = factorize(parse_natural(args.n), args.command, trace=getattr(args, "trace", False))
    for entry in report.trace or ():
        divides = int(entry.y_integral) if entry.x_prime else "-"
        print(f"x={format_natural(entry.x)} prime={int(entry.x_prime)} divides={divides}", file=out)
    if report.outcome is Outcome.INVALID:
        need = "at least 2" if report.method is Engine.TRIAL else "odd and at least 3"
        print(f"{args.command}: N must be {need}", file=err)
        return EXIT_INVALID
    if report.outcome is Outcome.PRIME:
        print(f"n={args.n} prime iterations={report.iterations}", file=out)
        return EXIT_PRIME
    print(f"p={format_natural(report.p)} q={format_natural(report.q)} iterations={report.iterations}", file=out)
    return EXIT_OK


def _bench(args, out, err) -> int:
    try:
        text = args.input.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    rows = bench.run_benchmark(bench.read_corpus(text), serial=args.serial)
    records = [r for r in rows if isinstance(r, bench.BenchRecord)]
    failures = [r for r in rows if isinstance(r, bench.BenchError)]
    out.write(bench.render(records, args.format, timing=not args.no_timing))
    for failure in failures:
        print(f"bench: n={format_natural(failure.n)}: {failure.message}", file=err)
    return EXIT_INVALID if failures else EXIT_OK


def _read_key(path: Path) -> dict[str, int]:
    try:
        return rsa.parse_key_record(path.read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _rsa(args, out, err) -> int:
    cmd = args.rsa_command
    if cmd == "keygen":
        e = parse_natural(args.e)
        if args.bits is not None:
            if args.q is not None:
                raise UsageError("--q goes with --p, not --bits")
            rng = random.Random(args.seed) if args.seed is not None else None
            keys = rsa.keygen_random(args.bits, e, rng)
        else:
            if args.q is None:
                raise UsageError("--p needs --q")
            keys = rsa.keygen_from_primes(parse_natural(args.p), parse_natural(args.q), e)
        record = rsa.format_key_record(keys)
        if args.out:
            args.out.write_text(record)
        else:
            out.write(record)
        return EXIT_OK
    if cmd == "encrypt":
        key = rsa.public_key_from_record(_read_key(args.key))
        print(format_natural(rsa.encrypt(parse_natural(args.m), key)), file=out)
        return EXIT_OK
    if cmd == "decrypt":
        key = rsa.private_key_from_record(_read_key(args.key))
        print(format_natural(rsa.decrypt(parse_natural(args.c), key)), file=out)
        return EXIT_OK

    public = rsa.RsaPublicKey(parse_natural(args.n), parse_natural(args.e))
    try:
        result = rsa.crack(public, args.method)
    except NotASemiprime as exc:
        print(f"crack: {exc}", file=err)
        return EXIT_PRIME if is_prime(public.n) else EXIT_INVALID
    out.write(rsa.format_key_record(result.keys))
    print(f"method={args.method} iterations={result.iterations}", file=out)
    return EXIT_OK


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command in ("trial", "knj"):
            return _factor(args, out, err)
        if args.command == "bench":
            return _bench(args, out, err)
        return _rsa(args, out, err)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except ValueError as exc:
        # FactorkitError is a ValueError; plain ones come from keygen preconditions
        print(f"factorkit: {exc}", file=err)
        return EXIT_INVALID


def run() -> None:
    sys.exit(main())
