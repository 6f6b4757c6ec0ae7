"""Command-line interface.

Exit codes: 0 ok, 1 negative answer (``equiv``), 2 usage or parse error,
3 capacity exceeded, 4 mass audit failure.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import gf3
from .classify import Classifier, ClassifyConfig, IncompleteClassification
from .code import load_code, maximal_dimension, minimum_weight
from .equivalence import are_equivalent, canonical_data
from .errors import AuditError, CapacityError, DomainError, ParseError
from .mass import count_T, lower_bound

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_CAPACITY, EXIT_AUDIT = 0, 1, 2, 3, 4


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None,
                        help="max dimension for codeword enumeration (default 16 or $TERNCODE_CAP)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="terncode", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common],
                       help="classify self-orthogonal codes up to equivalence")
    c.add_argument("-n", type=int, required=True)
    c.add_argument("-k", type=int)
    c.add_argument("--maximal", action="store_true", help="use the maximal dimension for n")
    c.add_argument("--out", type=Path, default=Path("."), help="directory for manifests")
    c.add_argument("--resume", action="store_true", help="reuse manifests found in --out")
    c.add_argument("--threads", type=int, default=1)

    for name, text in (("mass", "number of self-orthogonal [n,k] codes"),
                       ("bound", "lower bound on the number of classes")):
        m = sub.add_parser(name, parents=[common], help=text)
        m.add_argument("-n", type=int, required=True)
        m.add_argument("-k", type=int, required=True)

    for name, text in (("canon", "print the canonical certificate (hex)"),
                       ("aut", "print |Aut(C)|"),
                       ("minwt", "print the minimum weight")):
        m = sub.add_parser(name, parents=[common], help=text)
        m.add_argument("code", type=Path)

    e = sub.add_parser("equiv", parents=[common], help="test two codes for equivalence")
    e.add_argument("code_a", type=Path)
    e.add_argument("code_b", type=Path)
    return p


def _classify(args, parser) -> int:
    if args.maximal == (args.k is not None):
        parser.error("classify needs exactly one of -k or --maximal")
    if args.n < 1 or args.threads < 1:
        parser.error("-n and --threads must be positive")
    k = maximal_dimension(args.n) if args.maximal else args.k
    if not 0 <= k <= args.n:
        parser.error(f"-k must lie in 0..{args.n}")
    cfg = ClassifyConfig(threads=args.threads, out_dir=args.out, resume=args.resume)
    cl = Classifier(cfg)
    try:
        m = cl.maximal(args.n) if args.maximal else cl.so(args.n, k)
    except IncompleteClassification as exc:
        m = exc.manifest
        print(f"classes={len(m)} residual={m.audit.residual}")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_AUDIT
    print(f"classes={len(m)} residual={m.audit.residual}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(message)s")
    if args.cap is not None:
        if args.cap < 0:
            parser.error("--cap must be non-negative")
        gf3.set_cap(args.cap)
    try:
        if args.command == "classify":
            return _classify(args, parser)
        if args.command == "mass":
            print(count_T(args.n, args.k))
            return EXIT_OK
        if args.command == "bound":
            print(lower_bound(args.n, args.k))
            return EXIT_OK
        if args.command == "equiv":
            a, b = load_code(args.code_a), load_code(args.code_b)
            same = are_equivalent(a, b)
            print("equivalent" if same else "inequivalent")
            return EXIT_OK if same else EXIT_NEGATIVE
        code = load_code(args.code)
        if args.command == "minwt":
            print(minimum_weight(code))
        elif code.k == 0:
            raise ParseError("the zero code has no certificate or weight set")
        elif args.command == "canon":
            print(canonical_data(code).certificate.hex())
        else:
            print(canonical_data(code).aut.order)
        return EXIT_OK
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except AuditError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_AUDIT
    except (DomainError, ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        gf3.set_cap(None)


if __name__ == "__main__":
    sys.exit(main())
