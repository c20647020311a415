"""Command-line interface: ``wheeler-ms {validate,lcp,ms}``.

Exit codes: 0 success, 1 domain error (not Wheeler, bad pattern),
2 input error (unreadable or malformed file, bad arguments).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from .automaton import AutomatonError, read_wdfa, validate_wheeler
from .estimator import StringMatcher, WheelerMatcher, check_pattern
from .wlcp import INF, build_lcp_array, format_value

log = logging.getLogger("wheeler_ms")

EXIT_OK, EXIT_DOMAIN, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(path):
    try:
        return read_wdfa(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except AutomatonError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_validate(args, out) -> int:
    A = _load(args.path)
    report = validate_wheeler(A)
    print(report, file=out)
    return EXIT_OK if report else EXIT_DOMAIN


def cmd_lcp(args, out) -> int:
    A = _load(args.path)
    report = validate_wheeler(A)
    if not report:
        print(f"error: {report}", file=sys.stderr)
        return EXIT_DOMAIN
    t0 = time.perf_counter()
    L = build_lcp_array(A)
    log.info("LCP array of %d states built in %.3fs", A.n, time.perf_counter() - t0)
    for k, kind, left, right, value in L.entries():
        if args.format == "json":
            v = None if value == INF else value
            out.write(json.dumps({"index": k, "kind": kind, "left": left,
                                  "right": right, "value": v}) + "\n")
        else:
            out.write(f"{k}\t{kind}\t{left}\t{right}\t{format_value(value)}\n")
    return EXIT_OK


def _read_patterns(args) -> list[str]:
    if args.pattern is not None:
        return list(args.pattern)
    try:
        with open(args.patterns, encoding="utf-8") as fh:
            return fh.read().splitlines()
    except OSError as exc:
        raise InputError(f"{args.patterns}: {exc.strerror}") from None


def _fit(args):
    if args.mode == "string":
        try:
            with open(args.path, encoding="utf-8") as fh:
                text = fh.read().rstrip("\r\n")
        except OSError as exc:
            raise InputError(f"{args.path}: {exc.strerror}") from None
        try:
            return StringMatcher(append_terminator=not args.no_terminator).fit(text)
        except ValueError as exc:
            raise InputError(f"{args.path}: {exc}") from None
    A = _load(args.path)
    method = "brute" if args.mode == "oracle" else "lcp"
    return WheelerMatcher(method=method).fit(A)


def cmd_ms(args, out) -> int:
    patterns = _read_patterns(args)
    t0 = time.perf_counter()
    try:
        matcher = _fit(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    log.info("index built in %.3fs", time.perf_counter() - t0)
    status = EXIT_OK
    for pid, pattern in enumerate(patterns, start=1):
        try:
            check_pattern(pattern)
        except ValueError as exc:
            print(f"error\t{pid}\t{exc}", file=sys.stderr)
            status = EXIT_DOMAIN
            continue
        (stats,) = matcher.transform([pattern])
        for st in stats:
            if args.format == "json":
                out.write(json.dumps({"pattern": pid, "pos": st.pos, "len": st.length,
                                      "l": st.l, "r": st.r}) + "\n")
            else:
                out.write(f"{pid}\t{st.pos}\t{st.length}\t{st.l}\t{st.r}\n")
    log.info("%d patterns processed in %.3fs", len(patterns), time.perf_counter() - t0)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wheeler-ms",
        description="Matching statistics on Wheeler DFAs and strings.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the Wheeler axioms of an automaton file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("lcp", help="print the LCP array of a Wheeler automaton")
    p.add_argument("path")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_lcp)

    p = sub.add_parser("ms", help="compute matching statistics")
    p.add_argument("path", help="automaton file (graph/oracle) or text file (string)")
    p.add_argument("--mode", choices=("graph", "string", "oracle"), default="graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--pattern", action="append", help="inline pattern (repeatable)")
    src.add_argument("--patterns", help="file with one pattern per line")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--no-terminator", action="store_true",
                   help="string mode: do not append '$' to the text")
    p.set_defaults(func=cmd_ms)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
