"""Command-line entry point: ``pointfree {classify,booleanize,spectrum,verify,generate}``.

Exit status is 0 when everything passes, 1 when a verification check fails
and 2 for unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io, suite
from .errors import PointfreeError, SuiteFailure
from .frames import booleanize, classify
from .generators import generate_frame
from .spatial import spectrum

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _read_frame(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as e:
        raise PointfreeError(f"cannot read {path}: {e.strerror}") from None
    return io.frame_from_dict(io.loads(text))


def _emit(args, text: str):
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)


def _parse_grid(text: str):
    try:
        return tuple(io.parse_rational(x) for x in text.split(",") if x.strip())
    except PointfreeError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _parse_suites(text: str):
    names = tuple(x.strip() for x in text.split(",") if x.strip())
    unknown = [n for n in names if n not in suite.SUITES]
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown suites: {', '.join(unknown)}")
    return names


def cmd_classify(args) -> int:
    frame = _read_frame(args.frame)
    cls = classify(frame)
    body = {"frame": io.frame_to_dict(frame),
            "properties": dict(sorted(cls.flags.items())),
            "witnesses": {k: [frame.names[a] for a in v]
                          for k, v in sorted(cls.witnesses.items()) if v}}
    if args.format == "structured":
        _emit(args, io.dumps(body))
    else:
        lines = [f"{k}: {'true' if v else 'false'}" for k, v in body["properties"].items()]
        lines += [f"  {k} fails at: {', '.join(v)}" for k, v in body["witnesses"].items()]
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_booleanize(args) -> int:
    boo = booleanize(_read_frame(args.frame))
    _emit(args, io.dumps(io.frame_to_dict(boo.frame)))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    _emit(args, io.dumps(io.space_to_dict(spectrum(_read_frame(args.frame)))))
    return EXIT_OK


def cmd_generate(args) -> int:
    _emit(args, io.dumps(io.frame_to_dict(generate_frame(args.seed, args.max_size))))
    return EXIT_OK


def cmd_verify(args) -> int:
    kw = {"seed": args.seed, "max_frame_size": args.max_size,
          "samples_per_law": args.samples}
    if args.grid is not None:
        kw["breakpoint_grid"] = args.grid
    if args.suites is not None:
        kw["suites"] = args.suites
    config = suite.SuiteConfig(**kw)
    report = suite.run(config, args.check or None)
    text = io.dumps(report.to_dict()) if args.format == "structured" else report.to_text()
    _emit(args, text)
    if not report.passed:
        raise SuiteFailure(report)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pointfree",
                                description="Finite frames, their real functions and law checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="write the result here instead of standard output")
        sp.add_argument("--format", choices=("text", "structured"), default="text")

    for name, fn, help_ in (("classify", cmd_classify, "list the properties a frame has"),
                            ("booleanize", cmd_booleanize, "print the Booleanization of a frame"),
                            ("spectrum", cmd_spectrum, "print the space of primes of a frame")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("frame", help="frame file (JSON), or - for standard input")
        common(sp)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("generate", help="print a random frame")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-size", type=int, default=8)
    common(sp)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("verify", help="run the law checks and report")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-size", type=int, default=8)
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--grid", type=_parse_grid, help="comma-separated rationals, e.g. -1,0,1/2")
    sp.add_argument("--suites", type=_parse_suites,
                    help="comma-separated subset of " + ",".join(suite.SUITES))
    sp.add_argument("--check", action="append", metavar="ID",
                    help="run only this check id (repeatable)")
    common(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SuiteFailure as e:
        print(str(e), file=sys.stderr)
        return EXIT_FAIL
    except PointfreeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
