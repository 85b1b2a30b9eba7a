"""Command-line front end: ``sweep``, ``verify`` and ``figure``.

Exit status: 0 success, 1 a verification check failed, 2 configuration
error (bad config, unknown suite or figure), 3 I/O error.
"""

import argparse
import sys
from typing import List, Optional

from .config import ConfigError, parse_config
from .figures import FIGURES, write_figure
from .sweep import sweep_records, write_csv
from .verify import DEFAULT_SEED, SUITES, run_suites

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG = 2
EXIT_IO = 3


def _fail(code: int, message: str) -> int:
    print(f"abrealism: error: {message}", file=sys.stderr)
    return code


def cmd_sweep(args) -> int:
    try:
        with open(args.config, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        return _fail(EXIT_IO, f"cannot read config {args.config}: {exc.strerror}")
    try:
        config = parse_config(text)
        records = sweep_records(config)
    except ConfigError as exc:
        return _fail(EXIT_CONFIG, f"{args.config}: {exc}")
    out = args.out or config.csv
    if not out:
        return _fail(EXIT_CONFIG, "no output path: pass --out or set [output] csv")
    try:
        write_csv(records, out)
    except OSError as exc:
        return _fail(EXIT_IO, f"cannot write {out}: {exc.strerror}")
    print(f"wrote {len(records)} rows to {out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = args.suite or ["all"]
    try:
        checks = run_suites(names, seed=args.seed)
    except KeyError as exc:
        return _fail(EXIT_CONFIG, exc.args[0])
    for check in checks:
        print(check.line())
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed (seed {args.seed})")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def cmd_figure(args) -> int:
    if args.name not in FIGURES:
        return _fail(EXIT_CONFIG, f"unknown figure {args.name!r}; choose from {', '.join(FIGURES)}")
    try:
        paths = write_figure(args.name, args.outdir, plot=args.plot, count=args.count)
    except OSError as exc:
        return _fail(EXIT_IO, f"cannot write into {args.outdir}: {exc.strerror or exc}")
    except ImportError:
        return _fail(EXIT_CONFIG, "--plot needs matplotlib (pip install 'artifact[plot]')")
    for path in paths:
        print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abrealism",
        description="Entropic realism of interferometer observables under classical and quantized flux.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="evaluate the measures of a config file over a theta grid")
    p.add_argument("--config", required=True, help="INI run configuration")
    p.add_argument("--out", help="CSV output path (default: [output] csv of the config)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run property and oracle checks")
    p.add_argument("suite", nargs="*", help=f"all (default) or any of: {', '.join(SUITES)}")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for the randomised suites")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure", help="regenerate the data behind a figure panel")
    p.add_argument("name", help=", ".join(FIGURES))
    p.add_argument("--outdir", required=True)
    p.add_argument("--plot", action="store_true", help="also write an SVG plot")
    p.add_argument("--count", type=int, default=1001, help="grid points (default 1001)")
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors, which is our config code too
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
