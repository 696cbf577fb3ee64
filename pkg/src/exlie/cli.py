"""Command line interface.

    exlie verify <suite> [--jacobi-samples N] [--seed S] [--format json|text]
                 [--parallel K] [--cache-dir PATH] [--exhaustive]
                 [--figures DIR]

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage error.
The default cache directory comes from EXLIE_CACHE_DIR; caching is disabled
when neither the flag nor the variable is set.
"""

from __future__ import annotations

import argparse
import sys

from .report import emit_report
from .suites import SUITES, SuiteConfig, run_suite


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="exlie",
        description="Exact verification suites for the exceptional Lie algebra tower.",
    )
    sub = ap.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run a verification suite and print the report")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--jacobi-samples", type=int, default=10000, metavar="N",
                   help="seeded random Jacobi triples in the e8 suite (default 10000)")
    v.add_argument("--seed", type=int, default=0, metavar="S")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--parallel", type=int, default=1, metavar="K",
                   help="worker processes for the heavy e8 scans (default 1)")
    v.add_argument("--cache-dir", default=None, metavar="PATH",
                   help="basis cache directory (default: $EXLIE_CACHE_DIR, else disabled)")
    v.add_argument("--exhaustive", action="store_true",
                   help="check Jacobi on every basis triple instead of sampling")
    v.add_argument("--figures", default=None, metavar="DIR",
                   help="also render report figures (PNG) into DIR")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = SuiteConfig(
        suite=args.suite,
        jacobi_samples=args.jacobi_samples,
        seed=args.seed,
        parallelism=args.parallel,
        cache_dir=args.cache_dir,
        format=args.format,
        exhaustive=args.exhaustive,
        figures_dir=args.figures,
    )
    try:
        config.validate()
    except ValueError as exc:
        print(f"exlie: {exc}", file=sys.stderr)
        return 2
    report = run_suite(config)
    sys.stdout.write(emit_report(report, config.format))
    if args.figures:
        from .figures import render_figures

        for path in render_figures(report, args.figures):
            print(f"exlie: wrote {path}", file=sys.stderr)
    return report.exit_code()


if __name__ == "__main__":
    raise SystemExit(main())
