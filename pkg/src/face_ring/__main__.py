"""Main entry point - Run commands with python -m face_ring."""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__
from .cli.job import Command, JobConfig, OutputFormat
from .cli.runner import EXIT_INPUT_ERROR, run
from .error_handling.errors import InputError
from .macx.poincare import DegreeVector


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="face_ring",
        description="Möbius transforms, Betti numbers and moment-angle complexes of simplicial complexes",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("command", choices=[c.value for c in Command], help="What to compute")
    parser.add_argument("input", nargs="?", type=Path, help="Complex file (YAML or JSON)")
    parser.add_argument("--field", help="GF2 or Rational (default: computation.field, GF2)")
    parser.add_argument("--kappa", help="Per-vertex degrees for poincare, e.g. 1,1,1")
    parser.add_argument("--policy", help="Compression tie-break: smallest or greedy (default: computation.policy)")
    parser.add_argument("--subgroup", type=Path, help="Subgroup file for freeness / hc-verify")
    parser.add_argument("--m", type=int, help="Ground-set size for sweep")
    parser.add_argument("--exhaustive", action="store_true", help="Sweep every complex on [m]")
    parser.add_argument("--random", type=int, default=0, metavar="N", help="Sweep N random complexes")
    parser.add_argument("--seed", type=int, help="Seed of the random sweep")
    parser.add_argument(
        "--format",
        default=OutputFormat.TEXT.value,
        choices=[f.value for f in OutputFormat],
        help="Report format (default: text)",
    )
    parser.add_argument("--config-dir", type=Path, default=Path("config"), help="Configuration directory")
    parser.add_argument("--verbose", action="store_true", help="DEBUG logging on stderr")
    parser.add_argument("--version", action="version", version=f"face_ring {__version__}")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        job = JobConfig(
            command=Command(args.command),
            input_path=args.input,
            field=args.field,
            kappa=DegreeVector.parse(args.kappa) if args.kappa else None,
            subgroup_path=args.subgroup,
            policy=args.policy,
            output_format=OutputFormat(args.format),
            m=args.m,
            exhaustive=args.exhaustive,
            random_count=args.random,
            seed=args.seed,
            config_dir=args.config_dir,
            verbose=args.verbose,
        )
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    return run(job)


if __name__ == "__main__":
    sys.exit(main())
