"""Command-line interface: run, validate, and list scenarios.

Exit codes: 0 success, 2 bad configuration, 3 numerical-contract failure,
4 enumeration or size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import CapExceededError, ConfigError, NumericalContractError
from .scenarios import SCENARIO_NAMES, read_config, run_scenario, validate_config


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qreduce",
        description="Reduction-postulate scenario runner; emits CSV data and JSON summaries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_parser = sub.add_parser("run", help="execute a scenario config")
    run_parser.add_argument("config", help="path to a JSON config document")
    run_parser.add_argument("--out-dir", default=None, help="directory prefixed to output paths")
    run_parser.add_argument("--seed", type=int, default=None, help="override the config seed")

    validate_parser = sub.add_parser("validate", help="check a config without running it")
    validate_parser.add_argument("config", help="path to a JSON config document")

    sub.add_parser("list-scenarios", help="print the available scenario names")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "list-scenarios":
            for name in SCENARIO_NAMES:
                print(name)
            return 0
        if args.command == "validate":
            validate_config(read_config(args.config))
            print(f"{args.config}: OK")
            return 0
        payload = run_scenario(
            read_config(args.config), out_dir=args.out_dir, seed_override=args.seed
        )
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except NumericalContractError as exc:
        print(f"numerical contract violated: {exc}", file=sys.stderr)
        return 3
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
