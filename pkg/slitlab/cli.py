#!/usr/bin/env python
# encoding: utf-8
"""
    slitlab
    -------

    Command line entry point

    :license: MIT, see LICENSE.txt for more details

usage:
    slitlab <subcommand> --config <path> [--out <dir>] [--print-defaults] [--verbose]

Exit codes are 0 on success, 1 if `verify` found a failing check, 2 for
configuration errors and 3 for numerical or any other runtime error, for
instance an output directory that cannot be written. Failures are reported
as a single JSON object on stderr.
"""
from __future__ import absolute_import
import argparse
import json
import sys
from slitlab.adaptors import default_config, load_config
from slitlab.commands import (
    COMMANDS,
    EXIT_CONFIG_ERROR,
    EXIT_NUMERICAL_ERROR,
    run_command,
)
from slitlab.errors import ConfigError


def build_parser():
    parser = argparse.ArgumentParser(
        prog="slitlab",
        description="Numerical two-slit laboratory: stationary fields, "
        "current lines, decompositions and duality diagnostics",
    )
    parser.add_argument("subcommand", choices=COMMANDS)
    parser.add_argument("--config", help="JSON run configuration")
    parser.add_argument("--out", help="output directory, overrides outputDir")
    parser.add_argument(
        "--print-defaults",
        action="store_true",
        help="print the fully defaulted configuration and exit",
    )
    parser.add_argument("--verbose", action="store_true")
    return parser


def _fail(status, error, **fields):
    document = {"error": error.__class__.__name__, "message": str(error)}
    document.update(fields)
    sys.stderr.write(json.dumps(document, sort_keys=True) + "\n")
    return status


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.config is None:
            if not args.print_defaults:
                raise ConfigError("--config", "is required")
            config = default_config("gaussian")
        else:
            try:
                with open(args.config, "rb") as handle:
                    text = handle.read()
            except (IOError, OSError) as error:
                raise ConfigError("--config", "cannot read file ({0})".format(error))
            config = load_config(text)
        if args.print_defaults:
            print(config.to_json(indent=2))
            return 0
        status, results = run_command(
            args.subcommand, config, out_dir=args.out, verbose=args.verbose
        )
    except ConfigError as error:
        return _fail(EXIT_CONFIG_ERROR, error, field=error.field, reason=error.reason)
    except Exception as error:
        return _fail(EXIT_NUMERICAL_ERROR, error)
    return status


if __name__ == "__main__":
    sys.exit(main())
