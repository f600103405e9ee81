#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Command-line entry point.

Usage::

    equidist --config run.yaml [--out DIR] [--threads K] [--seed S]

Exit codes: 0 success, 1 library error, 2 unreadable input, 3 invalid
configuration, 4 infeasible method.
"""

# Standard imports
import argparse
import logging
import sys
from typing import List, Optional

# Application imports
from .. import __version__
from ..exception import (
    ConfigError,
    EquidistError,
    InputError,
    SpectralInfeasibleError,
)
from .config import RunConfig, load_config
from .corollaries import report_corollaries
from .output import write_report
from .runner import run_bound, run_discrepancy, run_energy, run_paircorr, run_profile

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INPUT = 2
EXIT_CONFIG = 3
EXIT_INFEASIBLE = 4

_HANDLERS = {
    "energy": run_energy,
    "profile": run_profile,
    "discrepancy": run_discrepancy,
    "paircorr": run_paircorr,
    "bound": run_bound,
    "report": report_corollaries,
}


def run_config(config: RunConfig) -> dict:
    """ Executes a command and writes its report files.

    Args:
        config (RunConfig): The run.

    Returns:
        The JSON summary.
    """

    logger.info("Running %s on %s for N in %s", config.command, config.label,
                list(config.n_schedule))
    rows, summary = _HANDLERS[config.command](config)
    summary = dict(summary, command=config.command, input=config.label,
                   n_schedule=list(config.n_schedule))
    write_report(config.output, config.command, rows, summary)
    return summary


# end run_config()


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """ Parses the command-line flags """

    parser = argparse.ArgumentParser(
        prog="equidist",
        description="Heat-kernel energy, discrepancy and pair-correlation "
                    "diagnostics for point sequences.")
    parser.add_argument("--config", required=True,
                        help="YAML or JSON run configuration")
    parser.add_argument("--out", default=None, help="Output directory")
    parser.add_argument("--threads", type=int, default=None,
                        help="Worker threads (default: physical cores)")
    parser.add_argument("--seed", type=int, default=None,
                        help="Seed for the random generator kinds")
    parser.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="Logging level")
    parser.add_argument("--version", action="version",
                        version=f"equidist {__version__}")
    return parser.parse_args(argv)


# end parse_args()


def setup_logging(level: str):
    """ Configures the root logger once """

    logging.basicConfig(level=getattr(logging, level),
                        stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")


# end setup_logging()


def main(argv: Optional[List[str]] = None) -> int:
    """ Runs the command-line interface and returns the exit code """

    args = parse_args(argv)
    setup_logging(args.log_level)

    try:
        config = load_config(args.config, {"output": args.out,
                                           "threads": args.threads,
                                           "seed": args.seed})
        run_config(config)
    except ConfigError as exc:
        logger.error("Invalid configuration: %s", exc)
        return EXIT_CONFIG
    except InputError as exc:
        logger.error("Unreadable input: %s", exc)
        return EXIT_INPUT
    except SpectralInfeasibleError as exc:
        logger.error("%s", exc)
        return EXIT_INFEASIBLE
    except (EquidistError, OSError) as exc:
        logger.error("Run failed: %s", exc)
        return EXIT_ERROR
    return EXIT_OK


# end main()


def run():
    """ Console-script entry point """
    sys.exit(main(sys.argv[1:]))


# end run()


if __name__ == "__main__":
    run()
