# The MIT License (MIT)
# Copyright © 2025 Zetamoments

# Permission is hereby granted, free of charge, to any person obtaining a copy of this software and associated
# documentation files (the “Software”), to deal in the Software without restriction, including without limitation
# the rights to use, copy, modify, merge, publish, distribute, sublicense, and/or sell copies of the Software,
# and to permit persons to whom the Software is furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in all copies or substantial portions of
# the Software.

# THE SOFTWARE IS PROVIDED “AS IS”, WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO
# THE WARRANTIES OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL
# THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION
# OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
# DEALINGS IN THE SOFTWARE.

import os
import argparse
from typing import Any, Callable, Optional
from dotenv import load_dotenv
from loguru import logger
import zetamoments.utils.constants as CONST
from zetamoments.numquad.config import QuadConfig

FORMATS = ("markdown", "csv", "json")


def env_default(name: str, fallback: Any, cast: Callable[[str], Any] = str) -> Any:
    """
    Default for a flag, taken from ZETAMOMENTS_<NAME> when set.

    Explicit flags still win since this only seeds argparse defaults.
    """
    raw = os.environ.get(f"{CONST.ENV_PREFIX}{name}")
    if raw is None or raw == "":
        return fallback
    try:
        return cast(raw)
    except ValueError as e:
        logger.warning(f"Ignoring {CONST.ENV_PREFIX}{name}={raw!r}: {e}")
        return fallback


def add_output_args(parser: argparse.ArgumentParser):
    """
    Adds output formatting arguments.
    """
    parser.add_argument(
        "--format",
        choices=FORMATS,
        default=env_default("FORMAT", "markdown"),
        help="Output format.",
    )
    parser.add_argument(
        "--digits",
        type=int,
        default=env_default("DIGITS", CONST.DEFAULT_DIGITS, int),
        help="Significant digits of printed decimal values.",
    )
    parser.add_argument(
        "--out",
        type=str,
        default=env_default("OUT", None),
        help="Also write the JSON document to this path.",
    )


def add_logging_args(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--log-level",
        type=str,
        default=env_default("LOG_LEVEL", "WARNING"),
        help="Log level of the stderr sink.",
    )
    parser.add_argument(
        "--events-log",
        type=str,
        default=env_default("EVENTS_LOG", None),
        help="Directory receiving a rotating events.log with one line per verification record.",
    )


def add_quad_args(parser: argparse.ArgumentParser):
    """
    Adds the numerical integration arguments mapped onto QuadConfig.
    """
    parser.add_argument(
        "--T",
        dest="cutoff",
        type=float,
        default=env_default("T", CONST.DEFAULT_CUTOFF, float),
        help="Truncation point of the critical-line integrals.",
    )
    parser.add_argument(
        "--panel-order",
        type=int,
        default=env_default("PANEL_ORDER", CONST.DEFAULT_PANEL_ORDER, int),
        help="Gauss-Legendre nodes per panel.",
    )
    parser.add_argument(
        "--panel-count",
        type=int,
        default=env_default("PANEL_COUNT", CONST.DEFAULT_PANEL_COUNT, int),
        help="Uniform panels covering [1/2, 50].",
    )
    parser.add_argument(
        "--zeta-terms",
        type=int,
        default=env_default("ZETA_TERMS", CONST.DEFAULT_ZETA_TERMS, int),
        help="Minimum Euler-Maclaurin main-sum length.",
    )
    parser.add_argument(
        "--zeta-corrections",
        type=int,
        default=env_default("ZETA_CORRECTIONS", CONST.DEFAULT_ZETA_CORRECTIONS, int),
        help="Bernoulli correction terms in Euler-Maclaurin.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=env_default("THREADS", 0, int),
        help="Worker processes for quadrature panels (0 = one per CPU).",
    )
    parser.add_argument(
        "--precision",
        type=int,
        default=env_default("PRECISION", CONST.DEFAULT_PRECISION, int),
        help="Internal working precision in decimal digits.",
    )


def add_tol_arg(parser: argparse.ArgumentParser, default: float):
    parser.add_argument(
        "--tol",
        type=float,
        default=env_default("TOL", default, float),
        help="Tolerance of the checks.",
    )


def quad_config(args: argparse.Namespace, tol: Optional[float] = None) -> QuadConfig:
    """Builds a QuadConfig from parsed flags; invalid values raise ValueError."""
    return QuadConfig(
        cutoff=args.cutoff,
        panel_order=args.panel_order,
        panel_count=args.panel_count,
        zeta_terms=args.zeta_terms,
        zeta_corrections=args.zeta_corrections,
        tol=tol if tol is not None else CONST.DEFAULT_TOL,
        precision=args.precision,
        threads=args.threads,
    )


def load_environment() -> None:
    load_dotenv()
