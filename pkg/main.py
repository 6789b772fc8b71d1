from __future__ import annotations

import argparse
import sys
from logging import Logger
from typing import List, Optional, NoReturn

from src.analysis.report import Report
from src.analysis.workbench import Workbench
from src.config.constants import ExitCode
from src.helpers.workbench_helper import init
from src.utils.exceptions import (
    ClaimFailed,
    GroupSpecParseError,
    KernelSplitError,
    LieParamsError,
    OrderBoundExceeded,
)
from src.utils.logger import set_console_level


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kernelsplit",
        description="Aut-split groups, anti-solvable kernels and neutral liens at desk scale.",
    )
    parser.add_argument("--json", action="store_true", help="emit the JSON report instead of a table")
    parser.add_argument("--timeout", type=float, default=None, help="search timeout in seconds (0 = none)")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="only warnings on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="order, composition factors, Aut/Out and aut-split verdict")
    analyze.add_argument("spec", help='group spec, e.g. A5, "A5 x A5", "PSL(2,7)", "A5 wr C2"')

    lie = sub.add_parser("lie", help="closed-form aut-split verdict for a group of Lie type")
    lie.add_argument("family", help="A, B, C, D, E6, E7, E8, F4, G2, 2A, 2B2, 2D, 3D4, 2E6, 2F4, 2G2")
    lie.add_argument("rank", help="rank l, or '-' for the exceptional families")
    lie.add_argument("p", type=int)
    lie.add_argument("m", type=int)

    lien = sub.add_parser("lien", help="neutrality of a lien (F, Gamma, kappa)")
    lien.add_argument("--f", dest="f_spec", required=True, help="kernel group spec")
    lien.add_argument("--gamma", dest="gamma_spec", required=True, help="finite Galois-type group spec")
    lien.add_argument("--kappa", default="", help="generator:label pairs, e.g. 1:s or 1:swap,2:o3")

    reproduce = sub.add_parser("reproduce", help="reproduce every claim; nonzero exit on failure")
    reproduce.add_argument("--workers", type=int, default=None, help="threads for the claim sweep")
    return parser


def _emit(report: Report, as_json: bool) -> None:
    print(report.to_json() if as_json else report.render())


def _dispatch(args: argparse.Namespace, workbench: Workbench) -> Report:
    if args.command == "analyze":
        return workbench.cmd_analyze(args.spec)
    if args.command == "lie":
        return workbench.cmd_lie(args.family, args.rank, args.p, args.m)
    if args.command == "lien":
        return workbench.cmd_lien(args.f_spec, args.gamma_spec, args.kappa)
    return workbench.cmd_reproduce(workers=args.workers)


def run(argv: Optional[List[str]] = None) -> int:
    args = _parser().parse_args(argv)
    if args.verbose:
        set_console_level("DEBUG")
    elif args.quiet:
        set_console_level("WARNING")

    log: Logger
    log, workbench = init(search_timeout=args.timeout)
    try:
        report = _dispatch(args, workbench)
    except (GroupSpecParseError, LieParamsError) as e:
        log.error(f"Invalid input: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return ExitCode.PARSE_ERROR
    except OrderBoundExceeded as e:
        log.error(f"Bound exceeded: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return ExitCode.BOUND_EXCEEDED
    except ClaimFailed as e:
        log.error(f"Claim failed: {e}")
        report = e.report
        if report is not None:
            _emit(report, args.json)
        print(f"Error: {e}", file=sys.stderr)
        return ExitCode.CLAIM_FAILED
    except KernelSplitError as e:
        log.error(f"{type(e).__name__}: {e}", exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        return ExitCode.ERROR
    except Exception as e:
        log.error(f"Unexpected error: {e}", exc_info=True)
        print(f"Unexpected error: {e}", file=sys.stderr)
        return ExitCode.ERROR

    _emit(report, args.json)
    return ExitCode.SUCCESS


def main() -> NoReturn:
    sys.exit(int(run()))


if __name__ == "__main__":
    main()
