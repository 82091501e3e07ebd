#!/usr/bin/env python3
"""
Compute b-symbol weight tables, hierarchy bounds and shortened codes of the binary Kasami codes.

Usage:
    python kasami_cli.py table --m M --b B [--format text|json|csv]
    python kasami_cli.py verify --m M [--b-max B]
    python kasami_cli.py bounds --m M --b B
    python kasami_cli.py mb --m M --b B
    python kasami_cli.py shorten --m M --b B

Common flags: --modulus HEX, --workers N, --sample N, --seed S, --max-scan-m M,
--log-file PATH, --verbose. Defaults for the scan flags come from KASAMI_* env
vars (a .env file is honoured).

Exit codes: 0 success, 2 verification mismatch, 64 usage error, 65 scan too large,
1 unexpected failure.
"""

import argparse
import logging
import sys
import time
from typing import Callable, Dict, Optional

from dotenv import load_dotenv

import analysis
import bsymbol
import hierarchy
from gf_tower import build_field, parse_modulus
from kasami_code import KasamiCode
from kasami_errors import KasamiError, ScanTooLarge
from reports import FORMATS, RunReport, render
from scan_config import ScanConfig, ScanConfigError, load_scan_config
from verify_suites import CheckResult, run_verify

load_dotenv()

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_MISMATCH = 2
EXIT_USAGE = 64
EXIT_TOO_LARGE = 65


class UsageError(Exception):
    """Raised by the argument parser instead of exiting."""


class KasamiArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: error: {message}")


def setup_logging(log_file: str, verbose: bool = False) -> None:
    # stdout carries only the report.
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s - %(levelname)s - %(message)s",
        handlers=[
            logging.FileHandler(log_file, encoding="utf-8"),
            logging.StreamHandler(sys.stderr),
        ],
        force=True,
    )


def _build_code(args: argparse.Namespace) -> KasamiCode:
    ctx = build_field(args.m, parse_modulus(args.modulus))
    logger.info("Kasami code m=%s n=%s over modulus %s", ctx.m, ctx.n, ctx.modulus_hex)
    return KasamiCode(ctx)


def _report(args: argparse.Namespace, code: KasamiCode, b: Optional[int]) -> RunReport:
    return RunReport(command=args.command, m=code.m, b=b, modulus_hex=code.ctx.modulus_hex)


def cmd_table(args: argparse.Namespace, config: ScanConfig) -> RunReport:
    code = _build_code(args)
    bsymbol.check_b(args.b, code.length)
    report = _report(args, code, args.b)
    e = analysis.weight_enumerator_scan(
        code, args.b, workers=config.workers, max_scan_m=config.max_scan_m
    )
    report.enumerator = e
    report.result["d_b"] = e.min_nonzero_weight
    closed = analysis.closed_enumerator(code.m, args.b)
    if closed is not None:
        same = closed.items() == e.items()
        report.checks.append(
            CheckResult(
                "closed form",
                same,
                "scan matches" if same else f"closed form {analysis.enumerator_to_text(closed)}",
            )
        )
    problems = analysis.orbit_check(e)
    report.checks.append(
        CheckResult("shift orbits", not problems, problems[0] if problems else "consistent")
    )
    return report


def cmd_verify(args: argparse.Namespace, config: ScanConfig) -> RunReport:
    code = _build_code(args)
    b_max = args.b_max if args.b_max is not None else min(3 * code.m + 1, code.length)
    bsymbol.check_b(b_max, code.length)
    report = _report(args, code, b_max)
    enumerators = analysis.weight_enumerator_scans(
        code, range(1, b_max + 1), workers=config.workers, max_scan_m=config.max_scan_m
    )
    report.result["observed"] = {
        f"d_{b}": e.min_nonzero_weight for b, e in sorted(enumerators.items())
    }
    report.checks.extend(
        run_verify(code, b_max, enumerators, sample=config.sample, seed=config.seed)
    )
    return report


def cmd_bounds(args: argparse.Namespace, config: ScanConfig) -> RunReport:
    code = _build_code(args)
    ctx = code.ctx
    b = args.b
    bsymbol.check_b(b, code.length)
    report = _report(args, code, b)
    low, high = hierarchy.d_b_range(b, code.m)
    if b <= 3 * code.m:
        report.result["generalized_d_b"] = hierarchy.generalized_hierarchy(b, code.m)
    if b <= code.m:
        try:
            report.result["m_of_b"] = hierarchy.resolved_m_of_b(b, ctx)
            report.result["m_of_b_bound"] = hierarchy.lower_bound_thm13(b, ctx)
        except KasamiError as e:
            logger.info("m(b) bound unavailable: %s", e)
            report.result["m_of_b"] = None
            report.result["m_of_b_bound"] = None
    report.result["range"] = [low, high]
    observed = bsymbol.min_bsym_distance(
        code, b, workers=config.workers, max_scan_m=config.max_scan_m
    )
    report.result["observed_d_b"] = observed
    report.checks.append(
        CheckResult("range", low <= observed <= high, f"{low} <= {observed} <= {high}")
    )
    bound = report.result.get("m_of_b_bound")
    if bound is not None:
        report.checks.append(
            CheckResult("m(b) bound", observed <= bound, f"{observed} <= {bound}")
        )
    return report


def cmd_mb(args: argparse.Namespace, config: ScanConfig) -> RunReport:
    code = _build_code(args)
    report = _report(args, code, args.b)
    inv = hierarchy.mb_invariant(args.b, code.ctx)
    report.result["m_of_b"] = inv.m_of_b
    report.result["witness_set"] = [f"{v:#x}" for v in inv.witness_set]
    report.result["conjecture_case"] = code.m == 1 << (args.b - 1)
    return report


def cmd_shorten(args: argparse.Namespace, config: ScanConfig) -> RunReport:
    code = _build_code(args)
    b = args.b
    report = _report(args, code, b)
    (alpha, beta), params = analysis.shorten_minimum(
        code, b, workers=config.workers, max_scan_m=config.max_scan_m
    )
    report.result["seed"] = [f"{alpha:#x}", f"{beta:#x}"]
    report.result["parameters"] = params.as_triple()
    report.result["griesmer_sum"] = params.griesmer_sum
    report.result["griesmer"] = params.is_griesmer
    if hierarchy.Regime.of(b, code.m) is hierarchy.Regime.MEDIUM:
        found = analysis.cap_witness_search(code, b)
        report.result["cap_witness"] = (
            [f"{found.witness[0]:#x}", f"{found.witness[1]:#x}"] if found.found else None
        )
        if found.obstruction_j is not None:
            report.result["cap_obstruction_j"] = found.obstruction_j
    report.checks.append(
        CheckResult("shift rank", params.shift_rank == b, f"rank G_{b}(c0) = {params.shift_rank}")
    )
    return report


COMMANDS: Dict[str, Callable[[argparse.Namespace, ScanConfig], RunReport]] = {
    "table": cmd_table,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
    "mb": cmd_mb,
    "shorten": cmd_shorten,
}


def parse_args(argv=None):
    parser = KasamiArgumentParser(
        description="b-symbol weight hierarchy of the binary Kasami codes"
    )
    common = KasamiArgumentParser(add_help=False)
    common.add_argument("--m", type=int, required=True, help="Subfield degree (q = 2^m)")
    common.add_argument(
        "--format", choices=FORMATS, default="text", help="Report format (default text)"
    )
    common.add_argument("--modulus", help="Primitive polynomial of degree 2m as hex bit-mask")
    common.add_argument("--workers", type=int, help="Worker processes (default CPU count)")
    common.add_argument("--sample", type=int, help="Random pairs for spot checks (0 = all)")
    common.add_argument("--seed", type=int, help="Sampling seed (default 0)")
    common.add_argument("--max-scan-m", type=int, help="Largest m for exhaustive scans (default 6)")
    common.add_argument("--log-file", help="Log file path (default kasami.log)")
    common.add_argument("--verbose", "-v", action="store_true", help="Verbose output")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("table", parents=[common], help="b-symbol weight enumerator").add_argument(
        "--b", type=int, required=True
    )
    sub.add_parser("verify", parents=[common], help="Run every self-check").add_argument(
        "--b-max", type=int, help="Largest b to check (default 3m + 1)"
    )
    for name, text in (
        ("bounds", "Hierarchy bounds against observed d_b"),
        ("mb", "The invariant m(b) and its witness set"),
        ("shorten", "Shorten on a minimum-weight b-symbol support"),
    ):
        sub.add_parser(name, parents=[common], help=text).add_argument(
            "--b", type=int, required=True
        )
    return parser.parse_args(argv)


def main(argv=None):
    try:
        args = parse_args(argv)
        config = load_scan_config(
            workers=args.workers,
            max_scan_m=args.max_scan_m,
            sample=args.sample,
            seed=args.seed,
            log_file=args.log_file,
        )
    except (UsageError, ScanConfigError) as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE

    setup_logging(config.log_file, args.verbose)
    started = time.perf_counter()
    try:
        report = COMMANDS[args.command](args, config)
    except ScanTooLarge as e:
        logger.error("Scan too large: %s", e)
        return EXIT_TOO_LARGE
    except KasamiError as e:
        logger.error("Invalid input: %s", e)
        return EXIT_USAGE
    except KeyboardInterrupt:
        logger.warning("Interrupted by user")
        return EXIT_FAILURE
    except Exception as e:
        logger.error(f"Fatal error: {e}", exc_info=True)
        return EXIT_FAILURE

    print(render(report, args.format))
    logger.info("%s finished in %.2fs", args.command, time.perf_counter() - started)
    return EXIT_OK if report.passed else EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
