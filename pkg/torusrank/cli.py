"""Command line interface.

    python -m torusrank expand --d 7 --format json
    python -m torusrank complexity --d 83 --window 5000
    python -m torusrank rank --curve-b 4
    python -m torusrank table1 --format csv

Exit status is 0 on success, 1 on a validation error and 2 when the table
sweep finds a mismatch (argparse usage errors also exit with 2).
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from torusrank.cfrac.equivalence import isomorphic_tori, morita_equivalent
from torusrank.cfrac.expansion import convergents, expand
from torusrank.cfrac.surd import canonicalize
from torusrank.complexity.estimator import arithmetic_complexity
from torusrank.config import Settings, get_settings
from torusrank.errors import RadicandTooLarge, TorusRankError, TorusRankValidationError
from torusrank.euler.system import euler_report
from torusrank.models.complexity import ComplexityReport, SearchConfig
from torusrank.models.rank import GeneratorSet, IrrationalAngle, RankReport, RootOfUnity
from torusrank.models.surd import QuadraticIrrational
from torusrank.rank.bridge import dimension_group_rank, rank_report
from torusrank.rank.classnumber import class_number_imag_quadratic
from torusrank.rank.curves import cm_curve, explicit_curve, rational_family
from torusrank.rank.table1 import load_table1_windows, table1_reproduce
from torusrank.store.cache import ExpansionCache
from torusrank.store.serialize import (
    FORMATS,
    convergents_csv,
    expansion_csv,
    expansion_json,
    mapping_csv,
    mapping_text,
    table1_csv,
    table1_text,
    to_json,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MISMATCH = 2

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a", type=int, default=0, help="rational part numerator")
    common.add_argument("--b", type=int, default=1, help="coefficient of sqrt(d)")
    common.add_argument("--c", type=int, default=1, help="denominator")
    common.add_argument("--d", type=int, help="square-free radicand")
    common.add_argument("--conjugate", action="store_true", help="use (a - b sqrt(d))/c")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--cache", type=Path, help="expansion cache (default TORUSRANK_CACHE)")
    common.add_argument("--verify-cache", action="store_true", help="re-expand cache hits and fail on a bad record")
    common.add_argument("--log-level", help="DEBUG, INFO, WARNING, ERROR")
    common.add_argument("--workers", type=int, help="threads for the window scan")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--window", type=int, help="largest radicand b^2 x scanned")
    search.add_argument("--single-thread", action="store_true", help="scan on one thread")

    second = argparse.ArgumentParser(add_help=False)
    second.add_argument("--a2", type=int, default=0)
    second.add_argument("--b2", type=int, default=1)
    second.add_argument("--c2", type=int, default=1)
    second.add_argument("--d2", type=int, required=True)
    second.add_argument("--conjugate2", action="store_true")

    parser = argparse.ArgumentParser(prog="torusrank", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("expand", parents=[common], help="continued fraction of (a + b sqrt(d))/c")
    conv = sub.add_parser("convergents", parents=[common], help="convergents A_i/B_i")
    conv.add_argument("--count", type=int, required=True)
    sub.add_parser("euler", parents=[common], help="Euler equation system")
    sub.add_parser("complexity", parents=[common, search], help="arithmetic complexity estimate")
    sub.add_parser("morita", parents=[common, second], help="Morita equivalence of two tori")
    sub.add_parser("iso", parents=[common, second], help="isomorphism of two tori")

    rank = sub.add_parser("rank", parents=[common, search], help="rank estimate for a curve")
    curve = rank.add_mutually_exclusive_group()
    curve.add_argument("--curve-b", type=int, help="E_b(Q) with b >= 3")
    curve.add_argument("--cm-p", type=int, help="Q-curve E_CM^(-p,1)")

    table = sub.add_parser("table1", parents=[common, search], help="reproduce the Q-curve table")
    table.add_argument("--windows", type=Path, help="per-prime window override file")

    cls = sub.add_parser("class-number", parents=[common], help="class number of Q(sqrt(-p))")
    cls.add_argument("--p", type=int, required=True)

    dim = sub.add_parser("dimgroup", parents=[common], help="rank of a dimension group")
    dim.add_argument("--root", action="append", default=[], metavar="P/Q", help="root of unity exp(2 pi i P/Q)")
    dim.add_argument("--irrational", action="append", default=[], metavar="A,B,C,D",
                     help="irrational angle (A + B sqrt(D))/C")
    return parser


def configure_logging(level: str) -> None:
    logging.basicConfig(level=level.upper(), format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger("torusrank").setLevel(level.upper())


def _theta(args: argparse.Namespace, settings: Settings, suffix: str = "") -> QuadraticIrrational:
    d = getattr(args, "d" + suffix)
    if d is None:
        raise TorusRankValidationError(f"--d{suffix} is required", field="d" + suffix)
    if d > settings.max_radicand:
        raise RadicandTooLarge(d, settings.max_radicand)
    return canonicalize(
        getattr(args, "a" + suffix),
        getattr(args, "b" + suffix),
        getattr(args, "c" + suffix),
        d,
        conjugate=getattr(args, "conjugate" + suffix)
    )


def _search_config(args: argparse.Namespace, settings: Settings) -> SearchConfig:
    workers = 1 if getattr(args, "single_thread", False) else (args.workers or settings.workers)
    window = getattr(args, "window", None) or settings.window_max
    return SearchConfig(window_max=window, workers=workers)


def _cache(args: argparse.Namespace, settings: Settings) -> ExpansionCache:
    verify = args.verify_cache or settings.cache_verify
    return ExpansionCache(args.cache or settings.cache_path, verify_hits=verify)


def _parse_root(text: str) -> RootOfUnity:
    try:
        p, q = (int(part) for part in text.split("/"))
    except ValueError as e:
        raise TorusRankValidationError(f"root must look like P/Q, got {text!r}", field="root", value=text) from e
    return RootOfUnity(p=p, q=q)


def _parse_irrational(text: str) -> IrrationalAngle:
    try:
        a, b, c, d = (int(part) for part in text.split(","))
    except ValueError as e:
        raise TorusRankValidationError(
            f"irrational must look like A,B,C,D, got {text!r}", field="irrational", value=text
        ) from e
    return IrrationalAngle(omega=canonicalize(a, b, c, d))


def _complexity_summary(report: ComplexityReport) -> Dict[str, Any]:
    diag = report.diagnostics
    return {
        "theta": str(report.theta),
        "expansion": str(report.expansion),
        "n": report.n,
        "c": report.c,
        "independence": report.independence,
        "fiber_dimension": report.fiber_dimension,
        "lines": len(report.witness_lines),
        "members": len(report.members_used),
        "window_max": diag.window_max,
        "window_below_base": diag.window_below_base,
        "shape_matches": diag.shape_matches,
        "skipped_non_square_free": diag.skipped_non_square_free,
    }


def _rank_summary(report: RankReport) -> Dict[str, Any]:
    return {
        "theta": str(report.theta),
        "expansion": str(report.expansion),
        "m": report.m,
        "n": report.n,
        "c": report.c,
        "rank_estimate": report.rank_estimate,
        "rank_bound": report.rank_bound,
        "class_number": report.class_number,
        "rank_full": report.rank_full,
        "twist_n": report.twist_n,
        "twist_rank_estimate": report.twist_rank_estimate,
        "twist_rank_bound": report.twist_rank_bound,
    }


def _render(fmt: str, model: Any, summary: Dict[str, Any]) -> str:
    if fmt == "json":
        return to_json(model) + "\n"
    if fmt == "csv":
        return mapping_csv(summary)
    return mapping_text(summary)


def _dispatch(args: argparse.Namespace, settings: Settings) -> Tuple[int, str]:
    fmt = args.format
    command = args.command

    if command == "expand":
        theta = _theta(args, settings)
        exp = _cache(args, settings).expand(theta)
        if fmt == "json":
            return EXIT_OK, expansion_json(exp) + "\n"
        if fmt == "csv":
            return EXIT_OK, expansion_csv(exp)
        return EXIT_OK, f"{theta} = {exp}\nvalue: {theta.value_float():.6f}\n"

    if command == "convergents":
        if args.count < 1:
            raise TorusRankValidationError("--count must be >= 1", field="count", value=str(args.count))
        table = convergents(expand(_theta(args, settings)), args.count)
        if fmt == "json":
            return EXIT_OK, table.model_dump_json() + "\n"
        if fmt == "csv":
            return EXIT_OK, convergents_csv(table)
        lines = [f"{i}: {k}  {A}/{B}" for i, (k, A, B) in enumerate(zip(table.entries, table.A, table.B))]
        return EXIT_OK, "\n".join(lines) + "\n"

    if command == "euler":
        theta = _theta(args, settings)
        report = euler_report(theta, expand(theta))
        system = report.system
        summary = {
            "theta": str(theta),
            "variables": " ".join(system.variables),
            "c1": system.c1,
            "c2": system.c2,
            "scale": str(system.scale),
            "equation_1": str(system.equations[0]),
            "equation_2": str(system.equations[1]),
            "equation_3": str(system.equations[2]),
            "linear_form": str(report.linear_form),
            "branch": "+4" if report.branch > 0 else "-4",
            "rational_dimension_upper_bound": report.rational_dimension_upper_bound,
            "full_system_rank": report.full_system_rank,
        }
        return EXIT_OK, _render(fmt, report, summary)

    if command == "complexity":
        theta = _theta(args, settings)
        report = arithmetic_complexity(theta, _search_config(args, settings), cache=_cache(args, settings))
        return EXIT_OK, _render(fmt, report, _complexity_summary(report))

    if command in ("morita", "iso"):
        t1, t2 = _theta(args, settings), _theta(args, settings, "2")
        key = "morita_equivalent" if command == "morita" else "isomorphic"
        value = morita_equivalent(t1, t2) if command == "morita" else isomorphic_tori(t1, t2)
        data = {"theta1": str(t1), "theta2": str(t2), key: value}
        return EXIT_OK, _render(fmt, data, data)

    if command == "rank":
        if args.curve_b is not None:
            desc = rational_family(args.curve_b)
        elif args.cm_p is not None:
            desc = cm_curve(args.cm_p)
        else:
            desc = explicit_curve(_theta(args, settings))
        report = rank_report(desc, _search_config(args, settings), cache=_cache(args, settings))
        return EXIT_OK, _render(fmt, report, _rank_summary(report))

    if command == "table1":
        windows = load_table1_windows(args.windows or settings.table1_windows_path)
        report = table1_reproduce(_search_config(args, settings), windows, cache=_cache(args, settings))
        status = EXIT_OK if report.all_match else EXIT_MISMATCH
        if fmt == "json":
            return status, report.model_dump_json() + "\n"
        if fmt == "csv":
            return status, table1_csv(report)
        return status, table1_text(report)

    if command == "class-number":
        data = {"p": args.p, "class_number": class_number_imag_quadratic(args.p)}
        return EXIT_OK, _render(fmt, data, data)

    if command == "dimgroup":
        gens: List[Any] = [_parse_root(r) for r in args.root]
        gens += [_parse_irrational(w) for w in args.irrational]
        if not gens:
            raise TorusRankValidationError("give at least one --root or --irrational", field="generators")
        group = GeneratorSet(generators=gens)
        data = {"s": group.s, "t": group.t, "rank": dimension_group_rank(group)}
        return EXIT_OK, _render(fmt, data, data)

    raise TorusRankValidationError(f"unknown command {command}", field="command", value=command)


def _error_text(error: TorusRankError, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(error.to_dict()) + "\n"
    return f"ERROR {error.code}: {error.message}\n"


def run_cli(argv: Optional[Sequence[str]] = None) -> Tuple[int, str]:
    """Run one command; returns (exit status, stdout text).

    Errors go to stderr in the requested format.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0), ""

    settings = get_settings()
    configure_logging(args.log_level or settings.log_level)
    try:
        return _dispatch(args, settings)
    except TorusRankError as e:
        logger.debug("command %s failed: %s", args.command, e.code)
        sys.stderr.write(_error_text(e, args.format))
        return EXIT_INVALID, ""
    except ValidationError as e:
        first = e.errors()[0]
        error = TorusRankValidationError(first["msg"], field=".".join(str(p) for p in first["loc"]) or None)
        sys.stderr.write(_error_text(error, args.format))
        return EXIT_INVALID, ""


def main(argv: Optional[Sequence[str]] = None) -> int:
    status, out = run_cli(argv)
    sys.stdout.write(out)
    return status
