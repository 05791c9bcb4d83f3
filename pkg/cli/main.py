from __future__ import annotations

import argparse
import sys
from collections.abc import Callable, Sequence
from typing import Any

import structlog

from applications.covering import (
    check_cube_cover,
    check_mult_cover,
    full_plane_pool,
    search_min_cover,
)
from applications.snevily import check_snevily_fp, verify_snevily
from cli.codec import (
    cube_cover_from_payload,
    dumps,
    expansion_to_dict,
    interpolation_from_payload,
    load_grid,
    load_model,
    load_pool,
    load_sets,
    mult_cover_from_payload,
    parse_int_list,
    plane_to_payload,
    points_to_lists,
    poly_to_payload,
    read_source,
    witness_to_payload,
)
from cli.parser import parse_poly
from cli.schemas import CubeCoverPayload, ErrorPayload, InterpolationPayload, MultCoverPayload
from config.settings import AppSettings, get_settings
from core.errors import EXIT_SUCCESS, EXIT_THEOREM, AlgebraError, InputFormatError
from hermite.interpolation import hermite_interpolate
from monitoring.logger import setup_logging
from nonvanishing.models import WitnessMode, WitnessProblem
from nonvanishing.witness import find_witness
from polynomials.expansion import expand_at
from reduction.reducer import reduce
from rings.models import RingSpec
from utils.math_utils import TermOrder
from verification.identities import run_identity_checks

logger = structlog.get_logger("cli")

CommandResult = tuple[Any, int]
Handler = Callable[[argparse.Namespace, AppSettings], CommandResult]


def _ring(args: argparse.Namespace) -> RingSpec:
    return RingSpec.parse(args.ring)


def _optional_ring(args: argparse.Namespace) -> RingSpec | None:
    return RingSpec.parse(args.ring) if args.ring else None


def _cmd_expand(args: argparse.Namespace, settings: AppSettings) -> CommandResult:
    ring = _ring(args)
    p = parse_poly(read_source(args.poly), ring, args.nvars, settings.parser)
    point = [ring.parse_element(item) for item in args.at.split(",")]
    bounds = parse_int_list(args.bounds) if args.bounds else None
    return expansion_to_dict(expand_at(p, point, bounds)), EXIT_SUCCESS


def _cmd_reduce(args: argparse.Namespace, settings: AppSettings) -> CommandResult:
    ring = _ring(args)
    sets = load_sets(args.sets, ring)
    f = parse_poly(read_source(args.poly), ring, args.nvars or len(sets), settings.parser)
    result = reduce(f, sets, TermOrder(args.strategy))
    payload = {
        "remainder": result.remainder.render(),
        "quotients": [q.render() for q in result.quotients],
        "remainder_poly": poly_to_payload(result.remainder).model_dump(),
        "quotients_poly": [poly_to_payload(q).model_dump() for q in result.quotients],
        "in_ideal": result.remainder.is_zero,
        "strategy": args.strategy,
    }
    return payload, EXIT_SUCCESS


def _cmd_interpolate(args: argparse.Namespace, settings: AppSettings) -> CommandResult:
    data = interpolation_from_payload(load_model(InterpolationPayload, args.data), _optional_ring(args))
    return poly_to_payload(hermite_interpolate(data)), EXIT_SUCCESS


def _cmd_witness(args: argparse.Namespace, settings: AppSettings) -> CommandResult:
    ring = _ring(args)
    grid = load_grid(args.grid, ring)
    f = parse_poly(read_source(args.poly), ring, args.nvars or grid.nvars, settings.parser)
    problem = WitnessProblem(f, tuple(parse_int_list(args.t)), grid)
    witness = find_witness(problem, WitnessMode(args.mode))
    return witness_to_payload(witness), EXIT_SUCCESS


def _cmd_cover_check(args: argparse.Namespace, settings: AppSettings) -> CommandResult:
    ring = _optional_ring(args)
    if args.mode == "mult":
        instance = mult_cover_from_payload(load_model(MultCoverPayload, args.instance), ring)
        report = check_mult_cover(instance)
        payload: dict[str, Any] = {
            "valid_cover": report.valid_cover,
            "bound_holds": report.bound_holds,
            "k": report.k,
            "bound": report.bound,
            "origin_covered": report.origin_covered,
            "deficient_points": points_to_lists(report.deficient_points),
            "violation": report.violation,
        }
        return payload, EXIT_THEOREM if report.violation else EXIT_SUCCESS
    planes, spec, n = cube_cover_from_payload(load_model(CubeCoverPayload, args.instance), ring)
    cube = check_cube_cover(planes, spec, n)
    payload = {
        "valid": cube.valid,
        "b_product_nonzero": cube.b_product_nonzero,
        "m": cube.m,
        "n": cube.n,
        "bound_holds": cube.bound_holds,
        "uncovered_vertices": points_to_lists(cube.uncovered_vertices),
        "violation": cube.violation,
    }
    return payload, EXIT_THEOREM if cube.violation else EXIT_SUCCESS


def _cmd_cover_search(args: argparse.Namespace, settings: AppSettings) -> CommandResult:
    ring = _ring(args)
    if args.pool:
        pool = load_pool(args.pool, ring)
    else:
        offsets = parse_int_list(args.offsets) if args.offsets else None
        pool = full_plane_pool(ring, args.n, offsets)
    max_cases = args.max_cases or settings.search.max_cases
    result = search_min_cover(ring, args.n, pool, max_cases)
    payload = {
        "n": result.n,
        "minimum": result.minimum,
        "cases": result.cases,
        "truncated": result.truncated,
        "planes": [plane_to_payload(plane).model_dump() for plane in result.best_planes],
        "violation": result.violation,
    }
    return payload, EXIT_THEOREM if result.violation else EXIT_SUCCESS


def _cmd_snevily(args: argparse.Namespace, settings: AppSettings) -> CommandResult:
    node_cap = settings.search.snevily_node_cap
    if args.verify:
        report = verify_snevily(args.p, args.max_k, node_cap)
        payload: dict[str, Any] = {
            "p": report.p,
            "max_k": report.max_k,
            "instances": report.instances,
            "counterexamples": [[list(a), list(b)] for a, b in report.counterexamples],
            "truncated": report.truncated,
            "full_length_failures": [[list(a), list(b)] for a, b in report.full_length_failures],
            "passed": report.passed,
        }
        return payload, EXIT_SUCCESS if report.passed else EXIT_THEOREM
    if args.a is None or args.b is None:
        raise InputFormatError("snevily needs --a and --b unless --verify is given")
    result = check_snevily_fp(args.p, parse_int_list(args.a), parse_int_list(args.b), node_cap)
    payload = {
        "permutation": list(result.permutation) if result.permutation is not None else None,
        "nodes": result.nodes,
        "truncated": result.truncated,
        "full_length": result.full_length,
    }
    return payload, EXIT_THEOREM if result.violation else EXIT_SUCCESS


def _cmd_verify_identities(args: argparse.Namespace, settings: AppSettings) -> CommandResult:
    ring = _ring(args)
    verification = settings.verification
    if args.max_cases:
        verification = verification.model_copy(update={"cases": args.max_cases})
    report = run_identity_checks(ring, verification, args.seed)
    payload = {
        "ring": report.ring,
        "cases": report.cases,
        "checks": report.checks,
        "failures": report.failures,
        "failure_kinds": report.failure_kinds,
        "first_failure": report.first_failure,
    }
    return payload, EXIT_SUCCESS if report.passed else EXIT_THEOREM


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nullstellensatz", description="Combinatorial Nullstellensatz toolkit")
    commands = parser.add_subparsers(dest="command", required=True)

    expand = commands.add_parser("expand", help="Expansion coefficients f_u(s) at a point")
    expand.add_argument("--ring", required=True)
    expand.add_argument("--poly", required=True, help="Expression or @file")
    expand.add_argument("--nvars", type=int)
    expand.add_argument("--at", required=True, help="Comma separated base point")
    expand.add_argument("--bounds", help="Comma separated truncation per variable")
    expand.set_defaults(handler=_cmd_expand)

    red = commands.add_parser("reduce", help="Remainder modulo the grid basis")
    red.add_argument("--ring", required=True)
    red.add_argument("--poly", required=True)
    red.add_argument("--nvars", type=int)
    red.add_argument("--sets", required=True, help="JSON list of element lists, inline or @file")
    red.add_argument("--strategy", default=TermOrder.GRADED_LEX.value, choices=[o.value for o in TermOrder])
    red.set_defaults(handler=_cmd_reduce)

    interp = commands.add_parser("interpolate", help="Hermite interpolation on a multiset")
    interp.add_argument("--ring")
    interp.add_argument("--data", required=True)
    interp.set_defaults(handler=_cmd_interpolate)

    witness = commands.add_parser("witness", help="Nonvanishing witness on a multiset grid")
    witness.add_argument("--ring", required=True)
    witness.add_argument("--poly", required=True)
    witness.add_argument("--nvars", type=int)
    witness.add_argument("--grid", required=True)
    witness.add_argument("--t", required=True, help="Comma separated exponent vector")
    witness.add_argument("--mode", default=WitnessMode.ALGEBRAIC.value, choices=[m.value for m in WitnessMode])
    witness.set_defaults(handler=_cmd_witness)

    check = commands.add_parser("cover-check", help="Check a hyperplane cover")
    check.add_argument("--mode", required=True, choices=["mult", "cube"])
    check.add_argument("--instance", required=True)
    check.add_argument("--ring")
    check.set_defaults(handler=_cmd_cover_check)

    search = commands.add_parser("cover-search", help="Smallest cube cover from a plane pool")
    search.add_argument("--ring", required=True)
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--pool", help="JSON list of planes; defaults to every plane over the ring")
    search.add_argument("--offsets", help="Comma separated offsets for the default pool")
    search.add_argument("--max-cases", type=int)
    search.set_defaults(handler=_cmd_cover_search)

    snevily = commands.add_parser("snevily", help="Permutation search over F_p")
    snevily.add_argument("--p", type=int, required=True)
    snevily.add_argument("--a")
    snevily.add_argument("--b")
    snevily.add_argument("--verify", action="store_true", help="Check every canonical instance up to --max-k")
    snevily.add_argument("--max-k", type=int)
    snevily.set_defaults(handler=_cmd_snevily)

    identities = commands.add_parser("verify-identities", help="Randomized identity checks")
    identities.add_argument("--ring", required=True)
    identities.add_argument("--seed", type=int)
    identities.add_argument("--max-cases", type=int)
    identities.set_defaults(handler=_cmd_verify_identities)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    settings = get_settings()
    setup_logging(settings.log_level, settings.log_format)
    args = build_parser().parse_args(argv)
    handler: Handler = args.handler
    try:
        payload, code = handler(args, settings)
    except AlgebraError as exc:
        logger.warning("command_failed", command=args.command, error=exc.error_type.value)
        error = ErrorPayload(error=exc.error_type.value, message=str(exc))
        sys.stderr.write(dumps(error).decode() + "\n")
        return exc.exit_code
    sys.stdout.write(dumps(payload).decode() + "\n")
    return code


def run() -> None:
    sys.exit(main())
