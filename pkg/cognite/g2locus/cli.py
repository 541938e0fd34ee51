"""Command-line front end: ``g2locus <command> ...`` prints JSON on stdout."""

# pylint: disable=unused-argument

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, NoReturn, Optional, Sequence

from pydantic import ValidationError

from . import tables
from .autgroup import classify_invariants, classify_uv, involution_class_count
from .config import G2LocusSettings, get_settings
from .coverings import CaseId
from .elliptic_locus import (
    UVPoint,
    igusa_from_uv,
    jpair_from_uv,
    l2_equation,
    m1_embedding,
    uv_from_igusa,
    uv_from_s,
)
from .exact_core import Scalar, format_rational, parse_rational
from .exceptions import DomainError, G2LocusError, IdentityViolation
from .identities import SUITES, verify_identities
from .igusa import BinarySextic, IgusaInvariants, igusa_invariants
from .search import CheckpointStore, SearchMode, count_case1_tuple_classes, count_triple_classes

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_IDENTITY = 2
EXIT_USAGE = 64

DEFAULT_BUDGET = 100_000


class _Parser(argparse.ArgumentParser):
    """Argument parser that exits with the usage status instead of argparse's 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rationals(text: str, count: int, what: str) -> List[Any]:
    values = [parse_rational(token) for token in text.split()]
    if len(values) != count:
        raise DomainError(f"{what} takes {count} rationals, got {len(values)}")
    return values


def _q(value: Scalar) -> str:
    return format_rational(value)


def _invariants_json(inv: IgusaInvariants) -> Dict[str, str]:
    return {"J2": _q(inv.J2), "J4": _q(inv.J4), "J6": _q(inv.J6), "J10": _q(inv.J10)}


def _point_json(p: UVPoint) -> List[str]:
    return [_q(p.u), _q(p.v)]


def _invariants_from_args(args: argparse.Namespace) -> IgusaInvariants:
    if args.sextic is not None:
        return igusa_invariants(BinarySextic.parse(args.sextic))
    return IgusaInvariants(*_rationals(args.igusa, 4, "--igusa"))


def _cmd_igusa(args: argparse.Namespace, settings: G2LocusSettings) -> Dict[str, Any]:
    return _invariants_json(igusa_invariants(BinarySextic.parse(args.sextic)))


def _cmd_uv(args: argparse.Namespace, settings: G2LocusSettings) -> Dict[str, Any]:
    values = [parse_rational(token) for token in args.s.split()]
    if len(values) not in (2, 3):
        raise DomainError(f"--s takes 2 or 3 rationals, got {len(values)}")
    p = uv_from_s(*values)
    return {"u": _q(p.u), "v": _q(p.v), "delta": _q(p.delta), "invariants": _invariants_json(igusa_from_uv(p))}


def _cmd_jpair(args: argparse.Namespace, settings: G2LocusSettings) -> Dict[str, Any]:
    pair = jpair_from_uv(UVPoint(*_rationals(args.uv, 2, "--uv")))
    return {
        "e1": _q(pair.e1),
        "e2": _q(pair.e2),
        "split": [_q(j) for j in pair.split] if pair.split is not None else None,
    }


def _cmd_classify(args: argparse.Namespace, settings: G2LocusSettings) -> Dict[str, Any]:
    if args.uv is not None:
        p = UVPoint(*_rationals(args.uv, 2, "--uv"))
        group, preimages = classify_uv(p), [p]
    else:
        group, preimages = classify_invariants(igusa_invariants(BinarySextic.parse(args.sextic)))
    return {
        "group": group.value,
        "involution_classes": involution_class_count(group),
        "uv_preimages": [_point_json(p) for p in preimages],
    }


def _cmd_l2(args: argparse.Namespace, settings: G2LocusSettings) -> Dict[str, Any]:
    value = l2_equation(_invariants_from_args(args))
    return {"value": _q(value), "on_locus": value == 0}


def _cmd_invert(args: argparse.Namespace, settings: G2LocusSettings) -> Dict[str, Any]:
    return {"uv_preimages": [_point_json(p) for p in uv_from_igusa(_invariants_from_args(args))]}


def _cmd_embed(args: argparse.Namespace, settings: G2LocusSettings) -> Dict[str, Any]:
    return _invariants_json(m1_embedding(parse_rational(args.j)))


def _cmd_tuples_count(args: argparse.Namespace, settings: G2LocusSettings) -> Dict[str, Any]:
    checkpoint = None
    if args.checkpoint:
        checkpoint = CheckpointStore(args.checkpoint, settings.checkpoint_retries, settings.checkpoint_retry_wait)
    result = count_triple_classes(
        CaseId.from_number(args.case),
        args.n,
        mode=SearchMode(args.mode),
        budget=args.budget if args.budget is not None else DEFAULT_BUDGET,
        workers=args.workers or settings.threads,
        checkpoint=checkpoint,
        seed=args.seed if args.seed is not None else settings.seed,
        certify=args.certify,
    )
    return result.model_dump(mode="json")


def _cmd_tuples_census(args: argparse.Namespace, settings: G2LocusSettings) -> Dict[str, Any]:
    return count_case1_tuple_classes(args.n).model_dump(mode="json")


def _cmd_verify(args: argparse.Namespace, settings: G2LocusSettings) -> List[Dict[str, Any]]:
    sample_size = args.sample_size if args.sample_size is not None else settings.sample_size
    seed = args.seed if args.seed is not None else settings.seed
    records = verify_identities(sample_size, seed, args.suite)
    return [record.model_dump(mode="json") for record in records]


def build_parser() -> argparse.ArgumentParser:
    """The argument parser of the ``g2locus`` command."""
    parser = _Parser(prog="g2locus", description="Exact invariants and elliptic subfields of genus 2 curves")
    parser.add_argument("--threads", type=int, help="worker processes for tuple searches (G2LOCUS_THREADS)")
    parser.add_argument("--env-file", help="dotenv file to read settings from instead of .env")
    parser.add_argument("--log-level", help="logging level (G2LOCUS_LOG_LEVEL)")
    commands = parser.add_subparsers(dest="command", required=True)

    igusa = commands.add_parser("igusa", help="classical invariants of a sextic")
    igusa.add_argument("--sextic", required=True, help='coefficients "a0 a1 ... a6"')
    igusa.set_defaults(handler=_cmd_igusa)

    uv = commands.add_parser("uv", help="(u, v) from the symmetric functions s1, s2 [, s3]")
    uv.add_argument("--s", required=True, help='"s1 s2" or "s1 s2 s3"')
    uv.set_defaults(handler=_cmd_uv)

    jpair = commands.add_parser("jpair", help="j-invariants of the elliptic subfields")
    jpair.add_argument("--uv", required=True, help='"u v"')
    jpair.set_defaults(handler=_cmd_jpair)

    classify = commands.add_parser("classify", help="automorphism group")
    source = classify.add_mutually_exclusive_group(required=True)
    source.add_argument("--sextic", help='coefficients "a0 a1 ... a6"')
    source.add_argument("--uv", help='"u v"')
    classify.set_defaults(handler=_cmd_classify)

    for name, handler, help_text in (
        ("l2", _cmd_l2, "value of the locus equation"),
        ("invert", _cmd_invert, "(u, v) preimages of a moduli point on the locus"),
    ):
        sub = commands.add_parser(name, help=help_text)
        source = sub.add_mutually_exclusive_group(required=True)
        source.add_argument("--sextic", help='coefficients "a0 a1 ... a6"')
        source.add_argument("--igusa", help='invariants "J2 J4 J6 J10"')
        sub.set_defaults(handler=handler)

    embed = commands.add_parser("embed", help="invariants of the curve whose elliptic subfields both have invariant j")
    embed.add_argument("--j", required=True)
    embed.set_defaults(handler=_cmd_embed)

    tuples = commands.add_parser("tuples", help="branch-cycle tuple searches")
    tuple_commands = tuples.add_subparsers(dest="tuples_command", required=True)
    count = tuple_commands.add_parser("count", help="classes of symmetric triples")
    count.add_argument("--case", type=int, required=True, choices=[1, 2, 4, 5])
    count.add_argument("--n", type=int, required=True)
    count.add_argument("--mode", choices=[mode.value for mode in SearchMode], default=SearchMode.EXHAUSTIVE.value)
    count.add_argument("--budget", type=int, help="samples in random mode")
    count.add_argument("--workers", type=int)
    count.add_argument("--checkpoint", help="fsspec URL of a JSON-lines checkpoint file")
    count.add_argument("--seed", type=int)
    count.add_argument(
        "--certify", action="store_true", help="in random mode, also certify the exact number of generating sigma"
    )
    count.set_defaults(handler=_cmd_tuples_count)
    census = tuple_commands.add_parser("census", help="all case-1 tuple classes of degree n")
    census.add_argument("--n", type=int, required=True)
    census.set_defaults(handler=_cmd_tuples_census)

    verify = commands.add_parser("verify-identities", help="run the identity suites")
    verify.add_argument("--sample-size", type=int)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--suite", action="append", choices=sorted(SUITES), help="repeatable; all suites by default")
    verify.set_defaults(handler=_cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return its exit status.

    0 on success, 1 for domain and I/O errors, 2 when an identity check fails and 64 for usage errors.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        settings = get_settings(args.env_file)
        if args.threads is not None:
            settings.threads = args.threads
        if args.log_level is not None:
            settings.log_level = args.log_level
        settings = G2LocusSettings.model_validate(settings.model_dump())
    except ValidationError as exc:
        print(f"g2locus: error: invalid settings: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=settings.log_level, format="%(asctime)s %(name)s %(levelname)s %(message)s")
    tables.set_data_dir(settings.data_dir)

    try:
        output = args.handler(args, settings)
    except IdentityViolation as exc:
        logger.error("identity violation: %s", exc)
        return EXIT_IDENTITY
    except G2LocusError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return EXIT_DOMAIN

    if isinstance(output, list):
        for item in output:
            print(json.dumps(item))
        if any(not item.get("passed", True) for item in output):
            return EXIT_IDENTITY
    else:
        print(json.dumps(output))
    return EXIT_OK


def main() -> None:
    """Console script entry point."""
    sys.exit(run())
