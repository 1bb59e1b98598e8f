import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, TextIO

from pydantic import BaseModel, Field, ValidationError

from config.settings import Settings, get_settings
from logic import congruence
from logic.calculus import check
from logic.errors import DerivationError, SkewLogicError
from logic.focused import Focused, check_focused, emb, focus
from logic.formula import parse_sequent, print_sequent
from logic.profiles import PROFILE_NAMES, LogicProfile
from logic.search import (
    SearchBudget,
    count_classes,
    count_classes_oracle,
    derive,
    enumerate_focused,
    enumerate_unfocused,
)
from store.codec import dump_file, load_file

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


class EngineOptions(BaseModel):
    profile: LogicProfile
    file_profile: Optional[LogicProfile] = Field(None, description="Overrides the profile recorded in derivation files")
    budget: SearchBudget
    pretty: bool = Field(True, description="Indent JSON output")
    oracle_max_connectives: int = Field(6, ge=1)
    oracle_class_cap: int = Field(50000, ge=1)
    rewrite_step_cap: int = Field(10000, ge=1)
    max_exchanges: int = Field(2, ge=0)

    model_config = {"arbitrary_types_allowed": True}

    def oracle_options(self) -> Dict[str, int]:
        return {
            "max_connectives": self.oracle_max_connectives,
            "class_cap": self.oracle_class_cap,
            "max_exchanges": self.max_exchanges,
        }


class CountResponse(BaseModel):
    profile: str
    sequent: str
    count: int
    oracle: bool = False


def engine_options(args: argparse.Namespace, settings: Settings) -> EngineOptions:
    budget = SearchBudget(
        max_connectives=args.max_connectives if args.max_connectives is not None else settings.max_connectives,
        node_cap=args.node_cap if args.node_cap is not None else settings.node_cap,
        result_cap=settings.result_cap,
    )
    return EngineOptions(
        profile=LogicProfile.parse(args.profile or settings.profile),
        file_profile=LogicProfile.parse(args.profile) if args.profile else None,
        budget=budget,
        pretty=not args.json,
        oracle_max_connectives=settings.oracle_max_connectives,
        oracle_class_cap=settings.oracle_class_cap,
        rewrite_step_cap=settings.rewrite_step_cap,
        max_exchanges=settings.max_exchanges,
    )


def read_source(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def load_checked(path: str, opts: EngineOptions, stdin: TextIO):
    """Loads a derivation file and checks it; focused derivations are returned embedded."""
    profile, s, d = load_file(read_source(path, stdin), opts.file_profile)
    if isinstance(d, Focused):
        check_focused(d, s, profile)
        d = emb(d, s)
    check(d, s, profile)
    return profile, s, d


def cmd_prove(args, opts: EngineOptions, out: TextIO, stdin: TextIO) -> int:
    s = parse_sequent(args.sequent, opts.profile)
    d = derive(s, opts.profile, opts.budget)
    if d is None:
        out.write("NOT DERIVABLE\n")
        return EXIT_NEGATIVE
    out.write(dump_file(s, opts.profile, d, opts.pretty) + "\n")
    return EXIT_OK


def cmd_normalize(args, opts: EngineOptions, out: TextIO, stdin: TextIO) -> int:
    profile, s, d = load_checked(args.file, opts, stdin)
    if profile.exchange:
        logger.warning("no focused normal form under exchange; printing the rewrite normal form")
        normal = congruence.normalize_rw(d, s, profile, opts.rewrite_step_cap)
    else:
        normal = focus(d, s, profile)
    out.write(dump_file(s, profile, normal, opts.pretty) + "\n")
    return EXIT_OK


def cmd_equiv(args, opts: EngineOptions, out: TextIO, stdin: TextIO) -> int:
    profile, s, f = load_checked(args.first, opts, stdin)
    other_profile, t, g = load_checked(args.second, opts, stdin)
    if other_profile != profile or t != s:
        raise SkewLogicError(f"derivations prove different sequents: {s} and {t}")
    same = congruence.equiv(f, g, s, profile, **opts.oracle_options())
    out.write("EQUIVALENT\n" if same else "DISTINCT\n")
    return EXIT_OK if same else EXIT_NEGATIVE


def cmd_enumerate(args, opts: EngineOptions, out: TextIO, stdin: TextIO) -> int:
    s = parse_sequent(args.sequent, opts.profile)
    if args.unfocused:
        ds: List = enumerate_unfocused(s, opts.profile, opts.budget, opts.max_exchanges)
    else:
        ds = enumerate_focused(s, opts.profile, opts.budget)
    for d in ds:
        out.write(dump_file(s, opts.profile, d, pretty=False) + "\n")
    logger.info("%d derivations of %s", len(ds), s)
    return EXIT_OK


def cmd_count(args, opts: EngineOptions, out: TextIO, stdin: TextIO) -> int:
    s = parse_sequent(args.sequent, opts.profile)
    if args.oracle:
        n = count_classes_oracle(
            s, opts.profile, opts.budget, opts.max_exchanges,
            opts.oracle_max_connectives, opts.oracle_class_cap,
        )
    else:
        n = count_classes(s, opts.profile, opts.budget)
    if args.json:
        response = CountResponse(profile=opts.profile.name, sequent=print_sequent(s), count=n, oracle=args.oracle)
        out.write(response.model_dump_json() + "\n")
    else:
        out.write(f"{n}\n")
    return EXIT_OK


def cmd_check(args, opts: EngineOptions, out: TextIO, stdin: TextIO) -> int:
    try:
        load_checked(args.file, opts, stdin)
    except DerivationError as e:
        out.write(f"INVALID: {e}\n")
        return EXIT_NEGATIVE
    out.write("OK\n")
    return EXIT_OK


HANDLERS: Dict[str, Callable] = {
    "prove": cmd_prove,
    "normalize": cmd_normalize,
    "equiv": cmd_equiv,
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--profile", choices=PROFILE_NAMES, default=None, help="logic profile (default from settings)")
    common.add_argument("--max-connectives", type=int, default=None, help="reject larger sequents")
    common.add_argument("--node-cap", type=int, default=None, help="search node budget")
    output = common.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true", help="compact JSON output")
    output.add_argument("--pretty", action="store_true", help="indented JSON output (default)")

    parser = argparse.ArgumentParser(
        prog="skewmall",
        description="Proof search and coherence for skew non-commutative multiplicative-additive logic",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prove", parents=[common], help="find a focused derivation")
    p.add_argument("sequent")

    p = sub.add_parser("normalize", parents=[common], help="print the normal form of a derivation file")
    p.add_argument("file", help="derivation file, - for stdin")

    p = sub.add_parser("equiv", parents=[common], help="decide whether two derivations are congruent")
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("enumerate", parents=[common], help="list all derivations, one JSON file per line")
    p.add_argument("sequent")
    p.add_argument("--unfocused", action="store_true", help="enumerate the unfocused calculus instead")

    p = sub.add_parser("count", parents=[common], help="count congruence classes of derivations")
    p.add_argument("sequent")
    p.add_argument("--oracle", action="store_true", help="count by quotienting unfocused derivations")

    p = sub.add_parser("check", parents=[common], help="validate a derivation file")
    p.add_argument("file", help="derivation file, - for stdin")
    return parser


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None,
        err: Optional[TextIO] = None, stdin: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_ERROR
    try:
        opts = engine_options(args, get_settings())
        return HANDLERS[args.command](args, opts, out, stdin)
    except (SkewLogicError, ValidationError) as e:
        err.write(f"error: {e}\n")
        return EXIT_ERROR
    except OSError as e:
        err.write(f"error: cannot read {e.filename}: {e.strerror}\n")
        return EXIT_ERROR
