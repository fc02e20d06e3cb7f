"""Command-line interface: color, verify, chis, coeff, gen and bench.

Exit codes: 0 success, 1 verification failed, 2 unreadable input,
3 precondition not met, 4 coloring or search failure.
"""
import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from strongce.config import get_settings
from strongce.core.coloring import ListAssignment, verify_strong
from strongce.engine.engine import strong_list_color
from strongce.errors import (
    FallbackExhausted,
    FormatError,
    GuaranteeViolation,
    LimitExceeded,
    PreconditionError,
    StrongceError,
)
from strongce.services.nullstellensatz import (
    FIVE_CYCLE_FACTORS,
    FIVE_CYCLE_TARGET,
    dense_coefficient,
    expand_capped,
    finite_difference_coefficient,
    five_cycle_certificate,
)
from strongce.services.oracle import SearchConfig, exact_strong_chromatic_index
from strongce.tools.bench import run_bench, save_report, write_corpus
from strongce.tools.formats import (
    parse_factors,
    parse_monomial,
    read_coloring,
    read_graph,
    read_lists,
    serialize_coloring,
    serialize_graph,
    serialize_lists,
    write_text,
)
from strongce.tools.generators import generate_graph, generate_lists, make_rng
from strongce.utils.logger import get_logger

logger = get_logger("cli")

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_FAILURE = 4

COEFFICIENT_METHODS = ("sparse", "dense", "finite-difference")


@dataclass
class CommandResult:
    """Exit code plus the text a command prints on stdout"""
    exit_code: int
    output: str = ""

    @classmethod
    def success_response(cls, output: str = "") -> "CommandResult":
        return cls(EXIT_OK, output)

    @classmethod
    def error_response(cls, exit_code: int, message: str) -> "CommandResult":
        return cls(exit_code, message)


def _emit(path: Optional[str], text: str) -> str:
    """Write `text` to `path`, or hand it back for stdout"""
    if path:
        write_text(path, text)
        return ""
    return text


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------

def cmd_color(args: argparse.Namespace) -> CommandResult:
    graph = read_graph(args.graph)
    if args.uniform is not None:
        lists = ListAssignment.uniform(graph.edge_count, args.uniform)
    elif args.lists:
        lists = read_lists(args.lists, graph.edge_count)
    else:
        raise PreconditionError("give a lists file or --uniform k")

    seed = get_settings().resolve_seed(args.seed)
    outcome = strong_list_color(graph, lists, allow_short=args.allow_short, seed=seed)
    lines = [f"handler: {outcome.handler}", f"fallback_depth: {outcome.fallback_depth}"]
    if args.trace:
        for step in outcome.trace:
            detail = "" if step.edge is None else f" edge={step.edge} color={step.color}"
            lines.append(f"trace [{step.handler}] {step.message}{detail}")
        for check in outcome.bound_misses:
            lines.append(f"bound miss: {check.label} edge={check.edge} observed={check.observed} bound={check.bound}")
    text = serialize_coloring(outcome.coloring)
    summary = "\n".join(lines)
    logger.info(f"colored {graph.edge_count} edges with handler {outcome.handler}")
    if args.out:
        write_text(args.out, text)
        return CommandResult.success_response(summary)
    return CommandResult.success_response(text + summary)


def cmd_verify(args: argparse.Namespace) -> CommandResult:
    graph = read_graph(args.graph)
    lists = read_lists(args.lists, graph.edge_count)
    coloring = read_coloring(args.coloring, graph.edge_count)
    report = verify_strong(graph, lists, coloring)
    if report.ok:
        return CommandResult.success_response(report.describe())
    return CommandResult.error_response(EXIT_VIOLATION, report.describe())


def cmd_chis(args: argparse.Namespace) -> CommandResult:
    graph = read_graph(args.graph)
    settings = get_settings()
    config = SearchConfig(args.limit or settings.node_limit, settings.time_limit, args.heuristic)
    return CommandResult.success_response(str(exact_strong_chromatic_index(graph, config)))


def cmd_coeff(args: argparse.Namespace) -> CommandResult:
    if args.five_cycle:
        if args.method == "finite-difference":
            value = finite_difference_coefficient(9, FIVE_CYCLE_FACTORS, FIVE_CYCLE_TARGET)
        else:
            value = five_cycle_certificate()
        return CommandResult.success_response(str(value))

    if not args.factors or args.monomial is None:
        raise PreconditionError("coeff needs --five-cycle, or --factors FILE with --monomial SPEC")
    factors = parse_factors(Path(args.factors).read_text(encoding="utf-8"))
    variable_count = max((max(pair) + 1 for pair in factors), default=0)
    target = parse_monomial(args.monomial, variable_count)
    if args.method == "dense":
        value = dense_coefficient(variable_count, factors, target)
    elif args.method == "finite-difference":
        value = finite_difference_coefficient(variable_count, factors, target)
    else:
        value = expand_capped(variable_count, factors, target).coefficient_of(target)
    return CommandResult.success_response(str(value))


def cmd_gen(args: argparse.Namespace) -> CommandResult:
    seed = get_settings().resolve_seed(args.seed)
    if args.model == "corpus":
        if not args.out_dir:
            raise PreconditionError("--model corpus needs --out-dir")
        names = write_corpus(Path(args.out_dir), args.count, seed)
        return CommandResult.success_response(f"wrote {len(names)} instances to {args.out_dir}")

    rng = make_rng(seed)
    graph = generate_graph(args.model, args.n, rng)
    output = _emit(args.out, serialize_graph(graph))
    if args.lists:
        lists = generate_lists(args.lists, graph.edge_count, rng)
        text = serialize_lists(lists)
        if args.lists_out:
            write_text(args.lists_out, text)
        else:
            output += text
    return CommandResult.success_response(output.rstrip("\n"))


def cmd_bench(args: argparse.Namespace) -> CommandResult:
    corpus = Path(args.corpus_dir)
    if not corpus.is_dir():
        raise PreconditionError(f"corpus directory {corpus} does not exist")
    seed = get_settings().resolve_seed(args.seed)
    report = run_bench(corpus, args.workers, seed)
    if args.out:
        save_report(report, Path(args.out))
    if report.ok:
        return CommandResult.success_response(report.table())
    parse_failed = any(result.parse_failure for result in report.instances)
    return CommandResult.error_response(EXIT_PARSE if parse_failed else EXIT_FAILURE, report.table())


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------

COMMANDS: Dict[str, Callable[[argparse.Namespace], CommandResult]] = {
    "color": cmd_color,
    "verify": cmd_verify,
    "chis": cmd_chis,
    "coeff": cmd_coeff,
    "gen": cmd_gen,
    "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strongce", description="Strong list edge-coloring for maximum degree 4")
    sub = parser.add_subparsers(dest="command", required=True)

    color = sub.add_parser("color", help="strong coloring from lists of 22 colors")
    color.add_argument("graph")
    color.add_argument("lists", nargs="?")
    color.add_argument("--uniform", type=int, metavar="K", help="every edge gets colors 1..K")
    color.add_argument("--out", help="ColoringFile path (default: stdout)")
    color.add_argument("--trace", action="store_true", help="print the handler trace")
    color.add_argument("--seed", type=int)
    color.add_argument("--allow-short", action="store_true", help="accept short lists and use backtracking only")

    verify = sub.add_parser("verify", help="check a coloring")
    verify.add_argument("graph")
    verify.add_argument("lists")
    verify.add_argument("coloring")

    chis = sub.add_parser("chis", help="exact strong chromatic index")
    chis.add_argument("graph")
    chis.add_argument("--limit", type=int, help="search node limit")
    chis.add_argument("--heuristic", choices=("dsatur", "static"), default="dsatur")

    coeff = sub.add_parser("coeff", help="coefficient of a monomial in a product of (x_i - x_j)")
    coeff.add_argument("--five-cycle", "--paper", dest="five_cycle", action="store_true",
                       help="the 29-factor 5-cycle polynomial and its target monomial")
    coeff.add_argument("--factors", help="file with one factor 'i j' per line, variables from 1")
    coeff.add_argument("--monomial", help="e.g. 'x1^2 x3' or '2,0,1'")
    coeff.add_argument("--method", choices=COEFFICIENT_METHODS, default="sparse")

    gen = sub.add_parser("gen", help="generate graphs, lists or a corpus")
    gen.add_argument("--model", required=True,
                     help="regular4 | random-maxdeg4 | tree | cage | fixture:<name> | corpus")
    gen.add_argument("--n", type=int, default=26)
    gen.add_argument("--seed", type=int)
    gen.add_argument("--lists", help="uniform:k or random:k:palette")
    gen.add_argument("--out", help="GraphFile path (default: stdout)")
    gen.add_argument("--lists-out", help="ListsFile path (default: stdout after the graph)")
    gen.add_argument("--count", type=int, default=500)
    gen.add_argument("--out-dir")

    bench = sub.add_parser("bench", help="color every instance of a corpus directory")
    bench.add_argument("corpus_dir")
    bench.add_argument("--out", help="JSON report path")
    bench.add_argument("--workers", type=int, default=1)
    bench.add_argument("--seed", type=int)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> CommandResult:
    """Parse `argv` and run the command, mapping failures onto exit codes"""
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (FormatError, OSError) as exc:
        logger.error(f"{args.command}: cannot read input: {exc}")
        return CommandResult.error_response(EXIT_PARSE, f"error: {exc}")
    except (FallbackExhausted, GuaranteeViolation, LimitExceeded) as exc:
        logger.error(f"{args.command}: {type(exc).__name__}: {exc}")
        return CommandResult.error_response(EXIT_FAILURE, f"error: {exc}")
    except (StrongceError, ValueError) as exc:
        logger.error(f"{args.command}: precondition failed: {exc}")
        return CommandResult.error_response(EXIT_PRECONDITION, f"error: {exc}")


def main(argv: Optional[List[str]] = None) -> int:
    result = run(argv)
    if result.output:
        stream = sys.stdout if result.exit_code in (EXIT_OK, EXIT_VIOLATION) else sys.stderr
        print(result.output, file=stream)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
