"""
Parsing the arguments from CLI.
"""
import argparse
import typing

from ..oracle.cover_search import DEFAULT_SEARCH_BUDGET
from ..verification.experiments import EXPERIMENTS

GADGET_KINDS = ("even-ds", "sat-2p4", "claw-1in3", "subdiv4")
GENERATORS = ("path", "cycle", "star", "complete", "random")


class Method(typing.NamedTuple):
    name: str
    k: int = 0


def parse_method(text: str) -> Method:
    """
    Parses the --method value: auto, oracle, criterion, p4free, p5free or
    p4kp3=K.
    """
    if text in ("auto", "oracle", "criterion", "p4free", "p5free"):
        return Method(text)
    if text.startswith("p4kp3="):
        try:
            k = int(text.split("=", 1)[1])
        except ValueError:
            k = -1
        if k >= 0:
            return Method("p4kp3", k)
    msg = f"invalid method '{text}'"
    raise argparse.ArgumentTypeError(msg)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        msg = f"expected a positive integer, got {value}"
        raise argparse.ArgumentTypeError(msg)
    return value


def create_default_argument_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tdcontract",
        description="Total domination and edge contractions: exact oracle,"
        " polynomial-time solvers, hardness instances.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log to stderr.")
    parser.add_argument(
        "--budget",
        type=_positive,
        default=DEFAULT_SEARCH_BUDGET,
        help=f"Node limit of the exact search (default {DEFAULT_SEARCH_BUDGET}).",
    )
    # accepted after the subcommand as well; SUPPRESS keeps the top-level value
    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument(
        "--budget",
        type=_positive,
        default=argparse.SUPPRESS,
        help="Node limit of the exact search.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    gammat = commands.add_parser(
        "gammat", help="Total domination number.", parents=[budget]
    )
    gammat.add_argument("path", help="Edge list file.")
    gammat.add_argument(
        "--witness", action="store_true", help="Also print a minimum TDS."
    )

    gamma = commands.add_parser("gamma", help="Domination number.", parents=[budget])
    gamma.add_argument("path", help="Edge list file.")

    decide = commands.add_parser(
        "decide",
        help="Can a single contraction reduce the total domination number?",
        parents=[budget],
    )
    decide.add_argument("path", help="Edge list file.")
    decide.add_argument(
        "--method",
        type=parse_method,
        default=Method("auto"),
        help="auto, oracle, criterion, p4free, p5free or p4kp3=K (default auto).",
    )
    decide.add_argument("--hint", type=str, help="Edge list of a forbidden pattern H.")
    decide.add_argument(
        "--witness", action="store_true", help="Also print a reducing edge."
    )

    ct = commands.add_parser(
        "ct", help="Minimum number of contractions.", parents=[budget]
    )
    ct.add_argument("path", help="Edge list file.")
    ct.add_argument("--max-depth", type=_positive, default=3)

    classify = commands.add_parser("classify-h", help="Complexity on H-free graphs.")
    classify.add_argument("path", help="Edge list of H.")

    compile_ = commands.add_parser(
        "compile", help="Build a hardness instance.", parents=[budget]
    )
    compile_.add_argument("kind", choices=GADGET_KINDS)
    compile_.add_argument("input", help="Edge list (even-ds, subdiv4) or DIMACS cnf.")
    compile_.add_argument("output", help="Edge list of the instance.")
    compile_.add_argument("--ell", type=_positive, help="Bound 2l for even-ds.")
    compile_.add_argument(
        "--trust-promise", action="store_true", help="Skip the check of gamma >= 4."
    )
    compile_.add_argument("--rounds", type=_positive, default=1, help="subdiv4 rounds.")
    compile_.add_argument(
        "--max-cycle", type=int, help="subdiv4: remove all cycles up to this length."
    )
    compile_.add_argument("--roles", type=str, help="Role map (default OUTPUT.roles).")
    compile_.add_argument(
        "--verify", action="store_true", help="Check the promises of the instance."
    )
    compile_.add_argument("--json", type=str, help="Write the report as json to file.")

    lemma = commands.add_parser(
        "verify-lemma", help="Randomized cross-checks.", parents=[budget]
    )
    lemma.add_argument("experiment", choices=list(EXPERIMENTS))
    lemma.add_argument("--n", type=_positive, help="Maximal number of vertices.")
    lemma.add_argument("--samples", type=_positive, help="Number of instances.")
    lemma.add_argument("--seed", type=int, default=0)
    lemma.add_argument(
        "--p", type=float, nargs=2, metavar=("LOW", "HIGH"), help="Edge probabilities."
    )
    lemma.add_argument("--json", type=str, help="Write the result as json to file.")

    gen = commands.add_parser("gen", help="Print a graph as edge list.")
    gen.add_argument("family", choices=GENERATORS)
    gen.add_argument("n", type=_positive)
    gen.add_argument("--p", type=float, default=0.5, help="Edge probability (random).")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output", type=str, help="Write to file instead.")
    return parser


def parse_arguments(
    argv: typing.Optional[typing.Sequence[str]] = None,
    parser: typing.Optional[argparse.ArgumentParser] = None,
) -> argparse.Namespace:
    """
    Parse CLI arguments.
    :param argv: The arguments without the program name (default sys.argv).
    :return: The parsed arguments.
    """
    parser = create_default_argument_parser() if parser is None else parser
    args = parser.parse_args(argv)
    if args.command == "compile":
        if args.kind == "even-ds" and args.ell is None:
            parser.error("compile even-ds requires --ell")
        if args.roles is None:
            args.roles = args.output + ".roles"
    return args
