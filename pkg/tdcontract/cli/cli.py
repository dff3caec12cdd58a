"""
The commands of the CLI. Verdicts go to stdout, one per line, everything
else (tables, logs, diagnostics) goes to stderr.
"""
import argparse
import json
import logging
import typing

from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from .. import dichotomy
from ..errors import SearchBudgetExceeded, TdContractError
from ..gadgets.claw_free import build_clawfree_gadget
from ..gadgets.cnf import CnfFormula
from ..gadgets.even_ds import build_even_ds_gadget
from ..gadgets.gadget import GadgetOutput
from ..gadgets.subdivision import build_subdivision_gadget, cycle_free_instance
from ..gadgets.two_p4 import build_2p4_gadget
from ..graph import generators
from ..graph.edge_list import format_edge_list, read_graph, write_graph
from ..graph.graph import Graph
from ..oracle.contraction import ct_gamma_t, find_reducing_edge, has_min_tds_with_p3
from ..oracle.domination import gamma, minimum_tds
from ..solvers.cograph import decide_p4_free
from ..solvers.dispatch import decide_auto
from ..solvers.membership import require_connected
from ..solvers.p4_kp3_free import decide_p4_kp3_free
from ..solvers.p5_free import decide_p5_free
from ..verification.experiments import EXPERIMENTS
from ..verification.gadget_verifier import verify_gadget_equivalence
from .arguments import parse_arguments
from .rich_printer import RichPrinter

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3


def _yes_no(answer: bool) -> str:
    return "YES" if answer else "NO"


class _Commands:
    def __init__(self, args: argparse.Namespace, console: Console):
        self.args = args
        self.console = console
        self.printer = RichPrinter(console)

    def log(self, message: str):
        if self.args.verbose:
            self.console.log(message)

    def gammat(self) -> int:
        g = read_graph(self.args.path)
        tds = minimum_tds(g, self.args.budget)
        if tds is None:
            print("NOTDS")
            return EXIT_OK
        print(len(tds))
        if self.args.witness:
            print(" ".join(str(v) for v in sorted(tds)))
        return EXIT_OK

    def gamma(self) -> int:
        print(gamma(read_graph(self.args.path), self.args.budget))
        return EXIT_OK

    def _decide(self, g: Graph) -> bool:
        method, budget = self.args.method, self.args.budget
        if method.name == "oracle":
            return find_reducing_edge(g, budget) is not None
        if method.name == "criterion":
            require_connected(g)
            return has_min_tds_with_p3(g, budget)
        if method.name == "p4free":
            return decide_p4_free(g)
        if method.name == "p5free":
            return decide_p5_free(g)
        if method.name == "p4kp3":
            return decide_p4_kp3_free(g, method.k, budget=budget)
        hint = read_graph(self.args.hint) if self.args.hint else None
        return decide_auto(g, hint, budget)

    def decide(self) -> int:
        g = read_graph(self.args.path)
        answer = self._decide(g)
        print(_yes_no(answer))
        if answer and self.args.witness:
            edge = find_reducing_edge(g, self.args.budget)
            assert edge is not None, "The solver and the oracle disagree."
            print(edge)
        return EXIT_OK

    def ct(self) -> int:
        g = read_graph(self.args.path)
        print(ct_gamma_t(g, self.args.max_depth, self.args.budget))
        return EXIT_OK

    def classify_h(self) -> int:
        classification = dichotomy.classify_h(read_graph(self.args.path))
        print(classification.describe())
        if classification.family is not None:
            print(" ".join(f"{key}={value}" for key, value in classification.family.items()))
        return EXIT_OK

    def _build(self) -> GadgetOutput:
        args = self.args
        if args.kind == "even-ds":
            return build_even_ds_gadget(read_graph(args.input), args.ell, args.trust_promise)
        if args.kind == "sat-2p4":
            return build_2p4_gadget(CnfFormula.read(args.input))
        if args.kind == "claw-1in3":
            return build_clawfree_gadget(CnfFormula.read(args.input))
        g = read_graph(args.input)
        if args.max_cycle is not None:
            return cycle_free_instance(g, args.max_cycle, args.budget)
        return build_subdivision_gadget(g, args.rounds, args.budget)

    def compile(self) -> int:
        gadget = self._build()
        write_graph(gadget.graph, self.args.output)
        gadget.write_role_map(self.args.roles)
        self.log(f"Wrote {gadget.graph.n} vertices to {self.args.output}.")
        if not self.args.verify:
            print(gadget.graph.n, gadget.graph.num_edges())
            return EXIT_OK
        report = verify_gadget_equivalence(gadget, self.args.budget, log=self.log)
        self.printer.print_report(report)
        print(report.verdict())
        if self.args.json:
            with open(self.args.json, "w") as f:
                json.dump(report.serialize(), f)
        return EXIT_FAILED if report.is_refuted() else EXIT_OK

    def verify_lemma(self) -> int:
        args = self.args
        experiment = EXPERIMENTS[args.experiment](
            n=args.n,
            samples=args.samples,
            seed=args.seed,
            budget=args.budget,
            p_range=tuple(args.p) if args.p else None,
            log=self.log,
        )
        result = experiment.run()
        self.printer.print_experiment(result, experiment.description)
        print("PASS" if result.passed else "FAIL", result.samples, result.disagreements)
        if args.json:
            with open(args.json, "w") as f:
                json.dump(result.serialize(), f)
        return EXIT_OK if result.passed else EXIT_FAILED

    def gen(self) -> int:
        args = self.args
        if args.family == "random":
            g = generators.random_connected(args.n, args.p, seed=args.seed)
        else:
            g = getattr(generators, args.family)(args.n)
        text = format_edge_list(g)
        if args.output:
            write_graph(g, args.output)
        else:
            print(text, end="")
        return EXIT_OK


def _setup_logging(verbose: bool, console: Console):
    logger = logging.getLogger("TdContract")
    if verbose and not any(isinstance(h, RichHandler) for h in logger.handlers):
        logger.addHandler(RichHandler(console=console))
        logger.setLevel(logging.DEBUG)


def cli_main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    """
    Runs the CLI.
    :param argv: The arguments without the program name (default sys.argv).
    :return: The exit status: 0 on success, 1 if a check found a
     disagreement, 2 on invalid input, 3 if the search budget was exhausted.
    """
    try:
        args = parse_arguments(argv)
    except SystemExit as e:
        return EXIT_INPUT_ERROR if e.code else EXIT_OK
    console = Console(stderr=True)
    _setup_logging(args.verbose, console)
    command = getattr(_Commands(args, console), args.command.replace("-", "_"))
    try:
        return command()
    except SearchBudgetExceeded as e:
        console.print(f"[bold red]error:[/bold red] {escape(str(e))}")
        return EXIT_BUDGET
    except (TdContractError, ValueError, OSError) as e:
        console.print(f"[bold red]error:[/bold red] {escape(str(e))}", highlight=False)
        return EXIT_INPUT_ERROR
