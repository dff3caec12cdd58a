import typing

from rich.console import Console
from rich.table import Table

from ..verification.experiments import ExperimentResult
from ..verification.outcome import Status
from ..verification.report import VerificationReport

_STATUS_STYLE = {
    Status.CONFIRMED: "green",
    Status.REFUTED: "bold red",
    Status.BUDGET_EXCEEDED: "yellow",
    Status.ERROR: "bold red",
}


class RichPrinter:
    """
    Prints verification reports and experiment results as tables.
    """

    def __init__(self, console: typing.Optional[Console] = None):
        self.console = Console(stderr=True) if console is None else console

    def print_report(self, report: VerificationReport):
        gadget = report.gadget
        table = Table(
            title=f"{gadget.kind}: {gadget.graph.n} vertices, {gadget.graph.num_edges()} edges",
            expand=True,
        )
        table.add_column("Check")
        table.add_column("Property")
        table.add_column("Status")
        table.add_column("Details")
        for outcome in report.outcomes:
            style = _STATUS_STYLE[outcome.status]
            table.add_row(
                outcome.check,
                outcome.prop,
                f"[{style}]{outcome.status}[/{style}]",
                outcome.message,
            )
        self.console.print(table)
        self.console.print(f"Verdict: [bold]{report.verdict()}[/bold]")

    def print_experiment(self, result: ExperimentResult, description: str = ""):
        table = Table(title=f"{result.name}: {description}", expand=True)
        table.add_column("Samples", justify="right")
        table.add_column("Disagreements", justify="right")
        table.add_column("Skipped (budget)", justify="right")
        table.add_row(str(result.samples), str(result.disagreements), str(result.skipped))
        self.console.print(table)
        if result.counterexample is not None:
            self.console.rule("First counterexample")
            self.console.print(result.message or "")
            self.console.print(result.counterexample, markup=False)
