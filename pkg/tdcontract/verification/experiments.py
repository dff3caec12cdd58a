"""
Randomized cross-checks of the characterizations and constructions against
the exact oracle. Every experiment draws seeded instances, compares two
ways of computing the same answer, and reports the first disagreement.
"""
import abc
import logging
import random
import typing
from dataclasses import dataclass

from ..errors import SearchBudgetExceeded
from ..gadgets.cnf import CnfFormula
from ..gadgets.even_ds import build_even_ds_gadget
from ..gadgets.subdivision import build_subdivision_gadget
from ..gadgets.two_p4 import build_2p4_gadget
from ..graph.edge_list import format_edge_list
from ..graph.generators import path
from ..graph.patterns import p4_plus_kp3
from ..oracle.contraction import ct_gamma_t, decide_by_definition, has_min_tds_with_p3
from ..oracle.cover_search import DEFAULT_SEARCH_BUDGET
from ..oracle.domination import gamma_t
from ..solvers.cograph import decide_p4_free
from ..solvers.p4_kp3_free import decide_p4_kp3_free
from ..solvers.p5_free import decide_p5_free
from .sampling import (
    GraphFilter,
    GraphGenerator,
    HFreeFilter,
    MinGammaFilter,
    MinTotalGammaFilter,
    RandomGraphSampler,
    random_cograph,
)

_log = logging.getLogger("TdContract")


@dataclass
class ExperimentResult:
    name: str
    samples: int = 0
    disagreements: int = 0
    skipped: int = 0
    counterexample: typing.Optional[str] = None
    message: typing.Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.disagreements == 0

    def serialize(self) -> dict:
        return {
            "name": self.name,
            "samples": self.samples,
            "disagreements": self.disagreements,
            "skipped": self.skipped,
            "counterexample": self.counterexample,
            "message": self.message,
        }


class Experiment(abc.ABC):
    name = ""
    description = ""
    n_min = 2
    default_n = 8
    default_samples = 100
    default_p_range: typing.Tuple[float, float] = (0.2, 0.8)

    def __init__(
        self,
        n: typing.Optional[int] = None,
        samples: typing.Optional[int] = None,
        seed: typing.Optional[int] = None,
        budget: typing.Optional[int] = DEFAULT_SEARCH_BUDGET,
        p_range: typing.Optional[typing.Tuple[float, float]] = None,
        log: typing.Callable = print,
    ):
        self.n = self.default_n if n is None else n
        self.samples = self.default_samples if samples is None else samples
        self.seed = seed
        self.budget = budget
        self.p_range = p_range or self.default_p_range
        self.log = log

    @abc.abstractmethod
    def check(self, instance: typing.Any) -> typing.Optional[str]:
        """
        :return: A description of the disagreement, or None.
        """

    def filters(self) -> typing.List[GraphFilter]:
        return []

    def generator(self) -> typing.Optional[GraphGenerator]:
        return None

    def instances(self) -> typing.Iterable[typing.Any]:
        sampler = RandomGraphSampler(
            min(self.n_min, self.n),
            self.n,
            self.p_range,
            seed=self.seed,
            generator=self.generator(),
            log=self.log,
        )
        for graph_filter in self.filters():
            sampler.add_filter(graph_filter)
        return sampler.sample(self.samples)

    def format_instance(self, instance: typing.Any) -> str:
        return format_edge_list(instance)

    def run(self) -> ExperimentResult:
        result = ExperimentResult(self.name)
        for instance in self.instances():
            try:
                disagreement = self.check(instance)
            except SearchBudgetExceeded as e:
                _log.debug("Skipping an instance: %s", e)
                result.skipped += 1
                continue
            result.samples += 1
            if disagreement is not None:
                result.disagreements += 1
                if result.counterexample is None:
                    result.counterexample = self.format_instance(instance)
                    result.message = disagreement
                    self.log(f"Disagreement: {disagreement}")
            if result.samples % 100 == 0:
                _log.info("%s: %d instances checked.", self.name, result.samples)
        return result


class CriterionExperiment(Experiment):
    name = "thm1"
    description = "reduction by one contraction vs. a minimum TDS containing a P3"
    default_n = 9
    default_samples = 1_000

    def check(self, instance: typing.Any) -> typing.Optional[str]:
        by_definition = decide_by_definition(instance, self.budget)
        by_criterion = has_min_tds_with_p3(instance, self.budget)
        if by_definition != by_criterion:
            return f"definition says {by_definition}, criterion says {by_criterion}"
        return None


class ContractionBoundExperiment(Experiment):
    name = "ct3"
    description = "at most three contractions reduce gamma_t >= 3"
    n_min = 3
    default_n = 8
    default_samples = 200

    def filters(self) -> typing.List[GraphFilter]:
        return [MinTotalGammaFilter(3, self.budget)]

    def check(self, instance: typing.Any) -> typing.Optional[str]:
        result = ct_gamma_t(instance, 3, self.budget)
        if result.is_irreducible:
            return "three contractions do not reduce gamma_t"
        return None


class EvenDsExperiment(Experiment):
    name = "claim1"
    description = "gamma_t of the even-ds instance equals min(gamma, 2l)"
    n_min = 8
    default_n = 10
    default_samples = 10
    default_p_range = (0.1, 0.3)

    def filters(self) -> typing.List[GraphFilter]:
        return [MinGammaFilter(4, self.budget)]

    def check(self, instance: typing.Any) -> typing.Optional[str]:
        ell = 1 + instance.num_edges() % 2
        gadget = build_even_ds_gadget(instance, ell)
        value = gamma_t(gadget.graph, self.budget)
        if value != gadget.expected_gamma_t:
            return f"l={ell}: gamma_t = {value}, expected {gadget.expected_gamma_t}"
        return None


class SubdivisionExperiment(Experiment):
    name = "claim9"
    description = "4-subdivision adds 2 per edge to gamma_t and keeps the answer"
    n_min = 3
    default_n = 7
    default_samples = 100
    default_p_range = (0.15, 0.5)

    def check(self, instance: typing.Any) -> typing.Optional[str]:
        gadget = build_subdivision_gadget(instance, budget=self.budget)
        value = gamma_t(gadget.graph, self.budget)
        if value != gadget.expected_gamma_t:
            return f"gamma_t = {value}, expected {gadget.expected_gamma_t}"
        decision = has_min_tds_with_p3(gadget.graph, self.budget)
        if decision != gadget.expected_decision:
            return f"decision {decision} after subdivision, {gadget.expected_decision} before"
        return None


class TwoP4Experiment(Experiment):
    """
    Random formulas over three variables. The instance of a satisfiable
    formula has gamma_t = 6 and no contraction reduces it, the instance of
    an unsatisfiable one has gamma_t > 6.
    """

    name = "gadget"
    description = "gamma_t of the 2P4 instance is 2|X| iff the formula is satisfiable"
    default_n = 8
    default_samples = 50
    num_vars = 3

    def instances(self) -> typing.Iterable[typing.Any]:
        rng = random.Random(self.seed)
        produced = 0
        while produced < self.samples:
            clauses = []
            for _ in range(rng.randint(1, max(1, self.n))):
                variables = rng.sample(range(1, self.num_vars + 1), rng.randint(1, 3))
                clauses.append(tuple(v if rng.random() < 0.5 else -v for v in variables))
            phi = CnfFormula(self.num_vars, tuple(clauses))
            if all(phi.occurrences(var) for var in phi.variables()):
                produced += 1
                yield phi

    def format_instance(self, instance: typing.Any) -> str:
        return instance.to_dimacs()

    def check(self, instance: typing.Any) -> typing.Optional[str]:
        gadget = build_2p4_gadget(instance)
        target = gadget.meta["target_gamma_t"]
        satisfiable = gadget.meta["satisfiable"]
        value = gamma_t(gadget.graph, self.budget)
        assert value is not None
        if value < target or (value == target) != satisfiable:
            return f"gamma_t = {value}, target {target}, satisfiable: {satisfiable}"
        decision = has_min_tds_with_p3(gadget.graph, self.budget)
        if decision == satisfiable:
            return f"decision {decision} for a formula with satisfiable = {satisfiable}"
        return None


class P5FreeExperiment(Experiment):
    name = "p5free"
    description = "P5-free solver vs. the exact oracle"
    default_n = 10
    default_samples = 200
    default_p_range = (0.3, 0.9)

    def filters(self) -> typing.List[GraphFilter]:
        return [HFreeFilter([path(5)])]

    def check(self, instance: typing.Any) -> typing.Optional[str]:
        fast = decide_p5_free(instance, verify=False)
        exact = decide_by_definition(instance, self.budget)
        if fast != exact:
            return f"solver says {fast}, oracle says {exact}"
        return None


class P4P3FreeExperiment(Experiment):
    name = "p4kp3"
    description = "(P4+P3)-free solver vs. the exact oracle"
    default_n = 10
    default_samples = 100
    default_p_range = (0.4, 0.95)

    def filters(self) -> typing.List[GraphFilter]:
        return [HFreeFilter([p4_plus_kp3(1)])]

    def check(self, instance: typing.Any) -> typing.Optional[str]:
        fast = decide_p4_kp3_free(instance, 1, verify=False, budget=self.budget)
        exact = decide_by_definition(instance, self.budget)
        if fast != exact:
            return f"solver says {fast}, oracle says {exact}"
        return None


class CographExperiment(Experiment):
    name = "cograph"
    description = "connected cographs have gamma_t = 2 and are no-instances"
    default_n = 10
    default_samples = 200

    def generator(self) -> typing.Optional[GraphGenerator]:
        return lambda n, rng: random_cograph(n, rng)

    def check(self, instance: typing.Any) -> typing.Optional[str]:
        value = gamma_t(instance, self.budget)
        if value != 2:
            return f"gamma_t = {value}"
        if decide_by_definition(instance, self.budget) or decide_p4_free(instance):
            return "a contraction reduces gamma_t"
        return None


EXPERIMENTS: typing.Dict[str, typing.Type[Experiment]] = {
    experiment.name: experiment
    for experiment in (
        CriterionExperiment,
        EvenDsExperiment,
        SubdivisionExperiment,
        ContractionBoundExperiment,
        TwoP4Experiment,
        P5FreeExperiment,
        P4P3FreeExperiment,
        CographExperiment,
    )
}


def run_experiment(name: str, **kwargs) -> ExperimentResult:
    """
    :param name: One of the keys of EXPERIMENTS.
    :param kwargs: n, samples, seed, budget, p_range and log.
    """
    if name not in EXPERIMENTS:
        msg = f"Unknown experiment '{name}'. Choose from {', '.join(EXPERIMENTS)}."
        raise ValueError(msg)
    return EXPERIMENTS[name](**kwargs).run()
