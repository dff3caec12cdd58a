import random
import typing
import unittest

from tdcontract.gadgets import (
    CnfFormula,
    build_2p4_gadget,
    build_clawfree_gadget,
    build_even_ds_gadget,
    cycle_free_instance,
)
from tdcontract.gadgets.gadget import GadgetOutput
from tdcontract.graph import cycle, linear_forest, path
from tdcontract.graph.patterns import is_h_free
from tdcontract.oracle import gamma_t
from tdcontract.verification import (
    CographExperiment,
    CriterionExperiment,
    EvenDsExperiment,
    GadgetVerifier,
    HFreeFilter,
    MinTotalGammaFilter,
    Outcome,
    P4P3FreeExperiment,
    PropertyCheck,
    RandomGraphSampler,
    Status,
    SubdivisionExperiment,
    TwoP4Experiment,
    VertexCountCheck,
    random_cograph,
    run_experiment,
    verify_gadget_equivalence,
)

SATISFIABLE = CnfFormula(3, ((1, 2, 3), (-1, 2, -3)))
TRIPLE_CLAUSE = CnfFormula(3, ((1, 2, 3), (1, 2, 3), (1, 2, 3)))


def statuses(report) -> typing.Dict[str, Status]:
    return {outcome.prop: outcome.status for outcome in report.outcomes}


class GadgetVerificationTest(unittest.TestCase):
    def test_even_ds(self):
        report = verify_gadget_equivalence(build_even_ds_gadget(path(10), 2))
        result = statuses(report)
        assert result["gamma_t"] == Status.CONFIRMED
        assert result["decision"] == Status.CONFIRMED
        assert result["P6-free"] == Status.CONFIRMED
        assert result["P5+P2-free"] == Status.CONFIRMED
        assert report.verdict() == "CONFIRMED"

    def test_two_p4(self):
        report = verify_gadget_equivalence(build_2p4_gadget(SATISFIABLE))
        result = statuses(report)
        assert result["gamma_t"] == Status.CONFIRMED
        assert result["decision"] == Status.CONFIRMED
        assert result["witness_tds"] == Status.CONFIRMED
        assert result["2P4-free"] == Status.CONFIRMED
        assert report.is_confirmed()

    def test_claw_free(self):
        report = verify_gadget_equivalence(build_clawfree_gadget(TRIPLE_CLAUSE), budget=20_000)
        result = statuses(report)
        assert result["gamma_t"] == Status.BUDGET_EXCEEDED
        assert result["n"] == Status.CONFIRMED
        assert result["claw-free"] == Status.CONFIRMED
        assert result["witness_tds"] == Status.CONFIRMED
        assert result["witness_size"] == Status.CONFIRMED
        assert result["witness_p3_free"] == Status.CONFIRMED
        assert result["variable_gadget_bound"] == Status.CONFIRMED
        assert result["clause_gadget_bound"] == Status.CONFIRMED
        assert report.verdict() == "INCOMPLETE"

    def test_cycle_free(self):
        report = verify_gadget_equivalence(cycle_free_instance(cycle(4), 10))
        assert statuses(report)["girth"] == Status.CONFIRMED
        assert statuses(report)["gamma_t"] == Status.CONFIRMED

    def test_refuted(self):
        gadget = build_2p4_gadget(SATISFIABLE)
        broken = GadgetOutput(gadget.graph, gadget.roles, gadget.kind, {"expected_n": 15})
        report = GadgetVerifier(log=lambda _: None).setup_default().verify(broken)
        assert report.get_outcomes(Status.REFUTED)[0].prop == "n"
        assert report.verdict() == "REFUTED"
        assert report.serialize()["verdict"] == "REFUTED"


class FailingCheck(PropertyCheck):
    def is_applicable(self, gadget):
        return True

    def check(self, gadget, budget):
        msg = "broken"
        raise RuntimeError(msg)


class AssertingCheck(FailingCheck):
    def check(self, gadget, budget):
        raise AssertionError


class GadgetVerifierTest(unittest.TestCase):
    def test_exception_becomes_error(self):
        verifier = GadgetVerifier(log=lambda _: None)
        verifier.add_check(FailingCheck())
        verifier.add_check(VertexCountCheck())
        report = verifier.verify(build_2p4_gadget(SATISFIABLE))
        assert report.get_outcomes(Status.ERROR)[0].message == "broken"
        assert len(report.get_outcomes(Status.CONFIRMED)) == 2
        assert report.is_refuted()

    def test_assertion_is_raised(self):
        verifier = GadgetVerifier(log=lambda _: None)
        verifier.add_check(AssertingCheck())
        with self.assertRaises(AssertionError):
            verifier.verify(build_2p4_gadget(SATISFIABLE))

    def test_outcome(self):
        outcome = Outcome("Check", "n", Status.CONFIRMED, "n = 3", 3, 3)
        assert outcome == Outcome("Check", "n", Status.REFUTED, "other")
        assert outcome.serialize()["status"] == "Confirmed"


class SamplerTest(unittest.TestCase):
    def test_deterministic(self):
        first = list(RandomGraphSampler(4, 8, seed=5, log=lambda _: None).sample(10))
        second = list(RandomGraphSampler(4, 8, seed=5, log=lambda _: None).sample(10))
        assert first == second
        assert all(4 <= g.n <= 8 and g.is_connected() for g in first)

    def test_filters(self):
        sampler = RandomGraphSampler(3, 8, seed=1, log=lambda _: None)
        sampler.add_filter(HFreeFilter([path(5)])).add_filter(MinTotalGammaFilter(3))
        graphs = list(sampler.sample(3))
        assert len(graphs) == 3
        for g in graphs:
            assert is_h_free(g, [path(5)])
            assert gamma_t(g) >= 3

    def test_cographs(self):
        rng = random.Random(2)
        for n in range(2, 12):
            g = random_cograph(n, rng)
            assert g.n == n and g.is_connected()
            assert is_h_free(g, [path(4)])

    def test_invalid(self):
        with self.assertRaises(ValueError):
            RandomGraphSampler(5, 4)
        with self.assertRaises(ValueError):
            RandomGraphSampler(2, 4, p_range=(0.0, 0.5))


class ExperimentTest(unittest.TestCase):
    def test_criterion(self):
        result = CriterionExperiment(n=6, samples=30, seed=1, log=lambda _: None).run()
        assert result.samples == 30
        assert result.passed

    def test_cograph(self):
        result = CographExperiment(n=8, samples=20, seed=3, log=lambda _: None).run()
        assert result.passed and result.samples == 20

    def test_two_p4(self):
        result = TwoP4Experiment(n=4, samples=4, seed=0, log=lambda _: None).run()
        assert result.passed and result.samples == 4

    def test_subdivision(self):
        result = SubdivisionExperiment(n=4, samples=3, seed=0, log=lambda _: None).run()
        assert result.passed

    def test_registry(self):
        result = run_experiment("p5free", n=6, samples=10, seed=0, log=lambda _: None)
        assert result.passed
        assert result.serialize()["name"] == "p5free"
        result = run_experiment("ct3", n=6, samples=5, seed=0, log=lambda _: None)
        assert result.passed
        with self.assertRaises(ValueError):
            run_experiment("unknown")

    def test_p4_p3_free(self):
        result = P4P3FreeExperiment(n=8, samples=10, seed=0, log=lambda _: None).run()
        assert result.passed and result.samples == 10

    def test_even_ds(self):
        experiment = EvenDsExperiment(log=lambda _: None)
        # nine edges give l=2, twelve edges give l=1
        assert experiment.check(path(10)) is None
        assert experiment.check(cycle(12)) is None

    def test_forest_sampling(self):
        # P4+P3-free samples are dense, the filter must still let some through
        sampler = RandomGraphSampler(4, 8, (0.5, 0.9), seed=0, log=lambda _: None)
        sampler.add_filter(HFreeFilter([linear_forest([4, 3])]))
        assert len(list(sampler.sample(5))) == 5
