"""
Verification of constructed instances and randomized cross-checks against
the exact oracle.
"""
# flake8: noqa F401
from .checks import (
    ClassMembershipCheck,
    ConnectivityCheck,
    GirthCheck,
    IsolatedGadgetCheck,
    TotalDominationCheck,
    VertexCountCheck,
    WitnessCheck,
)
from .experiments import (
    EXPERIMENTS,
    CographExperiment,
    ContractionBoundExperiment,
    CriterionExperiment,
    EvenDsExperiment,
    Experiment,
    ExperimentResult,
    P4P3FreeExperiment,
    P5FreeExperiment,
    SubdivisionExperiment,
    TwoP4Experiment,
    run_experiment,
)
from .gadget_verifier import GadgetVerifier, verify_gadget_equivalence
from .outcome import Outcome, Status
from .property_check import PropertyCheck
from .report import VerificationReport
from .sampling import (
    GraphFilter,
    HFreeFilter,
    MinGammaFilter,
    MinTotalGammaFilter,
    RandomGraphSampler,
    random_cograph,
)

__all__ = (
    "EXPERIMENTS",
    "ClassMembershipCheck",
    "CographExperiment",
    "ConnectivityCheck",
    "ContractionBoundExperiment",
    "CriterionExperiment",
    "EvenDsExperiment",
    "Experiment",
    "ExperimentResult",
    "GadgetVerifier",
    "GirthCheck",
    "GraphFilter",
    "HFreeFilter",
    "IsolatedGadgetCheck",
    "MinGammaFilter",
    "MinTotalGammaFilter",
    "Outcome",
    "P4P3FreeExperiment",
    "P5FreeExperiment",
    "PropertyCheck",
    "RandomGraphSampler",
    "Status",
    "SubdivisionExperiment",
    "TotalDominationCheck",
    "TwoP4Experiment",
    "VerificationReport",
    "VertexCountCheck",
    "WitnessCheck",
    "random_cograph",
    "run_experiment",
    "verify_gadget_equivalence",
)
