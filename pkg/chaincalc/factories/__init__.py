from chaincalc.factories.convergence_factory import (
    THEOREM_REGISTRY,
    ConvergenceFactory,
    register_theorem,
)
from chaincalc.factories.demo_factory import DEMO_REGISTRY, DemoFactory, register_demo
from chaincalc.factories.suite_factory import SUITE_REGISTRY, SuiteFactory, register_suite

__all__ = [
    "ConvergenceFactory",
    "DEMO_REGISTRY",
    "DemoFactory",
    "SUITE_REGISTRY",
    "SuiteFactory",
    "THEOREM_REGISTRY",
    "register_demo",
    "register_suite",
    "register_theorem",
]
