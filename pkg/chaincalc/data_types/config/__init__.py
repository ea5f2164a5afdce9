from chaincalc.data_types.config.convergence import ConvergenceConfig
from chaincalc.data_types.config.finite_difference import FDConfig
from chaincalc.data_types.config.flow import FlowConfig
from chaincalc.data_types.config.verify import DEFAULT_TOLERANCES, VerifyConfig

__all__ = [
    "ConvergenceConfig",
    "DEFAULT_TOLERANCES",
    "FDConfig",
    "FlowConfig",
    "VerifyConfig",
]
