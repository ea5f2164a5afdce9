from chaincalc.flow.evolving import evolve, swept_chain, trace_chain
from chaincalc.flow.integrator import affine_flow, flow_point, rk4_step
from chaincalc.flow.theorems import (
    TimeForm,
    flow_leibniz_verify,
    ftc_flow_verify,
    leibniz_verify,
    refinement_table,
    reynolds_verify,
    stokes_flow_verify,
)

__all__ = [
    "TimeForm",
    "affine_flow",
    "evolve",
    "flow_leibniz_verify",
    "flow_point",
    "ftc_flow_verify",
    "leibniz_verify",
    "refinement_table",
    "reynolds_verify",
    "rk4_step",
    "stokes_flow_verify",
    "swept_chain",
    "trace_chain",
]
