"""
Evolving chains J_t = φ_{t*} J and their time traces.
"""

import logging
from typing import Dict, Optional, Tuple

import numpy as np

from chaincalc.chains import ChainBuilder, DiracChain, translate
from chaincalc.data_types.chain import Point
from chaincalc.data_types.config.flow import FlowConfig
from chaincalc.exceptions import (
    DimensionMismatchError,
    FlowEscapeError,
    UnsupportedOrderError,
)
from chaincalc.fields.vector_field import VectorFieldSpec
from chaincalc.flow.integrator import affine_flow, flow_point
from chaincalc.operators import extrude, push_element

_log = logging.getLogger(__name__)


def evolve(
    chain: DiracChain,
    V: VectorFieldSpec,
    t: float,
    config: Optional[FlowConfig] = None,
) -> DiracChain:
    """
    Push ``chain`` through the time-t flow of V.

    Constant and affine fields move exactly. Chains of order ≥ 1 are
    supported for affine fields only, whose flow maps are affine.

    Raises:
        UnsupportedOrderError: for order ≥ 1 under a nonaffine field.
        FlowEscapeError: if a point leaves the ``config.bound`` ball.
    """
    if chain.dim != V.dim:
        raise DimensionMismatchError(f"field on R^{V.dim} moving a chain in R^{chain.dim}")
    constant = V.constant_value()
    if constant is not None:
        return translate(t * constant, chain)
    if t == 0.0:
        return chain
    affine = V.is_affine()
    if chain.order > 0 and not affine:
        raise UnsupportedOrderError(
            f"evolving order-{chain.order} chains needs an affine field"
        )
    builder = ChainBuilder(chain.dim, chain.grade)
    if affine:
        matrix, offset = affine_flow(V, t)
        cfg = config or FlowConfig()
        for (point, degree, index), coeff in chain.items():
            image = matrix @ np.asarray(point, dtype=float) + offset
            if cfg.bound is not None and float(np.linalg.norm(image)) > cfg.bound:
                raise FlowEscapeError(f"image of {point} left the radius-{cfg.bound} ball")
            builder.add_chain(push_element(image, matrix, degree, index, coeff))
        return builder.build()
    cache: Dict[Point, Tuple[np.ndarray, np.ndarray]] = {}
    for (point, degree, index), coeff in chain.items():
        if point not in cache:
            cache[point] = flow_point(V, point, t, config, affine=False)
        image, jac = cache[point]
        builder.add_chain(push_element(image, jac, degree, index, coeff))
    return builder.build()


def trace_chain(
    chain: DiracChain,
    V: VectorFieldSpec,
    a: float,
    b: float,
    config: Optional[FlowConfig] = None,
) -> DiracChain:
    """
    The trace {J_t}_a^b as the midpoint quadrature Σ_m Δt · evolve(J, t_m).

    Normalized so ∫_{trace} ω = ∫_a^b (∫_{J_t} ω) dt up to the quadrature
    rule; the grade is that of J.
    """
    cfg = config or FlowConfig()
    n = cfg.intervals
    dt = (b - a) / n
    builder = ChainBuilder(chain.dim, chain.grade)
    for m in range(n):
        builder.add_chain(evolve(chain, V, a + (m + 0.5) * dt, cfg), dt)
    return builder.build()


def swept_chain(
    chain: DiracChain,
    V: VectorFieldSpec,
    a: float,
    b: float,
    config: Optional[FlowConfig] = None,
) -> DiracChain:
    """
    The (k+1)-chain swept out by J over [a, b], (-1)^k E_V(trace).

    For a unit segment along e1 under the rotation field over [0, π/2] this
    is the quarter disk, with ∫ dV = π/4.
    """
    sign = -1.0 if chain.grade % 2 else 1.0
    return extrude(V, trace_chain(chain, V, a, b, config)) * sign
