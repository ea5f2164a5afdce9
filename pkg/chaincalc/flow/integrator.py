"""
Flow maps of vector fields with their Jacobians.

Affine fields V(x) = A x + b flow exactly: φ_t is read off the exponential
of the augmented matrix [[A, b], [0, 0]]. Other fields integrate the
trajectory and its Jacobian together: the augmented state (x, M) solves
dx/dt = V(x), dM/dt = DV(x) M with M(0) = Id, so the Jacobian carries the
same fourth-order accuracy as the point.
"""

import logging
from math import ceil
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import expm

from chaincalc.data_types.config.flow import FlowConfig
from chaincalc.exceptions import DimensionMismatchError, FlowEscapeError
from chaincalc.fields.vector_field import VectorFieldSpec

_log = logging.getLogger(__name__)

Dynamics = Callable[[np.ndarray, float], np.ndarray]


def rk4_step(f: Dynamics, t: float, x: np.ndarray, h: float) -> np.ndarray:
    """Takes a single 4th-order step."""
    k1 = f(x, t)
    k2 = f(x + 0.5 * h * k1, t + 0.5 * h)
    k3 = f(x + 0.5 * h * k2, t + 0.5 * h)
    k4 = f(x + h * k3, t + h)
    return x + h * (k1 + 2 * k2 + 2 * k3 + k4) / 6.0


def affine_flow(V: VectorFieldSpec, t: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    The time-t flow of an affine field as (M, c) with φ_t(x) = M x + c.

    The caller guarantees ``V.is_affine()``.
    """
    n = V.dim
    origin = np.zeros(n)
    generator = np.zeros((n + 1, n + 1))
    generator[:n, :n] = V.jacobian(origin)
    generator[:n, n] = V.value(origin)
    flow = expm(t * generator)
    return flow[:n, :n], flow[:n, n]


def _augmented(V: VectorFieldSpec) -> Dynamics:
    n = V.dim

    def dynamics(state: np.ndarray, _t: float) -> np.ndarray:
        x = state[:n]
        m = state[n:].reshape(n, n)
        return np.concatenate([V.value(x), (V.jacobian(x) @ m).reshape(-1)])

    return dynamics


def _check_bound(p: np.ndarray, image: np.ndarray, t: float, cfg: FlowConfig) -> None:
    if cfg.bound is not None and float(np.linalg.norm(image)) > cfg.bound:
        raise FlowEscapeError(
            f"trajectory from {p.tolist()} left the radius-{cfg.bound} ball at t = {t:.6g}"
        )


def flow_point(
    V: VectorFieldSpec,
    point: Sequence[float],
    t: float,
    config: Optional[FlowConfig] = None,
    affine: Optional[bool] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    φ_t(p) and its Jacobian Dφ_t(p).

    Constant and affine fields flow exactly; anything else takes
    ceil(|t| / step) equal RK4 steps. Pass ``affine`` when the caller has
    already classified V.

    Raises:
        FlowEscapeError: if the trajectory leaves the ball of radius
            ``config.bound``.
    """
    cfg = config or FlowConfig()
    p = np.asarray(point, dtype=float).reshape(-1)
    if p.shape[0] != V.dim:
        raise DimensionMismatchError(f"point of length {p.shape[0]} for a field on R^{V.dim}")
    n = V.dim
    constant = V.constant_value()
    if constant is not None:
        return p + t * constant, np.eye(n)
    if t == 0.0:
        return p.copy(), np.eye(n)
    if V.is_affine() if affine is None else affine:
        matrix, offset = affine_flow(V, t)
        image = matrix @ p + offset
        _check_bound(p, image, t, cfg)
        return image, matrix
    steps = max(1, ceil(abs(t) / cfg.step))
    h = t / steps
    f = _augmented(V)
    state = np.concatenate([p, np.eye(n).reshape(-1)])
    time = 0.0
    for i in range(steps):
        state = rk4_step(f, time, state, h)
        time += h
        _check_bound(p, state[:n], (i + 1) * h, cfg)
    _log.debug("flow_point: %d RK4 steps of %.3g", steps, h)
    return state[:n], state[n:].reshape(n, n)
