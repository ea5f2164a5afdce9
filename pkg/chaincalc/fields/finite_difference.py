import logging
from itertools import product
from math import comb
from typing import Callable, Optional

import numpy as np

from chaincalc.data_types.config.finite_difference import FDConfig
from chaincalc.interfaces.scalar_field_abc import ScalarFieldABC

_log = logging.getLogger(__name__)


def central_partial(
    fn: Callable[[np.ndarray], float],
    order: tuple,
    point: np.ndarray,
    config: FDConfig,
) -> float:
    """
    Mixed partial ∂^order fn(point) by a tensor product of central stencils.

    Along an axis with multiplicity m the stencil is
    ``Σ_j C(m, j) (-1)^j f(p + (m - 2j) h e_i) / (2h)^m``, which is second
    order accurate in ``h``.
    """
    total = sum(order)
    if total == 0:
        return float(fn(point))
    h = config.step(total, float(np.linalg.norm(point)))
    _log.debug("central difference %s at h=%.3g", order, h)
    axes = [(axis, m) for axis, m in enumerate(order) if m]
    ranges = [range(m + 1) for _, m in axes]
    acc = 0.0
    for js in product(*ranges):
        weight = 1.0
        shifted = point.copy()
        for (axis, m), j in zip(axes, js):
            weight *= comb(m, j) * (-1.0 if j % 2 else 1.0)
            shifted[axis] += (m - 2 * j) * h
        acc += weight * float(fn(shifted))
    return acc / (2.0 * h) ** total


class FiniteDifferenceField(ScalarFieldABC):
    """
    A scalar field whose derivatives come from nested central differences.

    Values are exact callback evaluations; derivatives of total order ``s``
    are O(h²) accurate and limited to ``config.max_depth``.
    """

    def __init__(
        self,
        fn: Callable[[np.ndarray], float],
        dim: int,
        config: Optional[FDConfig] = None,
    ) -> None:
        super().__init__(dim)
        self.fn = fn
        self.config = config or FDConfig()

    @property
    def depth_budget(self) -> Optional[int]:
        return self.config.max_depth

    def _partial(self, order: tuple, point: np.ndarray) -> float:
        return central_partial(self.fn, order, point, self.config)
