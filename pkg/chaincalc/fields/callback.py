from typing import Callable, Optional

import numpy as np

from chaincalc.interfaces.scalar_field_abc import ScalarFieldABC

PartialOracle = Callable[[tuple, np.ndarray], float]


class CallbackField(ScalarFieldABC):
    """
    A scalar field backed by user callbacks.

    Without ``partial_fn`` only values are available (depth budget 0).
    With it, ``partial_fn(order, point)`` is trusted up to ``max_order``.
    """

    def __init__(
        self,
        fn: Callable[[np.ndarray], float],
        dim: int,
        partial_fn: Optional[PartialOracle] = None,
        max_order: Optional[int] = None,
    ) -> None:
        super().__init__(dim)
        self.fn = fn
        self.partial_fn = partial_fn
        self._budget = max_order if partial_fn is not None else 0

    @property
    def depth_budget(self) -> Optional[int]:
        return self._budget

    def _partial(self, order: tuple, point: np.ndarray) -> float:
        if not any(order):
            return float(self.fn(point))
        assert self.partial_fn is not None
        return float(self.partial_fn(order, point))


class ConstantField(ScalarFieldABC):
    """A field known to be constant; all derivatives vanish."""

    def __init__(self, value: float, dim: int) -> None:
        super().__init__(dim)
        self.value = float(value)

    def _partial(self, order: tuple, point: np.ndarray) -> float:
        return 0.0 if any(order) else self.value

    def is_zero(self) -> bool:
        return self.value == 0.0

    def constant_value(self) -> Optional[float]:
        return self.value

    def __repr__(self) -> str:
        return f"ConstantField({self.value!r}, dim={self.dim})"
