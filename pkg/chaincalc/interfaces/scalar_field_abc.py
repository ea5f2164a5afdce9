from abc import ABC, abstractmethod
from typing import Optional, Sequence

import numpy as np

from chaincalc.exceptions import DerivativeBudgetError, DimensionMismatchError


class ScalarFieldABC(ABC):
    """
    A real function on R^n with a mixed-partial-derivative oracle.

    ``partial((m_1, …, m_n), p)`` returns ∂^m f(p). ``depth_budget`` bounds
    the total derivative order the oracle supports; ``None`` means unlimited.
    """

    def __init__(self, dim: int) -> None:
        if dim < 0:
            raise ValueError("dim must be non-negative")
        self.dim = dim

    @property
    def depth_budget(self) -> Optional[int]:
        return None

    @abstractmethod
    def _partial(self, order: tuple, point: np.ndarray) -> float:
        """
        Evaluate ∂^order f at ``point`` (already validated).
        """
        pass

    def partial(self, order: Sequence[int], point: Sequence[float]) -> float:
        degree = tuple(int(m) for m in order)
        p = np.asarray(point, dtype=float).reshape(-1)
        if len(degree) != self.dim or p.shape[0] != self.dim:
            raise DimensionMismatchError(
                f"field on R^{self.dim} evaluated with order {degree} at a "
                f"point of length {p.shape[0]}"
            )
        total = sum(degree)
        budget = self.depth_budget
        if budget is not None and total > budget:
            raise DerivativeBudgetError(total, budget, type(self).__name__)
        return float(self._partial(degree, p))

    def __call__(self, point: Sequence[float]) -> float:
        return self.partial((0,) * self.dim, point)

    def is_zero(self) -> bool:
        """True only when the field is known to vanish identically."""
        return False

    def constant_value(self) -> Optional[float]:
        """The value of a field known to be constant, otherwise ``None``."""
        return None

    def differentiate(self, axis: int) -> "ScalarFieldABC":
        from chaincalc.fields.algebra import differentiate

        return differentiate(self, axis)

    def __add__(self, other: "ScalarFieldABC") -> "ScalarFieldABC":
        from chaincalc.fields.algebra import add_fields

        return add_fields([(1.0, self), (1.0, other)])

    def __sub__(self, other: "ScalarFieldABC") -> "ScalarFieldABC":
        from chaincalc.fields.algebra import add_fields

        return add_fields([(1.0, self), (-1.0, other)])

    def __neg__(self) -> "ScalarFieldABC":
        from chaincalc.fields.algebra import add_fields

        return add_fields([(-1.0, self)])

    def __mul__(self, other: "ScalarFieldABC | float") -> "ScalarFieldABC":
        from chaincalc.fields.algebra import add_fields, multiply_fields

        if isinstance(other, ScalarFieldABC):
            return multiply_fields(self, other)
        return add_fields([(float(other), self)])

    def __rmul__(self, other: float) -> "ScalarFieldABC":
        from chaincalc.fields.algebra import add_fields

        return add_fields([(float(other), self)])
