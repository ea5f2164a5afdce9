import logging
from typing import List, Optional, Sequence

import numpy as np
import sympy as sp

from chaincalc.exceptions import DimensionMismatchError
from chaincalc.fields.algebra import (
    add_fields,
    constant_field,
    differentiate,
    multiply_fields,
)
from chaincalc.fields.symbolic import SymbolicField, coordinate_symbols
from chaincalc.interfaces.scalar_field_abc import ScalarFieldABC

_log = logging.getLogger(__name__)


class VectorFieldSpec:
    """
    A vector field V = Σ f_i e_i given by coefficient scalar fields.

    Example:
    ```python
    rotation = VectorFieldSpec.from_expressions(["-x2", "x1"])
    rotation.value((1.0, 0.0))  # array([0., 1.])
    ```
    """

    def __init__(self, components: Sequence[ScalarFieldABC]) -> None:
        if not components:
            raise ValueError("components must not be empty")
        dim = len(components)
        for f in components:
            if f.dim != dim:
                raise DimensionMismatchError(
                    f"component on R^{f.dim} in a vector field on R^{dim}"
                )
        self.dim = dim
        self.components: List[ScalarFieldABC] = list(components)

    @classmethod
    def constant(cls, vector: Sequence[float]) -> "VectorFieldSpec":
        values = [float(v) for v in vector]
        return cls([constant_field(v, len(values)) for v in values])

    @classmethod
    def basis(cls, dim: int, axis: int) -> "VectorFieldSpec":
        return cls.constant([1.0 if i == axis else 0.0 for i in range(dim)])

    @classmethod
    def from_expressions(cls, exprs: Sequence[str | sp.Expr]) -> "VectorFieldSpec":
        """Build from mini-language strings or sympy expressions in x1..xn."""
        from chaincalc.expression import parse_expression

        dim = len(exprs)
        return cls(
            [
                SymbolicField(
                    parse_expression(e, dim) if isinstance(e, str) else e, dim
                )
                for e in exprs
            ]
        )

    @classmethod
    def linear(cls, matrix: Sequence[Sequence[float]], offset: Sequence[float] | None = None) -> "VectorFieldSpec":
        """The affine field V(x) = A x + b."""
        a = np.asarray(matrix, dtype=float)
        dim = a.shape[0]
        if a.shape != (dim, dim):
            raise DimensionMismatchError(f"matrix of shape {a.shape} is not square")
        b = np.zeros(dim) if offset is None else np.asarray(offset, dtype=float)
        xs = coordinate_symbols(dim)
        return cls(
            [
                SymbolicField(
                    sum((sp.nsimplify(a[i, j]) * xs[j] for j in range(dim)), sp.nsimplify(b[i])),
                    dim,
                )
                for i in range(dim)
            ]
        )

    @classmethod
    def rotation(cls) -> "VectorFieldSpec":
        """The planar rotation field (-x2, x1)."""
        return cls.linear([[0.0, -1.0], [1.0, 0.0]])

    def value(self, point: Sequence[float]) -> np.ndarray:
        return np.array([f(point) for f in self.components], dtype=float)

    def jacobian(self, point: Sequence[float]) -> np.ndarray:
        """DV(p) with entry (i, j) = ∂f_i/∂x_j."""
        out = np.zeros((self.dim, self.dim))
        for i, f in enumerate(self.components):
            for j in range(self.dim):
                order = tuple(1 if k == j else 0 for k in range(self.dim))
                out[i, j] = f.partial(order, point)
        return out

    def constant_value(self) -> Optional[np.ndarray]:
        values = [f.constant_value() for f in self.components]
        if any(v is None for v in values):
            return None
        return np.array(values, dtype=float)

    def is_affine(self) -> bool:
        return all(
            isinstance(f, SymbolicField) and f.is_polynomial(1) for f in self.components
        )

    @property
    def depth_budget(self) -> Optional[int]:
        budgets = [f.depth_budget for f in self.components if f.depth_budget is not None]
        return min(budgets) if budgets else None

    def bracket(self, other: "VectorFieldSpec") -> "VectorFieldSpec":
        """
        Lie bracket [self, other] = D(other)·self - D(self)·other.
        """
        if other.dim != self.dim:
            raise DimensionMismatchError(f"fields on R^{self.dim} and R^{other.dim}")
        comps = []
        for i in range(self.dim):
            terms = []
            for j in range(self.dim):
                terms.append(
                    (1.0, multiply_fields(self.components[j], differentiate(other.components[i], j)))
                )
                terms.append(
                    (-1.0, multiply_fields(other.components[j], differentiate(self.components[i], j)))
                )
            comps.append(add_fields(terms))
        return VectorFieldSpec(comps)

    def scaled(self, factor: float) -> "VectorFieldSpec":
        return VectorFieldSpec([add_fields([(factor, f)]) for f in self.components])

    def __add__(self, other: "VectorFieldSpec") -> "VectorFieldSpec":
        if other.dim != self.dim:
            raise DimensionMismatchError(f"fields on R^{self.dim} and R^{other.dim}")
        return VectorFieldSpec(
            [add_fields([(1.0, a), (1.0, b)]) for a, b in zip(self.components, other.components)]
        )

    def __repr__(self) -> str:
        return f"VectorFieldSpec({self.components!r})"
