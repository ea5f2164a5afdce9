"""
Arithmetic on scalar fields.

Results stay symbolic whenever every operand is a ``SymbolicField``;
otherwise derived fields compose the parent oracles and carry the smallest
remaining depth budget, so exhausted budgets are reported at construction.
"""

import logging
from itertools import product
from math import comb
from typing import List, Optional, Sequence, Tuple

import numpy as np
import sympy as sp

from chaincalc.exceptions import DerivativeBudgetError, DimensionMismatchError
from chaincalc.fields.callback import ConstantField
from chaincalc.fields.symbolic import SymbolicField, coordinate_symbols
from chaincalc.interfaces.scalar_field_abc import ScalarFieldABC

_log = logging.getLogger(__name__)


def _min_budget(fields: Sequence[ScalarFieldABC]) -> Optional[int]:
    budgets = [f.depth_budget for f in fields if f.depth_budget is not None]
    return min(budgets) if budgets else None


def _as_sympy_number(value: float) -> sp.Expr:
    if float(value).is_integer():
        return sp.Integer(int(value))
    return sp.Float(value)


def constant_field(value: float, dim: int) -> SymbolicField:
    return SymbolicField(_as_sympy_number(value), dim)


def zero_field(dim: int) -> SymbolicField:
    return SymbolicField(sp.Integer(0), dim)


class SumField(ScalarFieldABC):
    def __init__(self, terms: Sequence[Tuple[float, ScalarFieldABC]], dim: int) -> None:
        super().__init__(dim)
        self.terms = [(float(c), f) for c, f in terms if c != 0.0 and not f.is_zero()]

    @property
    def depth_budget(self) -> Optional[int]:
        return _min_budget([f for _, f in self.terms])

    def _partial(self, order: tuple, point: np.ndarray) -> float:
        return sum(c * f.partial(order, point) for c, f in self.terms)

    def is_zero(self) -> bool:
        return not self.terms


class ProductField(ScalarFieldABC):
    """Pointwise product with derivatives from the Leibniz rule."""

    def __init__(self, left: ScalarFieldABC, right: ScalarFieldABC) -> None:
        super().__init__(left.dim)
        self.left = left
        self.right = right

    @property
    def depth_budget(self) -> Optional[int]:
        return _min_budget([self.left, self.right])

    def _partial(self, order: tuple, point: np.ndarray) -> float:
        return sum(
            weight * self.left.partial(a, point) * self.right.partial(rest, point)
            for weight, a, rest in leibniz_terms(order)
        )

    def is_zero(self) -> bool:
        return self.left.is_zero() or self.right.is_zero()


class PartialField(ScalarFieldABC):
    """∂_axis of a parent field, consuming one level of its depth budget."""

    def __init__(self, base: ScalarFieldABC, axis: int) -> None:
        super().__init__(base.dim)
        budget = base.depth_budget
        if budget is not None and budget < 1:
            raise DerivativeBudgetError(1, budget, type(base).__name__)
        self.base = base
        self.axis = axis

    @property
    def depth_budget(self) -> Optional[int]:
        budget = self.base.depth_budget
        return None if budget is None else budget - 1

    def _partial(self, order: tuple, point: np.ndarray) -> float:
        shifted = list(order)
        shifted[self.axis] += 1
        return self.base.partial(tuple(shifted), point)

    def is_zero(self) -> bool:
        return self.base.constant_value() is not None


class LiftedField(ScalarFieldABC):
    """A field on R^k read from coordinates ``offset .. offset + k`` of R^n."""

    def __init__(self, base: ScalarFieldABC, offset: int, dim: int) -> None:
        super().__init__(dim)
        if offset < 0 or offset + base.dim > dim:
            raise DimensionMismatchError(
                f"cannot place a field on R^{base.dim} at offset {offset} in R^{dim}"
            )
        self.base = base
        self.offset = offset

    @property
    def depth_budget(self) -> Optional[int]:
        return self.base.depth_budget

    def _partial(self, order: tuple, point: np.ndarray) -> float:
        lo, hi = self.offset, self.offset + self.base.dim
        if any(order[:lo]) or any(order[hi:]):
            return 0.0
        return self.base.partial(order[lo:hi], point[lo:hi])

    def is_zero(self) -> bool:
        return self.base.is_zero()


def _all_symbolic(fields: Sequence[ScalarFieldABC]) -> bool:
    return all(isinstance(f, SymbolicField) for f in fields)


def add_fields(terms: Sequence[Tuple[float, ScalarFieldABC]]) -> ScalarFieldABC:
    """The linear combination Σ c_i f_i."""
    if not terms:
        raise ValueError("terms must not be empty")
    dim = terms[0][1].dim
    for _, f in terms:
        if f.dim != dim:
            raise DimensionMismatchError(f"fields on R^{f.dim} and R^{dim}")
    fields = [f for _, f in terms]
    if _all_symbolic(fields):
        expr = sp.Integer(0)
        for c, f in terms:
            assert isinstance(f, SymbolicField)
            expr += _as_sympy_number(c) * f.expr
        return SymbolicField(sp.expand(expr), dim)
    constants = [f.constant_value() for f in fields]
    if all(v is not None for v in constants):
        return ConstantField(sum(c * v for (c, _), v in zip(terms, constants)), dim)  # type: ignore[operator]
    return SumField(terms, dim)


def multiply_fields(left: ScalarFieldABC, right: ScalarFieldABC) -> ScalarFieldABC:
    if left.dim != right.dim:
        raise DimensionMismatchError(f"fields on R^{left.dim} and R^{right.dim}")
    if isinstance(left, SymbolicField) and isinstance(right, SymbolicField):
        return SymbolicField(sp.expand(left.expr * right.expr), left.dim)
    if left.is_zero() or right.is_zero():
        return zero_field(left.dim)
    lc, rc = left.constant_value(), right.constant_value()
    if lc is not None:
        return add_fields([(lc, right)])
    if rc is not None:
        return add_fields([(rc, left)])
    return ProductField(left, right)


def differentiate(field: ScalarFieldABC, axis: int) -> ScalarFieldABC:
    """∂f/∂x_axis as a field; raises ``DerivativeBudgetError`` eagerly."""
    if not 0 <= axis < field.dim:
        raise DimensionMismatchError(f"axis {axis} outside R^{field.dim}")
    if isinstance(field, SymbolicField):
        return SymbolicField(sp.diff(field.expr, field.symbols[axis]), field.dim)
    if field.constant_value() is not None:
        return zero_field(field.dim)
    return PartialField(field, axis)


def lift_field(field: ScalarFieldABC, offset: int, dim: int) -> ScalarFieldABC:
    """Pull a field on a coordinate block back along the projection R^n -> R^k."""
    if isinstance(field, SymbolicField):
        target = coordinate_symbols(dim)
        mapping = {s: target[offset + i] for i, s in enumerate(field.symbols)}
        return SymbolicField(field.expr.xreplace(mapping), dim)
    return LiftedField(field, offset, dim)


def substitute(field: SymbolicField, exprs: Sequence[sp.Expr], dim: int) -> SymbolicField:
    """The composite f∘F for symbolic components F_i in the coordinates of R^dim."""
    mapping = dict(zip(field.symbols, exprs))
    return SymbolicField(field.expr.xreplace(mapping), dim)


def leibniz_terms(order: tuple) -> List[Tuple[int, tuple, tuple]]:
    """(binomial weight, a, m - a) for every a ≤ m, used by product rules."""
    out = []
    for split in product(*(range(m + 1) for m in order)):
        weight = 1
        for m, a in zip(order, split):
            weight *= comb(m, a)
        out.append((weight, tuple(split), tuple(m - a for m, a in zip(order, split))))
    return out
