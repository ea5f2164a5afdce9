import logging
import threading
from typing import Callable, Dict, Optional, Sequence, Tuple

import numpy as np
import sympy as sp

from chaincalc.interfaces.scalar_field_abc import ScalarFieldABC

_log = logging.getLogger(__name__)

_SYMBOL_CACHE: Dict[int, Tuple[sp.Symbol, ...]] = {}


def coordinate_symbols(dim: int) -> Tuple[sp.Symbol, ...]:
    """The real symbols x1, …, xn shared by every symbolic field in R^n."""
    if dim not in _SYMBOL_CACHE:
        _SYMBOL_CACHE[dim] = tuple(sp.Symbol(f"x{i + 1}", real=True) for i in range(dim))
    return _SYMBOL_CACHE[dim]


class SymbolicField(ScalarFieldABC):
    """
    A scalar field given by a sympy expression in x1, …, xn.

    Partial derivatives are exact: each requested order is differentiated
    symbolically once and compiled with ``lambdify``.

    Example:
    ```python
    x, y = coordinate_symbols(2)
    f = SymbolicField(x**2 * y, 2)
    f.partial((1, 0), (3.0, 2.0))  # 12.0
    ```
    """

    def __init__(self, expr: sp.Expr | float | int, dim: int) -> None:
        super().__init__(dim)
        self.symbols = coordinate_symbols(dim)
        self.expr = sp.sympify(expr)
        extra = self.expr.free_symbols - set(self.symbols)
        if extra:
            raise ValueError(
                f"expression {self.expr} has symbols {sorted(map(str, extra))} "
                f"outside x1..x{dim}"
            )
        self._compiled: Dict[tuple, Callable[..., float]] = {}
        self._lock = threading.Lock()

    def derivative_expr(self, order: Sequence[int]) -> sp.Expr:
        pairs = [(s, m) for s, m in zip(self.symbols, order) if m]
        return sp.diff(self.expr, *pairs) if pairs else self.expr

    def _compiled_for(self, order: tuple) -> Callable[..., float]:
        fn = self._compiled.get(order)
        if fn is None:
            with self._lock:
                fn = self._compiled.get(order)
                if fn is None:
                    expr = self.derivative_expr(order)
                    fn = sp.lambdify(self.symbols, expr, modules="math")
                    self._compiled[order] = fn
                    _log.debug("compiled ∂^%s of %s", order, self.expr)
        return fn

    def _partial(self, order: tuple, point: np.ndarray) -> float:
        return float(self._compiled_for(order)(*point.tolist()))

    def is_zero(self) -> bool:
        return self.expr.is_zero is True

    def constant_value(self) -> Optional[float]:
        if self.expr.free_symbols:
            return None
        return float(self.expr)

    def is_polynomial(self, max_degree: Optional[int] = None) -> bool:
        if not self.expr.is_polynomial(*self.symbols):
            return False
        if max_degree is None:
            return True
        if self.is_zero():
            return True
        return sp.Poly(self.expr, *self.symbols).total_degree() <= max_degree

    def __repr__(self) -> str:
        return f"SymbolicField({self.expr}, dim={self.dim})"
