import logging
from typing import Callable, List, Optional, Sequence

import numpy as np
import sympy as sp

from chaincalc.data_types.config.finite_difference import FDConfig
from chaincalc.exceptions import DimensionMismatchError
from chaincalc.fields.finite_difference import central_partial
from chaincalc.fields.symbolic import coordinate_symbols

_log = logging.getLogger(__name__)

JacobianOracle = Callable[[np.ndarray], np.ndarray]


class SmoothMap:
    """
    A map F: R^n -> R^m with a Jacobian oracle.

    Symbolic maps (``from_expressions``, ``linear``, ``identity``) keep their
    component expressions, so pullbacks of symbolic forms stay exact.
    Callback maps use ``jacobian_fn`` when given, otherwise central
    differences with ``fd_config``.
    """

    def __init__(
        self,
        dim_in: int,
        dim_out: int,
        value_fn: Callable[[np.ndarray], Sequence[float]],
        jacobian_fn: Optional[JacobianOracle] = None,
        *,
        affine: bool = False,
        exprs: Optional[Sequence[sp.Expr]] = None,
        fd_config: Optional[FDConfig] = None,
    ) -> None:
        if dim_in < 1 or dim_out < 1:
            raise ValueError("dim_in and dim_out must be at least one")
        self.dim_in = dim_in
        self.dim_out = dim_out
        self.value_fn = value_fn
        self.jacobian_fn = jacobian_fn
        self.affine = affine
        self.exprs: Optional[List[sp.Expr]] = list(exprs) if exprs is not None else None
        self.fd_config = fd_config or FDConfig()

    @classmethod
    def from_expressions(cls, exprs: Sequence[str | sp.Expr], dim_in: int) -> "SmoothMap":
        from chaincalc.expression import parse_expression

        parsed = [
            parse_expression(e, dim_in) if isinstance(e, str) else sp.sympify(e)
            for e in exprs
        ]
        xs = coordinate_symbols(dim_in)
        value = sp.lambdify(xs, parsed, modules="math")
        jac_exprs = sp.Matrix(parsed).jacobian(xs)
        jac = sp.lambdify(xs, jac_exprs, modules="numpy")
        affine = all(
            e.is_polynomial(*xs) and (e == 0 or sp.Poly(e, *xs).total_degree() <= 1)
            for e in parsed
        )
        return cls(
            dim_in,
            len(parsed),
            lambda p: value(*np.asarray(p, dtype=float).tolist()),
            lambda p: np.asarray(
                jac(*np.asarray(p, dtype=float).tolist()), dtype=float
            ).reshape(len(parsed), dim_in),
            affine=affine,
            exprs=parsed,
        )

    @classmethod
    def linear(
        cls,
        matrix: Sequence[Sequence[float]],
        offset: Sequence[float] | None = None,
    ) -> "SmoothMap":
        """The affine map x ↦ M x + b."""
        m = np.asarray(matrix, dtype=float)
        if m.ndim != 2:
            raise DimensionMismatchError("matrix must be two-dimensional")
        b = np.zeros(m.shape[0]) if offset is None else np.asarray(offset, dtype=float)
        xs = coordinate_symbols(m.shape[1])
        exprs = [
            sum(
                (sp.nsimplify(m[i, j]) * xs[j] for j in range(m.shape[1])),
                sp.nsimplify(b[i]),
            )
            for i in range(m.shape[0])
        ]
        return cls(
            m.shape[1],
            m.shape[0],
            lambda p: m @ np.asarray(p, dtype=float) + b,
            lambda p: m.copy(),
            affine=True,
            exprs=exprs,
        )

    @classmethod
    def identity(cls, dim: int) -> "SmoothMap":
        return cls.linear(np.eye(dim))

    def value(self, point: Sequence[float]) -> np.ndarray:
        p = np.asarray(point, dtype=float).reshape(-1)
        if p.shape[0] != self.dim_in:
            raise DimensionMismatchError(
                f"map on R^{self.dim_in} evaluated at a point of length {p.shape[0]}"
            )
        return np.asarray(self.value_fn(p), dtype=float).reshape(self.dim_out)

    def jacobian(self, point: Sequence[float]) -> np.ndarray:
        p = np.asarray(point, dtype=float).reshape(-1)
        if self.jacobian_fn is not None:
            jac = np.asarray(self.jacobian_fn(p), dtype=float)
        else:
            jac = np.zeros((self.dim_out, self.dim_in))
            for j in range(self.dim_in):
                order = tuple(1 if k == j else 0 for k in range(self.dim_in))
                for i in range(self.dim_out):
                    jac[i, j] = central_partial(
                        lambda q, i=i: float(self.value(q)[i]), order, p, self.fd_config
                    )
        if jac.shape != (self.dim_out, self.dim_in):
            raise DimensionMismatchError(
                f"Jacobian of shape {jac.shape}, expected {(self.dim_out, self.dim_in)}"
            )
        return jac

    @property
    def is_symbolic(self) -> bool:
        return self.exprs is not None

    def __repr__(self) -> str:
        return f"SmoothMap(R^{self.dim_in} -> R^{self.dim_out}, affine={self.affine})"
