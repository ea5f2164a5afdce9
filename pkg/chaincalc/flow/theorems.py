"""
Numerical harnesses for the flow theorems.

Each harness evaluates both sides of one identity for a concrete chain,
field and form and returns a ``FlowReport``; the caller decides on a
tolerance.
"""

import logging
from dataclasses import replace
from typing import Callable, Mapping, Optional, Sequence

import sympy as sp

from chaincalc.chains import DiracChain
from chaincalc.data_types.config.flow import FlowConfig
from chaincalc.data_types.flow import FlowReport, RefinementRow
from chaincalc.expression import parse_expression
from chaincalc.fields.symbolic import SymbolicField
from chaincalc.fields.vector_field import VectorFieldSpec
from chaincalc.flow.evolving import evolve, trace_chain
from chaincalc.forms import Form, d, integrate, interior, lie
from chaincalc.operators import boundary, extrude, prederiv

_log = logging.getLogger(__name__)

TIME = sp.Symbol("t", real=True)

ChainPath = Callable[[float], DiracChain]


class TimeForm:
    """
    A t-dependent form ω_t with symbolic coefficients in x1..xn and t.

    Example:
    ```python
    w = TimeForm(2, 1, {(1,): "t*x1"})  # t·x dy
    w.at(0.5)        # 0.5·x dy
    w.time_derivative(0.5)  # x dy
    ```
    """

    def __init__(self, dim: int, grade: int, coeffs: Mapping[Sequence[int], str | sp.Expr]) -> None:
        self.dim = dim
        self.grade = grade
        self.exprs = {
            tuple(i): parse_expression(e, dim, (TIME,)) if isinstance(e, str) else sp.sympify(e)
            for i, e in coeffs.items()
        }

    @classmethod
    def static(cls, w: Form) -> "TimeForm":
        exprs = {}
        for index, field in w.items():
            if not isinstance(field, SymbolicField):
                raise TypeError("static time forms need symbolic coefficients")
            exprs[index] = field.expr
        return cls(w.dim, w.grade, exprs)

    @classmethod
    def parse(cls, text: str, dim: int) -> "TimeForm":
        """A form spec whose coefficients may also use ``t``."""
        from chaincalc.expression import parse_form_terms

        grade, exprs = parse_form_terms(text, dim, (TIME,))
        return cls(dim, grade, exprs)

    def _form(self, t: float, derivative: bool) -> Form:
        coeffs = {}
        for index, expr in self.exprs.items():
            if derivative:
                expr = sp.diff(expr, TIME)
            coeffs[index] = SymbolicField(expr.subs(TIME, sp.nsimplify(t)), self.dim)
        return Form(self.dim, self.grade, coeffs)

    def at(self, t: float) -> Form:
        return self._form(t, False)

    def time_derivative(self, t: float) -> Form:
        """∂ω_t/∂t at time t."""
        return self._form(t, True)


def ftc_flow_verify(
    chain: DiracChain,
    V: VectorFieldSpec,
    w: Form,
    a: float,
    b: float,
    config: Optional[FlowConfig] = None,
) -> FlowReport:
    """∫_{J_b} ω - ∫_{J_a} ω against ∫_{trace} L_V ω."""
    cfg = config or FlowConfig()
    lhs = integrate(w, evolve(chain, V, b, cfg)) - integrate(w, evolve(chain, V, a, cfg))
    rhs = integrate(lie(V, w), trace_chain(chain, V, a, b, cfg))
    _log.info("ftc flow: lhs=%.12g rhs=%.12g", lhs, rhs)
    return FlowReport("ftc", lhs, rhs, cfg)


def stokes_flow_verify(
    chain: DiracChain,
    V: VectorFieldSpec,
    w: Form,
    a: float,
    b: float,
    config: Optional[FlowConfig] = None,
) -> FlowReport:
    """∫_{∂J_b} ω - ∫_{∂J_a} ω against ∫_{trace} d L_V ω."""
    cfg = config or FlowConfig()
    lhs = integrate(w, boundary(evolve(chain, V, b, cfg))) - integrate(
        w, boundary(evolve(chain, V, a, cfg))
    )
    rhs = integrate(d(lie(V, w)), trace_chain(chain, V, a, b, cfg))
    _log.info("stokes flow: lhs=%.12g rhs=%.12g", lhs, rhs)
    return FlowReport("stokes", lhs, rhs, cfg)


def refinement_table(
    harness: Callable[..., FlowReport],
    chain: DiracChain,
    V: VectorFieldSpec,
    w: Form,
    a: float,
    b: float,
    intervals: Sequence[int],
    config: Optional[FlowConfig] = None,
) -> FlowReport:
    """
    Run a harness at each trace resolution; ratio = err_N / err_{N_prev}.

    The returned report is the finest run with the table attached.
    """
    cfg = config or FlowConfig()
    rows = []
    last = None
    prev_err = None
    for n in intervals:
        last = harness(chain, V, w, a, b, replace(cfg, intervals=n))
        err = last.abs_err
        ratio = err / prev_err if prev_err else None
        rows.append(RefinementRow(n, last.lhs, last.rhs, err, ratio))
        prev_err = err
    if last is None:
        raise ValueError("intervals must not be empty")
    return replace(last, refinement=rows)


def _flow_path(chain: DiracChain, V: VectorFieldSpec, cfg: FlowConfig) -> ChainPath:
    return lambda t: evolve(chain, V, t, cfg)


def leibniz_verify(
    path: ChainPath,
    w: TimeForm,
    t: float,
    config: Optional[FlowConfig] = None,
    V: Optional[VectorFieldSpec] = None,
) -> FlowReport:
    """
    d/dt ∫_{J_t} ω_t against ∫_{J_t} ∂ω_t/∂t + ∫_{∂J_t/∂t} ω_t.

    The left side and the chain derivative ∂J_t/∂t are central differences
    with ``config.time_step``. When J_t is the flow of V the chain
    derivative is also taken as P_V J_t and reported as ``rhs_prederiv``.
    """
    cfg = config or FlowConfig()
    h = cfg.time_step
    lhs = (integrate(w.at(t + h), path(t + h)) - integrate(w.at(t - h), path(t - h))) / (2 * h)
    here = path(t)
    moving = (path(t + h) - path(t - h)) * (1.0 / (2 * h))
    form = w.at(t)
    static_part = integrate(w.time_derivative(t), here)
    rhs = static_part + integrate(form, moving)
    values = {"static_part": static_part}
    if V is not None:
        values["rhs_prederiv"] = static_part + integrate(form, prederiv(V, here))
    return FlowReport("leibniz", lhs, rhs, cfg, values)


def flow_leibniz_verify(
    chain: DiracChain,
    V: VectorFieldSpec,
    w: TimeForm,
    t: float,
    config: Optional[FlowConfig] = None,
) -> FlowReport:
    cfg = config or FlowConfig()
    return leibniz_verify(_flow_path(chain, V, cfg), w, t, cfg, V)


def reynolds_verify(
    chain: DiracChain,
    V: VectorFieldSpec,
    w: TimeForm,
    t: float,
    config: Optional[FlowConfig] = None,
) -> FlowReport:
    """
    Transport identity for J_t = φ_{t*} J:

        d/dt ∫_{J_t} ω_t = ∫_{J_t} ∂ω_t/∂t + ∫_{∂J_t} i_V ω_t + ∫_{E_V J_t} dω_t.

    ``lhs`` is the central-difference derivative, ``rhs`` the three-term
    sum; the two-term form ∫_{J_t} (∂_t + L_V) ω_t is reported as
    ``two_term``.
    """
    cfg = config or FlowConfig()
    h = cfg.time_step
    lhs = (
        integrate(w.at(t + h), evolve(chain, V, t + h, cfg))
        - integrate(w.at(t - h), evolve(chain, V, t - h, cfg))
    ) / (2 * h)
    here = evolve(chain, V, t, cfg)
    form = w.at(t)
    dt_part = integrate(w.time_derivative(t), here)
    boundary_part = 0.0
    if chain.grade > 0:
        boundary_part = integrate(interior(V, form), boundary(here))
    extrusion_part = 0.0
    if chain.grade < chain.dim:
        extrusion_part = integrate(d(form), extrude(V, here))
    rhs = dt_part + boundary_part + extrusion_part
    two_term = dt_part + integrate(lie(V, form), here)
    values = {
        "dt_part": dt_part,
        "boundary_part": boundary_part,
        "extrusion_part": extrusion_part,
        "two_term": two_term,
    }
    return FlowReport("reynolds", lhs, rhs, cfg, values)
