"""
Chain operators against their dual form operators,
∫_{T J} ω = ∫_J T* ω, on random chains and polynomial forms.
"""

import logging
from functools import partial
from typing import Callable, List, Tuple

import numpy as np
import sympy as sp

from chaincalc.chains import DiracChain
from chaincalc.data_types.report import Case
from chaincalc.factories.suite_factory import register_suite
from chaincalc.fields.smooth_map import SmoothMap
from chaincalc.fields.symbolic import coordinate_symbols
from chaincalc.forms import Form, d, flat_wedge, integrate, interior, lie, pullback, star
from chaincalc.interfaces.suite_abc import CaseTask, SuiteABC
from chaincalc.operators import (
    boundary,
    extrude,
    mult,
    perp_chain,
    prederiv,
    pushforward,
    retract,
)
from chaincalc.sampling import (
    as_finite_difference,
    random_chain,
    random_field,
    random_form,
    random_polynomial,
    random_scalar,
)

_log = logging.getLogger(__name__)

Pairing = Tuple[float, float]


def pair(
    chain_op: Callable[[DiracChain], DiracChain],
    form_op: Callable[[Form], Form],
    chain: DiracChain,
    w: Form,
) -> Pairing:
    """(∫_{T J} ω, ∫_J T* ω)."""
    return integrate(w, chain_op(chain)), integrate(form_op(w), chain)


def random_map(rng: np.random.Generator, dim: int) -> SmoothMap:
    """A near-identity polynomial map x ↦ x + q(x)/8 of R^n."""
    xs = coordinate_symbols(dim)
    return SmoothMap.from_expressions(
        [x + random_polynomial(rng, dim, 2, 2) / sp.Integer(8) for x in xs], dim
    )


@register_suite
class DualitySuite(SuiteABC):
    """
    E_V/i_V, E_V†/V♭∧, P_V/L_V, ∂/d, ⊥/⋆, m_f/f· and F_*/F^* with relative
    errors. With ``oracle="fd"`` the forms only expose values and all
    derivatives come from central differences.
    """

    NAME = "duality"
    DEFAULT_SAMPLES = 40
    MAX_DIM = 3

    def _form(self, dim: int, grade: int) -> Form:
        w = random_form(self.rng, dim, grade)
        return as_finite_difference(w) if self.config.oracle == "fd" else w

    def _chain(self, dim: int, grade: int, max_order: int) -> DiracChain:
        if self.config.oracle == "fd":
            max_order = min(max_order, 1)
        return random_chain(self.rng, dim, grade, max_order)

    def tasks(self) -> List[CaseTask]:
        tasks: List[CaseTask] = []
        rng = self.rng
        for i in range(self.samples):
            dim = int(rng.integers(1, self.MAX_DIM + 1))
            V = random_field(rng, dim)
            f = random_scalar(rng, dim)
            F = random_map(rng, dim)
            # (name, chain operator, dual, chain grade, form grade, max order)
            specs = []
            k = int(rng.integers(0, dim))
            specs.append(("extrude_interior", partial(extrude, V), partial(interior, V), k, k + 1, 1))
            k = int(rng.integers(1, dim + 1))
            specs.append(("retract_flat", partial(retract, V), partial(flat_wedge, V), k, k - 1, 1))
            k = int(rng.integers(0, dim + 1))
            specs.append(("prederiv_lie", partial(prederiv, V), partial(lie, V), k, k, 1))
            k = int(rng.integers(1, dim + 1))
            specs.append(("boundary_d", boundary, d, k, k - 1, 2))
            k = int(rng.integers(0, dim + 1))
            specs.append(("perp_star", perp_chain, star, k, dim - k, 2))
            k = int(rng.integers(0, dim + 1))
            specs.append(("mult_scale", partial(mult, f), partial(Form.times_field, field=f), k, k, 2))
            k = int(rng.integers(0, dim + 1))
            specs.append(("pushforward_pullback", partial(pushforward, F), partial(pullback, F), k, k, 0))
            for name, chain_op, form_op, chain_grade, form_grade, max_order in specs:
                chain = self._chain(dim, chain_grade, max_order)
                w = self._form(dim, form_grade)
                tasks.append(
                    self._task(
                        f"{name}/{i:04d}",
                        partial(pair, chain_op, form_op, chain, w),
                        dim,
                        chain_grade,
                    )
                )
        return tasks

    def _task(self, case_id: str, fn: Callable[[], Pairing], dim: int, grade: int) -> CaseTask:
        def run() -> Case:
            lhs, rhs = fn()
            return self.case(case_id, lhs, rhs, relative=True, dim=dim, grade=grade)

        return run
