"""
Cartesian wedge identities on random pairs of chains:

    ∂(J ×̂ K) = ∂J ×̂ K + (-1)^k J ×̂ ∂K
    ∫_{J ×̂ K} π1*ω ∧ π2*η = ∫_J ω · ∫_K η
"""

import logging
from functools import partial
from typing import Any, Dict, List, Tuple

from chaincalc.chains import DiracChain
from chaincalc.data_types.report import Case
from chaincalc.factories.suite_factory import register_suite
from chaincalc.forms import Form, integrate
from chaincalc.interfaces.suite_abc import CaseTask, SuiteABC, chain_residual
from chaincalc.operators import boundary
from chaincalc.product import cartesian_wedge, product_form
from chaincalc.sampling import random_chain, random_form

_log = logging.getLogger(__name__)


def boundary_leibniz(J: DiracChain, K: DiracChain) -> float:
    sign = -1.0 if J.grade % 2 else 1.0
    lhs = boundary(cartesian_wedge(J, K))
    rhs = cartesian_wedge(boundary(J), K) + cartesian_wedge(J, boundary(K)) * sign
    return chain_residual(lhs, rhs)


def fubini(J: DiracChain, K: DiracChain, w: Form, eta: Form) -> Tuple[float, float]:
    product = integrate(product_form(w, eta), cartesian_wedge(J, K))
    return product, integrate(w, J) * integrate(eta, K)


@register_suite
class CartesianSuite(SuiteABC):
    NAME = "cartesian"
    DEFAULT_SAMPLES = 500
    MAX_DIM = 2

    def tasks(self) -> List[CaseTask]:
        tasks: List[CaseTask] = []
        rng = self.rng
        for i in range(self.samples):
            n1 = int(rng.integers(1, self.MAX_DIM + 1))
            n2 = int(rng.integers(1, self.MAX_DIM + 1))
            k = int(rng.integers(0, n1 + 1))
            l = int(rng.integers(0, n2 + 1))
            J = random_chain(rng, n1, k, 2, terms=3)
            K = random_chain(rng, n2, l, 2, terms=3)
            params = {"n1": n1, "n2": n2, "k": k, "l": l}
            w, eta = random_form(rng, n1, k), random_form(rng, n2, l)
            tasks.append(partial(self._leibniz_case, f"boundary_leibniz/{i:04d}", J, K, params))
            tasks.append(partial(self._fubini_case, f"fubini/{i:04d}", J, K, w, eta, params))
        return tasks

    def _leibniz_case(self, case_id: str, J: DiracChain, K: DiracChain, params: Dict[str, Any]) -> Case:
        return self.case(case_id, boundary_leibniz(J, K), **params)

    def _fubini_case(
        self,
        case_id: str,
        J: DiracChain,
        K: DiracChain,
        w: Form,
        eta: Form,
        params: Dict[str, Any],
    ) -> Case:
        lhs, rhs = fubini(J, K, w, eta)
        return self.case(case_id, lhs, rhs, relative=True, **params)
