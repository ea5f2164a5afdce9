"""
Commutation relations of the vector-field operators on order-0 chains.

With [X, Y] = DY·X - DX·Y:

    [P_{V1}, P_{V2}] = P_{[V2, V1]}
    [E_{V2}, P_{V1}] = E_{[V1, V2]}
    [E_{V2}†, P_{V1}] = E†_{[V1, V2]}    for Killing V1
    [m_f, P_V] = m_{V f}
    Σ m_{φ_i} = Id                       for Σ φ_i = 1
"""

import logging
from functools import partial
from typing import Any, Callable, Dict, List

import numpy as np

from chaincalc.chains import DiracChain
from chaincalc.factories.suite_factory import register_suite
from chaincalc.fields.algebra import add_fields, constant_field, differentiate, multiply_fields
from chaincalc.fields.vector_field import VectorFieldSpec
from chaincalc.interfaces.scalar_field_abc import ScalarFieldABC
from chaincalc.interfaces.suite_abc import CaseTask, SuiteABC
from chaincalc.operators import commutator, extrude, mult, prederiv, retract
from chaincalc.sampling import dyadic, random_chain, random_field, random_scalar

_log = logging.getLogger(__name__)


def relative_residual(lhs: DiracChain, rhs: DiracChain) -> float:
    scale = max(1.0, lhs.norm_inf(), rhs.norm_inf())
    return (lhs - rhs).norm_inf() / scale


def directional(V: VectorFieldSpec, f: ScalarFieldABC) -> ScalarFieldABC:
    """V f = Σ V_i ∂_i f."""
    return add_fields(
        [(1.0, multiply_fields(c, differentiate(f, i))) for i, c in enumerate(V.components)]
    )


def killing_field(rng: np.random.Generator, dim: int) -> VectorFieldSpec:
    """x ↦ A x + b with A antisymmetric."""
    upper = np.triu(dyadic(rng, (dim, dim)), 1)
    return VectorFieldSpec.linear(upper - upper.T, dyadic(rng, dim))


def prederiv_bracket(V1: VectorFieldSpec, V2: VectorFieldSpec, chain: DiracChain) -> float:
    lhs = commutator(partial(prederiv, V1), partial(prederiv, V2), chain)
    return relative_residual(lhs, prederiv(V2.bracket(V1), chain))


def extrude_bracket(V1: VectorFieldSpec, V2: VectorFieldSpec, chain: DiracChain) -> float:
    lhs = commutator(partial(extrude, V2), partial(prederiv, V1), chain)
    return relative_residual(lhs, extrude(V1.bracket(V2), chain))


def retract_bracket(V1: VectorFieldSpec, V2: VectorFieldSpec, chain: DiracChain) -> float:
    lhs = commutator(partial(retract, V2), partial(prederiv, V1), chain)
    return relative_residual(lhs, retract(V1.bracket(V2), chain))


def mult_prederiv(f: ScalarFieldABC, V: VectorFieldSpec, chain: DiracChain) -> float:
    lhs = commutator(partial(mult, f), partial(prederiv, V), chain)
    return relative_residual(lhs, mult(directional(V, f), chain))


def partition_of_unity(phi: ScalarFieldABC, chain: DiracChain) -> float:
    rest = add_fields([(1.0, constant_field(1.0, chain.dim)), (-1.0, phi)])
    return relative_residual(mult(phi, chain) + mult(rest, chain), chain)


@register_suite
class CommutatorSuite(SuiteABC):
    NAME = "commutators"
    DEFAULT_SAMPLES = 60
    MAX_DIM = 3

    def tasks(self) -> List[CaseTask]:
        tasks: List[CaseTask] = []
        rng = self.rng
        for i in range(self.samples):
            dim = int(rng.integers(1, self.MAX_DIM + 1))
            V1 = random_field(rng, dim)
            V2 = random_field(rng, dim)
            K = killing_field(rng, dim)
            f = random_scalar(rng, dim)
            # (name, check, chain grade range, max order)
            specs = [
                ("prederiv_bracket", partial(prederiv_bracket, V1, V2), (0, dim + 1), 0),
                ("extrude_bracket", partial(extrude_bracket, V1, V2), (0, dim), 0),
                ("retract_killing", partial(retract_bracket, K, V2), (1, dim + 1), 0),
                ("mult_prederiv", partial(mult_prederiv, f, V1), (0, dim + 1), 0),
                ("partition_of_unity", partial(partition_of_unity, f), (0, dim + 1), 2),
            ]
            for name, check, (lo, hi), max_order in specs:
                k = int(rng.integers(lo, hi))
                chain = random_chain(rng, dim, k, max_order)
                tasks.append(
                    self._task(f"{name}/{i:04d}", partial(check, chain), {"dim": dim, "grade": k})
                )
        return tasks

    def _task(self, case_id: str, fn: Callable[[], float], params: Dict[str, Any]) -> CaseTask:
        return lambda: self.case(case_id, fn(), **params)
