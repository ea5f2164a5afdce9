"""
Operator-algebra identities on random Dirac chains.

Coordinates, coefficients and vectors are dyadic, so every identity below
is expected to cancel exactly.
"""

import logging
from functools import partial
from typing import Any, Callable, Dict, List

import numpy as np

from chaincalc.chains import DiracChain
from chaincalc.exterior import (
    KVector,
    basis_indices,
    clifford_perp,
    clifford_perp_sign,
    contract,
    inner,
    perp,
    perp_involution_sign,
    wedge,
)
from chaincalc.factories.suite_factory import register_suite
from chaincalc.interfaces.suite_abc import CaseTask, SuiteABC, chain_residual
from chaincalc.operators import (
    anticommutator,
    boundary,
    commutator,
    extrude,
    perp_chain,
    prederiv,
    retract,
)
from chaincalc.sampling import random_chain, random_kvector, random_vector

_log = logging.getLogger(__name__)


def boundary_squared(chain: DiracChain) -> float:
    return boundary(boundary(chain)).norm_inf()


def car_relation(v: np.ndarray, w: np.ndarray, chain: DiracChain) -> float:
    """{E_v, E_w†} = ⟨v, w⟩ Id."""
    lhs = anticommutator(partial(extrude, v), partial(retract, w), chain)
    return chain_residual(lhs, chain * float(np.dot(v, w)))


def clifford_square(v: np.ndarray, chain: DiracChain) -> float:
    """(E_v + E_v†)² = ⟨v, v⟩ Id, split by output grade."""
    up = extrude(v, chain)
    down = retract(v, chain)
    same = retract(v, up) + extrude(v, down)
    residual = chain_residual(same, chain * float(np.dot(v, v)))
    return max(residual, extrude(v, up).norm_inf(), retract(v, down).norm_inf())


def cartan(v: np.ndarray, chain: DiracChain) -> float:
    """{∂, E_v} = P_v."""
    lhs = DiracChain.zero(chain.dim, chain.grade)
    if chain.grade < chain.dim:
        lhs = lhs + boundary(extrude(v, chain))
    if chain.grade > 0:
        lhs = lhs + extrude(v, boundary(chain))
    return chain_residual(lhs, prederiv(v, chain))


def retract_boundary(v: np.ndarray, chain: DiracChain) -> float:
    """Graded commutator of the odd operators E_v† and ∂, i.e. E_v†∂ + ∂E_v† = 0."""
    return anticommutator(partial(retract, v), boundary, chain).norm_inf()


def prederiv_boundary(v: np.ndarray, chain: DiracChain) -> float:
    """[P_v, ∂] = 0."""
    return commutator(partial(prederiv, v), boundary, chain).norm_inf()


def perp_involution(chain: DiracChain) -> float:
    sign = perp_involution_sign(chain.dim, chain.grade)
    return chain_residual(perp_chain(perp_chain(chain)), chain * float(sign))


def clifford_agreement(dim: int, grade: int) -> float:
    """C_{e_n}∘⋯∘C_{e_1} against ⊥ with the recorded sign, on every basis k-vector."""
    sign = clifford_perp_sign(dim, grade)
    worst = 0.0
    for index in basis_indices(dim, grade):
        e = KVector.basis(dim, index)
        worst = max(worst, (clifford_perp(e) - perp(e) * float(sign)).max_abs())
    return worst


def graded_anticommutativity(a: KVector, b: KVector) -> float:
    sign = -1.0 if (a.grade * b.grade) % 2 else 1.0
    return (wedge(a, b) - wedge(b, a) * sign).max_abs()


def wedge_contract_adjoint(v: np.ndarray, x: KVector, y: KVector) -> float:
    """⟨v ∧ x, y⟩ = ⟨x, contract(v, y)⟩."""
    return abs(inner(wedge(KVector.from_vector(v), x), y) - inner(x, contract(v, y)))


def contract_squared(v: np.ndarray, a: KVector) -> float:
    return contract(v, contract(v, a)).max_abs()


@register_suite
class AlgebraSuite(SuiteABC):
    """
    Boundary, extrusion, retraction, prederivative and ⊥ relations on
    random chains with n ≤ 4 and order ≤ 3.
    """

    NAME = "algebra"
    DEFAULT_SAMPLES = 1000
    MAX_DIM = 4
    MAX_ORDER = 3

    def tasks(self) -> List[CaseTask]:
        tasks: List[CaseTask] = []
        for i in range(self.samples):
            dim = int(self.rng.integers(1, self.MAX_DIM + 1))
            grade = int(self.rng.integers(0, dim + 1))
            chain = random_chain(self.rng, dim, grade, self.MAX_ORDER)
            v = random_vector(self.rng, dim)
            w = random_vector(self.rng, dim)
            params = {"dim": dim, "grade": grade, "terms": len(chain)}
            checks = {
                "boundary_squared": partial(boundary_squared, chain),
                "car": partial(car_relation, v, w, chain),
                "clifford_square": partial(clifford_square, v, chain),
                "cartan": partial(cartan, v, chain),
                "retract_boundary": partial(retract_boundary, v, chain),
                "prederiv_boundary": partial(prederiv_boundary, v, chain),
                "perp_involution": partial(perp_involution, chain),
            }
            for name, fn in checks.items():
                tasks.append(self._task(f"{name}/{i:04d}", fn, params))
        for i in range(max(1, self.samples // 10)):
            dim = int(self.rng.integers(1, self.MAX_DIM + 1))
            k = int(self.rng.integers(1, dim + 1))
            l = int(self.rng.integers(0, dim - k + 1))
            a = random_kvector(self.rng, dim, k)
            b = random_kvector(self.rng, dim, l)
            x = random_kvector(self.rng, dim, k - 1)
            v = random_vector(self.rng, dim)
            params = {"dim": dim, "k": k, "l": l}
            checks = {
                "wedge_anticommute": partial(graded_anticommutativity, a, b),
                "wedge_contract_adjoint": partial(wedge_contract_adjoint, v, x, a),
                "contract_squared": partial(contract_squared, v, a),
            }
            for name, fn in checks.items():
                tasks.append(self._task(f"{name}/{i:04d}", fn, params))
        for dim in range(1, self.MAX_DIM + 1):
            for grade in range(dim + 1):
                tasks.append(
                    self._task(
                        f"clifford_perp/n{dim}k{grade}",
                        partial(clifford_agreement, dim, grade),
                        {"dim": dim, "grade": grade},
                    )
                )
        return tasks

    def _task(self, case_id: str, fn: Callable[[], float], params: Dict[str, Any]) -> CaseTask:
        return lambda: self.case(case_id, fn(), **params)
