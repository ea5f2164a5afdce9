"""
Norm brackets and canonical integrals of the representative chains.

Cube representatives P_j of the unit cube integrate dV to 1 and have
norm 1 in B^0 and B^1; consecutive levels differ by at most 2^{-j+1} in
B^1; the Cantor chains give ∫ dx = ∫_∂ x = 1 at every stage.
"""

import logging
from functools import partial
from typing import Any, Callable, Dict, List, Sequence

from chaincalc.chains import DiracChain
from chaincalc.exceptions import CertificateViolationError
from chaincalc.exterior import KVector, basis_indices
from chaincalc.factories.suite_factory import register_suite
from chaincalc.forms import Form, integrate
from chaincalc.interfaces.suite_abc import CaseTask, SuiteABC
from chaincalc.norms import CertifiedForm, norm_bound, norm_upper
from chaincalc.operators import boundary
from chaincalc.represent.cubes import cube_chain
from chaincalc.represent.fractals import cantor_chain, cantor_endpoint_boundary
from chaincalc.sampling import random_chain

_log = logging.getLogger(__name__)

# dimension -> deepest level checked
CUBE_LEVELS = {1: 10, 2: 6, 3: 4}
REFINEMENT_LEVELS = {1: 8, 2: 4}
CANTOR_STAGES = 10


def unit_cube(dim: int, level: int) -> DiracChain:
    return cube_chain((0.0,) * dim, 1.0, tuple(range(dim)), level=level)


def constant_dictionary(dim: int, grade: int) -> List[CertifiedForm]:
    """The constant basis forms dx_I, each of norm 1 in every B^r."""
    return [(Form.constant(KVector.basis(dim, index)), 1.0) for index in basis_indices(dim, grade)]


def sandwich_gap(chain: DiracChain, r: int, dictionary: Sequence[CertifiedForm]) -> float:
    bound = norm_bound(chain, r, dictionary)
    return bound.upper - bound.lower


def refinement_excess(dim: int, level: int) -> float:
    """How far the pairing bound of ‖P_j - P_{j+1}‖_{B^1} exceeds 2^{-j+1}."""
    upper = norm_upper(unit_cube(dim, level) - unit_cube(dim, level + 1), 1)
    _log.debug("refinement n=%d j=%d: upper %.6g", dim, level, upper)
    return max(0.0, upper - 2.0 ** (1 - level))


def sandwich_order(chain: DiracChain, r: int) -> float:
    """lower ≤ upper must hold for any chain; returns the violation."""
    try:
        norm_bound(chain, r, constant_dictionary(chain.dim, chain.grade))
    except CertificateViolationError as exc:
        return exc.lower - exc.upper
    return 0.0


def cantor_endpoint_integral(stage: int) -> float:
    return integrate(Form.parse("x", 1), cantor_endpoint_boundary(stage))


def cantor_boundary_integral(stage: int) -> float:
    return integrate(Form.parse("x", 1), boundary(cantor_chain(stage)))


@register_suite
class NormsSuite(SuiteABC):
    """
    Certified norm brackets on cube representatives, the pairing
    refinement bound and the Cantor integrals.
    """

    NAME = "norms"
    DEFAULT_SAMPLES = 50
    MAX_DIM = 3

    def tasks(self) -> List[CaseTask]:
        tasks: List[CaseTask] = []
        for dim, top in CUBE_LEVELS.items():
            volume = Form.volume(dim)
            for j in range(top + 1):
                params = {"dim": dim, "level": j}
                tasks.append(
                    self._task(
                        f"cube_volume/n{dim}j{j:02d}",
                        partial(integrate, volume, unit_cube(dim, j)),
                        params,
                        expected=1.0,
                    )
                )
                for r in (0, 1):
                    tasks.append(
                        self._task(
                            f"cube_sandwich/n{dim}j{j:02d}r{r}",
                            partial(sandwich_gap, unit_cube(dim, j), r, [(volume, 1.0)]),
                            dict(params, r=r),
                        )
                    )
                    tasks.append(
                        self._task(
                            f"cube_upper/n{dim}j{j:02d}r{r}",
                            partial(norm_upper, unit_cube(dim, j), r),
                            dict(params, r=r),
                            expected=1.0,
                        )
                    )
        for dim, top in REFINEMENT_LEVELS.items():
            for j in range(top + 1):
                tasks.append(
                    self._task(
                        f"refinement/n{dim}j{j:02d}",
                        partial(refinement_excess, dim, j),
                        {"dim": dim, "level": j},
                    )
                )
        for r in (0, 1, 2):
            tasks.append(
                self._task(f"zero_chain/r{r}", partial(norm_upper, DiracChain.zero(2, 1), r), {"r": r})
            )
        for m in range(CANTOR_STAGES + 1):
            tasks.append(
                self._task(
                    f"cantor_dx/m{m:02d}",
                    partial(integrate, Form.parse("1 @ 1", 1), cantor_chain(m)),
                    {"stage": m},
                    expected=1.0,
                )
            )
            tasks.append(
                self._task(
                    f"cantor_endpoints/m{m:02d}",
                    partial(cantor_endpoint_integral, m),
                    {"stage": m},
                    expected=1.0,
                )
            )
            tasks.append(
                self._task(
                    f"cantor_boundary/m{m:02d}",
                    partial(cantor_boundary_integral, m),
                    {"stage": m},
                    expected=1.0,
                )
            )
        for i in range(self.samples):
            dim = int(self.rng.integers(1, self.MAX_DIM + 1))
            grade = int(self.rng.integers(0, dim + 1))
            chain = random_chain(self.rng, dim, grade, 0, terms=6)
            r = int(self.rng.integers(0, 3))
            tasks.append(
                self._task(
                    f"sandwich_order/{i:04d}",
                    partial(sandwich_order, chain, r),
                    {"dim": dim, "grade": grade, "r": r},
                )
            )
        return tasks

    def _task(
        self,
        case_id: str,
        fn: Callable[[], float],
        params: Dict[str, Any],
        expected: float = 0.0,
    ) -> CaseTask:
        return lambda: self.case(case_id, fn(), expected, **params)
