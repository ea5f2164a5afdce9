"""
The slit disk Q' = unit disk minus [0, 1] × {0}.

The edges L_+ and L_- both approximate the slit, from above and from
below, yet the form 3ω₀² dx tells them apart: ω₀ = min(x, 1) on the open
unit square and 0 elsewhere, so the pair is (1, 0). A difference chain
joining the two sides is not supported inside Q'.
"""

from typing import Dict, List

import numpy as np

from chaincalc.chains import DiracChain
from chaincalc.data_types.norm import Decomposition, DifferencePiece
from chaincalc.data_types.report import Case
from chaincalc.exterior import KVector
from chaincalc.factories.demo_factory import register_demo
from chaincalc.forms import Form, integrate
from chaincalc.interfaces.demo_abc import DemoABC
from chaincalc.norms import inside_check
from chaincalc.regions import SlitDiskRegion
from chaincalc.represent.vectorfields import slit_edge_chain


def omega0(p: np.ndarray) -> float:
    x, y = float(p[0]), float(p[1])
    if 0.0 < x < 1.0 and 0.0 < y < 1.0:
        return min(x, 1.0)
    return 0.0


def slit_form() -> Form:
    """3ω₀² dx, evaluated pointwise only."""
    return Form.from_callbacks(2, 1, {(0,): lambda p: 3.0 * omega0(p) ** 2})


@register_demo
class SlitDiskDemo(DemoABC):
    NAME = "slit-disk"
    # edges at height ±1/M; restricting to the disk loses x > sqrt(1 - 1/M²)
    M = 256
    LEVEL = 10
    TOLERANCE = 1e-4

    def chains(self) -> Dict[str, DiracChain]:
        return {
            "upper": slit_edge_chain(self.M, 1, self.LEVEL),
            "lower": slit_edge_chain(self.M, -1, self.LEVEL),
        }

    def crossing(self, x: float) -> Decomposition:
        """Δ_u(p; e1) from 1/M above the x-axis to 1/M below it."""
        h = 1.0 / self.M
        piece = DifferencePiece(((0.0, -2.0 * h),), (x, h), KVector.basis(2, (0,)))
        return Decomposition((piece,), 1)

    def cases(self) -> List[Case]:
        chains = self.chains()
        w = slit_form()
        upper = integrate(w, chains["upper"])
        lower = integrate(w, chains["lower"])
        region = SlitDiskRegion()
        params = {"m": self.M, "level": self.LEVEL}
        return [
            self.case("upper_edge", upper, 1.0, **params),
            self.case("lower_edge", lower, 0.0, **params),
            self.case("edge_difference", upper - lower, 1.0, **params),
            self.case(
                "crossing_inside",
                float(inside_check(self.crossing(0.5), region)),
                0.0,
                tol=0.0,
                x=0.5,
            ),
            self.case(
                "detour_inside",
                float(inside_check(self.crossing(-0.5), region)),
                1.0,
                tol=0.0,
                x=-0.5,
            ),
        ]
