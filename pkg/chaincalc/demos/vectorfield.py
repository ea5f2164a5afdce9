"""
Chains of vector fields over the unit square, ∫_X ω = ∫_U ω(X(p)) dV.
"""

from typing import Dict, List

import numpy as np

from chaincalc.chains import DiracChain
from chaincalc.data_types.report import Case
from chaincalc.expression import parse_expression
from chaincalc.factories.demo_factory import register_demo
from chaincalc.fields.symbolic import SymbolicField
from chaincalc.forms import Form, integrate
from chaincalc.interfaces.demo_abc import DemoABC
from chaincalc.represent.vectorfields import vectorfield_chain

UNIT_SQUARE = ((0.0, 0.0), (1.0, 1.0))


def field(text: str) -> SymbolicField:
    return SymbolicField(parse_expression(text, 2), 2)


def everywhere(p: np.ndarray) -> bool:
    return True


@register_demo
class VectorFieldDemo(DemoABC):
    NAME = "vectorfield"
    LEVEL = 6

    def chains(self) -> Dict[str, DiracChain]:
        return {
            "radial": vectorfield_chain({(0,): field("x"), (1,): field("y")}, everywhere, UNIT_SQUARE, self.LEVEL),
            "rotation": vectorfield_chain({(0,): field("-y"), (1,): field("x")}, everywhere, UNIT_SQUARE, self.LEVEL),
            "bivector": vectorfield_chain({(0, 1): field("x^2 + y")}, everywhere, UNIT_SQUARE, self.LEVEL),
        }

    def cases(self) -> List[Case]:
        chains = self.chains()
        # midpoint rule on 2^j cells per axis: Σ h x_i² = 1/3 - h²/12
        h = 2.0**-self.LEVEL
        params = {"level": self.LEVEL}
        return [
            self.case("radial_dx_plus_dy", integrate(Form.parse("1 @ 1; 1 @ 2", 2), chains["radial"]), 1.0, **params),
            self.case(
                "rotation_circulation",
                integrate(Form.parse("-y @ 1; x @ 2", 2), chains["rotation"]),
                2.0 / 3.0,
                tol=h * h / 6.0 + 1e-12,
                **params,
            ),
            self.case(
                "bivector_area",
                integrate(Form.volume(2), chains["bivector"]),
                5.0 / 6.0,
                tol=h * h / 12.0 + 1e-12,
                **params,
            ),
        ]
