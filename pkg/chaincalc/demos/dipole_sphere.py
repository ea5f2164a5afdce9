"""
Prederivatives of the unit circle.

For the radial field V = x e1 + y e2, ∫_{P_V S¹} x dy is the rate of
change of the enclosed area under the flow of V, 2π. For V = e1,
L_V(x² dy) = 2x dy, which again integrates to 2π.
"""

from typing import Dict, List

from chaincalc.chains import DiracChain
from chaincalc.data_types.report import Case
from chaincalc.factories.demo_factory import register_demo
from chaincalc.fields.vector_field import VectorFieldSpec
from chaincalc.forms import Form, integrate
from chaincalc.interfaces.demo_abc import DemoABC
from chaincalc.operators import prederiv
from chaincalc.represent.vectorfields import circle_chain

TWO_PI = 6.283185307179586


@register_demo
class DipoleSphereDemo(DemoABC):
    NAME = "dipole-sphere"
    LEVEL = 6
    TOLERANCE = 1e-9

    def chains(self) -> Dict[str, DiracChain]:
        circle = circle_chain(self.LEVEL)
        radial = VectorFieldSpec.from_expressions(["x1", "x2"])
        return {
            "circle": circle,
            "radial": prederiv(radial, circle),
            "shift": prederiv(VectorFieldSpec.basis(2, 0), circle),
        }

    def cases(self) -> List[Case]:
        chains = self.chains()
        params = {"level": self.LEVEL}
        return [
            self.case("circle_area", integrate(Form.parse("x @ 2", 2), chains["circle"]), TWO_PI / 2, **params),
            self.case("radial_x_dy", integrate(Form.parse("x @ 2", 2), chains["radial"]), TWO_PI, **params),
            self.case("shift_x2_dy", integrate(Form.parse("x^2 @ 2", 2), chains["shift"]), TWO_PI, **params),
        ]
