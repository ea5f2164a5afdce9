"""
Algebraic boundary of the Cantor set: ∫_{∂Γ} x = ∫_Γ dx = 1 at every stage.
"""

from typing import Dict, List

from chaincalc.chains import DiracChain
from chaincalc.data_types.report import Case
from chaincalc.factories.demo_factory import register_demo
from chaincalc.forms import Form, integrate
from chaincalc.interfaces.demo_abc import DemoABC
from chaincalc.operators import boundary
from chaincalc.represent.fractals import cantor_chain, cantor_endpoint_boundary


@register_demo
class CantorDemo(DemoABC):
    NAME = "cantor"
    STAGE = 6

    def chains(self) -> Dict[str, DiracChain]:
        gamma = cantor_chain(self.STAGE, ambient_dim=2)
        return {
            "gamma": gamma,
            "boundary": boundary(gamma),
            "endpoints": cantor_endpoint_boundary(self.STAGE, ambient_dim=2),
        }

    def cases(self) -> List[Case]:
        chains = self.chains()
        x, dx = Form.parse("x", 2), Form.parse("1 @ 1", 2)
        params = {"stage": self.STAGE}
        return [
            self.case("gamma_dx", integrate(dx, chains["gamma"]), 1.0, **params),
            self.case("boundary_x", integrate(x, chains["boundary"]), 1.0, **params),
            self.case("endpoints_x", integrate(x, chains["endpoints"]), 1.0, **params),
        ]
