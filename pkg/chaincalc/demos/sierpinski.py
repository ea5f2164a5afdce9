"""
Renormalized Sierpinski triangle: the area 1/2 survives every stage, on
the chain and through its boundary.
"""

from typing import Dict, List

from chaincalc.chains import DiracChain
from chaincalc.data_types.report import Case
from chaincalc.factories.demo_factory import register_demo
from chaincalc.forms import Form, integrate
from chaincalc.interfaces.demo_abc import DemoABC
from chaincalc.operators import boundary
from chaincalc.represent.fractals import sierpinski_chain


@register_demo
class SierpinskiDemo(DemoABC):
    NAME = "sierpinski"
    STAGES = (0, 2, 4, 6)

    def chains(self) -> Dict[str, DiracChain]:
        return {f"stage{m}": sierpinski_chain(m) for m in self.STAGES}

    def cases(self) -> List[Case]:
        area = Form.volume(2)
        flux = Form.parse("x @ 2", 2)
        out = []
        for label, chain in self.chains().items():
            m = int(label.removeprefix("stage"))
            out.append(self.case(f"area/{label}", integrate(area, chain), 0.5, stage=m))
            out.append(self.case(f"boundary_x_dy/{label}", integrate(flux, boundary(chain)), 0.5, stage=m))
        return out
