from chaincalc.interfaces.demo_abc import DemoABC
from chaincalc.interfaces.region_abc import RegionABC
from chaincalc.interfaces.scalar_field_abc import ScalarFieldABC
from chaincalc.interfaces.suite_abc import SuiteABC
from chaincalc.interfaces.theorem_abc import TheoremABC

__all__ = ["DemoABC", "RegionABC", "ScalarFieldABC", "SuiteABC", "TheoremABC"]
