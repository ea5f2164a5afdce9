from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from chaincalc.data_types.config.flow import FlowConfig


@dataclass(frozen=True)
class RefinementRow:
    intervals: int
    lhs: float
    rhs: float
    err: float
    ratio: Optional[float]


@dataclass(frozen=True)
class FlowReport:
    """Both sides of one flow identity, with optional extra values."""

    name: str
    lhs: float
    rhs: float
    config: FlowConfig
    values: Dict[str, float] = field(default_factory=dict)
    refinement: List[RefinementRow] = field(default_factory=list)

    @property
    def abs_err(self) -> float:
        return abs(self.lhs - self.rhs)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_err": self.abs_err,
            "cfg": asdict(self.config),
            "values": dict(sorted(self.values.items())),
            "refinement_table": [asdict(row) for row in self.refinement],
        }
