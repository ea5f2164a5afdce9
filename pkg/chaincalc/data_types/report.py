from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Case:
    """
    One checked identity: ``computed`` against ``expected`` within ``tol``.

    ``relative`` cases scale the tolerance by max(1, |expected|).
    """

    id: str
    expected: float
    computed: float
    tol: float
    params: Dict[str, Any] = field(default_factory=dict)
    relative: bool = False

    @property
    def abs_err(self) -> float:
        return abs(self.computed - self.expected)

    @property
    def passed(self) -> bool:
        bound = self.tol * max(1.0, abs(self.expected)) if self.relative else self.tol
        return self.abs_err <= bound

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "params": self.params,
            "expected": self.expected,
            "computed": self.computed,
            "abs_err": self.abs_err,
            "tol": self.tol,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class Report:
    """
    Outcome of a suite, demo, norm or flow run as emitted by the CLI.

    Run-dependent values (UTC time and wall time) live under the single
    ``timestamp`` key; everything else is a function of seed and config.
    """

    suite: str
    cases: List[Case]
    seed: int
    config: Dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0
    timestamp: str = ""
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    @property
    def failures(self) -> List[Case]:
        return [case for case in self.cases if not case.passed]

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "seed": self.seed,
            "config": self.config,
            "pass": self.passed,
            "cases": [c.to_dict() for c in sorted(self.cases, key=lambda c: c.id)],
            "timestamp": {"utc": self.timestamp, "wall_time": self.wall_time},
        }
        if self.extra:
            data["extra"] = self.extra
        return data


@dataclass(frozen=True)
class ConvergenceRow:
    level: int
    lhs: float
    rhs: float
    err: float
    ratio: Optional[float] = None
    extrap: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "j": self.level,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "err": self.err,
            "ratio": self.ratio,
            "extrap": self.extrap,
        }


@dataclass(frozen=True)
class ConvergenceTable:
    """
    Per-level rows of a convergence run.

    ``ratio`` is err_j / err_{j-1}; ``extrap`` is the Richardson value
    2·lhs_j - lhs_{j-1} for first-order families.
    """

    theorem: str
    rows: List[ConvergenceRow]
    params: Dict[str, Any] = field(default_factory=dict)

    COLUMNS = ("j", "lhs", "rhs", "err", "ratio", "extrap")

    def ratios(self) -> List[float]:
        return [row.ratio for row in self.rows if row.ratio is not None]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "theorem": self.theorem,
            "params": self.params,
            "rows": [row.to_dict() for row in self.rows],
        }
