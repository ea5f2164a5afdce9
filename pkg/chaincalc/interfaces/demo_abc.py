import logging
import time
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Optional

from chaincalc.chains import DiracChain, dumps
from chaincalc.data_types.report import Case, Report
from chaincalc.utils import utc_timestamp

_log = logging.getLogger(__name__)


class DemoABC(ABC):
    """
    A worked example that reproduces fixed reference values and can dump
    the chains it builds.
    """

    NAME: str = ""
    TOLERANCE: float = 1e-12

    def __init__(self, tolerance: Optional[float] = None) -> None:
        self.tolerance = tolerance

    @abstractmethod
    def cases(self) -> List[Case]:
        """
        Compute the demo values.
        """
        pass

    @abstractmethod
    def chains(self) -> Dict[str, DiracChain]:
        """
        The chains the demo integrates over, keyed by a short label.
        """
        pass

    def case(
        self,
        case_id: str,
        computed: float,
        expected: float,
        tol: Optional[float] = None,
        **params: Any,
    ) -> Case:
        """``tol`` is the case default; a constructor tolerance overrides it."""
        if self.tolerance is not None:
            tol = self.tolerance
        return Case(
            id=case_id,
            expected=float(expected),
            computed=float(computed),
            tol=self.TOLERANCE if tol is None else tol,
            params=params,
        )

    def run(self) -> Report:
        start = time.perf_counter()
        cases = self.cases()
        report = Report(
            suite=f"demo/{self.NAME}",
            cases=sorted(cases, key=lambda c: c.id),
            seed=0,
            config={"tolerance": self.tolerance},
            wall_time=time.perf_counter() - start,
            timestamp=utc_timestamp(),
        )
        _log.info("demo %s: %d cases, pass=%s", self.NAME, len(cases), report.passed)
        return report

    def dump(self, directory: Path) -> List[Path]:
        """Write every chain of ``chains()`` as ``<demo>_<label>.chain``."""
        directory.mkdir(parents=True, exist_ok=True)
        written = []
        for label, chain in sorted(self.chains().items()):
            path = directory / f"{self.NAME}_{label}.chain"
            path.write_text(dumps(chain))
            _log.debug("wrote %s (%d terms)", path, len(chain))
            written.append(path)
        return written
