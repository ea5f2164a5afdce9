import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Sequence

from chaincalc.data_types.config.convergence import ConvergenceConfig
from chaincalc.data_types.report import ConvergenceRow, ConvergenceTable

_log = logging.getLogger(__name__)


class TheoremABC(ABC):
    """
    An integral theorem checked level by level: ``lhs(j)`` integrates over
    the level-j chain, ``rhs(j)`` is the other side of the identity.
    """

    NAME: str = ""

    def __init__(self, config: Optional[ConvergenceConfig] = None) -> None:
        self.config = config or ConvergenceConfig()

    @abstractmethod
    def lhs(self, level: int) -> float:
        pass

    @abstractmethod
    def rhs(self, level: int) -> float:
        pass

    def params(self) -> Dict[str, Any]:
        """Resolved inputs echoed into the table."""
        return {}

    def table(self, levels: Sequence[int]) -> ConvergenceTable:
        """
        Rows ``{j, lhs, rhs, err, ratio, extrap}``; ``ratio`` is err_j / err_{j-1}
        and ``extrap`` the Richardson value 2·lhs_j - lhs_{j-1}.
        """
        rows: List[ConvergenceRow] = []
        prev: Optional[ConvergenceRow] = None
        for j in levels:
            lhs, rhs = self.lhs(j), self.rhs(j)
            err = abs(lhs - rhs)
            ratio = err / prev.err if prev is not None and prev.err > 0.0 else None
            extrap = 2.0 * lhs - prev.lhs if prev is not None else None
            row = ConvergenceRow(j, lhs, rhs, err, ratio, extrap)
            _log.debug("%s j=%d lhs=%.12g rhs=%.12g err=%.3g", self.NAME, j, lhs, rhs, err)
            rows.append(row)
            prev = row
        return ConvergenceTable(self.NAME, rows, self.params())
