import logging
import time
from abc import ABC, abstractmethod
from dataclasses import asdict
from typing import Any, Callable, Dict, List

import numpy as np

from chaincalc.chains import DiracChain
from chaincalc.data_types.config.verify import VerifyConfig
from chaincalc.data_types.report import Case, Report
from chaincalc.utils import run_ordered, utc_timestamp

_log = logging.getLogger(__name__)

CaseTask = Callable[[], Case]


def chain_residual(a: DiracChain, b: DiracChain) -> float:
    """Largest coefficient of a - b."""
    return (a - b).norm_inf()


class SuiteABC(ABC):
    """
    A named family of randomized identity checks.

    All random inputs are drawn in ``tasks`` on the calling thread, so the
    report depends only on the seed; the returned tasks may then run on a
    thread pool.
    """

    NAME: str = ""
    DEFAULT_SAMPLES: int = 100

    def __init__(self, config: VerifyConfig) -> None:
        self.config = config
        self.rng = np.random.default_rng(config.seed)
        self.tol = config.tolerance_for(self.NAME)
        self.samples = config.samples or self.DEFAULT_SAMPLES

    @abstractmethod
    def tasks(self) -> List[CaseTask]:
        """
        Draw inputs and return the deferred case computations.
        """
        pass

    def case(
        self,
        case_id: str,
        computed: float,
        expected: float = 0.0,
        relative: bool = False,
        **params: Any,
    ) -> Case:
        return Case(
            id=case_id,
            expected=float(expected),
            computed=float(computed),
            tol=self.tol,
            params=params,
            relative=relative,
        )

    def echo(self) -> Dict[str, Any]:
        data = asdict(self.config)
        data["tolerance"] = self.tol
        data["samples"] = self.samples
        return data

    def run(self) -> Report:
        start = time.perf_counter()
        tasks = self.tasks()
        _log.info("suite %s: %d cases on %d thread(s)", self.NAME, len(tasks), self.config.threads)
        cases = run_ordered(tasks, self.config.threads)
        report = Report(
            suite=self.NAME,
            cases=sorted(cases, key=lambda c: c.id),
            seed=self.config.seed,
            config=self.echo(),
            wall_time=time.perf_counter() - start,
            timestamp=utc_timestamp(),
        )
        for failed in report.failures:
            _log.info("case %s failed: abs_err=%.3g tol=%.3g", failed.id, failed.abs_err, failed.tol)
        return report
