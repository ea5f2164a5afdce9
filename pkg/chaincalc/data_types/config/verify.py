from dataclasses import dataclass
from typing import Literal, Optional

Oracle = Literal["analytic", "fd"]

DEFAULT_TOLERANCES = {
    "algebra": 1e-12,
    "duality": 1e-10,
    "commutators": 1e-9,
    "cartesian": 1e-12,
    "norms": 1e-9,
}

FD_TOLERANCE = 1e-5


@dataclass(frozen=True)
class VerifyConfig:
    """
    Settings for a verification suite run.

    ``tolerance`` overrides the per-suite default when set; ``samples`` is
    the number of random inputs per identity, defaulting to the suite's own
    count.
    """

    seed: int = 0
    oracle: Oracle = "analytic"
    tolerance: Optional[float] = None
    samples: Optional[int] = None
    threads: int = 1

    def __post_init__(self) -> None:
        if self.oracle not in ("analytic", "fd"):
            raise ValueError("oracle must be either 'analytic' or 'fd'")
        if self.tolerance is not None and self.tolerance <= 0:
            raise ValueError("tolerance must be greater than zero")
        if self.samples is not None and self.samples < 1:
            raise ValueError("samples must be greater than zero")
        if self.threads < 1:
            raise ValueError("threads must be greater than zero")

    def tolerance_for(self, suite: str) -> float:
        if self.tolerance is not None:
            return self.tolerance
        if suite == "duality" and self.oracle == "fd":
            return FD_TOLERANCE
        return DEFAULT_TOLERANCES.get(suite, 1e-9)
