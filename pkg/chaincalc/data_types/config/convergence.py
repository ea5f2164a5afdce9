from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class ConvergenceConfig:
    """
    Inputs of a convergence run.

    ``form``, ``field`` and ``domain`` are mini-language specs; ``None``
    selects the theorem's default. ``power`` is s in □^s for the
    higher-order divergence theorem. ``seed`` drives the random chains of
    theorems that sample them.
    """

    form: Optional[str] = None
    field: Optional[str] = None
    domain: Optional[str] = None
    power: int = 1
    seed: int = 0

    def __post_init__(self) -> None:
        if self.power < 1:
            raise ValueError("power must be greater than zero")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
