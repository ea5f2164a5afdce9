from dataclasses import dataclass


@dataclass(frozen=True)
class FDConfig:
    """
    Nested central-difference settings for finite-difference derivative oracles.

    The step for a derivative of total order ``s`` at point ``p`` is
    ``base_step * max(1, |p|) * growth ** (s - 1)``.
    """

    base_step: float = 1e-5
    growth: float = 4.0
    max_depth: int = 3

    def __post_init__(self) -> None:
        if self.base_step <= 0:
            raise ValueError("base_step must be greater than zero")
        if self.growth < 1:
            raise ValueError("growth must be at least one")
        if self.max_depth < 0:
            raise ValueError("max_depth must be non-negative")

    def step(self, order: int, scale: float) -> float:
        return self.base_step * max(1.0, scale) * self.growth ** max(order - 1, 0)
