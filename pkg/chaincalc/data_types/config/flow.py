from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class FlowConfig:
    """
    Flow integration settings.

    ``step`` is the RK4 time step for trajectories of nonaffine fields and
    their variational Jacobians, ``intervals`` the number of midpoint
    subintervals of a trace chain, ``bound`` an optional escape radius and
    ``time_step`` the central difference step in t used by the Leibniz and
    Reynolds harnesses.
    """

    step: float = 1e-3
    intervals: int = 64
    bound: Optional[float] = None
    time_step: float = 1e-4

    def __post_init__(self) -> None:
        if self.step <= 0:
            raise ValueError("step must be greater than zero")
        if self.intervals < 1:
            raise ValueError("intervals must be greater than zero")
        if self.bound is not None and self.bound <= 0:
            raise ValueError("bound must be greater than zero")
        if self.time_step <= 0:
            raise ValueError("time_step must be greater than zero")
