import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Sequence

from chaincalc.chains import DiracChain
from chaincalc.forms import Form, integrate

_log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainFamily:
    """
    Level-indexed Dirac-chain approximants of a limit chain.

    Levels are generated lazily and cached.

    Example:
    ```python
    family = cube_family((0.0, 0.0), 1.0, (0, 1))
    family.integrals(Form.volume(2), range(4))  # [1.0, 1.0, 1.0, 1.0]
    ```
    """

    dim: int
    grade: int
    generator: Callable[[int], DiracChain]
    r: int = 1
    domain: str = ""
    _cache: Dict[int, DiracChain] = field(default_factory=dict, repr=False, compare=False)

    def level(self, j: int) -> DiracChain:
        if j < 0:
            raise ValueError("level must be non-negative")
        chain = self._cache.get(j)
        if chain is None:
            chain = self.generator(j)
            if chain.dim != self.dim or chain.grade != self.grade:
                raise ValueError(
                    f"level {j} of {self.domain or 'family'} has shape "
                    f"({chain.dim}, {chain.grade}), expected ({self.dim}, {self.grade})"
                )
            self._cache[j] = chain
            _log.debug("%s level %d: %d terms", self.domain or "family", j, len(chain))
        return chain

    def integrals(self, w: Form, levels: Sequence[int]) -> List[float]:
        return [integrate(w, self.level(j)) for j in levels]

    def cauchy_ratios(self, w: Form, levels: Sequence[int]) -> List[float]:
        """
        |I_{j+1} - I_j| / |I_j - I_{j-1}| over consecutive levels.

        Exact stationarity (both differences zero) reports 0.
        """
        values = self.integrals(w, levels)
        ratios = []
        for a, b, c in zip(values, values[1:], values[2:]):
            before, after = abs(b - a), abs(c - b)
            ratios.append(0.0 if after == 0.0 else after / before if before else float("inf"))
        return ratios

    def mapped(self, fn: Callable[[DiracChain], DiracChain], grade: int, domain: str = "") -> "ChainFamily":
        """The family of fn(level j), e.g. boundaries."""
        return ChainFamily(
            self.dim,
            grade,
            lambda j: fn(self.level(j)),
            self.r,
            domain or self.domain,
        )
