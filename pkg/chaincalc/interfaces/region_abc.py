from abc import ABC, abstractmethod
from itertools import combinations
from typing import Sequence

import numpy as np


class RegionABC(ABC):
    """
    A region W ⊂ R^n with a point test and a convex-hull containment test.
    """

    def __init__(self, dim: int) -> None:
        self.dim = dim

    @abstractmethod
    def contains(self, point: Sequence[float]) -> bool:
        """
        Whether ``point`` lies in the region.
        """
        pass

    @property
    def convex(self) -> bool:
        """Convex regions contain a hull exactly when they contain its vertices."""
        return False

    def contains_hull(self, points: Sequence[Sequence[float]], samples: int = 33) -> bool:
        """
        Whether the convex hull of ``points`` lies in the region.

        Exact for convex regions; otherwise vertices and ``samples`` points on
        every edge between two vertices are tested. ``samples`` is forced odd
        so edge midpoints are always probed.
        """
        pts = np.asarray(points, dtype=float).reshape(-1, self.dim)
        if not all(self.contains(p) for p in pts):
            return False
        if self.convex or len(pts) < 2:
            return True
        if samples % 2 == 0:
            samples += 1
        ts = np.linspace(0.0, 1.0, samples)[1:-1]
        for a, b in combinations(pts, 2):
            for t in ts:
                if not self.contains(a + t * (b - a)):
                    return False
        return True
