"""
Regions for inside-U norm bounds and open-set representatives.
"""

import logging
from typing import Callable, Sequence

import numpy as np

from chaincalc.exceptions import DimensionMismatchError
from chaincalc.interfaces.region_abc import RegionABC

_log = logging.getLogger(__name__)


class BoxRegion(RegionABC):
    """The closed box [lo, hi]; ``open=True`` excludes the faces."""

    def __init__(self, lo: Sequence[float], hi: Sequence[float], open: bool = False) -> None:
        self.lo = np.asarray(lo, dtype=float)
        self.hi = np.asarray(hi, dtype=float)
        if self.lo.shape != self.hi.shape:
            raise DimensionMismatchError("lo and hi must have the same length")
        if np.any(self.hi < self.lo):
            raise ValueError("hi must not be below lo")
        super().__init__(self.lo.shape[0])
        self.open = open

    @property
    def convex(self) -> bool:
        return True

    def contains(self, point: Sequence[float]) -> bool:
        p = np.asarray(point, dtype=float)
        if self.open:
            return bool(np.all(p > self.lo) and np.all(p < self.hi))
        return bool(np.all(p >= self.lo) and np.all(p <= self.hi))

    def __repr__(self) -> str:
        return f"BoxRegion({self.lo.tolist()}, {self.hi.tolist()}, open={self.open})"


class BallRegion(RegionABC):
    def __init__(self, center: Sequence[float], radius: float, open: bool = True) -> None:
        if radius <= 0:
            raise ValueError("radius must be greater than zero")
        self.center = np.asarray(center, dtype=float)
        super().__init__(self.center.shape[0])
        self.radius = float(radius)
        self.open = open

    @property
    def convex(self) -> bool:
        return True

    def contains(self, point: Sequence[float]) -> bool:
        r2 = float(np.sum((np.asarray(point, dtype=float) - self.center) ** 2))
        return r2 < self.radius**2 if self.open else r2 <= self.radius**2


class HalfSpaceRegion(RegionABC):
    """
    Intersection of half-spaces ``normals[i] · x <= offsets[i]``.

    Example:
    ```python
    # the triangle x >= 0, y >= 0, x + y <= 1
    tri = HalfSpaceRegion([[-1, 0], [0, -1], [1, 1]], [0, 0, 1])
    ```
    """

    def __init__(
        self,
        normals: Sequence[Sequence[float]],
        offsets: Sequence[float],
        strict: bool = False,
    ) -> None:
        self.normals = np.atleast_2d(np.asarray(normals, dtype=float))
        self.offsets = np.asarray(offsets, dtype=float).reshape(-1)
        if self.normals.shape[0] != self.offsets.shape[0]:
            raise DimensionMismatchError("one offset is needed per normal")
        super().__init__(self.normals.shape[1])
        self.strict = strict

    @property
    def convex(self) -> bool:
        return True

    def contains(self, point: Sequence[float]) -> bool:
        values = self.normals @ np.asarray(point, dtype=float)
        if self.strict:
            return bool(np.all(values < self.offsets))
        return bool(np.all(values <= self.offsets))


class PredicateRegion(RegionABC):
    """A region given by a membership predicate; hull tests are sampled."""

    def __init__(self, predicate: Callable[[np.ndarray], bool], dim: int) -> None:
        super().__init__(dim)
        self.predicate = predicate

    def contains(self, point: Sequence[float]) -> bool:
        return bool(self.predicate(np.asarray(point, dtype=float)))


class SlitDiskRegion(RegionABC):
    """The open unit disk minus the closed segment [0, 1] × {0}."""

    def __init__(self) -> None:
        super().__init__(2)

    def contains(self, point: Sequence[float]) -> bool:
        x, y = float(point[0]), float(point[1])
        if x * x + y * y >= 1.0:
            return False
        return not (y == 0.0 and 0.0 <= x <= 1.0)

    def contains_hull(self, points: Sequence[Sequence[float]], samples: int = 33) -> bool:
        pts = np.asarray(points, dtype=float).reshape(-1, 2)
        if not all(self.contains(p) for p in pts):
            return False
        # the hull meets y = 0 in an interval spanned by edge crossings
        crossings = []
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                (xa, ya), (xb, yb) = pts[i], pts[j]
                if ya * yb < 0.0:
                    crossings.append(xa + (xb - xa) * ya / (ya - yb))
        if not crossings:
            return True
        return max(crossings) < 0.0 or min(crossings) > 1.0
