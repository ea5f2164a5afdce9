"""
Affine cells and weighted sums of them.

A cell is represented by subdividing it ``level`` times and placing each
subcell at its centroid, carrying the cell's oriented k-vector scaled by
the subcell's share of the volume.
"""

import logging
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from chaincalc.chains import ChainBuilder, DiracChain
from chaincalc.exceptions import DimensionMismatchError
from chaincalc.exterior import KVector
from chaincalc.represent.family import ChainFamily

_log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Box:
    """
    The axis-aligned cell [lo, hi]; axes with lo == hi are flat, so the
    grade is the number of axes with positive extent.
    """

    lo: Tuple[float, ...]
    hi: Tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.lo) != len(self.hi):
            raise DimensionMismatchError("lo and hi must have the same length")
        if any(b < a for a, b in zip(self.lo, self.hi)):
            raise ValueError("hi must not be below lo")

    @property
    def dim(self) -> int:
        return len(self.lo)

    @property
    def axes(self) -> Tuple[int, ...]:
        return tuple(i for i, (a, b) in enumerate(zip(self.lo, self.hi)) if b > a)

    @property
    def grade(self) -> int:
        return len(self.axes)

    def kvector(self) -> KVector:
        volume = float(np.prod([self.hi[i] - self.lo[i] for i in self.axes]))
        return KVector.basis(self.dim, self.axes, volume)

    def pieces(self, level: int) -> Iterator[Tuple[np.ndarray, float]]:
        lo = np.asarray(self.lo, dtype=float)
        hi = np.asarray(self.hi, dtype=float)
        cells = 2**level
        step = (hi - lo) / cells
        share = 1.0 / cells**self.grade
        for cell in product(range(cells), repeat=self.grade):
            point = lo.copy()
            for axis, c in zip(self.axes, cell):
                point[axis] += (c + 0.5) * step[axis]
            yield point, share


@dataclass(frozen=True)
class Simplex:
    """
    The oriented affine simplex [v_0, …, v_k] with k-vector
    (v_1 - v_0) ∧ ⋯ ∧ (v_k - v_0) / k!.
    """

    vertices: Tuple[Tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a simplex needs at least one vertex")
        if len({len(v) for v in self.vertices}) != 1:
            raise DimensionMismatchError("vertices must share one dimension")

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    @property
    def grade(self) -> int:
        return len(self.vertices) - 1

    def kvector(self) -> KVector:
        v = np.asarray(self.vertices, dtype=float)
        edges = [v[i] - v[0] for i in range(1, len(v))]
        return KVector.from_vectors(edges, self.dim) * (1.0 / factorial(self.grade))

    def pieces(self, level: int) -> Iterator[Tuple[np.ndarray, float]]:
        simplices = [np.asarray(self.vertices, dtype=float)]
        for _ in range(level):
            simplices = [s for parent in simplices for s in _subdivide(parent)]
        share = 1.0 / len(simplices)
        for s in simplices:
            yield s.mean(axis=0), share


def _subdivide(v: np.ndarray) -> List[np.ndarray]:
    k = len(v) - 1
    if k == 0:
        return [v]
    if k == 1:
        m = (v[0] + v[1]) / 2
        return [np.array([v[0], m]), np.array([m, v[1]])]
    if k == 2:
        a, b, c = v
        ab, bc, ca = (a + b) / 2, (b + c) / 2, (c + a) / 2
        return [
            np.array([a, ab, ca]),
            np.array([ab, b, bc]),
            np.array([ca, bc, c]),
            np.array([bc, ca, ab]),
        ]
    # barycentric: one simplex per flag of faces, (k+1)! of equal volume
    out = []
    for order in permutations(range(k + 1)):
        out.append(np.array([v[list(order[: i + 1])].mean(axis=0) for i in range(k + 1)]))
    return out


Cell = Box | Simplex


def polyhedral_chain(cells: Sequence[Tuple[float, Cell]], level: int = 0) -> DiracChain:
    """
    Representative of Σ a_i σ_i at subdivision depth ``level``.

    Degenerate cells (rank below their grade) contribute nothing and are
    logged.

    Example:
    ```python
    tri = Simplex(((0.0, 0.0), (1.0, 0.0), (0.0, 1.0)))
    integrate(Form.volume(2), polyhedral_chain([(1.0, tri)], 3))  # 0.5
    ```
    """
    if not cells:
        raise ValueError("cells must not be empty")
    dim, grade = cells[0][1].dim, cells[0][1].grade
    builder = ChainBuilder(dim, grade)
    zero = (0,) * dim
    for weight, cell in cells:
        if cell.dim != dim or cell.grade != grade:
            raise DimensionMismatchError(
                f"cell of shape ({cell.dim}, {cell.grade}) among ({dim}, {grade}) cells"
            )
        alpha = cell.kvector() * weight
        if alpha.is_zero():
            if weight != 0.0:
                _log.warning("degenerate %s cell contributes nothing", type(cell).__name__)
            continue
        for point, share in cell.pieces(level):
            for index, value in alpha.items():
                builder.add(point, zero, index, value * share)
    return builder.build()


def polyhedral_family(cells: Sequence[Tuple[float, Cell]]) -> ChainFamily:
    dim, grade = cells[0][1].dim, cells[0][1].grade
    return ChainFamily(dim, grade, lambda j: polyhedral_chain(cells, j), domain="polyhedral")
