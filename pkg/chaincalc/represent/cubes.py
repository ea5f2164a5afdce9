"""
Dyadic midpoint representatives of coordinate k-cubes.
"""

import logging
from itertools import product
from typing import Sequence

import numpy as np

from chaincalc.chains import ChainBuilder, DiracChain
from chaincalc.exterior import MultiIndex, check_index
from chaincalc.represent.family import ChainFamily

_log = logging.getLogger(__name__)


def cube_chain(
    corner: Sequence[float],
    side: float,
    dirs: Sequence[int],
    orientation: int = 1,
    level: int = 0,
) -> DiracChain:
    """
    The k-cube ``corner + [0, side]^dirs`` at dyadic level ``level``.

    Each of the 2^{kj} subcubes contributes its midpoint carrying
    ``orientation · side^k · 2^{-kj}`` on e_dirs, so ∫ dx_dirs = side^k.

    Example:
    ```python
    cube_chain((0.0, 0.0), 1.0, (0, 1), level=1)  # four terms of weight 1/4
    ```
    """
    if side <= 0:
        raise ValueError("side must be greater than zero")
    if orientation not in (1, -1):
        raise ValueError("orientation must be either 1 or -1")
    if level < 0:
        raise ValueError("level must be non-negative")
    base = np.asarray(corner, dtype=float)
    dim = base.shape[0]
    index: MultiIndex = check_index(dirs, dim)
    k = len(index)
    cells = 2**level
    step = side / cells
    weight = orientation * side**k / cells**k
    builder = ChainBuilder(dim, k)
    zero = (0,) * dim
    for cell in product(range(cells), repeat=k):
        point = base.copy()
        for axis, c in zip(index, cell):
            point[axis] += (c + 0.5) * step
        builder.add(point, zero, index, weight)
    return builder.build()


def cube_family(
    corner: Sequence[float],
    side: float,
    dirs: Sequence[int],
    orientation: int = 1,
) -> ChainFamily:
    dim = len(corner)
    return ChainFamily(
        dim,
        len(dirs),
        lambda j: cube_chain(corner, side, dirs, orientation, j),
        domain=f"cube{tuple(dirs)}",
    )


def point_limit_family(point: Sequence[float], index: Sequence[int], refine: int = 1) -> ChainFamily:
    """
    The k-element (p; e_I) as the limit of renormalized cubes 2^{jk} Q_j of
    side 2^{-j} centred at p.
    """
    p = np.asarray(point, dtype=float)
    axes = check_index(index, p.shape[0])
    k = len(axes)

    def generate(j: int) -> DiracChain:
        side = 2.0**-j
        corner = p.copy()
        for axis in axes:
            corner[axis] -= side / 2
        return cube_chain(corner, side, axes, 1, refine) * 2.0 ** (j * k)

    return ChainFamily(p.shape[0], k, generate, domain="point")
