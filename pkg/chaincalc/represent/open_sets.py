"""
Bounded open sets as interior dyadic cube coverings.

The covering is uniform in depth: at level j the bounding box is cut into
2^{nj} congruent cells, and a cell is kept when its corners and centre all
lie in the set. Kept cells contribute their midpoint carrying the cell
volume on e_{1..n}.
"""

import logging
from itertools import product
from typing import Callable, Sequence, Union

import numpy as np

from chaincalc.chains import ChainBuilder, DiracChain
from chaincalc.interfaces.region_abc import RegionABC
from chaincalc.represent.family import ChainFamily

_log = logging.getLogger(__name__)

Predicate = Union[RegionABC, Callable[[np.ndarray], bool]]


def _membership(predicate: Predicate) -> Callable[[np.ndarray], bool]:
    if isinstance(predicate, RegionABC):
        return predicate.contains
    return predicate


def open_set_chain(
    predicate: Predicate,
    bbox: Sequence[Sequence[float]],
    level: int,
) -> DiracChain:
    """
    Grade-n representative of ``{p in bbox : predicate(p)}`` at level j.

    Args:
        predicate: Membership test, or a ``RegionABC``.
        bbox: ``(lo, hi)`` corners of the bounding box.
        level: Dyadic depth j.
    """
    if level < 0:
        raise ValueError("level must be non-negative")
    lo = np.asarray(bbox[0], dtype=float)
    hi = np.asarray(bbox[1], dtype=float)
    if np.any(hi <= lo):
        raise ValueError("bbox must have positive extent on every axis")
    inside = _membership(predicate)
    dim = lo.shape[0]
    cells = 2**level
    step = (hi - lo) / cells
    volume = float(np.prod(step))
    index = tuple(range(dim))
    zero = (0,) * dim
    offsets = np.array(list(product((0.0, 1.0), repeat=dim)))
    builder = ChainBuilder(dim, dim)
    kept = 0
    for cell in product(range(cells), repeat=dim):
        corner = lo + np.asarray(cell, dtype=float) * step
        center = corner + 0.5 * step
        if not inside(center):
            continue
        if all(inside(corner + o * step) for o in offsets):
            builder.add(center, zero, index, volume)
            kept += 1
    _log.debug("open set level %d: kept %d of %d cells", level, kept, cells**dim)
    return builder.build()


def open_set_family(
    predicate: Predicate,
    bbox: Sequence[Sequence[float]],
    domain: str = "open set",
) -> ChainFamily:
    dim = len(bbox[0])
    return ChainFamily(dim, dim, lambda j: open_set_chain(predicate, bbox, j), domain=domain)
