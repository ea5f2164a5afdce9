import logging
from typing import Mapping, Sequence, Union

import numpy as np

from chaincalc.chains import ChainBuilder, DiracChain, restrict
from chaincalc.exterior import KVector, MultiIndex, check_index
from chaincalc.fields.smooth_map import SmoothMap
from chaincalc.interfaces.scalar_field_abc import ScalarFieldABC
from chaincalc.operators import VectorArg, extrude_kvector, mult, perp_chain, prederiv, pushforward
from chaincalc.represent.cubes import cube_chain
from chaincalc.represent.open_sets import Predicate, open_set_chain
from chaincalc.represent.polyhedral import Cell, polyhedral_chain
from chaincalc.regions import BallRegion

_log = logging.getLogger(__name__)


def vectorfield_chain(
    X: Mapping[Sequence[int], ScalarFieldABC],
    predicate: Predicate,
    bbox: Sequence[Sequence[float]],
    level: int,
) -> DiracChain:
    """
    The chain of a k-vector field X = Σ f_I e_I over an open set U,
    (-1)^n Σ_I m_{f_I} E_{e_I} ⊥ U, so ∫ ω = ∫_U ω(X(p)) dV in the limit.
    """
    if not X:
        raise ValueError("X must have at least one coefficient")
    region = open_set_chain(predicate, bbox, level)
    dim = region.dim
    scalar = perp_chain(region)
    sign = -1.0 if dim % 2 else 1.0
    grades = {len(tuple(i)) for i in X}
    if len(grades) != 1:
        raise ValueError("X must be homogeneous in grade")
    builder = ChainBuilder(dim, grades.pop())
    for index, f in X.items():
        axes: MultiIndex = check_index(index, dim)
        builder.add_chain(mult(f, extrude_kvector(KVector.basis(dim, axes), scalar)), sign)
    return builder.build()


def dipole_cell(v: VectorArg, cell: Union[Cell, DiracChain], level: int = 0) -> DiracChain:
    """
    The dipole P_v σ of a cell; a ``DiracChain`` is taken as already
    represented.
    """
    chain = cell if isinstance(cell, DiracChain) else polyhedral_chain([(1.0, cell)], level)
    return prederiv(v, chain)


def circle_chain(level: int, radius: float = 1.0, center: Sequence[float] = (0.0, 0.0)) -> DiracChain:
    """
    The counterclockwise circle as the pushforward of [0, 1] under
    t ↦ c + r (cos 2πt, sin 2πt).
    """
    c = np.asarray(center, dtype=float)
    F = SmoothMap.from_expressions(
        [
            f"{float(c[0])!r} + {float(radius)!r}*cos(2*pi*x1)",
            f"{float(c[1])!r} + {float(radius)!r}*sin(2*pi*x1)",
        ],
        1,
    )
    return pushforward(F, cube_chain((0.0,), 1.0, (0,), 1, level))


def slit_edge_chain(m: int, side: int, level: int) -> DiracChain:
    """
    [0, 1] × {side/m} ∩ Q as a 1-chain oriented along e1, with Q the open
    unit disk; ``side`` is +1 for the upper edge and -1 for the lower one.
    """
    if m < 2:
        raise ValueError("m must be at least two")
    if side not in (1, -1):
        raise ValueError("side must be either 1 or -1")
    segment = cube_chain((0.0, side / m), 1.0, (0,), 1, level)
    disk = BallRegion((0.0, 0.0), 1.0)
    return restrict(segment, disk.contains)
