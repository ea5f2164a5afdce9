"""
Renormalized fractal chains.

Stage-m approximants carry the renormalization factors (3/2)^m for the
middle-third Cantor set and (4/3)^m for the Sierpinski triangle, so the
canonical test integrals do not depend on the stage.
"""

import logging
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from chaincalc.chains import ChainBuilder, DiracChain
from chaincalc.represent.family import ChainFamily
from chaincalc.represent.polyhedral import Simplex, polyhedral_chain

_log = logging.getLogger(__name__)

SIERPINSKI_VERTICES = ((0.0, 0.0), (1.0, 0.0), (0.0, 1.0))


def cantor_intervals(stage: int) -> List[Tuple[Fraction, Fraction]]:
    """The 2^m closed intervals of the m-th middle-third stage, exactly."""
    if stage < 0:
        raise ValueError("stage must be non-negative")
    intervals = [(Fraction(0), Fraction(1))]
    for _ in range(stage):
        nxt = []
        for a, b in intervals:
            third = (b - a) / 3
            nxt.append((a, a + third))
            nxt.append((b - third, b))
        intervals = nxt
    return intervals


def _embed(x: float, ambient_dim: int) -> Tuple[float, ...]:
    return (x,) + (0.0,) * (ambient_dim - 1)


def cantor_chain(stage: int, depth: int = 0, ambient_dim: int = 1) -> DiracChain:
    """
    The stage-m Cantor chain (3/2)^m E_m as a 1-chain.

    Each interval is cut into 2^depth pieces represented at their
    midpoints, so ∫ dx = (3/2)^m (2/3)^m = 1 at every stage.

    Args:
        stage: Number of middle thirds removed.
        depth: Extra dyadic subdivision of every interval.
        ambient_dim: Embed along the first axis of R^ambient_dim.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if ambient_dim < 1:
        raise ValueError("ambient_dim must be greater than zero")
    intervals = cantor_intervals(stage)
    pieces = 2**depth
    weight = float(Fraction(3, 2) ** stage * (intervals[0][1] - intervals[0][0]) / pieces)
    builder = ChainBuilder(ambient_dim, 1)
    zero = (0,) * ambient_dim
    for a, b in intervals:
        step = (b - a) / pieces
        for i in range(pieces):
            mid = a + step * (2 * i + 1) / 2
            builder.add(_embed(float(mid), ambient_dim), zero, (0,), weight)
    return builder.build()


def cantor_endpoint_boundary(stage: int, ambient_dim: int = 1) -> DiracChain:
    """Σ (q_i; (3/2)^m) - (p_i; (3/2)^m) over the stage intervals [p_i, q_i]."""
    weight = float(Fraction(3, 2) ** stage)
    builder = ChainBuilder(ambient_dim, 0)
    zero = (0,) * ambient_dim
    for a, b in cantor_intervals(stage):
        builder.add(_embed(float(b), ambient_dim), zero, (), weight)
        builder.add(_embed(float(a), ambient_dim), zero, (), -weight)
    return builder.build()


def cantor_family(depth: int = 0, ambient_dim: int = 1) -> ChainFamily:
    return ChainFamily(
        ambient_dim, 1, lambda m: cantor_chain(m, depth, ambient_dim), domain="cantor"
    )


def sierpinski_triangles(stage: int) -> List[np.ndarray]:
    """The 3^m corner triangles of side 2^{-m} of the stage-m construction."""
    if stage < 0:
        raise ValueError("stage must be non-negative")
    triangles = [np.asarray(SIERPINSKI_VERTICES, dtype=float)]
    for _ in range(stage):
        nxt = []
        for a, b, c in triangles:
            ab, bc, ca = (a + b) / 2, (b + c) / 2, (c + a) / 2
            nxt.extend(
                [np.array([a, ab, ca]), np.array([ab, b, bc]), np.array([ca, bc, c])]
            )
        triangles = nxt
    return triangles


def sierpinski_chain(stage: int, depth: int = 0) -> DiracChain:
    """
    The stage-m Sierpinski chain (4/3)^m S_m as a 2-chain in R^2.

    Every triangle carries (4/3)^m times its area on e12, so ∫ dV is the
    area 1/2 of the initial triangle at every stage.
    """
    factor = (4.0 / 3.0) ** stage
    cells = [
        (factor, Simplex(tuple(tuple(float(x) for x in v) for v in tri)))
        for tri in sierpinski_triangles(stage)
    ]
    return polyhedral_chain(cells, depth)


def sierpinski_family(depth: int = 0) -> ChainFamily:
    return ChainFamily(2, 2, lambda m: sierpinski_chain(m, depth), domain="sierpinski")
