"""
Certified two-sided bounds for B^r norms of Dirac chains.

Upper bounds come from explicit decompositions A = Σ Δ_{σ_i}(p_i; α_i)
with cost Σ ‖σ_i‖ mass(α_i); lower bounds from forms with a certified norm
bound, |∫_A ω| / ‖ω‖. The true norm is an infimum and is never claimed.
"""

import logging
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.spatial import cKDTree

from chaincalc.chains import ChainBuilder, DiracChain, as_point, difference
from chaincalc.data_types.chain import Point
from chaincalc.data_types.norm import (
    Decomposition,
    DifferencePiece,
    FormNormEstimate,
    NormBound,
    Vector,
)
from chaincalc.exceptions import DecompositionMismatchError, UnsupportedOrderError
from chaincalc.exterior import KVector, MultiIndex
from chaincalc.forms import Form, integrate
from chaincalc.interfaces.region_abc import RegionABC

_log = logging.getLogger(__name__)

CertifiedForm = Tuple[Form, float]
Strategy = Union[str, Decomposition]

PAIRING_RADIUS = 2.0
STRATEGIES = ("trivial", "pairing")


def reconstruct(decomposition: Decomposition, dim: int, grade: int) -> DiracChain:
    """Σ difference(σ_i, (p_i; α_i))."""
    builder = ChainBuilder(dim, grade)
    for piece in decomposition.pieces:
        base = DiracChain.element(piece.point, piece.kvector)
        builder.add_chain(difference(list(piece.sigma), base))
    return builder.build()


def check_decomposition(
    decomposition: Decomposition, chain: DiracChain, tol: float = 1e-12
) -> None:
    """
    Raises:
        DecompositionMismatchError: carrying the residual chain when the
            pieces do not rebuild ``chain``.
    """
    residual = chain - reconstruct(decomposition, chain.dim, chain.grade)
    if residual.norm_inf() > tol * max(1.0, chain.norm_inf()):
        raise DecompositionMismatchError(
            residual, f"decomposition leaves a residual of {len(residual)} terms"
        )


def _require_order_zero(chain: DiracChain) -> None:
    if chain.order > 0:
        raise UnsupportedOrderError(
            f"norm bounds are computed for order-0 chains, got order {chain.order}"
        )


def _regroup(pieces: Sequence[Tuple[Tuple[Vector, ...], Point, MultiIndex, float]], dim: int) -> List[DifferencePiece]:
    grouped: Dict[Tuple[Tuple[Vector, ...], Point], Dict[MultiIndex, float]] = {}
    for sigma, point, index, coeff in pieces:
        slot = grouped.setdefault((sigma, point), {})
        slot[index] = slot.get(index, 0.0) + coeff
    out = []
    for (sigma, point), coeffs in sorted(grouped.items()):
        grade = len(next(iter(coeffs)))
        alpha = KVector(dim, grade, coeffs)
        if not alpha.is_zero():
            out.append(DifferencePiece(sigma, point, alpha))
    return out


def decompose_trivial(chain: DiracChain) -> Decomposition:
    """Every point carries its own k-element; the cost is the B^0 mass bound."""
    _require_order_zero(chain)
    pieces = [((), point, index, coeff) for (point, _, index), coeff in chain.items()]
    return Decomposition(tuple(_regroup(pieces, chain.dim)), 0)


def _positive(u: Vector) -> bool:
    for a in u:
        if a != 0.0:
            return a > 0.0
    return False


def _pair_level(
    pieces: List[Tuple[Tuple[Vector, ...], Point, MultiIndex, float]],
    depth: int,
) -> List[Tuple[Tuple[Vector, ...], Point, MultiIndex, float]]:
    # merge opposite-sign depth-(depth-1) pieces with equal (index, σ) into
    # depth-level differences, nearest pairs first. Every σ vector is kept
    # lexicographically positive, using Δ_{-v}(p) = -Δ_v(p - v), so that
    # merged pieces of either sign meet again at the next depth.
    groups: Dict[Tuple[MultiIndex, Tuple[Vector, ...]], Dict[Point, float]] = {}
    rest = []
    for sigma, point, index, coeff in pieces:
        if len(sigma) != depth - 1:
            rest.append((sigma, point, index, coeff))
            continue
        slot = groups.setdefault((index, sigma), {})
        slot[point] = slot.get(point, 0.0) + coeff

    merged = 0
    for (index, sigma), masses in sorted(groups.items()):
        pos = sorted(p for p, c in masses.items() if c > 0.0)
        neg = sorted(p for p, c in masses.items() if c < 0.0)
        remaining = {p: abs(c) for p, c in masses.items()}
        if pos and neg:
            pairs = cKDTree(np.array(pos)).sparse_distance_matrix(
                cKDTree(np.array(neg)), PAIRING_RADIUS, output_type="ndarray"
            )
            candidates = sorted(
                (float(v), pos[int(i)], neg[int(j)])
                for i, j, v in pairs
                if v < PAIRING_RADIUS
            )
            for _, p, q in candidates:
                m = min(remaining[p], remaining[q])
                if m <= 0.0:
                    continue
                u = tuple(float(a - b) for a, b in zip(p, q))
                if as_point(np.add(q, u)) != p:
                    continue
                # m (Δ_σ(p) - Δ_σ(q)) = m Δ_{p-q} Δ_σ(q) = -m Δ_{q-p} Δ_σ(p)
                if _positive(u):
                    rest.append((tuple(sorted((u,) + sigma)), q, index, m))
                else:
                    flipped = tuple(float(b - a) for a, b in zip(p, q))
                    rest.append((tuple(sorted((flipped,) + sigma)), p, index, -m))
                remaining[p] -= m
                remaining[q] -= m
                merged += 1
        for point, c in masses.items():
            left = remaining[point]
            if left > 0.0:
                rest.append((sigma, point, index, left if c > 0.0 else -left))
    _log.debug("pairing depth %d: %d merges", depth, merged)
    return rest


def decompose_pairing(chain: DiracChain, r: int) -> Decomposition:
    """
    Greedy nearest-point pairing of opposite-sign equal-index terms into
    1-differences, repeated on equal-σ differences up to depth r.

    Pairs closer than 2 are merged, since Δ_u(q; m) costs ‖u‖·m against 2m
    for the two separate elements. The cheapest depth seen is returned, so
    the bound is nonincreasing in r.
    """
    _require_order_zero(chain)
    best = decompose_trivial(chain)
    pieces = [((), point, index, coeff) for (point, _, index), coeff in chain.items()]
    for depth in range(1, r + 1):
        pieces = _pair_level(pieces, depth)
        candidate = Decomposition(tuple(_regroup(pieces, chain.dim)), depth)
        if candidate.cost < best.cost:
            best = candidate
    return Decomposition(best.pieces, r)


def norm_upper(chain: DiracChain, r: int, decomposition: Strategy = "pairing") -> float:
    """
    Certified upper bound of ‖A‖_{B^r} for an order-0 chain.

    Example:
    ```python
    J = DiracChain.element((0.0,), KVector.scalar(1))
    norm_upper(difference([(0.25,)], J), 1)  # 0.25
    ```
    """
    return _upper_decomposition(chain, r, decomposition).cost


def _upper_decomposition(chain: DiracChain, r: int, decomposition: Strategy) -> Decomposition:
    if r < 0:
        raise ValueError("r must be non-negative")
    if isinstance(decomposition, Decomposition):
        if decomposition.r > r:
            raise ValueError(f"decomposition of depth {decomposition.r} for r = {r}")
        check_decomposition(decomposition, chain)
        return decomposition
    if decomposition == "trivial":
        found = decompose_trivial(chain)
    elif decomposition == "pairing":
        found = decompose_pairing(chain, r)
    else:
        raise ValueError(f"unknown strategy {decomposition!r}, expected one of {STRATEGIES}")
    check_decomposition(found, chain)
    return found


def _lower_witness(chain: DiracChain, dictionary: Sequence[CertifiedForm]) -> Tuple[float, Optional[int]]:
    best, witness = 0.0, None
    for i, (w, bound) in enumerate(dictionary):
        if bound <= 0:
            raise ValueError("certified form bounds must be greater than zero")
        value = abs(integrate(w, chain)) / bound
        if value > best:
            best, witness = value, i
    return best, witness


def norm_lower(chain: DiracChain, r: int, dictionary: Sequence[CertifiedForm]) -> float:
    """
    Certified lower bound max |∫_A ω| / ‖ω‖_{B^r} over a dictionary of forms
    with user-certified norm bounds.
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    if not dictionary:
        _log.warning("empty form dictionary, lower bound is 0")
        return 0.0
    return _lower_witness(chain, dictionary)[0]


def norm_bound(
    chain: DiracChain,
    r: int,
    dictionary: Sequence[CertifiedForm],
    strategy: Strategy = "pairing",
) -> NormBound:
    """
    Sandwich lower ≤ ‖A‖_{B^r} ≤ upper with both witnesses.

    Raises CertificateViolationError when a dictionary form beats the
    decomposition, i.e. its supplied norm bound is too small.
    """
    decomposition = _upper_decomposition(chain, r, strategy)
    if dictionary:
        lower, witness = _lower_witness(chain, dictionary)
    else:
        _log.warning("empty form dictionary, lower bound is 0")
        lower, witness = 0.0, None
    return NormBound(
        lower=lower,
        upper=decomposition.cost,
        r=r,
        decomposition=decomposition,
        witness_form=None if witness is None else repr(dictionary[witness][0]),
    )


def grid_points(lo: Sequence[float], hi: Sequence[float], samples: int) -> np.ndarray:
    """A tensor grid with ``samples`` points per axis, endpoints included."""
    if samples < 1:
        raise ValueError("samples must be greater than zero")
    axes = [np.linspace(a, b, samples) for a, b in zip(lo, hi)]
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.reshape(-1) for m in mesh], axis=1)


def _degrees(dim: int, total: int) -> List[Tuple[int, ...]]:
    out = []
    for axes in combinations_with_replacement(range(dim), total):
        degree = [0] * dim
        for a in axes:
            degree[a] += 1
        out.append(tuple(degree))
    return out


def form_norm_estimate(w: Form, r: int, points: Sequence[Sequence[float]]) -> FormNormEstimate:
    """
    Sampled sup of |∂^m ω_I(p)| over |m| ≤ r.

    The result is a lower estimate of the C^{r-1+Lip}-type form norm and is
    always flagged as not certified.
    """
    pts = np.asarray(points, dtype=float).reshape(-1, w.dim)
    degrees = [d for total in range(r + 1) for d in _degrees(w.dim, total)]
    best = 0.0
    for _, field in w.items():
        for degree in degrees:
            for p in pts:
                best = max(best, abs(field.partial(degree, p)))
    return FormNormEstimate(value=best, r=r, samples=len(pts))


def inside_check(decomposition: Decomposition, region: RegionABC) -> bool:
    """
    Whether every difference chain of ``decomposition`` has its support hull
    inside ``region``; zero differences are always inside.
    """
    for piece in decomposition.pieces:
        if piece.kvector.is_zero() or any(not any(u) for u in piece.sigma):
            continue
        if not region.contains_hull(piece.vertices()):
            return False
    return True
