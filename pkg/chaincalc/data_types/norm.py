from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np

from chaincalc.exceptions import CertificateViolationError
from chaincalc.exterior import KVector, mass

Vector = Tuple[float, ...]


@dataclass(frozen=True)
class DifferencePiece:
    """One difference chain Δ_σ(p; α) of a decomposition."""

    sigma: Tuple[Vector, ...]
    point: Vector
    kvector: KVector

    @property
    def cost(self) -> float:
        """‖σ_1‖ ⋯ ‖σ_j‖ · mass(α)."""
        weight = mass(self.kvector).value
        for u in self.sigma:
            weight *= float(np.linalg.norm(u))
        return weight

    def vertices(self) -> np.ndarray:
        """Support points p + Σ_{i ∈ S} σ_i over all subsets S."""
        pts = [np.asarray(self.point, dtype=float)]
        for u in self.sigma:
            step = np.asarray(u, dtype=float)
            pts = pts + [p + step for p in pts]
        return np.array(pts)


@dataclass(frozen=True)
class Decomposition:
    """
    A chain written as Σ Δ_{σ_i}(p_i; α_i) with every |σ_i| ≤ r.
    """

    pieces: Tuple[DifferencePiece, ...]
    r: int

    def __post_init__(self) -> None:
        if self.r < 0:
            raise ValueError("r must be non-negative")
        for piece in self.pieces:
            if len(piece.sigma) > self.r:
                raise ValueError(
                    f"difference of depth {len(piece.sigma)} in a depth-{self.r} decomposition"
                )

    @property
    def cost(self) -> float:
        return float(sum(piece.cost for piece in self.pieces))

    def depth_counts(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for piece in self.pieces:
            counts[len(piece.sigma)] = counts.get(len(piece.sigma), 0) + 1
        return dict(sorted(counts.items()))


@dataclass(frozen=True)
class NormBound:
    """Certified bracket lower ≤ ‖A‖_{B^r} ≤ upper with its witnesses."""

    lower: float
    upper: float
    r: int
    decomposition: Optional[Decomposition] = None
    witness_form: Optional[str] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.r < 0:
            raise ValueError("r must be non-negative")
        if self.lower > self.upper + 1e-9 * max(1.0, abs(self.upper)):
            raise CertificateViolationError(self.lower, self.upper, self.witness_form)

    def to_dict(self) -> Dict[str, Any]:
        summary: Dict[str, Any] = {"form": self.witness_form}
        if self.decomposition is not None:
            summary["pieces"] = len(self.decomposition.pieces)
            summary["depths"] = {
                str(k): v for k, v in self.decomposition.depth_counts().items()
            }
        return {
            "r": self.r,
            "lower": self.lower,
            "upper": self.upper,
            "witness_summary": summary,
        }


@dataclass(frozen=True)
class FormNormEstimate:
    """Sampled estimate of a form norm; never a certified bound."""

    value: float
    r: int
    samples: int
    certified: bool = False
