from dataclasses import dataclass
from typing import Tuple

from chaincalc.exterior import MultiIndex, index_label

Point = Tuple[float, ...]
Degree = Tuple[int, ...]
TermKey = Tuple[Point, Degree, MultiIndex]


@dataclass(frozen=True)
class ChainTerm:
    """One term (p; m ⊗ e_I) of a Dirac chain with its coefficient.

    ``degree`` expands the symmetric order part over the standard basis, so
    the term acts on a form as ``coeff · ∂^degree ω_I(point)``.
    """

    point: Point
    degree: Degree
    index: MultiIndex
    coeff: float

    @property
    def key(self) -> TermKey:
        return (self.point, self.degree, self.index)

    @property
    def order(self) -> int:
        return sum(self.degree)

    @property
    def grade(self) -> int:
        return len(self.index)

    def __str__(self) -> str:
        return f"({self.point}; {self.degree}⊗{index_label(self.index)}) × {self.coeff!r}"
