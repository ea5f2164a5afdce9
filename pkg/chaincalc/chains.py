"""
Dirac chains of arbitrary dipole order.

A chain is a canonical finitely-supported map (point, degree, index) ->
coefficient. Terms with ``|coeff| < ZERO_THRESHOLD`` are dropped, so exact
cancellations in the formulas cancel exactly in floats. Points are compared
bit-exactly.
"""

import logging
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Sequence, Set, Tuple

import numpy as np

from chaincalc.data_types.chain import ChainTerm, Point, TermKey
from chaincalc.exceptions import (
    ChainFormatError,
    DimensionMismatchError,
    GradeMismatchError,
)
from chaincalc.exterior import (
    ZERO_THRESHOLD,
    KVector,
    MultiIndex,
    as_vector,
    check_index,
)

_log = logging.getLogger(__name__)


def as_point(p: Iterable[float]) -> Point:
    return tuple(float(x) for x in p)


class DiracChain:
    """
    A Dirac k-chain in R^n.

    Instances are immutable; use ``ChainBuilder`` to assemble large chains.

    Example:
    ```python
    a = DiracChain.element((0.0, 0.0), KVector.basis(2, (0,)))
    b = DiracChain.element((0.5, 0.0), KVector.basis(2, (0,)))
    c = a - b  # two-term difference chain
    ```
    """

    __slots__ = ("dim", "grade", "_terms")

    def __init__(
        self,
        dim: int,
        grade: int,
        terms: Mapping[TermKey, float] | None = None,
    ) -> None:
        if dim < 0:
            raise ValueError("dim must be non-negative")
        if grade < -1:
            raise ValueError("grade must be at least -1")
        self.dim = dim
        self.grade = grade
        builder = ChainBuilder(dim, grade)
        for (point, degree, index), coeff in (terms or {}).items():
            builder.add(point, degree, index, coeff)
        self._terms: Dict[TermKey, float] = builder._sorted_terms()

    @classmethod
    def _trusted(cls, dim: int, grade: int, terms: Dict[TermKey, float]) -> "DiracChain":
        chain = cls.__new__(cls)
        chain.dim = dim
        chain.grade = grade
        chain._terms = terms
        return chain

    @classmethod
    def zero(cls, dim: int, grade: int) -> "DiracChain":
        return cls(dim, grade)

    @classmethod
    def element(
        cls,
        point: Iterable[float],
        alpha: KVector,
        degree: Sequence[int] | None = None,
    ) -> "DiracChain":
        """The chain (p; m ⊗ α) for a multivector α and an optional degree vector m."""
        p = as_point(point)
        if len(p) != alpha.dim:
            raise DimensionMismatchError(
                f"point of length {len(p)} for a multivector in R^{alpha.dim}"
            )
        deg = tuple(degree) if degree is not None else (0,) * alpha.dim
        builder = ChainBuilder(alpha.dim, alpha.grade)
        for index, coeff in alpha.items():
            builder.add(p, deg, index, coeff)
        return builder.build()

    @classmethod
    def from_terms(cls, dim: int, grade: int, terms: Iterable[ChainTerm]) -> "DiracChain":
        builder = ChainBuilder(dim, grade)
        for term in terms:
            builder.add_term(term)
        return builder.build()

    def terms(self) -> Iterator[ChainTerm]:
        for (point, degree, index), coeff in self._terms.items():
            yield ChainTerm(point, degree, index, coeff)

    def items(self) -> Iterator[Tuple[TermKey, float]]:
        return iter(self._terms.items())

    def coefficient(self, point: Iterable[float], degree: Sequence[int], index: MultiIndex) -> float:
        return self._terms.get((as_point(point), tuple(degree), tuple(index)), 0.0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def order(self) -> int:
        """Maximum total degree over the terms; 0 for the zero chain."""
        return max((sum(key[1]) for key in self._terms), default=0)

    def norm_inf(self) -> float:
        return max((abs(c) for c in self._terms.values()), default=0.0)

    def _check_same(self, other: "DiracChain") -> None:
        if self.dim != other.dim:
            raise DimensionMismatchError(
                f"chain dimensions differ: {self.dim} != {other.dim}"
            )
        if self.grade != other.grade:
            raise GradeMismatchError(
                f"chain grades differ: {self.grade} != {other.grade}"
            )

    def __add__(self, other: "DiracChain") -> "DiracChain":
        return combine(self, other, 1.0, 1.0)

    def __sub__(self, other: "DiracChain") -> "DiracChain":
        return combine(self, other, 1.0, -1.0)

    def __neg__(self) -> "DiracChain":
        return scale(self, -1.0)

    def __mul__(self, factor: float) -> "DiracChain":
        return scale(self, factor)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiracChain):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.grade == other.grade
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.grade, tuple(self._terms.items())))

    def allclose(self, other: "DiracChain", tol: float = 1e-12) -> bool:
        """Termwise comparison with an absolute tolerance."""
        return (self - other).norm_inf() <= tol

    def __repr__(self) -> str:
        return f"DiracChain(dim={self.dim}, grade={self.grade}, terms={len(self)}, order={self.order})"


class ChainBuilder:
    """
    Single-writer accumulator for chain terms.

    Not thread-safe; build one per thread and ``combine`` the results.
    """

    def __init__(self, dim: int, grade: int) -> None:
        self.dim = dim
        self.grade = grade
        self._acc: Dict[TermKey, float] = {}

    def add(
        self,
        point: Iterable[float],
        degree: Sequence[int],
        index: Iterable[int],
        coeff: float,
    ) -> "ChainBuilder":
        if coeff == 0.0:
            return self
        p = as_point(point)
        d = tuple(int(x) for x in degree)
        i = check_index(index, self.dim)
        if len(p) != self.dim or len(d) != self.dim:
            raise DimensionMismatchError(
                f"term of point/degree length {len(p)}/{len(d)} in R^{self.dim}"
            )
        if len(i) != self.grade:
            raise GradeMismatchError(
                f"term of grade {len(i)} in a chain of grade {self.grade}"
            )
        if any(x < 0 for x in d):
            raise ValueError("degree entries must be non-negative")
        key = (p, d, i)
        self._acc[key] = self._acc.get(key, 0.0) + float(coeff)
        return self

    def add_term(self, term: ChainTerm, factor: float = 1.0) -> "ChainBuilder":
        return self.add(term.point, term.degree, term.index, term.coeff * factor)

    def add_chain(self, chain: DiracChain, factor: float = 1.0) -> "ChainBuilder":
        if chain.dim != self.dim or chain.grade != self.grade:
            raise GradeMismatchError(
                f"cannot add a ({chain.dim}, {chain.grade}) chain to a "
                f"({self.dim}, {self.grade}) builder"
            )
        if factor == 0.0:
            return self
        acc = self._acc
        for key, coeff in chain.items():
            acc[key] = acc.get(key, 0.0) + coeff * factor
        return self

    def _sorted_terms(self) -> Dict[TermKey, float]:
        return {
            key: coeff
            for key, coeff in sorted(self._acc.items())
            if abs(coeff) >= ZERO_THRESHOLD
        }

    def build(self) -> DiracChain:
        return DiracChain._trusted(self.dim, self.grade, self._sorted_terms())


def combine(a: DiracChain, b: DiracChain, ca: float = 1.0, cb: float = 1.0) -> DiracChain:
    """The canonical linear combination ``ca·a + cb·b``."""
    a._check_same(b)
    return ChainBuilder(a.dim, a.grade).add_chain(a, ca).add_chain(b, cb).build()


def linear_combination(chains: Sequence[Tuple[float, DiracChain]], dim: int, grade: int) -> DiracChain:
    builder = ChainBuilder(dim, grade)
    for factor, chain in chains:
        builder.add_chain(chain, factor)
    return builder.build()


def scale(chain: DiracChain, factor: float) -> DiracChain:
    return ChainBuilder(chain.dim, chain.grade).add_chain(chain, factor).build()


def translate(u: Sequence[float], chain: DiracChain) -> DiracChain:
    """T_u: shift every point by ``u``; degrees, indices and coefficients are kept."""
    shift = as_vector(u, chain.dim)
    builder = ChainBuilder(chain.dim, chain.grade)
    for (point, degree, index), coeff in chain.items():
        moved = tuple(float(x + s) for x, s in zip(point, shift))
        builder.add(moved, degree, index, coeff)
    return builder.build()


def difference(sigma: Sequence[Sequence[float]], base: DiracChain) -> DiracChain:
    """
    Recursive application of (T_u - Id) for each u in ``sigma``.

    The result lives on at most 2^j translated copies of ``base`` with
    alternating signs; the order of ``sigma`` does not matter.
    """
    result = base
    for u in sigma:
        result = translate(u, result) - result
    return result


def support(chain: DiracChain) -> Set[Point]:
    """The points carrying a nonzero term."""
    return {key[0] for key, _ in chain.items()}


def restrict(chain: DiracChain, predicate: Callable[[Point], bool]) -> DiracChain:
    """Keep exactly the terms whose point satisfies ``predicate``."""
    terms = {key: coeff for key, coeff in chain.items() if predicate(key[0])}
    return DiracChain._trusted(chain.dim, chain.grade, terms)


def split_by_order(chain: DiracChain) -> Dict[int, DiracChain]:
    """Homogeneous components keyed by total dipole order."""
    parts: Dict[int, Dict[TermKey, float]] = {}
    for key, coeff in chain.items():
        parts.setdefault(sum(key[1]), {})[key] = coeff
    return {
        order: DiracChain._trusted(chain.dim, chain.grade, terms)
        for order, terms in sorted(parts.items())
    }


def points_array(chain: DiracChain) -> np.ndarray:
    """Term points as an array of shape (len(chain), dim)."""
    if chain.is_zero():
        return np.zeros((0, chain.dim))
    return np.array([key[0] for key, _ in chain.items()], dtype=float)


def _format_index(index: MultiIndex) -> str:
    return ",".join(str(i + 1) for i in index) if index else "-"


def _parse_float(token: str) -> float:
    lowered = token.lower()
    if "0x" in lowered or "p" in lowered:
        return float.fromhex(token)
    return float(token)


def dumps(chain: DiracChain) -> str:
    """
    Text form of a chain: a ``dim k`` header and one term per line,
    ``p1 … pn | d1 … dn | I | coeff``, with hexadecimal floats so that
    ``loads(dumps(c)) == c`` bit for bit.
    """
    lines: List[str] = [f"{chain.dim} {chain.grade}"]
    for (point, degree, index), coeff in chain.items():
        lines.append(
            " | ".join(
                [
                    " ".join(float(x).hex() for x in point),
                    " ".join(str(d) for d in degree),
                    _format_index(index),
                    float(coeff).hex(),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def loads(text: str) -> DiracChain:
    """Parse the output of ``dumps``. Blank lines and ``#`` comments are skipped."""
    rows = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not rows:
        raise ChainFormatError("missing 'dim k' header")
    header_line, header = rows[0]
    try:
        dim, grade = (int(x) for x in header.split())
    except ValueError as e:
        raise ChainFormatError(f"line {header_line}: bad header {header!r}") from e
    builder = ChainBuilder(dim, grade)
    for number, line in rows[1:]:
        fields = [f.strip() for f in line.split("|")]
        if len(fields) != 4:
            raise ChainFormatError(f"line {number}: expected 4 '|'-separated fields")
        try:
            point = tuple(_parse_float(x) for x in fields[0].split())
            degree = tuple(int(x) for x in fields[1].split())
            index = (
                ()
                if fields[2] in ("-", "")
                else tuple(int(x) - 1 for x in fields[2].split(","))
            )
            coeff = _parse_float(fields[3])
            builder.add(point, degree, index, coeff)
        except ValueError as e:
            raise ChainFormatError(f"line {number}: {e}") from e
    return builder.build()
