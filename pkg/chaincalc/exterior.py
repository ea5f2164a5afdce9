"""
Exterior algebra over R^n with the Euclidean inner product.

Basis k-vectors e_I are keyed by strictly increasing 0-based axis tuples.
Text labels are 1-based (``e12`` is e_1 ∧ e_2).
"""

import logging
import math
from itertools import combinations
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Sequence, Tuple, Union

import numpy as np

from chaincalc.exceptions import (
    DimensionMismatchError,
    GradeMismatchError,
    InvalidMultiIndexError,
)

_log = logging.getLogger(__name__)

MultiIndex = Tuple[int, ...]
VectorLike = Union[Sequence[float], np.ndarray, "KVector"]

ZERO_THRESHOLD = 1e-300


def check_index(index: Iterable[int], dim: int) -> MultiIndex:
    """
    Validate and return a multi-index as a tuple.

    Raises:
        InvalidMultiIndexError: if the axes are not strictly increasing or
            fall outside ``range(dim)``.
    """
    axes = tuple(int(i) for i in index)
    for a, b in zip(axes, axes[1:]):
        if a >= b:
            raise InvalidMultiIndexError(
                f"multi-index {axes} must be strictly increasing"
            )
    if axes and (axes[0] < 0 or axes[-1] >= dim):
        raise InvalidMultiIndexError(
            f"multi-index {axes} has axes outside 0..{dim - 1}"
        )
    return axes


def index_label(index: MultiIndex) -> str:
    if not index:
        return "1"
    return "e" + "".join(str(i + 1) for i in index)


def basis_indices(dim: int, grade: int) -> List[MultiIndex]:
    if grade < 0 or grade > dim:
        return []
    return list(combinations(range(dim), grade))


def complement(index: MultiIndex, dim: int) -> MultiIndex:
    present = set(index)
    return tuple(i for i in range(dim) if i not in present)


def merge_sign(a: MultiIndex, b: MultiIndex) -> int:
    """
    Sign of the permutation sorting the concatenation ``a + b``.

    Returns 0 when the two indices share an axis, so that
    ``e_a ∧ e_b = merge_sign(a, b) e_{sorted(a + b)}``.
    """
    if set(a) & set(b):
        return 0
    inversions = sum(1 for i in a for j in b if i > j)
    return -1 if inversions % 2 else 1


def _merge(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(sorted(a + b))


class Mass(NamedTuple):
    value: float
    exact: bool


class KVector:
    """
    A grade-k multivector over R^n stored as a sparse map e_I -> coefficient.

    Zero coefficients are never stored, so two KVectors compare equal iff
    their canonical maps are equal. Grades -1 and above n are accepted for
    the zero vector only, as the formal result of wedging past the top grade
    or contracting a scalar.

    Example:
    ```python
    a = KVector.basis(3, (0,))
    b = KVector.basis(3, (1,))
    wedge(a, b)  # KVector(3, 2, {e12: 1.0})
    ```
    """

    __slots__ = ("dim", "grade", "_coeffs")

    def __init__(
        self,
        dim: int,
        grade: int,
        coeffs: Mapping[MultiIndex, float] | None = None,
    ) -> None:
        if dim < 0:
            raise ValueError("dim must be non-negative")
        if grade < -1:
            raise ValueError("grade must be at least -1")
        self.dim = dim
        self.grade = grade
        clean: Dict[MultiIndex, float] = {}
        for index, value in (coeffs or {}).items():
            axes = check_index(index, dim)
            if len(axes) != grade:
                raise GradeMismatchError(
                    f"index {index_label(axes)} does not have grade {grade}"
                )
            value = float(value)
            if abs(value) >= ZERO_THRESHOLD:
                clean[axes] = clean.get(axes, 0.0) + value
        self._coeffs = {
            k: v for k, v in sorted(clean.items()) if abs(v) >= ZERO_THRESHOLD
        }

    @classmethod
    def zero(cls, dim: int, grade: int) -> "KVector":
        return cls(dim, grade)

    @classmethod
    def scalar(cls, dim: int, value: float = 1.0) -> "KVector":
        return cls(dim, 0, {(): value})

    @classmethod
    def basis(cls, dim: int, index: Iterable[int], coeff: float = 1.0) -> "KVector":
        axes = check_index(index, dim)
        return cls(dim, len(axes), {axes: coeff})

    @classmethod
    def volume(cls, dim: int, coeff: float = 1.0) -> "KVector":
        """The unit n-vector e_1 ∧ ⋯ ∧ e_n, scaled by ``coeff``."""
        return cls.basis(dim, range(dim), coeff)

    @classmethod
    def from_vector(cls, vector: Sequence[float]) -> "KVector":
        values = [float(x) for x in vector]
        return cls(len(values), 1, {(i,): x for i, x in enumerate(values)})

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence[float]], dim: int) -> "KVector":
        """
        The simple k-vector v_1 ∧ ⋯ ∧ v_k.

        An empty list yields the unit scalar.
        """
        result = cls.scalar(dim)
        for vector in vectors:
            v = cls.from_vector(vector)
            if v.dim != dim:
                raise DimensionMismatchError(
                    f"vector of length {v.dim} in dimension {dim}"
                )
            result = wedge(result, v)
        return result

    @property
    def coeffs(self) -> Mapping[MultiIndex, float]:
        return MappingProxyType(self._coeffs)

    def items(self) -> Iterator[Tuple[MultiIndex, float]]:
        return iter(self._coeffs.items())

    def __getitem__(self, index: Iterable[int]) -> float:
        return self._coeffs.get(tuple(index), 0.0)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def _check_same(self, other: "KVector") -> None:
        if self.dim != other.dim:
            raise DimensionMismatchError(
                f"dimensions differ: {self.dim} != {other.dim}"
            )
        if self.grade != other.grade:
            raise GradeMismatchError(f"grades differ: {self.grade} != {other.grade}")

    def __add__(self, other: "KVector") -> "KVector":
        self._check_same(other)
        merged = dict(self._coeffs)
        for index, value in other.items():
            merged[index] = merged.get(index, 0.0) + value
        return KVector(self.dim, self.grade, merged)

    def __sub__(self, other: "KVector") -> "KVector":
        return self + (-1.0) * other

    def __neg__(self) -> "KVector":
        return (-1.0) * self

    def __mul__(self, scalar: float) -> "KVector":
        return KVector(
            self.dim, self.grade, {k: v * scalar for k, v in self._coeffs.items()}
        )

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KVector):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.grade == other.grade
            and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.grade, tuple(self._coeffs.items())))

    def allclose(self, other: "KVector", tol: float = 1e-12) -> bool:
        self._check_same(other)
        keys = set(self._coeffs) | set(other._coeffs)
        return all(abs(self[k] - other[k]) <= tol for k in keys)

    def max_abs(self) -> float:
        return max((abs(v) for v in self._coeffs.values()), default=0.0)

    def __repr__(self) -> str:
        body = ", ".join(f"{index_label(k)}: {v!r}" for k, v in self._coeffs.items())
        return f"KVector({self.dim}, {self.grade}, {{{body}}})"


def as_vector(v: VectorLike, dim: int | None = None) -> np.ndarray:
    """Coerce a 1-vector or a coordinate sequence to a float array."""
    if isinstance(v, KVector):
        if v.grade != 1:
            raise GradeMismatchError(f"expected a 1-vector, got grade {v.grade}")
        arr = np.zeros(v.dim)
        for (i,), value in v.items():
            arr[i] = value
    else:
        arr = np.asarray(v, dtype=float).reshape(-1)
    if dim is not None and arr.shape[0] != dim:
        raise DimensionMismatchError(f"vector of length {arr.shape[0]} in R^{dim}")
    return arr


def wedge(a: KVector, b: KVector) -> KVector:
    """
    Exterior product of a grade-k and a grade-l multivector.

    When k + l exceeds the dimension, the zero vector of formal grade k + l
    is returned.
    """
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dimensions differ: {a.dim} != {b.dim}")
    grade = a.grade + b.grade
    if a.grade < 0 or b.grade < 0 or grade > a.dim:
        return KVector.zero(a.dim, max(grade, -1))
    out: Dict[MultiIndex, float] = {}
    for i, x in a.items():
        for j, y in b.items():
            sign = merge_sign(i, j)
            if sign:
                key = _merge(i, j)
                out[key] = out.get(key, 0.0) + sign * x * y
    return KVector(a.dim, grade, out)


def inner(a: KVector, b: KVector) -> float:
    """
    The determinant inner product, for which the e_I are orthonormal.
    """
    a._check_same(b)
    return float(sum(value * b[index] for index, value in a.items()))


def contract(v: VectorLike, a: KVector) -> KVector:
    """
    Interior product of a vector into a multivector.

    ``contract(v, v_1 ∧ ⋯ ∧ v_k) = Σ (-1)^{i+1} ⟨v, v_i⟩ v_1 ∧ ⋯ v̂_i ⋯ ∧ v_k``;
    scalars contract to zero.
    """
    vec = as_vector(v, a.dim)
    if a.grade <= 0:
        return KVector.zero(a.dim, a.grade - 1)
    out: Dict[MultiIndex, float] = {}
    for index, value in a.items():
        for pos, axis in enumerate(index):
            weight = vec[axis]
            if weight == 0.0:
                continue
            key = index[:pos] + index[pos + 1 :]
            sign = -1.0 if pos % 2 else 1.0
            out[key] = out.get(key, 0.0) + sign * weight * value
    return KVector(a.dim, a.grade - 1, out)


def is_simple(a: KVector, tol: float = 1e-12) -> bool:
    """
    Whether ``a`` is decomposable as v_1 ∧ ⋯ ∧ v_k.

    A nonzero k-vector is simple iff the kernel of v ↦ v ∧ a has dimension k.
    """
    if a.is_zero() or a.grade in (0, 1, a.dim - 1, a.dim):
        return True
    columns = []
    targets = basis_indices(a.dim, a.grade + 1)
    for axis in range(a.dim):
        image = wedge(KVector.basis(a.dim, (axis,)), a)
        columns.append([image[t] for t in targets])
    matrix = np.array(columns, dtype=float).T
    scale = max(a.max_abs(), 1.0)
    rank = np.linalg.matrix_rank(matrix, tol=tol * scale)
    return a.dim - rank == a.grade


def mass(a: KVector) -> Mass:
    """
    Mass of a multivector.

    Exact for simple multivectors (every multivector of grade 0, 1, n-1 or n
    is simple). Otherwise the basis ℓ1 sum is returned with ``exact=False``:
    an upper bound of the infimum over simple decompositions.
    """
    if is_simple(a):
        return Mass(math.sqrt(max(inner(a, a), 0.0)), True)
    return Mass(float(sum(abs(v) for _, v in a.items())), False)


def perp(a: KVector) -> KVector:
    """
    Perpendicular complement, fixed by e_I ∧ ⊥e_I = (-1)^k e_1 ∧ ⋯ ∧ e_n.

    Example:
    ```python
    perp(KVector.scalar(2))         # e12
    perp(KVector.basis(2, (0,)))    # -e2
    ```
    """
    if a.grade < 0 or a.grade > a.dim:
        return KVector.zero(a.dim, a.dim - a.grade)
    parity = -1.0 if a.grade % 2 else 1.0
    out: Dict[MultiIndex, float] = {}
    for index, value in a.items():
        rest = complement(index, a.dim)
        out[rest] = parity * merge_sign(index, rest) * value
    return KVector(a.dim, a.dim - a.grade, out)


def perp_involution_sign(dim: int, grade: int) -> int:
    """Sign s with perp(perp(a)) = s·a for a of the given grade."""
    exponent = dim + grade * (dim - grade)
    return -1 if exponent % 2 else 1


def clifford_perp(a: KVector) -> KVector:
    """
    Composition C_{e_n} ∘ ⋯ ∘ C_{e_1} with C_v = v ∧ · + contract(v, ·).

    Each C_{e_i} maps a basis element to a single basis element, so the
    product is evaluated termwise.
    """
    out: Dict[MultiIndex, float] = {}
    for index, value in a.items():
        current = set(index)
        sign = 1.0
        for axis in range(a.dim):
            below = sum(1 for j in current if j < axis)
            if below % 2:
                sign = -sign
            current ^= {axis}
        key = tuple(sorted(current))
        out[key] = out.get(key, 0.0) + sign * value
    return KVector(a.dim, a.dim - a.grade, out)


def clifford_perp_sign(dim: int, grade: int) -> int:
    """Sign s with clifford_perp(a) = s·perp(a) on grade-k multivectors."""
    co = dim - grade
    exponent = grade + co * (co - 1) // 2
    return -1 if exponent % 2 else 1


def _minor(block: np.ndarray) -> float:
    # closed forms keep small integer minors exact
    size = block.shape[0]
    if size == 1:
        return float(block[0, 0])
    if size == 2:
        return float(block[0, 0] * block[1, 1] - block[0, 1] * block[1, 0])
    if size == 3:
        return float(
            block[0, 0] * (block[1, 1] * block[2, 2] - block[1, 2] * block[2, 1])
            - block[0, 1] * (block[1, 0] * block[2, 2] - block[1, 2] * block[2, 0])
            + block[0, 2] * (block[1, 0] * block[2, 1] - block[1, 1] * block[2, 0])
        )
    return float(np.linalg.det(block))


def linear_map(matrix: np.ndarray, a: KVector) -> KVector:
    """
    Induced map Λ_k(R^n) -> Λ_k(R^m) of an m×n matrix.

    Basis elements go to the wedge of the matching columns, i.e. to the
    k×k minors of the matrix. Scalars map to themselves.
    """
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[1] != a.dim:
        raise DimensionMismatchError(
            f"matrix of shape {m.shape} cannot act on R^{a.dim}"
        )
    target_dim = m.shape[0]
    if a.grade < 0 or a.grade > target_dim:
        return KVector.zero(target_dim, a.grade)
    if a.grade == 0:
        return KVector.scalar(target_dim, a[()])
    out: Dict[MultiIndex, float] = {}
    rows = basis_indices(target_dim, a.grade)
    for index, value in a.items():
        sub = m[:, list(index)]
        for row in rows:
            minor = _minor(sub[list(row), :])
            if minor != 0.0:
                out[row] = out.get(row, 0.0) + minor * value
    return KVector(target_dim, a.grade, out)
