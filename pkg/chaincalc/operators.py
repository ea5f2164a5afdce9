"""
The primitive operator algebra on Dirac chains.

Constant-vector operators act termwise by their closed formulas. Operators
of a nonconstant vector field V = Σ f_i e_i are assembled from the constant
ones and the multiplication operator:

    E_V = Σ m_{f_i} E_{e_i},   E_V† = Σ m_{f_i} E_{e_i}†,   P_V = ∂E_V + E_V∂.

Every public operator logs an ``OperatorReport`` at debug level.
"""

import logging
from typing import Callable, Dict, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from chaincalc.chains import ChainBuilder, DiracChain, as_point
from chaincalc.data_types.chain import Degree, Point
from chaincalc.data_types.operator import OperatorReport
from chaincalc.exceptions import DimensionMismatchError, UnsupportedOrderError
from chaincalc.exterior import (
    KVector,
    MultiIndex,
    as_vector,
    linear_map,
    merge_sign,
    perp,
    wedge,
)
from chaincalc.fields.algebra import differentiate, leibniz_terms
from chaincalc.fields.smooth_map import SmoothMap
from chaincalc.fields.vector_field import VectorFieldSpec
from chaincalc.interfaces.scalar_field_abc import ScalarFieldABC

_log = logging.getLogger(__name__)

VectorArg = Union[VectorFieldSpec, KVector, Sequence[float], np.ndarray]
ChainOperator = Callable[[DiracChain], DiracChain]


def operator_report(name: str, before: DiracChain, after: DiracChain) -> OperatorReport:
    return OperatorReport(
        name=name,
        grade_in=before.grade,
        grade_out=after.grade,
        order_in=before.order,
        order_out=after.order,
        terms_in=len(before),
        terms_out=len(after),
    )


def _traced(name: str, before: DiracChain, after: DiracChain) -> DiracChain:
    if _log.isEnabledFor(logging.DEBUG):
        _log.debug("%s", operator_report(name, before, after))
    return after


def _constant_vector(V: VectorArg, dim: int) -> Optional[np.ndarray]:
    if isinstance(V, VectorFieldSpec):
        if V.dim != dim:
            raise DimensionMismatchError(f"field on R^{V.dim} acting on a chain in R^{dim}")
        return V.constant_value()
    return as_vector(V, dim)


def _as_field(V: VectorArg, dim: int) -> VectorFieldSpec:
    if isinstance(V, VectorFieldSpec):
        return V
    return VectorFieldSpec.constant(as_vector(V, dim).tolist())


def _raise(degree: Degree, axis: int, by: int = 1) -> Degree:
    return degree[:axis] + (degree[axis] + by,) + degree[axis + 1 :]


# constant-vector primitives


def _extrude_const(v: np.ndarray, chain: DiracChain) -> DiracChain:
    builder = ChainBuilder(chain.dim, chain.grade + 1)
    if chain.grade + 1 > chain.dim:
        return builder.build()
    axes = [(i, float(x)) for i, x in enumerate(v) if x != 0.0]
    for (point, degree, index), coeff in chain.items():
        for axis, weight in axes:
            sign = merge_sign((axis,), index)
            if sign:
                builder.add(point, degree, tuple(sorted(index + (axis,))), sign * weight * coeff)
    return builder.build()


def _retract_const(v: np.ndarray, chain: DiracChain) -> DiracChain:
    builder = ChainBuilder(chain.dim, chain.grade - 1)
    for (point, degree, index), coeff in chain.items():
        for pos, axis in enumerate(index):
            weight = v[axis]
            if weight != 0.0:
                sign = -1.0 if pos % 2 else 1.0
                builder.add(point, degree, index[:pos] + index[pos + 1 :], sign * weight * coeff)
    return builder.build()


def _prederiv_const(v: np.ndarray, chain: DiracChain) -> DiracChain:
    builder = ChainBuilder(chain.dim, chain.grade)
    axes = [(i, float(x)) for i, x in enumerate(v) if x != 0.0]
    for (point, degree, index), coeff in chain.items():
        for axis, weight in axes:
            builder.add(point, _raise(degree, axis), index, weight * coeff)
    return builder.build()


# multiplication by a function


def _mult_weights(f: ScalarFieldABC, point: Point, degree: Degree) -> Dict[Degree, float]:
    # m_f P_{e_i} K = P_{e_i} m_f K + m_{∂_i f} K, lowest axis first
    if not any(degree):
        return {degree: f(point)}
    axis = next(i for i, m in enumerate(degree) if m)
    lower = _raise(degree, axis, -1)
    out: Dict[Degree, float] = {}
    for d, w in _mult_weights(f, point, lower).items():
        raised = _raise(d, axis)
        out[raised] = out.get(raised, 0.0) + w
    for d, w in _mult_weights(differentiate(f, axis), point, lower).items():
        out[d] = out.get(d, 0.0) + w
    return out


def mult(f: ScalarFieldABC, chain: DiracChain) -> DiracChain:
    """
    Multiplication by a function, m_f.

    Order-0 terms are scaled by f(p); higher orders follow the commutator
    recursion, so f needs partials up to the order of the chain.

    Raises:
        DerivativeBudgetError: if f cannot supply the required partials.
    """
    if f.dim != chain.dim:
        raise DimensionMismatchError(f"field on R^{f.dim} acting on a chain in R^{chain.dim}")
    builder = ChainBuilder(chain.dim, chain.grade)
    for (point, degree, index), coeff in chain.items():
        for d, w in _mult_weights(f, point, degree).items():
            builder.add(point, d, index, w * coeff)
    return _traced("mult", chain, builder.build())


def mult_closed_form(f: ScalarFieldABC, chain: DiracChain) -> DiracChain:
    """m_f by the Leibniz expansion Σ_{a ≤ m} C(m, a) ∂^a f(p) (p; (m - a) ⊗ α)."""
    if f.dim != chain.dim:
        raise DimensionMismatchError(f"field on R^{f.dim} acting on a chain in R^{chain.dim}")
    builder = ChainBuilder(chain.dim, chain.grade)
    for (point, degree, index), coeff in chain.items():
        for weight, a, rest in leibniz_terms(degree):
            builder.add(point, rest, index, weight * f.partial(a, point) * coeff)
    return builder.build()


# vector-field operators


def extrude(V: VectorArg, chain: DiracChain) -> DiracChain:
    """
    Extrusion E_V, raising the grade by one: (p; α) ↦ (p; V(p) ∧ α).

    A grade-n chain extrudes to the zero chain of formal grade n + 1.
    """
    v = _constant_vector(V, chain.dim)
    if v is not None:
        return _traced("extrude", chain, _extrude_const(v, chain))
    field = _as_field(V, chain.dim)
    builder = ChainBuilder(chain.dim, chain.grade + 1)
    for axis, f in enumerate(field.components):
        if f.is_zero():
            continue
        unit = np.eye(chain.dim)[axis]
        builder.add_chain(mult(f, _extrude_const(unit, chain)))
    return _traced("extrude", chain, builder.build())


def retract(V: VectorArg, chain: DiracChain) -> DiracChain:
    """
    Retraction E_V†, lowering the grade by one by contraction with V(p).

    Example:
    ```python
    J = DiracChain.element((0.0, 0.0), KVector.basis(2, (0, 1)))
    retract((1.0, 1.0), J)  # (p; e2) - (p; e1)
    ```
    """
    v = _constant_vector(V, chain.dim)
    if v is not None:
        return _traced("retract", chain, _retract_const(v, chain))
    field = _as_field(V, chain.dim)
    builder = ChainBuilder(chain.dim, chain.grade - 1)
    for axis, f in enumerate(field.components):
        if f.is_zero():
            continue
        unit = np.eye(chain.dim)[axis]
        builder.add_chain(mult(f, _retract_const(unit, chain)))
    return _traced("retract", chain, builder.build())


def prederiv(V: VectorArg, chain: DiracChain) -> DiracChain:
    """
    Prederivative P_V, raising the order by one.

    For constant v = Σ v_i e_i this increments degree slot i with weight v_i;
    for nonconstant V it is the anticommutator ∂E_V + E_V∂.
    """
    v = _constant_vector(V, chain.dim)
    if v is not None:
        return _traced("prederiv", chain, _prederiv_const(v, chain))
    builder = ChainBuilder(chain.dim, chain.grade)
    if chain.grade < chain.dim:
        builder.add_chain(boundary(extrude(V, chain)))
    if chain.grade > 0:
        builder.add_chain(extrude(V, boundary(chain)))
    return _traced("prederiv", chain, builder.build())


def boundary(chain: DiracChain) -> DiracChain:
    """
    Boundary ∂ = Σ_i P_{e_i} E_{e_i}†.

    ``(p; m ⊗ e_I) ↦ Σ_pos (-1)^pos (p; (m + e_{I[pos]}) ⊗ e_{I without I[pos]})``;
    0-chains have boundary zero.
    """
    builder = ChainBuilder(chain.dim, chain.grade - 1)
    for (point, degree, index), coeff in chain.items():
        for pos, axis in enumerate(index):
            sign = -1.0 if pos % 2 else 1.0
            builder.add(point, _raise(degree, axis), index[:pos] + index[pos + 1 :], sign * coeff)
    return _traced("boundary", chain, builder.build())


def dir_boundary(v: VectorArg, chain: DiracChain) -> DiracChain:
    """Directional boundary ∂_v = P_v E_v†."""
    return _traced("dir_boundary", chain, prederiv(v, retract(v, chain)))


def perp_chain(chain: DiracChain) -> DiracChain:
    """Termwise perpendicular complement; the degree part is unchanged."""
    builder = ChainBuilder(chain.dim, chain.dim - chain.grade)
    for (point, degree, index), coeff in chain.items():
        for target, sign in perp(KVector.basis(chain.dim, index)).items():
            builder.add(point, degree, target, sign * coeff)
    return _traced("perp", chain, builder.build())


def cobound(chain: DiracChain) -> DiracChain:
    """Coboundary ◊ = ⊥∂⊥, raising the grade by one."""
    if chain.grade >= chain.dim:
        return DiracChain.zero(chain.dim, chain.grade + 1)
    return _traced("cobound", chain, perp_chain(boundary(perp_chain(chain))))


def laplace(chain: DiracChain) -> DiracChain:
    """Geometric Laplace operator □ = ◊∂ + ∂◊; preserves the grade."""
    builder = ChainBuilder(chain.dim, chain.grade)
    if chain.grade > 0:
        builder.add_chain(cobound(boundary(chain)))
    if chain.grade < chain.dim:
        builder.add_chain(boundary(cobound(chain)))
    return _traced("laplace", chain, builder.build())


def dirac_op(chains: Mapping[int, DiracChain]) -> Dict[int, DiracChain]:
    """
    Geometric Dirac operator ∂ + ◊ on a mixed-grade chain keyed by grade.

    Applying it twice gives □ grade by grade.
    """
    acc: Dict[int, ChainBuilder] = {}
    for grade, chain in chains.items():
        parts = []
        if grade > 0:
            parts.append(boundary(chain))
        if grade < chain.dim:
            parts.append(cobound(chain))
        for part in parts:
            acc.setdefault(part.grade, ChainBuilder(part.dim, part.grade)).add_chain(part)
    out = {grade: b.build() for grade, b in sorted(acc.items())}
    return {grade: c for grade, c in out.items() if not c.is_zero()}


def extrude_kvector(alpha: KVector, chain: DiracChain) -> DiracChain:
    """E_α for a constant multivector: (p; m ⊗ β) ↦ (p; m ⊗ α ∧ β)."""
    if alpha.dim != chain.dim:
        raise DimensionMismatchError(
            f"multivector in R^{alpha.dim} acting on a chain in R^{chain.dim}"
        )
    builder = ChainBuilder(chain.dim, chain.grade + alpha.grade)
    for (point, degree, index), coeff in chain.items():
        for target, value in wedge(alpha, KVector.basis(chain.dim, index)).items():
            builder.add(point, degree, target, value * coeff)
    return _traced("extrude_kvector", chain, builder.build())


# pushforward


def push_element(
    image: Sequence[float],
    jacobian: np.ndarray,
    degree: Degree,
    index: MultiIndex,
    coeff: float,
) -> DiracChain:
    """
    Image of one term under a map with the given value and Jacobian at its point.

    Higher-order terms use the Jacobian as the constant linear part,
    sending P_{e_i} to P_{J e_i}; this is exact only for affine maps.
    """
    jac = np.asarray(jacobian, dtype=float)
    target_dim, source_dim = jac.shape
    pushed = linear_map(jac, KVector.basis(source_dim, index, coeff))
    builder = ChainBuilder(target_dim, len(index))
    point = as_point(image)
    start: Dict[Degree, float] = {(0,) * target_dim: 1.0}
    for axis, m in enumerate(degree):
        column = jac[:, axis]
        for _ in range(m):
            nxt: Dict[Degree, float] = {}
            for d, w in start.items():
                for row, value in enumerate(column):
                    if value != 0.0:
                        raised = _raise(d, row)
                        nxt[raised] = nxt.get(raised, 0.0) + w * float(value)
            start = nxt
    for d, w in start.items():
        for target, value in pushed.items():
            builder.add(point, d, target, w * value)
    return builder.build()


def pushforward(F: SmoothMap, chain: DiracChain) -> DiracChain:
    """
    Pushforward F_*(p; α) = (F(p); F_{p*} α).

    Raises:
        UnsupportedOrderError: for terms of order ≥ 1 under a nonaffine map.
    """
    if chain.dim != F.dim_in:
        raise DimensionMismatchError(
            f"map on R^{F.dim_in} pushing a chain in R^{chain.dim}"
        )
    if chain.order > 0 and not F.affine:
        raise UnsupportedOrderError(
            f"pushforward of order-{chain.order} terms needs an affine map"
        )
    builder = ChainBuilder(F.dim_out, chain.grade)
    cache: Dict[Point, Tuple[np.ndarray, np.ndarray]] = {}
    for (point, degree, index), coeff in chain.items():
        if point not in cache:
            cache[point] = (F.value(point), F.jacobian(point))
        image, jac = cache[point]
        builder.add_chain(push_element(image, jac, degree, index, coeff))
    return _traced("pushforward", chain, builder.build())


# composition helpers


def commutator(S: ChainOperator, T: ChainOperator, chain: DiracChain) -> DiracChain:
    """[S, T] J = S(T(J)) - T(S(J))."""
    return S(T(chain)) - T(S(chain))


def anticommutator(S: ChainOperator, T: ChainOperator, chain: DiracChain) -> DiracChain:
    """{S, T} J = S(T(J)) + T(S(J))."""
    return S(T(chain)) + T(S(chain))
