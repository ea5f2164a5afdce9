"""
Differential forms as coefficient fields over the e_I basis, and the
integral pairing with Dirac chains.

An order-s chain term (p; m ⊗ e_I) pairs with ω as ``coeff · ∂^m ω_I(p)``,
so every operator below is a coefficient manipulation and the pairing
reduces to mixed partials of the coefficient fields.
"""

import logging
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

import numpy as np
import sympy as sp

from chaincalc.chains import DiracChain
from chaincalc.data_types.chain import ChainTerm
from chaincalc.data_types.config.finite_difference import FDConfig
from chaincalc.exceptions import DimensionMismatchError, GradeMismatchError
from chaincalc.exterior import (
    KVector,
    MultiIndex,
    basis_indices,
    check_index,
    index_label,
    linear_map,
    merge_sign,
    perp,
)
from chaincalc.fields.algebra import (
    add_fields,
    constant_field,
    differentiate,
    multiply_fields,
    substitute,
    zero_field,
)
from chaincalc.fields.finite_difference import FiniteDifferenceField
from chaincalc.fields.smooth_map import SmoothMap
from chaincalc.fields.symbolic import SymbolicField
from chaincalc.fields.vector_field import VectorFieldSpec
from chaincalc.interfaces.scalar_field_abc import ScalarFieldABC

_log = logging.getLogger(__name__)


class Form:
    """
    A grade-k differential form ω = Σ f_I dx_I on R^n.

    Missing coefficients are zero; fields known to vanish are not stored.
    Grades -1 and n + 1 are accepted for the zero form only.

    Example:
    ```python
    w = Form.from_expressions(2, 1, {(1,): "x1"})  # x dy
    integrate(w, chain)
    ```
    """

    __slots__ = ("dim", "grade", "_coeffs")

    def __init__(
        self,
        dim: int,
        grade: int,
        coeffs: Mapping[MultiIndex, ScalarFieldABC] | None = None,
    ) -> None:
        if grade < -1:
            raise ValueError("grade must be at least -1")
        self.dim = dim
        self.grade = grade
        clean: Dict[MultiIndex, ScalarFieldABC] = {}
        for index, field in (coeffs or {}).items():
            axes = check_index(index, dim)
            if len(axes) != grade:
                raise GradeMismatchError(
                    f"coefficient {index_label(axes)} in a form of grade {grade}"
                )
            if field.dim != dim:
                raise DimensionMismatchError(
                    f"coefficient field on R^{field.dim} in a form on R^{dim}"
                )
            if not field.is_zero():
                clean[axes] = field
        self._coeffs = dict(sorted(clean.items()))

    @classmethod
    def zero(cls, dim: int, grade: int) -> "Form":
        return cls(dim, grade)

    @classmethod
    def from_expressions(
        cls,
        dim: int,
        grade: int,
        coeffs: Mapping[Sequence[int], str | sp.Expr | float],
    ) -> "Form":
        """Coefficients given as mini-language strings or sympy expressions."""
        from chaincalc.expression import parse_expression

        fields: Dict[MultiIndex, ScalarFieldABC] = {}
        for index, expr in coeffs.items():
            parsed = parse_expression(expr, dim) if isinstance(expr, str) else expr
            fields[tuple(index)] = SymbolicField(parsed, dim)
        return cls(dim, grade, fields)

    @classmethod
    def parse(cls, text: str, dim: int) -> "Form":
        """Build a form from a spec such as ``"x1 @ 2; -x2 @ 1"``."""
        from chaincalc.expression import parse_form_terms

        grade, exprs = parse_form_terms(text, dim)
        return cls(dim, grade, {i: SymbolicField(e, dim) for i, e in exprs.items()})

    @classmethod
    def from_callbacks(
        cls,
        dim: int,
        grade: int,
        coeffs: Mapping[Sequence[int], object],
        config: Optional[FDConfig] = None,
    ) -> "Form":
        """Coefficients from value callbacks, with finite-difference derivatives."""
        return cls(
            dim,
            grade,
            {
                tuple(i): FiniteDifferenceField(fn, dim, config)  # type: ignore[arg-type]
                for i, fn in coeffs.items()
            },
        )

    @classmethod
    def constant(cls, alpha: KVector) -> "Form":
        """The constant form whose coefficients are those of ``alpha``."""
        return cls(
            alpha.dim,
            alpha.grade,
            {i: constant_field(c, alpha.dim) for i, c in alpha.items()},
        )

    @classmethod
    def volume(cls, dim: int) -> "Form":
        """dV = dx_1 ∧ ⋯ ∧ dx_n."""
        return cls.constant(KVector.volume(dim))

    @classmethod
    def scalar(cls, field: ScalarFieldABC) -> "Form":
        return cls(field.dim, 0, {(): field})

    def coefficient(self, index: Sequence[int]) -> ScalarFieldABC:
        field = self._coeffs.get(tuple(index))
        return field if field is not None else zero_field(self.dim)

    def items(self) -> Iterator[Tuple[MultiIndex, ScalarFieldABC]]:
        return iter(self._coeffs.items())

    def __len__(self) -> int:
        return len(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def depth_budget(self) -> Optional[int]:
        budgets = [f.depth_budget for f in self._coeffs.values() if f.depth_budget is not None]
        return min(budgets) if budgets else None

    @property
    def is_symbolic(self) -> bool:
        return all(isinstance(f, SymbolicField) for f in self._coeffs.values())

    def evaluate(self, point: Sequence[float], alpha: KVector) -> float:
        """ω(p; α) = Σ_I f_I(p) α_I."""
        if alpha.grade != self.grade:
            raise GradeMismatchError(
                f"form of grade {self.grade} evaluated on a {alpha.grade}-vector"
            )
        return float(sum(field(point) * alpha[i] for i, field in self._coeffs.items()))

    def _check_same(self, other: "Form") -> None:
        if self.dim != other.dim:
            raise DimensionMismatchError(f"forms on R^{self.dim} and R^{other.dim}")
        if self.grade != other.grade:
            raise GradeMismatchError(f"form grades differ: {self.grade} != {other.grade}")

    def linear_combination(self, own: float, other: "Form", theirs: float) -> "Form":
        self._check_same(other)
        keys = set(self._coeffs) | set(other._coeffs)
        coeffs = {}
        for key in keys:
            terms = []
            if key in self._coeffs:
                terms.append((own, self._coeffs[key]))
            if key in other._coeffs:
                terms.append((theirs, other._coeffs[key]))
            coeffs[key] = add_fields(terms)
        return Form(self.dim, self.grade, coeffs)

    def __add__(self, other: "Form") -> "Form":
        return self.linear_combination(1.0, other, 1.0)

    def __sub__(self, other: "Form") -> "Form":
        return self.linear_combination(1.0, other, -1.0)

    def __neg__(self) -> "Form":
        return self * -1.0

    def __mul__(self, factor: float) -> "Form":
        return Form(
            self.dim,
            self.grade,
            {i: add_fields([(float(factor), f)]) for i, f in self._coeffs.items()},
        )

    __rmul__ = __mul__

    def times_field(self, field: ScalarFieldABC) -> "Form":
        """The form f·ω."""
        return Form(
            self.dim,
            self.grade,
            {i: multiply_fields(field, f) for i, f in self._coeffs.items()},
        )

    def __repr__(self) -> str:
        body = ", ".join(f"{index_label(i)}: {f!r}" for i, f in self._coeffs.items())
        return f"Form(dim={self.dim}, grade={self.grade}, {{{body}}})"


def eval_term(w: Form, term: ChainTerm) -> float:
    """
    coeff · ∂^degree ω_I(p) for one chain term.

    Raises:
        GradeMismatchError: if the term's grade differs from the form's.
        DerivativeBudgetError: if the term's order exceeds the oracle budget.
    """
    if len(term.index) != w.grade:
        raise GradeMismatchError(
            f"form of grade {w.grade} evaluated on a term of grade {len(term.index)}"
        )
    field = w._coeffs.get(term.index)
    if field is None:
        return 0.0
    return term.coeff * field.partial(term.degree, term.point)


def integrate(w: Form, chain: DiracChain) -> float:
    """The pairing ⨍_A ω, linear in both arguments."""
    if w.dim != chain.dim:
        raise DimensionMismatchError(f"form on R^{w.dim} and chain in R^{chain.dim}")
    if w.grade != chain.grade:
        raise GradeMismatchError(
            f"form of grade {w.grade} integrated over a {chain.grade}-chain"
        )
    total = 0.0
    for (point, degree, index), coeff in chain.items():
        field = w._coeffs.get(index)
        if field is not None:
            total += coeff * field.partial(degree, point)
    return total


def d(w: Form) -> Form:
    """
    Exterior derivative: (dω)_J = Σ_pos (-1)^pos ∂_{J[pos]} ω_{J without J[pos]}.
    """
    grade = w.grade + 1
    coeffs: Dict[MultiIndex, ScalarFieldABC] = {}
    for index in basis_indices(w.dim, grade):
        terms = []
        for pos, axis in enumerate(index):
            field = w._coeffs.get(index[:pos] + index[pos + 1 :])
            if field is not None:
                terms.append((-1.0 if pos % 2 else 1.0, differentiate(field, axis)))
        if terms:
            coeffs[index] = add_fields(terms)
    return Form(w.dim, grade, coeffs)


def interior(V: VectorFieldSpec, w: Form) -> Form:
    """
    Interior product (i_V ω)(p; β) = ω(p; V(p) ∧ β).

    A 0-form contracts to the zero form of formal grade -1.
    """
    if V.dim != w.dim:
        raise DimensionMismatchError(f"field on R^{V.dim} and form on R^{w.dim}")
    grade = w.grade - 1
    coeffs: Dict[MultiIndex, ScalarFieldABC] = {}
    for index in basis_indices(w.dim, grade):
        terms = []
        for axis in range(w.dim):
            sign = merge_sign((axis,), index)
            if not sign:
                continue
            field = w._coeffs.get(tuple(sorted((axis,) + index)))
            if field is not None:
                terms.append((float(sign), multiply_fields(V.components[axis], field)))
        if terms:
            coeffs[index] = add_fields(terms)
    return Form(w.dim, grade, coeffs)


def lie(V: VectorFieldSpec, w: Form) -> Form:
    """Lie derivative by Cartan's formula L_V = i_V d + d i_V."""
    return interior(V, d(w)) + d(interior(V, w))


def star(w: Form) -> Form:
    """
    Hodge star as the dual of the perpendicular complement: (⋆ω)(p; β) = ω(p; ⊥β).
    """
    grade = w.dim - w.grade
    coeffs: Dict[MultiIndex, ScalarFieldABC] = {}
    for index in basis_indices(w.dim, grade):
        image = perp(KVector.basis(w.dim, index))
        for target, sign in image.items():
            field = w._coeffs.get(target)
            if field is not None:
                coeffs[index] = add_fields([(sign, field)])
    return Form(w.dim, grade, coeffs)


def flat_wedge(V: VectorFieldSpec, w: Form) -> Form:
    """
    V♭ ∧ ω, the dual of retraction: (V♭ ∧ ω)(p; α) = ω(p; contract(V(p), α)).
    """
    if V.dim != w.dim:
        raise DimensionMismatchError(f"field on R^{V.dim} and form on R^{w.dim}")
    grade = w.grade + 1
    coeffs: Dict[MultiIndex, ScalarFieldABC] = {}
    for index in basis_indices(w.dim, grade):
        terms = []
        for pos, axis in enumerate(index):
            field = w._coeffs.get(index[:pos] + index[pos + 1 :])
            if field is not None:
                terms.append(
                    (-1.0 if pos % 2 else 1.0, multiply_fields(V.components[axis], field))
                )
        if terms:
            coeffs[index] = add_fields(terms)
    return Form(w.dim, grade, coeffs)


def wedge_forms(a: Form, b: Form) -> Form:
    """Exterior product of forms."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"forms on R^{a.dim} and R^{b.dim}")
    grade = a.grade + b.grade
    acc: Dict[MultiIndex, list] = {}
    for i, f in a.items():
        for j, g in b.items():
            sign = merge_sign(i, j)
            if sign:
                acc.setdefault(tuple(sorted(i + j)), []).append(
                    (float(sign), multiply_fields(f, g))
                )
    return Form(a.dim, grade, {k: add_fields(v) for k, v in acc.items()})


def codifferential(w: Form) -> Form:
    """δ = ⋆d⋆, the dual of the coboundary ⊥∂⊥; lowers the grade by one."""
    return star(d(star(w)))


def laplacian(w: Form) -> Form:
    """Δ = dδ + δd, the dual of the geometric Laplace operator."""
    parts = []
    if w.grade > 0:
        parts.append(d(codifferential(w)))
    if w.grade < w.dim:
        parts.append(codifferential(d(w)))
    if not parts:
        return Form.zero(w.dim, w.grade)
    result = parts[0]
    for part in parts[1:]:
        result = result + part
    return result


def _minor_expr(matrix: sp.Matrix, rows: MultiIndex, cols: MultiIndex) -> sp.Expr:
    if not rows:
        return sp.Integer(1)
    return matrix.extract(list(rows), list(cols)).det()


def pullback(F: SmoothMap, w: Form, config: Optional[FDConfig] = None) -> Form:
    """
    Pullback (F*ω)(p; α) = ω(F(p); F_{p*} α).

    Symbolic maps and symbolic forms give exact symbolic coefficients;
    otherwise each coefficient is a finite-difference field of the composite.
    """
    if w.dim != F.dim_out:
        raise DimensionMismatchError(
            f"form on R^{w.dim} pulled back by a map into R^{F.dim_out}"
        )
    n, k = F.dim_in, w.grade
    coeffs: Dict[MultiIndex, ScalarFieldABC] = {}
    if F.exprs is not None and w.is_symbolic:
        from chaincalc.fields.symbolic import coordinate_symbols

        jac = sp.Matrix(F.exprs).jacobian(coordinate_symbols(n))
        for cols in basis_indices(n, k):
            expr = sp.Integer(0)
            for rows, field in w.items():
                assert isinstance(field, SymbolicField)
                composed = substitute(field, F.exprs, n).expr
                expr += composed * _minor_expr(jac, rows, cols)
            coeffs[cols] = SymbolicField(sp.expand(expr), n)
        return Form(n, k, coeffs)

    def make(cols: MultiIndex):
        def value(p: np.ndarray) -> float:
            image = F.value(p)
            pushed = linear_map(F.jacobian(p), KVector.basis(n, cols))
            return w.evaluate(image, pushed)

        return value

    for cols in basis_indices(n, k):
        coeffs[cols] = FiniteDifferenceField(make(cols), n, config)
    return Form(n, k, coeffs)
