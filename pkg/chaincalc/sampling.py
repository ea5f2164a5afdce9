"""
Seeded random chains, multivectors, polynomial forms and fields for the
verification suites.

Coordinates and coefficients are dyadic rationals so that sums of
translated points and cancellations stay exact in floating point.
"""

from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy as sp

from chaincalc.chains import ChainBuilder, DiracChain
from chaincalc.data_types.config.finite_difference import FDConfig
from chaincalc.exterior import KVector, MultiIndex, basis_indices
from chaincalc.fields.finite_difference import FiniteDifferenceField
from chaincalc.fields.symbolic import SymbolicField, coordinate_symbols
from chaincalc.fields.vector_field import VectorFieldSpec
from chaincalc.forms import Form
from chaincalc.interfaces.scalar_field_abc import ScalarFieldABC

DENOMINATOR = 8


def dyadic(
    rng: np.random.Generator,
    size: int | Tuple[int, ...] | None = None,
    bound: int = 8,
) -> np.ndarray:
    """Integers in [-bound, bound] over ``DENOMINATOR``."""
    return rng.integers(-bound, bound + 1, size=size) / DENOMINATOR


def random_degree(rng: np.random.Generator, dim: int, order: int) -> tuple:
    degree = [0] * dim
    for axis in rng.integers(0, dim, size=order):
        degree[int(axis)] += 1
    return tuple(degree)


def random_index(rng: np.random.Generator, dim: int, grade: int) -> MultiIndex:
    choices = basis_indices(dim, grade)
    return choices[int(rng.integers(0, len(choices)))]


def random_kvector(rng: np.random.Generator, dim: int, grade: int) -> KVector:
    indices = basis_indices(dim, grade)
    values = dyadic(rng, len(indices))
    return KVector(dim, grade, {i: float(c) for i, c in zip(indices, values)})


def random_vector(rng: np.random.Generator, dim: int) -> np.ndarray:
    return dyadic(rng, dim)


def random_chain(
    rng: np.random.Generator,
    dim: int,
    grade: int,
    max_order: int = 0,
    terms: int = 4,
) -> DiracChain:
    """
    A Dirac chain of ``terms`` random terms with dyadic points in [-1, 1]^n
    and total orders up to ``max_order``.
    """
    builder = ChainBuilder(dim, grade)
    for _ in range(terms):
        point = dyadic(rng, dim)
        order = int(rng.integers(0, max_order + 1))
        coeff = float(rng.integers(1, 17)) / DENOMINATOR
        if rng.random() < 0.5:
            coeff = -coeff
        builder.add(point, random_degree(rng, dim, order), random_index(rng, dim, grade), coeff)
    return builder.build()


def random_polynomial(rng: np.random.Generator, dim: int, degree: int = 2, terms: int = 3) -> sp.Expr:
    """Integer-coefficient polynomial in x1..xn of total degree ≤ ``degree``."""
    xs = coordinate_symbols(dim)
    expr = sp.Integer(int(rng.integers(-3, 4)))
    for _ in range(terms):
        monomial = sp.Integer(int(rng.integers(1, 4)) * (1 if rng.random() < 0.5 else -1))
        exponents = random_degree(rng, dim, int(rng.integers(1, degree + 1)))
        for x, e in zip(xs, exponents):
            monomial *= x**e
        expr += monomial
    return sp.expand(expr)


def random_form(
    rng: np.random.Generator,
    dim: int,
    grade: int,
    degree: int = 2,
) -> Form:
    """A polynomial form with every basis coefficient drawn independently."""
    coeffs: Dict[MultiIndex, ScalarFieldABC] = {
        index: SymbolicField(random_polynomial(rng, dim, degree), dim)
        for index in basis_indices(dim, grade)
    }
    return Form(dim, grade, coeffs)


def random_field(rng: np.random.Generator, dim: int, degree: int = 2) -> VectorFieldSpec:
    return VectorFieldSpec.from_expressions(
        [random_polynomial(rng, dim, degree) for _ in range(dim)]
    )


def random_scalar(rng: np.random.Generator, dim: int, degree: int = 2) -> SymbolicField:
    return SymbolicField(random_polynomial(rng, dim, degree), dim)


def as_finite_difference(w: Form, config: Optional[FDConfig] = None) -> Form:
    """The same form with value-only coefficients and finite-difference derivatives."""
    return Form(
        w.dim,
        w.grade,
        {index: FiniteDifferenceField(field, w.dim, config) for index, field in w.items()},
    )


def random_chains(
    rng: np.random.Generator,
    count: int,
    dims: Sequence[int],
    max_order: int = 0,
    terms: int = 4,
) -> List[DiracChain]:
    """``count`` chains with dimension drawn from ``dims`` and any grade 0..n."""
    out = []
    for _ in range(count):
        dim = int(rng.choice(dims))
        grade = int(rng.integers(0, dim + 1))
        out.append(random_chain(rng, dim, grade, max_order, terms))
    return out
