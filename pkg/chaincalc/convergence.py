"""
Convergence harnesses for the integral theorems.

Each harness pairs a form with the level-j representative of a domain and
compares against an independent classical value: adaptive quadrature of
the integrand over the continuous domain, never the chain itself.

Domain specs:

    square                      corner (1/3, 1/3), side 1
    square: x0, y0, side
    disk                        center (0, 0), radius 1
    disk: cx, cy, r

Numbers are mini-language expressions, so ``square: 1/3, 1/3, 1`` works.
"""

import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, Dict, Tuple

import numpy as np
from scipy import integrate as quad

from chaincalc.chains import DiracChain
from chaincalc.exceptions import ExpressionParseError
from chaincalc.exterior import KVector
from chaincalc.expression import parse_components, parse_expression
from chaincalc.factories.convergence_factory import register_theorem
from chaincalc.fields.smooth_map import SmoothMap
from chaincalc.fields.vector_field import VectorFieldSpec
from chaincalc.forms import Form, d, integrate, interior, laplacian
from chaincalc.interfaces.region_abc import RegionABC
from chaincalc.interfaces.theorem_abc import TheoremABC
from chaincalc.operators import boundary, laplace, pushforward
from chaincalc.regions import BallRegion, BoxRegion
from chaincalc.represent.family import ChainFamily
from chaincalc.represent.open_sets import open_set_family
from chaincalc.sampling import random_chain

_log = logging.getLogger(__name__)

Scalar2D = Callable[[np.ndarray], float]

QUAD_TOL = 1e-11


@dataclass(frozen=True)
class SquareDomain:
    corner: Tuple[float, float] = (1.0 / 3.0, 1.0 / 3.0)
    side: float = 1.0

    def __post_init__(self) -> None:
        if self.side <= 0:
            raise ValueError("side must be greater than zero")

    @property
    def region(self) -> RegionABC:
        return BoxRegion(self.corner, (self.corner[0] + self.side, self.corner[1] + self.side))

    @property
    def extent(self) -> Tuple[Tuple[float, float], Tuple[float, float]]:
        return self.corner, (self.corner[0] + self.side, self.corner[1] + self.side)

    def integrate(self, fn: Scalar2D) -> float:
        (x0, y0), (x1, y1) = self.extent
        value, _ = quad.dblquad(
            lambda y, x: fn(np.array([x, y])), x0, x1, y0, y1, epsabs=QUAD_TOL, epsrel=QUAD_TOL
        )
        return float(value)


@dataclass(frozen=True)
class DiskDomain:
    center: Tuple[float, float] = (0.0, 0.0)
    radius: float = 1.0

    def __post_init__(self) -> None:
        if self.radius <= 0:
            raise ValueError("radius must be greater than zero")

    @property
    def region(self) -> RegionABC:
        return BallRegion(self.center, self.radius)

    @property
    def extent(self) -> Tuple[Tuple[float, float], Tuple[float, float]]:
        (cx, cy), r = self.center, self.radius
        return (cx - r, cy - r), (cx + r, cy + r)

    def integrate(self, fn: Scalar2D) -> float:
        """Polar coordinates keep the quadrature smooth up to the rim."""
        (cx, cy), r = self.center, self.radius

        def integrand(rho: float, theta: float) -> float:
            p = np.array([cx + rho * math.cos(theta), cy + rho * math.sin(theta)])
            return fn(p) * rho

        value, _ = quad.dblquad(integrand, 0.0, 2.0 * math.pi, 0.0, r, epsabs=QUAD_TOL, epsrel=QUAD_TOL)
        return float(value)


Domain = SquareDomain | DiskDomain

DOMAIN_ARITY = {"square": 3, "disk": 3}


def parse_domain(text: str) -> Domain:
    """
    Raises:
        ExpressionParseError: for an unknown shape or a malformed number,
            with the column of the offending piece.
    """
    shape, _, rest = text.partition(":")
    name = shape.strip()
    if name not in DOMAIN_ARITY:
        raise ExpressionParseError(f"unknown domain {name!r}, expected one of {sorted(DOMAIN_ARITY)}", 1, 1)
    if not rest.strip():
        return SquareDomain() if name == "square" else DiskDomain()
    values = []
    col = len(shape) + 2
    for piece in rest.split(","):
        values.append(float(parse_expression(piece, 0, line=1, col=col)))
        col += len(piece) + 1
    if len(values) != DOMAIN_ARITY[name]:
        raise ExpressionParseError(
            f"domain {name!r} takes {DOMAIN_ARITY[name]} numbers, got {len(values)}", 1, len(shape) + 2
        )
    if name == "square":
        return SquareDomain((values[0], values[1]), values[2])
    return DiskDomain((values[0], values[1]), values[2])


def dyadic_bbox(domain: Domain) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
    """An integer-cornered square box of power-of-two side covering the domain."""
    lo, hi = domain.extent
    base = tuple(float(math.floor(a)) for a in lo)
    need = max(b - a for a, b in zip(base, hi))
    side = 2.0 ** math.ceil(math.log2(need)) if need > 0 else 1.0
    return base, tuple(a + side for a in base)


def domain_family(domain: Domain) -> ChainFamily:
    return open_set_family(domain.region, dyadic_bbox(domain), domain=repr(domain))


class _PlanarTheorem(TheoremABC):
    DEFAULT_FORM = "x @ 2"
    DEFAULT_DOMAIN = "square"
    dim = 2

    @cached_property
    def domain(self) -> Domain:
        return parse_domain(self.config.domain or self.DEFAULT_DOMAIN)

    @cached_property
    def form(self) -> Form:
        return Form.parse(self.config.form or self.DEFAULT_FORM, self.dim)

    @cached_property
    def family(self) -> ChainFamily:
        return domain_family(self.domain)

    def params(self) -> Dict[str, Any]:
        return {"form": self.config.form or self.DEFAULT_FORM, "domain": repr(self.domain)}


@register_theorem
class StokesTheorem(_PlanarTheorem):
    """∫_{∂Q_j} ω against ∫_Q dω by quadrature."""

    NAME = "stokes"

    def lhs(self, level: int) -> float:
        return integrate(self.form, boundary(self.family.level(level)))

    @cached_property
    def classical(self) -> float:
        dw = d(self.form)
        area = KVector.volume(2)
        return self.domain.integrate(lambda p: dw.evaluate(p, area))

    def rhs(self, level: int) -> float:
        return self.classical


@register_theorem
class GaussGreenTheorem(_PlanarTheorem):
    """Flux ∫_{∂D_j} i_V dV against ∫_D div V."""

    NAME = "gauss-green"
    DEFAULT_FIELD = "x, y"
    DEFAULT_DOMAIN = "disk"

    @cached_property
    def field(self) -> VectorFieldSpec:
        spec = self.config.field or self.DEFAULT_FIELD
        return VectorFieldSpec.from_expressions(parse_components(spec, 2))

    @cached_property
    def form(self) -> Form:
        return interior(self.field, Form.volume(2))

    def lhs(self, level: int) -> float:
        return integrate(self.form, boundary(self.family.level(level)))

    @cached_property
    def classical(self) -> float:
        divergence = d(self.form)
        area = KVector.volume(2)
        return self.domain.integrate(lambda p: divergence.evaluate(p, area))

    def rhs(self, level: int) -> float:
        return self.classical

    def params(self) -> Dict[str, Any]:
        return {"field": self.config.field or self.DEFAULT_FIELD, "domain": repr(self.domain)}


def _tangent_plane(F: SmoothMap, p: np.ndarray) -> KVector:
    jac = F.jacobian(p)
    return KVector.from_vectors([jac[:, 0], jac[:, 1]], F.dim_out)


@register_theorem
class KelvinStokesTheorem(_PlanarTheorem):
    """
    Circulation around the boundary of a tilted planar patch in R^3 against
    the flux of the curl, ∫_{∂F_*Q_j} ω vs ∫_Q dω(F_* e12).
    """

    NAME = "kelvin-stokes"
    DEFAULT_FORM = "z @ 1; x @ 2; y @ 3"
    EMBEDDING = ("x1", "x2", "x1 + x2")

    dim = 3

    @cached_property
    def embedding(self) -> SmoothMap:
        return SmoothMap.from_expressions(list(self.EMBEDDING), 2)

    def lhs(self, level: int) -> float:
        patch = pushforward(self.embedding, self.family.level(level))
        return integrate(self.form, boundary(patch))

    @cached_property
    def classical(self) -> float:
        dw = d(self.form)
        F = self.embedding
        return self.domain.integrate(lambda p: dw.evaluate(F.value(p), _tangent_plane(F, p)))

    def rhs(self, level: int) -> float:
        return self.classical


@register_theorem
class ChangeOfVariablesTheorem(_PlanarTheorem):
    """∫_{F_*Q_j} ω against ∫_Q ω(F(p); F_* e12) for a nonlinear F."""

    NAME = "change-of-vars"
    DEFAULT_FORM = "x @ 12"
    DEFAULT_DOMAIN = "square: 0, 0, 1"
    MAP = ("x1 + x2^2/4", "x2 + x1^2/4")

    @cached_property
    def smooth_map(self) -> SmoothMap:
        return SmoothMap.from_expressions(list(self.MAP), 2)

    def lhs(self, level: int) -> float:
        return integrate(self.form, pushforward(self.smooth_map, self.family.level(level)))

    @cached_property
    def classical(self) -> float:
        F = self.smooth_map
        return self.domain.integrate(lambda p: self.form.evaluate(F.value(p), _tangent_plane(F, p)))

    def rhs(self, level: int) -> float:
        return self.classical

    def params(self) -> Dict[str, Any]:
        return dict(super().params(), map=list(self.MAP))


@register_theorem
class HigherDivergenceTheorem(TheoremABC):
    """
    ∫_{□^s J} ω against ∫_J Δ^s ω. Level j draws a fresh random chain from
    (seed, j), so every row is an independent exact check.
    """

    NAME = "higher-div"
    DEFAULT_FORM = "x^3*y^2 @ 1; x*y^4 @ 2"
    DIM = 2

    @cached_property
    def form(self) -> Form:
        return Form.parse(self.config.form or self.DEFAULT_FORM, self.DIM)

    @cached_property
    def iterated_form(self) -> Form:
        w = self.form
        for _ in range(self.config.power):
            w = laplacian(w)
        return w

    def chain(self, level: int) -> DiracChain:
        rng = np.random.default_rng([self.config.seed, level])
        return random_chain(rng, self.DIM, self.form.grade, max_order=1)

    def lhs(self, level: int) -> float:
        chain = self.chain(level)
        for _ in range(self.config.power):
            chain = laplace(chain)
        return integrate(self.form, chain)

    def rhs(self, level: int) -> float:
        return integrate(self.iterated_form, self.chain(level))

    def params(self) -> Dict[str, Any]:
        return {
            "form": self.config.form or self.DEFAULT_FORM,
            "power": self.config.power,
            "seed": self.config.seed,
        }
