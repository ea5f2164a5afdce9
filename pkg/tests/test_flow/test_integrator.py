import math
import unittest

import numpy as np

from chaincalc.chains import DiracChain
from chaincalc.data_types.config.flow import FlowConfig
from chaincalc.exceptions import DimensionMismatchError, FlowEscapeError, UnsupportedOrderError
from chaincalc.exterior import KVector
from chaincalc.fields.vector_field import VectorFieldSpec
from chaincalc.flow import affine_flow, evolve, flow_point, rk4_step, swept_chain, trace_chain
from chaincalc.forms import Form, integrate
from chaincalc.operators import boundary
from chaincalc.represent.cubes import cube_chain
from chaincalc.sampling import random_chain


def unit_segment(level: int = 6) -> DiracChain:
    return cube_chain((0.0, 0.0), 1.0, (0,), level=level)


def blow_up() -> VectorFieldSpec:
    # x' = x^2 flows to x0 / (1 - x0 t)
    return VectorFieldSpec.from_expressions(["x1^2", "0"])


class TestFlowPoint(unittest.TestCase):
    def test_rk4_step_is_fourth_order(self):
        def f(x, _t):
            return x

        x = rk4_step(f, 0.0, np.array([1.0]), 0.1)
        self.assertAlmostEqual(float(x[0]), 1.0 + 0.1 + 0.005 + 0.1**3 / 6 + 0.1**4 / 24, places=14)

    def test_constant_field_translates(self):
        image, jac = flow_point(VectorFieldSpec.constant([1.0, -2.0]), (0.5, 0.5), 0.25)
        np.testing.assert_allclose(image, [0.75, 0.0])
        np.testing.assert_allclose(jac, np.eye(2))

    def test_rotation_is_exact(self):
        t = 0.7
        image, jac = flow_point(VectorFieldSpec.rotation(), (2.0, 0.0), t)
        np.testing.assert_allclose(image, [2.0 * math.cos(t), 2.0 * math.sin(t)], atol=1e-14)
        np.testing.assert_allclose(jac, [[math.cos(t), -math.sin(t)], [math.sin(t), math.cos(t)]], atol=1e-14)

    def test_affine_offset(self):
        V = VectorFieldSpec.linear([[1.0, 0.0], [0.0, 0.0]], [1.0, 1.0])
        image, jac = flow_point(V, (0.0, 0.0), 1.0)
        np.testing.assert_allclose(image, [math.e - 1.0, 1.0], atol=1e-13)
        np.testing.assert_allclose(jac, [[math.e, 0.0], [0.0, 1.0]], atol=1e-13)

    def test_rk4_agrees_with_exponential(self):
        V = VectorFieldSpec.linear([[0.5, -1.0], [1.0, 0.25]], [0.5, -0.5])
        matrix, offset = affine_flow(V, 0.8)
        image, jac = flow_point(V, (0.3, -0.2), 0.8, FlowConfig(step=1e-2), affine=False)
        np.testing.assert_allclose(image, matrix @ np.array([0.3, -0.2]) + offset, atol=1e-7)
        np.testing.assert_allclose(jac, matrix, atol=1e-7)

    def test_nonlinear_field_uses_variational_jacobian(self):
        image, jac = flow_point(blow_up(), (0.5, 3.0), 1.0)
        np.testing.assert_allclose(image, [1.0, 3.0], atol=1e-9)
        np.testing.assert_allclose(jac, [[4.0, 0.0], [0.0, 1.0]], atol=1e-8)

    def test_backwards_in_time(self):
        image, _ = flow_point(blow_up(), (1.0, 0.0), -1.0)
        self.assertAlmostEqual(float(image[0]), 0.5, places=9)

    def test_escape(self):
        with self.assertRaises(FlowEscapeError):
            flow_point(blow_up(), (0.5, 0.0), 1.9, FlowConfig(bound=5.0))

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            flow_point(VectorFieldSpec.rotation(), (1.0, 2.0, 3.0), 1.0)

    def test_config_validation(self):
        for kwargs in ({"step": 0.0}, {"intervals": 0}, {"bound": -1.0}, {"time_step": 0.0}):
            with self.subTest(**kwargs):
                with self.assertRaises(ValueError):
                    FlowConfig(**kwargs)


class TestEvolve(unittest.TestCase):
    def test_quarter_turn(self):
        moved = evolve(unit_segment(), VectorFieldSpec.rotation(), math.pi / 2)
        self.assertAlmostEqual(integrate(Form.parse("y @ 2", 2), moved), 0.5, places=12)
        self.assertAlmostEqual(integrate(Form.parse("1 @ 1", 2), moved), 0.0, places=12)

    def test_translation(self):
        moved = evolve(unit_segment(), VectorFieldSpec.constant([1.0, 2.0]), 0.5)
        self.assertAlmostEqual(integrate(Form.parse("y @ 1", 2), moved), 1.0, places=12)

    def test_time_zero_is_identity(self):
        chain = unit_segment(2)
        self.assertIs(evolve(chain, VectorFieldSpec.rotation(), 0.0), chain)

    def test_nonlinear_stretch(self):
        chain = DiracChain.element((0.5, 0.0), KVector.basis(2, (0,)))
        moved = evolve(chain, blow_up(), 1.0)
        self.assertAlmostEqual(integrate(Form.parse("1 @ 1", 2), moved), 4.0, places=7)

    def test_flow_composes_in_time(self):
        V = VectorFieldSpec.from_expressions(["-x2 + x1^2/4", "x1"])
        w = Form.parse("x @ 1; x*y @ 2", 2)
        for seed in range(5):
            with self.subTest(seed=seed):
                chain = random_chain(np.random.default_rng(seed), 2, 1, terms=3)
                stepped = evolve(evolve(chain, V, 0.3), V, 0.5)
                direct = evolve(chain, V, 0.8)
                self.assertAlmostEqual(integrate(w, stepped), integrate(w, direct), delta=1e-7)

    def test_affine_flow_composes_on_dipoles(self):
        V = VectorFieldSpec.linear([[0.5, -1.0], [1.0, 0.0]], [0.25, 0.0])
        dipoles = boundary(unit_segment(2))
        w = Form.parse("x^2*y + sin(x)", 2)
        stepped = evolve(evolve(dipoles, V, 0.4), V, -0.9)
        direct = evolve(dipoles, V, -0.5)
        self.assertAlmostEqual(integrate(w, stepped), integrate(w, direct), places=10)

    def test_dipoles_need_affine_fields(self):
        dipoles = boundary(unit_segment(1))
        with self.assertRaises(UnsupportedOrderError):
            evolve(dipoles, blow_up(), 0.5)
        moved = evolve(dipoles, VectorFieldSpec.rotation(), 0.5)
        self.assertEqual(moved.order, 1)

    def test_affine_escape(self):
        V = VectorFieldSpec.linear([[0.0, -1.0], [1.0, 0.0]], [10.0, 0.0])
        with self.assertRaises(FlowEscapeError):
            evolve(unit_segment(1), V, 1.0, FlowConfig(bound=2.0))

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            evolve(unit_segment(1), VectorFieldSpec.basis(3, 0), 1.0)


class TestTraceChain(unittest.TestCase):
    def test_trace_integrates_over_time(self):
        # ∫_{J_t} x dy = sin(2t) / 4 for the rotated unit segment
        trace = trace_chain(unit_segment(), VectorFieldSpec.rotation(), 0.0, 1.0, FlowConfig(intervals=64))
        expected = (1.0 - math.cos(2.0)) / 8.0
        self.assertEqual(trace.grade, 1)
        self.assertAlmostEqual(integrate(Form.parse("x @ 2", 2), trace), expected, delta=1e-4)

    def test_boundary_commutes_with_trace(self):
        V = VectorFieldSpec.rotation()
        J = cube_chain((0.0, 0.0), 1.0, (0, 1), level=2)
        cfg = FlowConfig(intervals=8)
        left = boundary(trace_chain(J, V, 0.0, 1.0, cfg))
        right = trace_chain(boundary(J), V, 0.0, 1.0, cfg)
        for text in ("x^2*y @ 1", "x*y^3 @ 2"):
            with self.subTest(form=text):
                w = Form.parse(text, 2)
                self.assertAlmostEqual(integrate(w, left), integrate(w, right), places=12)

    def test_swept_quarter_disk(self):
        swept = swept_chain(unit_segment(), VectorFieldSpec.rotation(), 0.0, math.pi / 2)
        self.assertEqual(swept.grade, 2)
        self.assertAlmostEqual(integrate(Form.volume(2), swept), math.pi / 4, places=12)


if __name__ == "__main__":
    unittest.main()
