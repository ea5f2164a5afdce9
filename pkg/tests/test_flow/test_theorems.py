import math
import unittest

from chaincalc.data_types.config.flow import FlowConfig
from chaincalc.fields.vector_field import VectorFieldSpec
from chaincalc.flow import (
    TimeForm,
    flow_leibniz_verify,
    ftc_flow_verify,
    leibniz_verify,
    refinement_table,
    reynolds_verify,
    stokes_flow_verify,
)
from chaincalc.forms import Form, integrate, lie
from chaincalc.operators import prederiv
from chaincalc.represent.cubes import cube_chain

ROTATION = VectorFieldSpec.rotation()


def unit_segment(level: int = 6):
    return cube_chain((0.0, 0.0), 1.0, (0,), level=level)


def unit_square(level: int = 3):
    return cube_chain((0.0, 0.0), 1.0, (0, 1), level=level)


class TestTimeForm(unittest.TestCase):
    def test_at_and_time_derivative(self):
        w = TimeForm(2, 1, {(1,): "t*x1"})
        segment = unit_segment(2)
        self.assertAlmostEqual(integrate(w.at(0.5), segment), 0.0)
        point = cube_chain((1.0, 0.0), 1.0, (1,), level=0)
        self.assertAlmostEqual(integrate(w.at(0.5), point), 0.5)
        self.assertAlmostEqual(integrate(w.time_derivative(0.5), point), 1.0)

    def test_parse(self):
        w = TimeForm.parse("t^2 @ 12", 2)
        self.assertEqual(w.grade, 2)
        self.assertAlmostEqual(integrate(w.at(3.0), unit_square(1)), 9.0)

    def test_static(self):
        w = TimeForm.static(Form.parse("x @ 2", 2))
        self.assertAlmostEqual(integrate(w.at(7.0), cube_chain((2.0, 0.0), 1.0, (1,), level=0)), 2.0)
        self.assertTrue(w.time_derivative(1.0).is_zero())
        with self.assertRaises(TypeError):
            TimeForm.static(Form.from_callbacks(2, 1, {(0,): lambda p: p[0]}))


class TestFlowTheorems(unittest.TestCase):
    def test_ftc_at_level_six(self):
        report = ftc_flow_verify(unit_segment(), ROTATION, Form.parse("x @ 2", 2), 0.0, 1.0, FlowConfig(intervals=64))
        self.assertAlmostEqual(report.lhs, math.sin(2.0) / 4.0, places=12)
        self.assertLessEqual(report.abs_err, 1e-3)

    def test_ftc_refinement_is_second_order(self):
        report = refinement_table(
            ftc_flow_verify,
            unit_segment(),
            ROTATION,
            Form.parse("x @ 2", 2),
            0.0,
            1.0,
            [16, 32, 64],
        )
        self.assertEqual([row.intervals for row in report.refinement], [16, 32, 64])
        self.assertIsNone(report.refinement[0].ratio)
        for row in report.refinement[1:]:
            self.assertLessEqual(row.ratio, 1.0 / 3.5)
        self.assertEqual(report.config.intervals, 64)

    def test_refinement_table_needs_intervals(self):
        with self.assertRaises(ValueError):
            refinement_table(ftc_flow_verify, unit_segment(1), ROTATION, Form.parse("x @ 2", 2), 0.0, 1.0, [])

    def test_stokes_for_area_preserving_flow(self):
        report = stokes_flow_verify(unit_square(), ROTATION, Form.parse("x @ 2", 2), 0.0, 1.0, FlowConfig(intervals=8))
        self.assertAlmostEqual(report.lhs, 0.0, places=12)
        self.assertAlmostEqual(report.rhs, 0.0, places=12)

    def test_stokes_under_expansion(self):
        V = VectorFieldSpec.from_expressions(["x", "y"])
        report = stokes_flow_verify(unit_square(), V, Form.parse("x @ 2", 2), 0.0, 0.5, FlowConfig(intervals=64))
        # area grows as e^{2t}
        self.assertAlmostEqual(report.lhs, math.e - 1.0, places=10)
        self.assertLess(report.abs_err, 1e-3)

    def test_reynolds_three_terms(self):
        w = TimeForm.parse("t*x @ 2", 2)
        report = reynolds_verify(unit_segment(), ROTATION, w, 0.5)
        self.assertAlmostEqual(report.lhs, 0.25 * (math.sin(1.0) + math.cos(1.0)), places=7)
        self.assertLess(report.abs_err, 1e-4)
        self.assertAlmostEqual(report.values["dt_part"], math.sin(1.0) / 4.0, places=12)
        self.assertAlmostEqual(report.values["boundary_part"], 0.5 * math.cos(0.5) ** 2, places=12)
        self.assertAlmostEqual(report.values["extrusion_part"], -0.25, places=12)
        self.assertAlmostEqual(report.values["two_term"], report.rhs, places=10)

    def test_reynolds_on_top_grade(self):
        V = VectorFieldSpec.from_expressions(["x", "0"])
        report = reynolds_verify(unit_square(), V, TimeForm.parse("t @ 12", 2), 0.25)
        self.assertEqual(report.values["extrusion_part"], 0.0)
        self.assertLess(report.abs_err, 1e-4)

    def test_leibniz_static_chain(self):
        square = unit_square(1)
        report = leibniz_verify(lambda t: square, TimeForm.parse("t^2 @ 12", 2), 0.5)
        self.assertAlmostEqual(report.lhs, 1.0, places=8)
        self.assertAlmostEqual(report.rhs, 1.0, places=12)
        self.assertNotIn("rhs_prederiv", report.values)

    def test_leibniz_static_form_is_prederivative_duality(self):
        w = Form.parse("x^2*y @ 1", 2)
        segment = unit_segment(3)
        report = flow_leibniz_verify(segment, ROTATION, TimeForm.static(w), 0.0)
        self.assertAlmostEqual(report.values["rhs_prederiv"], integrate(w, prederiv(ROTATION, segment)), places=12)
        self.assertAlmostEqual(report.values["rhs_prederiv"], integrate(lie(ROTATION, w), segment), places=12)
        self.assertLess(report.abs_err, 1e-6)

    def test_leibniz_both_varying(self):
        report = flow_leibniz_verify(unit_segment(), ROTATION, TimeForm.parse("t*x @ 2", 2), 0.5)
        self.assertLess(report.abs_err, 1e-6)
        self.assertAlmostEqual(report.values["rhs_prederiv"], report.lhs, places=6)

    def test_report_dict(self):
        report = ftc_flow_verify(unit_segment(2), ROTATION, Form.parse("x @ 2", 2), 0.0, 0.5, FlowConfig(intervals=4))
        payload = report.to_dict()
        self.assertEqual(
            set(payload), {"name", "lhs", "rhs", "abs_err", "cfg", "values", "refinement_table"}
        )
        self.assertEqual(payload["cfg"]["intervals"], 4)
        self.assertEqual(payload["refinement_table"], [])


if __name__ == "__main__":
    unittest.main()
