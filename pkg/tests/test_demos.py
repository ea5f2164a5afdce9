import tempfile
import unittest
from pathlib import Path

from chaincalc.chains import loads
from chaincalc.demos.slit_disk import SlitDiskDemo, omega0
from chaincalc.factories.demo_factory import DemoFactory


class TestDemos(unittest.TestCase):
    def test_every_demo_passes(self):
        for name in DemoFactory.available():
            with self.subTest(demo=name):
                report = DemoFactory.create_demo(name).run()
                self.assertTrue(report.passed, [(c.id, c.abs_err) for c in report.failures])
                self.assertEqual(report.suite, f"demo/{name}")

    def test_available(self):
        self.assertEqual(
            DemoFactory.available(),
            ["cantor", "dipole-sphere", "sierpinski", "slit-disk", "vectorfield"],
        )

    def test_cantor_cases(self):
        report = DemoFactory.create_demo("cantor").run()
        self.assertEqual([c.id for c in report.cases], ["boundary_x", "endpoints_x", "gamma_dx"])

    def test_slit_disk_separates_the_edges(self):
        values = {c.id: c.computed for c in DemoFactory.create_demo("slit-disk").run().cases}
        self.assertAlmostEqual(values["upper_edge"], 1.0, delta=1e-4)
        self.assertEqual(values["lower_edge"], 0.0)
        self.assertEqual(values["crossing_inside"], 0.0)
        self.assertEqual(values["detour_inside"], 1.0)

    def test_omega0(self):
        self.assertEqual(omega0((0.25, 0.5)), 0.25)
        self.assertEqual(omega0((0.25, -0.5)), 0.0)
        self.assertEqual(omega0((1.5, 0.5)), 0.0)

    def test_tolerance_override(self):
        demo = DemoFactory.create_demo("vectorfield", 1e-30)
        report = demo.run()
        self.assertFalse(report.passed)
        self.assertTrue(all(c.tol == 1e-30 for c in report.cases))
        self.assertEqual(report.config, {"tolerance": 1e-30})

    def test_dump_writes_loadable_chains(self):
        demo = SlitDiskDemo()
        with tempfile.TemporaryDirectory() as tmp:
            paths = demo.dump(Path(tmp) / "chains")
            self.assertEqual([p.name for p in paths], ["slit-disk_lower.chain", "slit-disk_upper.chain"])
            chains = demo.chains()
            self.assertEqual(loads(paths[1].read_text()), chains["upper"])


if __name__ == "__main__":
    unittest.main()
