import unittest

from chaincalc.chains import DiracChain
from chaincalc.forms import Form, integrate
from chaincalc.operators import boundary
from chaincalc.represent.cubes import cube_chain, cube_family, point_limit_family
from chaincalc.represent.family import ChainFamily


class TestCubeChain(unittest.TestCase):
    def test_level_one_square(self):
        chain = cube_chain((0.0, 0.0), 1.0, (0, 1), level=1)
        self.assertEqual(len(chain), 4)
        self.assertEqual(chain.coefficient((0.25, 0.75), (0, 0), (0, 1)), 0.25)

    def test_volume_is_level_independent(self):
        for level in range(6):
            chain = cube_chain((1.0, -2.0, 0.5), 2.0, (0, 2), level=level)
            self.assertAlmostEqual(integrate(Form.parse("1 @ 13", 3), chain), 4.0)

    def test_orientation(self):
        chain = cube_chain((0.0,), 1.0, (0,), orientation=-1, level=2)
        self.assertAlmostEqual(integrate(Form.parse("1 @ 1", 1), chain), -1.0)

    def test_midpoint_error(self):
        h = 1.0 / 8.0
        value = integrate(Form.parse("x^2 @ 1", 1), cube_chain((0.0,), 1.0, (0,), level=3))
        self.assertAlmostEqual(value, 1.0 / 3.0 - h * h / 12.0, places=14)

    def test_boundary_is_exact_for_stokes(self):
        for level in range(5):
            chain = boundary(cube_chain((0.0, 0.0), 1.0, (0, 1), level=level))
            self.assertAlmostEqual(integrate(Form.parse("x @ 2", 2), chain), 1.0, places=12)

    def test_invalid_arguments(self):
        with self.assertRaises(ValueError):
            cube_chain((0.0,), 0.0, (0,))
        with self.assertRaises(ValueError):
            cube_chain((0.0,), 1.0, (0,), orientation=2)
        with self.assertRaises(ValueError):
            cube_chain((0.0,), 1.0, (0,), level=-1)


class TestChainFamily(unittest.TestCase):
    def test_levels_are_cached(self):
        calls = []

        def generate(j):
            calls.append(j)
            return cube_chain((0.0,), 1.0, (0,), level=j)

        family = ChainFamily(1, 1, generate)
        family.level(2)
        family.level(2)
        self.assertEqual(calls, [2])

    def test_negative_level(self):
        with self.assertRaises(ValueError):
            cube_family((0.0,), 1.0, (0,)).level(-1)

    def test_shape_is_checked(self):
        family = ChainFamily(2, 1, lambda j: DiracChain.zero(2, 2))
        with self.assertRaises(ValueError):
            family.level(0)

    def test_cauchy_ratios(self):
        family = cube_family((0.0,), 1.0, (0,))
        ratios = family.cauchy_ratios(Form.parse("x^2 @ 1", 1), range(1, 6))
        self.assertEqual(len(ratios), 3)
        for ratio in ratios:
            self.assertAlmostEqual(ratio, 0.25, places=6)

    def test_exact_family_reports_zero(self):
        family = cube_family((0.0,), 1.0, (0,))
        self.assertEqual(family.cauchy_ratios(Form.parse("1 @ 1", 1), range(4)), [0.0, 0.0])

    def test_mapped(self):
        family = cube_family((0.0, 0.0), 1.0, (0, 1)).mapped(boundary, 1)
        self.assertEqual(family.level(2).grade, 1)
        self.assertAlmostEqual(family.integrals(Form.parse("x @ 2", 2), [3])[0], 1.0)


class TestPointLimit(unittest.TestCase):
    def test_converges_to_element(self):
        family = point_limit_family((0.3, 0.7), (0, 1))
        w = Form.parse("x^2*y @ 12", 2)
        value = family.integrals(w, [6])[0]
        self.assertAlmostEqual(value, 0.3**2 * 0.7, delta=1e-3)


if __name__ == "__main__":
    unittest.main()
