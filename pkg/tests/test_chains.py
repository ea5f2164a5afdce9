import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from chaincalc.chains import (
    ChainBuilder,
    DiracChain,
    difference,
    dumps,
    loads,
    points_array,
    restrict,
    split_by_order,
    support,
    translate,
)
from chaincalc.exceptions import (
    ChainFormatError,
    DimensionMismatchError,
    GradeMismatchError,
    InvalidMultiIndexError,
)
from chaincalc.exterior import KVector
from chaincalc.sampling import random_chain


class TestDiracChain(unittest.TestCase):
    def test_element_expands_multivector(self):
        alpha = KVector(2, 1, {(0,): 1.0, (1,): -2.0})
        chain = DiracChain.element((0.5, 0.5), alpha)
        self.assertEqual(len(chain), 2)
        self.assertEqual(chain.coefficient((0.5, 0.5), (0, 0), (1,)), -2.0)
        self.assertEqual(chain.order, 0)

    def test_element_with_degree(self):
        chain = DiracChain.element((0.0, 0.0), KVector.scalar(2), degree=(2, 1))
        self.assertEqual(chain.order, 3)

    def test_element_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            DiracChain.element((0.0,), KVector.basis(2, (0,)))

    def test_like_terms_cancel(self):
        a = DiracChain.element((0.0, 0.0), KVector.basis(2, (0,)))
        self.assertTrue((a - a).is_zero())
        self.assertFalse(a - a)
        self.assertEqual(a + a, a * 2.0)
        self.assertEqual(-a, a * -1.0)

    def test_points_compare_exactly(self):
        e1 = KVector.basis(1, (0,))
        a = DiracChain.element((0.1 + 0.2,), e1)
        b = DiracChain.element((0.3,), e1)
        self.assertEqual(len(a - b), 2)

    def test_mismatched_combination(self):
        a = DiracChain.zero(2, 1)
        with self.assertRaises(DimensionMismatchError):
            a + DiracChain.zero(3, 1)
        with self.assertRaises(GradeMismatchError):
            a + DiracChain.zero(2, 2)

    def test_allclose(self):
        a = DiracChain.element((0.0,), KVector.basis(1, (0,)))
        b = DiracChain.element((0.0,), KVector.basis(1, (0,), 1.0 + 1e-14))
        self.assertTrue(a.allclose(b))
        self.assertFalse(a.allclose(b * 2.0))

    def test_hash_follows_equality(self):
        a = DiracChain.element((0.0, 1.0), KVector.volume(2))
        b = DiracChain.element((0.0, 1.0), KVector.volume(2))
        self.assertEqual(hash(a), hash(b))


class TestChainBuilder(unittest.TestCase):
    def test_rejects_bad_terms(self):
        builder = ChainBuilder(2, 1)
        with self.assertRaises(InvalidMultiIndexError):
            builder.add((0.0, 0.0), (0, 0), (2,), 1.0)
        with self.assertRaises(GradeMismatchError):
            builder.add((0.0, 0.0), (0, 0), (0, 1), 1.0)
        with self.assertRaises(DimensionMismatchError):
            builder.add((0.0,), (0, 0), (0,), 1.0)
        with self.assertRaises(ValueError):
            builder.add((0.0, 0.0), (-1, 0), (0,), 1.0)

    def test_zero_coefficient_is_skipped(self):
        chain = ChainBuilder(1, 0).add((0.0,), (0,), (), 0.0).build()
        self.assertTrue(chain.is_zero())

    def test_terms_are_sorted(self):
        builder = ChainBuilder(1, 0)
        builder.add((1.0,), (0,), (), 1.0).add((0.0,), (0,), (), 1.0)
        points = [term.point for term in builder.build().terms()]
        self.assertEqual(points, [(0.0,), (1.0,)])


class TestChainOperations(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(7)

    def test_translate(self):
        chain = DiracChain.element((0.0, 0.0), KVector.basis(2, (1,)))
        moved = translate((1.0, -1.0), chain)
        self.assertEqual(support(moved), {(1.0, -1.0)})

    def test_difference_of_point(self):
        chain = DiracChain.element((0.0,), KVector.scalar(1))
        diff = difference([(0.5,)], chain)
        self.assertEqual(diff.coefficient((0.5,), (0,), ()), 1.0)
        self.assertEqual(diff.coefficient((0.0,), (0,), ()), -1.0)

    def test_difference_order_does_not_matter(self):
        chain = random_chain(self.rng, 2, 1, max_order=1)
        a = difference([(0.25, 0.0), (0.0, 0.5)], chain)
        b = difference([(0.0, 0.5), (0.25, 0.0)], chain)
        self.assertTrue(a.allclose(b))

    def test_restrict(self):
        builder = ChainBuilder(1, 0)
        for x in (-1.0, 0.0, 1.0):
            builder.add((x,), (0,), (), 1.0)
        kept = restrict(builder.build(), lambda p: p[0] >= 0)
        self.assertEqual(support(kept), {(0.0,), (1.0,)})

    def test_split_by_order(self):
        builder = ChainBuilder(2, 0)
        builder.add((0.0, 0.0), (0, 0), (), 1.0)
        builder.add((0.0, 0.0), (1, 0), (), 2.0)
        builder.add((0.0, 0.0), (1, 1), (), 3.0)
        parts = split_by_order(builder.build())
        self.assertEqual(sorted(parts), [0, 1, 2])
        self.assertEqual(parts[2].norm_inf(), 3.0)

    def test_points_array(self):
        self.assertEqual(points_array(DiracChain.zero(3, 1)).shape, (0, 3))
        chain = random_chain(self.rng, 3, 1, terms=5)
        self.assertEqual(points_array(chain).shape, (len(chain), 3))


class TestChainText(unittest.TestCase):
    @given(st.integers(0, 2**32 - 1), st.integers(1, 3))
    @settings(max_examples=30, deadline=None)
    def test_dumps_loads_is_exact(self, seed, dim):
        rng = np.random.default_rng(seed)
        grade = int(rng.integers(0, dim + 1))
        chain = random_chain(rng, dim, grade, max_order=2) * (1.0 / 3.0)
        self.assertEqual(loads(dumps(chain)), chain)

    def test_loads_accepts_comments_and_decimals(self):
        text = "# a point\n1 0\n\n0.5 | 0 | - | 2\n"
        chain = loads(text)
        self.assertEqual(chain.coefficient((0.5,), (0,), ()), 2.0)

    def test_loads_errors(self):
        with self.assertRaises(ChainFormatError):
            loads("")
        with self.assertRaises(ChainFormatError):
            loads("two one\n")
        with self.assertRaises(ChainFormatError):
            loads("1 0\n0.5 | 0 | -\n")
        with self.assertRaises(ChainFormatError):
            loads("1 1\n0.5 | 0 | 3 | 1\n")


if __name__ == "__main__":
    unittest.main()
