import unittest

import gmpy2

from gentino.algebra import QQ, FactorSignal, IntegersModN, PrimeField
from gentino.autloci import DegenerateCurve
from gentino.subcovers import EllipticCurve, cubic_j_invariant


class TestEllipticCurve(unittest.TestCase):

    def setUp(self):
        # y^2 = x^3 + 17
        self.curve = EllipticCurve.short(0, 17)
        self.p, self.q = (QQ(-2), QQ(3)), (QQ(-1), QQ(4))

    def test_group_law(self):
        c = self.curve
        r = c.add(self.p, self.q)
        self.assertTrue(c.is_on_curve(r))
        self.assertEqual(c.add(self.p, None), self.p)
        self.assertIsNone(c.add(self.p, c.negate(self.p)))
        self.assertEqual(c.add(c.add(self.p, self.q), r), c.add(self.p, c.add(self.q, r)))
        self.assertEqual(c.scalar_mul(3, self.p), c.add(self.p, c.double(self.p)))
        self.assertEqual(c.scalar_mul(-2, self.p), c.negate(c.double(self.p)))
        self.assertIsNone(c.scalar_mul(0, self.p))

    def test_long_form(self):
        c = EllipticCurve(1, -1, 1, -2, 0)
        p = (QQ(0), QQ(0))
        self.assertFalse(c.is_on_curve((QQ(1), QQ(1))))
        self.assertTrue(c.is_on_curve(p))
        self.assertTrue(c.is_on_curve(c.double(p)))
        self.assertTrue(c.is_on_curve(c.scalar_mul(5, p)))

    def test_j_invariant(self):
        self.assertEqual(self.curve.j_invariant, 0)
        self.assertEqual(EllipticCurve.short(1, 0).j_invariant, 1728)

    def test_singular(self):
        with self.assertRaises(DegenerateCurve):
            EllipticCurve.short(0, 0)
        with self.assertRaises(DegenerateCurve):
            EllipticCurve.short(-3, 2, PrimeField(101))

    def test_from_cubic(self):
        cubic = [3, 1, 0, 2]
        curve = EllipticCurve.from_cubic(cubic, 6)
        self.assertEqual(curve.j_invariant, cubic_j_invariant(cubic))
        x, y = EllipticCurve.cubic_point(QQ(1), QQ(1), QQ(2), 6)
        self.assertTrue(curve.is_on_curve((x, y)))

    def test_non_unit_slope_signals_factor(self):
        ring = IntegersModN(91)
        curve = EllipticCurve.short(1, 1, ring)
        with self.assertRaises(FactorSignal) as ctx:
            curve.add((ring(0), ring(1)), (ring(7), ring(5)))
        self.assertEqual(ctx.exception.factor, 7)

    def test_json(self):
        self.assertEqual(EllipticCurve.short(gmpy2.mpq(1, 2), 3).to_json(),
                         {"a1": "0", "a2": "0", "a3": "0", "a4": "1/2", "a6": "3"})


if __name__ == '__main__':
    unittest.main()
