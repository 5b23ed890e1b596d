import random
import unittest

import gmpy2

from gentino.algebra import (QQ, BivariatePoly, FactorSignal, IntegersModN, Poly, PrimeField, discriminant,
                             evaluate_symmetric, poly_divrem, poly_gcd, poly_xgcd, resultant)


def random_poly(rng, degree, ring=QQ):
    coeffs = [ring.random_element(rng) for _ in range(degree)] + [ring(rng.randint(1, 9))]
    return Poly(coeffs, ring)


class TestPoly(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(7)

    def test_trailing_zeros_dropped(self):
        p = Poly([1, 2, 0, 0])
        self.assertEqual(p.degree, 1)
        self.assertEqual(Poly.zero().degree, -1)
        self.assertTrue(Poly([0, 0]).is_zero())

    def test_divrem(self):
        for ring in (QQ, PrimeField(101)):
            for _ in range(20):
                a = random_poly(self.rng, self.rng.randint(0, 7), ring)
                b = random_poly(self.rng, self.rng.randint(0, 4), ring)
                q, r = a.divrem(b)
                self.assertEqual(q * b + r, a)
                self.assertLess(r.degree, b.degree)

    def test_poly_divrem(self):
        self.assertEqual(poly_divrem(Poly([-1, 0, 1]), Poly([-1, 1])), (Poly([1, 1]), Poly.zero()))
        f = Poly([5, 0, 3, 1])
        self.assertEqual(poly_divrem(f, Poly.one()), (f, Poly.zero()))
        ring = IntegersModN(15)
        with self.assertRaises(FactorSignal) as ctx:
            poly_divrem(Poly([2, 0, 1], ring), Poly([1, 3], ring))
        self.assertEqual(ctx.exception.factor, 3)

    def test_division_by_zero(self):
        with self.assertRaises(ZeroDivisionError):
            Poly([1, 1]).divrem(Poly.zero())

    def test_non_unit_leading_coefficient_signals_factor(self):
        ring = IntegersModN(91)
        with self.assertRaises(FactorSignal) as ctx:
            Poly([1, 2, 3], ring).divrem(Poly([1, 7], ring))
        self.assertEqual(ctx.exception.factor, 7)

    def test_exact_div(self):
        a = Poly.from_roots([1, 2, 3])
        self.assertEqual(a.exact_div(Poly([-2, 1])), Poly.from_roots([1, 3]))
        with self.assertRaises(ValueError):
            a.exact_div(Poly([5, 1]))

    def test_xgcd(self):
        a = Poly.from_roots([1, 2, 5])
        b = Poly.from_roots([1, 5, -4]) * 3
        g, s, t = poly_xgcd(a, b)
        self.assertEqual(g, Poly.from_roots([1, 5]))
        self.assertEqual(s * a + t * b, g)
        self.assertEqual(poly_gcd(Poly.from_roots([2]), Poly.from_roots([3])), Poly.one())

    def test_evaluate_compose_derivative(self):
        p = Poly([1, 0, 1])
        self.assertEqual(p(3), 10)
        self.assertEqual(p.compose(Poly([1, 1])), Poly([2, 2, 1]))
        self.assertEqual(Poly([5, 3, 0, 2]).derivative(), Poly([3, 0, 6]))
        self.assertEqual(Poly.from_roots([gmpy2.mpq(1, 2), 4])(gmpy2.mpq(1, 2)), 0)

    def test_monic(self):
        self.assertEqual(Poly([2, 4]).monic(), Poly([gmpy2.mpq(1, 2), 1]))

    def test_resultant(self):
        self.assertEqual(resultant(Poly([-2, 1]), Poly([-5, 1])), -3)
        self.assertEqual(resultant(Poly.from_roots([1, 2]), Poly.from_roots([2, 7])), 0)

    def test_discriminant(self):
        # x^2 + 5x + 3
        self.assertEqual(discriminant(Poly([3, 5, 1])), 13)
        self.assertEqual(discriminant(Poly.from_roots([1, 1, -2])), 0)
        self.assertNotEqual(discriminant(Poly.from_roots([0, 1, 2, 3, 4])), 0)


class TestBivariatePoly(unittest.TestCase):

    def test_swap_and_symmetry(self):
        p = BivariatePoly({(2, 1): 1, (0, 0): 3})
        self.assertFalse(p.is_symmetric())
        self.assertEqual(p.swap(), BivariatePoly({(1, 2): 1, (0, 0): 3}))
        self.assertTrue((p + p.swap()).is_symmetric())

    def test_specialize(self):
        p = BivariatePoly({(1, 1): 2, (2, 0): 1})
        self.assertEqual(p.specialize_x(3), Poly([9, 6]))
        self.assertEqual(p(3, 5), 39)

    def test_evaluate_symmetric(self):
        # x^2 y + x y^2 + x^2 + y^2 + 3 at the roots 2 and 5 of z^2 - 7z + 10
        p = BivariatePoly({(2, 1): 1, (1, 2): 1, (2, 0): 1, (0, 2): 1, (0, 0): 3})
        self.assertEqual(evaluate_symmetric(p, QQ(7), QQ(10)), p(2, 5))
        with self.assertRaises(ValueError):
            evaluate_symmetric(BivariatePoly({(1, 0): 1}), QQ(1), QQ(1))


if __name__ == '__main__':
    unittest.main()
