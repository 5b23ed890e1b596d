import random
import unittest

import gmpy2

from gentino.algebra import QQ, FactorSignal, IntegersModN, PrimeField
from gentino.kummer import (DegenerateTheta, ThetaConstants, alpha_roots, alpha_trace, hadamard, rosenhain_curve,
                            rosenhain_from_theta)


class TestThetaConstants(unittest.TestCase):

    def test_hadamard_is_an_involution_up_to_four(self):
        v = [QQ(3), QQ(-1), gmpy2.mpq(7, 2), QQ(5)]
        self.assertEqual(list(hadamard(hadamard(v))), [4 * x for x in v])

    def test_squares_and_duals(self):
        theta = ThetaConstants(1, 2, 3, 5)
        self.assertTrue(theta.has_roots)
        self.assertEqual(theta.squares, (1, 4, 9, 25))
        quarter = gmpy2.mpq(1, 4)
        self.assertEqual(theta.dual_squares, (39 * quarter, -29 * quarter, -19 * quarter, 13 * quarter))
        self.assertEqual(theta.denominators, (25 - 36, 9 - 100, 4 - 225))

    def test_dual(self):
        theta = ThetaConstants(1, 2, 3, 5)
        dual = theta.dual()
        self.assertFalse(dual.has_roots)
        self.assertEqual(dual.squares, theta.dual_squares)
        quarter = gmpy2.mpq(1, 4)
        self.assertEqual(dual.dual().squares, tuple(s * quarter for s in theta.squares))

    def test_from_squares(self):
        theta = ThetaConstants.from_squares([7, 3, 9, 5])
        self.assertFalse(theta.has_roots)
        self.assertEqual(theta.to_json(), {"theta_squares": ["7", "3", "9", "5"]})

    def test_validate(self):
        with self.assertRaises(DegenerateTheta):
            ThetaConstants(0, 1, 2, 3)
        # a^2 d^2 = b^2 c^2
        with self.assertRaises(DegenerateTheta):
            ThetaConstants(1, 2, 3, 6)
        with self.assertRaises(FactorSignal) as ctx:
            ThetaConstants.from_squares([101, 1, 2, 3], IntegersModN(101 * 103))
        self.assertEqual(ctx.exception.factor, 101)


class TestRosenhain(unittest.TestCase):

    def test_double_alpha(self):
        theta = ThetaConstants.from_squares([7, 3, 9, 5])
        self.assertEqual(alpha_trace(theta), -2)
        self.assertEqual(alpha_roots(theta), (1, 1))
        lam, mu, nu = rosenhain_from_theta(theta)
        self.assertEqual((lam, mu, nu), (gmpy2.mpq(21, 5), gmpy2.mpq(9, 5), gmpy2.mpq(7, 3)))
        # alpha^2 = 1 is exactly when lambda = mu nu
        self.assertEqual(lam, mu * nu)
        with self.assertRaises(DegenerateTheta):
            rosenhain_from_theta(theta, alpha=2)

    def test_alpha_roots_multiply_to_one(self):
        field = PrimeField(1009)
        rng = random.Random(6)
        checked = 0
        while checked < 10:
            squares = [field.random_element(rng) for _ in range(4)]
            try:
                roots = alpha_roots(ThetaConstants.from_squares(squares, field))
            except DegenerateTheta:
                continue
            self.assertEqual(roots[0] * roots[1], 1)
            checked += 1

    def test_both_alphas_give_curves(self):
        field = PrimeField(257)
        rng = random.Random(10)
        checked = 0
        while checked < 5:
            try:
                theta = ThetaConstants.from_squares([field.random_element(rng) for _ in range(4)], field)
                curves = [rosenhain_curve(*rosenhain_from_theta(theta, alpha), ring=field)
                          for alpha in alpha_roots(theta)]
            except ValueError:
                continue
            for curve in curves:
                self.assertEqual(curve.degree, 5)
                self.assertTrue(curve.contains(field(1), field(0)))
            checked += 1

    def test_curve_model(self):
        curve = rosenhain_curve(gmpy2.mpq(21, 5), gmpy2.mpq(9, 5), gmpy2.mpq(7, 3))
        self.assertEqual(curve.f.leading, 1)
        for x in (0, 1, gmpy2.mpq(21, 5), gmpy2.mpq(9, 5), gmpy2.mpq(7, 3)):
            self.assertTrue(curve.contains(x, 0))


if __name__ == '__main__':
    unittest.main()
