import random
import unittest

import gmpy2

from gentino.algebra import QQ, FactorSignal, IntegersModN, ModInt, PrimeField, mod_inverse, ring_from_json


class TestRationalField(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(QQ("3/4"), gmpy2.mpq(3, 4))
        self.assertEqual(QQ("-6/8"), gmpy2.mpq(-3, 4))
        self.assertEqual(QQ(5), gmpy2.mpq(5))
        with self.assertRaises(ValueError):
            QQ("1/0")

    def test_sqrt(self):
        self.assertEqual(QQ.sqrt(gmpy2.mpq(9, 4)), gmpy2.mpq(3, 2))
        self.assertIsNone(QQ.sqrt(2))
        self.assertIsNone(QQ.sqrt(-1))

    def test_inverse_of_zero(self):
        with self.assertRaises(ZeroDivisionError):
            QQ.inverse(0)

    def test_json(self):
        self.assertEqual(QQ.to_json(gmpy2.mpq(-7, 3)), "-7/3")
        self.assertEqual(QQ.to_json(gmpy2.mpq(4)), "4")
        self.assertEqual(QQ.from_json("-7/3"), gmpy2.mpq(-7, 3))


class TestIntegersModN(unittest.TestCase):

    def setUp(self):
        self.ring = IntegersModN(91)

    def test_validate(self):
        with self.assertRaises(ValueError):
            IntegersModN(1)

    def test_inverse_of_unit(self):
        x = self.ring(3)
        self.assertEqual(x * self.ring.inverse(x), 1)

    def test_non_unit_signals_factor(self):
        with self.assertRaises(FactorSignal) as ctx:
            self.ring.inverse(14)
        self.assertEqual(ctx.exception.factor, 7)
        self.assertEqual(ctx.exception.modulus, 91)
        self.assertTrue(ctx.exception.is_proper)

    def test_zero_signals_whole_modulus(self):
        with self.assertRaises(FactorSignal) as ctx:
            self.ring.inverse(0)
        self.assertEqual(ctx.exception.factor, 91)
        self.assertFalse(ctx.exception.is_proper)

    def test_mod_inverse_returns_signal(self):
        signal = mod_inverse(ModInt(26, self.ring))
        self.assertIsInstance(signal, FactorSignal)
        self.assertEqual(signal.factor, 13)
        inverse = mod_inverse(ModInt(5, self.ring))
        self.assertEqual(inverse * 5, 1)

    def test_rational_coercion(self):
        half = self.ring(gmpy2.mpq(1, 2))
        self.assertEqual(half * 2, 1)
        with self.assertRaises(FactorSignal):
            self.ring(gmpy2.mpq(1, 7))

    def test_arithmetic(self):
        a, b = self.ring(50), self.ring(60)
        self.assertEqual(a + b, 19)
        self.assertEqual(a - b, 81)
        self.assertEqual(3 - a, 44)
        self.assertEqual(-a, 41)
        self.assertEqual(a ** 2, 2500 % 91)
        self.assertEqual(a ** -1 * a, 1)

    def test_moduli_must_match(self):
        with self.assertRaises(ValueError):
            self.ring(1) + IntegersModN(7)(1)

    def test_no_square_roots(self):
        self.assertIsNone(self.ring.sqrt(4))

    def test_json(self):
        x = self.ring(5)
        obj = self.ring.to_json(x)
        self.assertEqual(obj, {"value": "5", "modulus": "91"})
        self.assertEqual(self.ring.from_json(obj), x)
        self.assertEqual(ring_from_json(obj), self.ring)
        self.assertEqual(ring_from_json("3/4"), QQ)
        with self.assertRaises(ValueError):
            IntegersModN(97).from_json(obj)


class TestPrimeField(unittest.TestCase):

    def test_validate(self):
        with self.assertRaises(ValueError):
            PrimeField(91)

    def test_inverse_of_zero(self):
        with self.assertRaises(ZeroDivisionError):
            PrimeField(13).inverse(0)

    def test_sqrt(self):
        for p in (2, 13, 17, 101, 1009):
            field = PrimeField(p)
            for x in field.elements():
                root = field.sqrt(x * x)
                self.assertIsNotNone(root)
                self.assertEqual(root * root, x * x)

    def test_sqrt_agrees_with_is_square(self):
        # 257 - 1 and 2^64 - 2^32 are divisible by large powers of 2
        for p in (257, 2 ** 64 - 2 ** 32 + 1):
            field = PrimeField(p)
            rng = random.Random(p % 1000)
            for _ in range(200):
                x = field.random_element(rng)
                root = field.sqrt(x)
                self.assertEqual(root is not None, field.is_square(x))
                if root is not None:
                    self.assertEqual(root * root, x)

    def test_non_residue(self):
        field = PrimeField(101)
        self.assertFalse(field.is_square(2))
        self.assertIsNone(field.sqrt(2))
        self.assertTrue(field.is_square(0))

    def test_random_element(self):
        field = PrimeField(101)
        rng = random.Random(0)
        for _ in range(50):
            self.assertTrue(0 <= int(field.random_element(rng)) < 101)

    def test_elements(self):
        self.assertEqual(len(list(PrimeField(13).elements())), 13)


if __name__ == '__main__':
    unittest.main()
