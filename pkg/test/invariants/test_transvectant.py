import unittest

from gentino.invariants import BinaryForm, BinarySextic, clebsch_invariants, transvection, weighted_coefficients


class TestTransvectant(unittest.TestCase):

    def test_order(self):
        f = BinaryForm([1, 0, 2, 0, 0, 3, 1])
        g = BinaryForm([1, 1, 1])
        self.assertEqual(transvection(f, g, 2).order, 4)
        self.assertEqual(transvection(f, f, 4).order, 4)
        with self.assertRaises(ValueError):
            transvection(f, g, 3)

    def test_jacobian_of_linear_forms(self):
        # (X, Z)^1 = 1
        x, z = BinaryForm([0, 1]), BinaryForm([1, 0])
        self.assertEqual(transvection(x, z, 1), BinaryForm([1]))
        self.assertEqual(transvection(z, x, 1), BinaryForm([-1]))

    def test_clebsch_needs_a_sextic(self):
        with self.assertRaises(ValueError):
            clebsch_invariants(BinaryForm([1, 0, 1]))

    def test_weighted_coefficients(self):
        b = weighted_coefficients(BinarySextic([6, 6, 15, 20, 15, 6, 1]))
        self.assertEqual(b, [6, 1, 1, 1, 1, 1, 1])


if __name__ == '__main__':
    unittest.main()
