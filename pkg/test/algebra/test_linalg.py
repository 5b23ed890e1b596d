import unittest

import gmpy2

from gentino.algebra import QQ, FactorSignal, IntegersModN, PrimeField, determinant, row_reduce, solve_linear


class TestLinearAlgebra(unittest.TestCase):

    def test_determinant(self):
        self.assertEqual(determinant([[2, 0, 1], [1, 3, 2], [1, 1, 2]], QQ), 6)
        self.assertEqual(determinant([[0, 1], [1, 0]], QQ), -1)
        self.assertEqual(determinant([[1, 2], [2, 4]], QQ), 0)

    def test_solve(self):
        x = solve_linear([[2, 1], [1, 3]], [5, 10], QQ)
        self.assertEqual(x, [1, 3])
        x = solve_linear([[1, 1], [1, -1], [2, 0]], [gmpy2.mpq(1, 2), 0, gmpy2.mpq(1, 2)], QQ)
        self.assertEqual(x, [gmpy2.mpq(1, 4), gmpy2.mpq(1, 4)])

    def test_solve_mod_p(self):
        field = PrimeField(13)
        x = solve_linear([[2, 1], [1, 3]], [5, 10], field)
        self.assertEqual([int(v) for v in x], [1, 3])

    def test_inconsistent(self):
        with self.assertRaises(ValueError):
            solve_linear([[1, 1], [2, 2]], [1, 3], QQ)
        with self.assertRaises(ValueError):
            solve_linear([[1, 1], [2, 2]], [1, 2], QQ)

    def test_row_reduce(self):
        rows, pivots = row_reduce([[1, 2, 3], [2, 4, 7]], QQ)
        self.assertEqual(pivots, [0, 2])
        self.assertEqual(rows[0], [1, 2, 0])

    def test_non_unit_pivot_signals_factor(self):
        with self.assertRaises(FactorSignal) as ctx:
            row_reduce([[7, 1], [1, 0]], IntegersModN(91))
        self.assertEqual(ctx.exception.factor, 7)


if __name__ == '__main__':
    unittest.main()
