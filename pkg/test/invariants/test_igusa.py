import unittest

import gmpy2

from gentino.algebra import QQ, Poly
from gentino.invariants import (BinarySextic, IgusaInvariants, ModuliCase, ModuliPoint, NotGenusTwo,
                                absolute_invariants, alpha_invariants, gl2_transform, igusa, igusa_arithmetic,
                                invariants_from_moduli, is_isomorphic, moduli_point, moduli_point_of, t_invariants)

# 4x^6 + 9x^5 + 8x^4 + 10x^3 + 5x^2 + 3x + 1
WORKED_SEXTIC = [1, 3, 5, 10, 8, 9, 4]


class TestIgusaInvariants(unittest.TestCase):

    def test_worked_sextic(self):
        J = igusa(BinarySextic(WORKED_SEXTIC))
        self.assertEqual(J.as_tuple(), (80, 34996, 3575732, 5061472))
        i1, i2, i3 = absolute_invariants(J)
        print(f"[test_worked_sextic] i1 = {i1}, i2 = {i2}, i3 = {i3}")
        self.assertEqual(i1, gmpy2.mpq(78741, 100))
        self.assertEqual(i2, gmpy2.mpq(53510733, 2000))
        self.assertEqual(i3, gmpy2.mpq(38435553, 51200000))

    def test_known_quadruples(self):
        cases = {
            (0, -1, 0, 2, 0, 1, 0): (-16, -224, -128, -1024),
            (-1, 0, 0, 0, 0, 0, 1): (240, 1620, 119880, 46656),
            (0, -1, 0, 0, 0, 1, 0): (-40, -80, 320, -256),
            (0, -1, 0, 0, 0, 0, 1): (0, 0, 0, 3125),
            (1, 0, 0, 3, 0, 0, 1): (-186, 4536, -197154, 91125),
        }
        for coeffs, expected in cases.items():
            self.assertEqual(igusa(BinarySextic(coeffs)).as_tuple(), expected, coeffs)

    def test_weighted_scaling(self):
        f = BinarySextic(WORKED_SEXTIC)
        t = gmpy2.mpq(3, 2)
        self.assertEqual(igusa(f.scaled(t)), igusa(f).scaled(t))

    def test_isomorphism_invariance(self):
        f = BinarySextic(WORKED_SEXTIC)
        for matrix in ([[1, 2], [3, 7]], [[0, 1], [1, 0]], [[2, 0], [0, 1]], [[1, -1], [4, 5]]):
            g = gl2_transform(f, matrix)
            self.assertTrue(is_isomorphic(f, g), matrix)
        self.assertFalse(is_isomorphic(f, BinarySextic([1, 2, 0, -3, 1, 5, 7])))

    def test_quintic_is_a_sextic_with_a_root_at_infinity(self):
        f = BinarySextic([0, -1, 0, 0, 0, 1])
        self.assertTrue(f.is_squarefree())
        g = gl2_transform(f, [[1, 0], [2, 1]])
        self.assertEqual(g.poly.degree, 6)
        self.assertTrue(is_isomorphic(f, g))

    def test_repeated_root(self):
        f = BinarySextic.from_poly(Poly.from_roots([1, 1, 2, 3, 4, 5]))
        self.assertFalse(f.is_squarefree())
        J = igusa(f)
        self.assertFalse(J.is_genus_two())
        with self.assertRaises(NotGenusTwo):
            moduli_point_of(J)
        with self.assertRaises(NotGenusTwo):
            t_invariants(J)

    def test_arithmetic_invariants(self):
        J = igusa(BinarySextic(WORKED_SEXTIC))
        j2, j4, j6, j8, j10 = igusa_arithmetic(J)
        self.assertEqual(j2, 10)
        self.assertEqual(j10, gmpy2.mpq(5061472, 4096))
        self.assertEqual(j8, (j2 * j6 - j4 * j4) / 4)


class TestModuliPoint(unittest.TestCase):

    def test_cases(self):
        self.assertEqual(moduli_point(BinarySextic(WORKED_SEXTIC)).case, ModuliCase.ABSOLUTE)
        p = moduli_point(BinarySextic([0, -1, 0, 0, 0, 0, 1]))
        self.assertEqual(p.case, ModuliCase.J10_ONLY)
        self.assertEqual(p.values, ())

    def test_invariants_from_moduli(self):
        for coeffs in (WORKED_SEXTIC, [0, -1, 0, 2, 0, 1], [0, -1, 0, 0, 0, 0, 1], [1, 2, 0, -3, 1, 5, 7]):
            p = moduli_point(BinarySextic(coeffs))
            self.assertEqual(moduli_point_of(invariants_from_moduli(p)), p)

    def test_alpha_invariants(self):
        J = IgusaInvariants(0, 5, 7, 11, QQ)
        self.assertEqual(alpha_invariants(J), (gmpy2.mpq(35, 11), gmpy2.mpq(77, 625)))
        self.assertEqual(moduli_point_of(J).values, alpha_invariants(J))
        with self.assertRaises(ValueError):
            alpha_invariants(IgusaInvariants(0, 0, 7, 11, QQ))

    def test_rescaled_invariants_share_a_point(self):
        J = IgusaInvariants(0, 5, 7, 11, QQ)
        p = moduli_point_of(J)
        self.assertEqual(p.case, ModuliCase.ALPHA)
        self.assertEqual(moduli_point_of(J.scaled(gmpy2.mpq(-2, 3))), p)
        self.assertEqual(moduli_point_of(invariants_from_moduli(p)), p)
        q = moduli_point_of(IgusaInvariants(0, 0, 7, 11, QQ))
        self.assertEqual(q.case, ModuliCase.J6_RATIO)
        self.assertEqual(moduli_point_of(invariants_from_moduli(q)), q)
        r = moduli_point_of(IgusaInvariants(0, 5, 0, 11, QQ))
        self.assertEqual(r.case, ModuliCase.J4_RATIO)
        self.assertEqual(moduli_point_of(invariants_from_moduli(r)), r)

    def test_json(self):
        p = moduli_point(BinarySextic(WORKED_SEXTIC))
        obj = p.to_json()
        self.assertEqual(obj["case"], "ABSOLUTE")
        self.assertEqual(obj["values"][0], "78741/100")
        self.assertEqual(ModuliPoint.from_json(obj, QQ), p)


if __name__ == '__main__':
    unittest.main()
