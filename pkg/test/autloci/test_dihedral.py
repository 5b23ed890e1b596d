import random
import unittest

import gmpy2
import sympy

from gentino.algebra import QQ
from gentino.autloci import (DegenerateCurve, DihedralInvariants, dihedral_invariants, igusa_from_uv,
                             normalized_sextic, on_d4_line, on_d6_line, uv_from_moduli, uv_to_moduli)
from gentino.invariants import BinarySextic, igusa, moduli_point


class TestDihedralInvariants(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(11)

    def test_uv_of_normalized_sextic(self):
        uv = dihedral_invariants(3, -2)
        self.assertEqual((uv.u, uv.v), (-6, 19))
        self.assertEqual(igusa_from_uv(-6, 19).as_tuple(), (144, 5700, 207000, 1960000))

    def test_invariants_match_the_sextic(self):
        for _ in range(20):
            s1, s2 = QQ.random_element(self.rng, 9), QQ.random_element(self.rng, 9)
            uv = dihedral_invariants(s1, s2)
            if uv.is_degenerate():
                continue
            self.assertEqual(igusa(normalized_sextic(s1, s2)), igusa_from_uv(uv.u, uv.v))
            self.assertEqual(uv_to_moduli(uv), moduli_point(normalized_sextic(s1, s2)))

    def test_degenerate(self):
        # 27 - 18u - u^2 + 4v = 0 at u = 1, v = -2
        uv = DihedralInvariants(1, -2)
        self.assertTrue(uv.is_degenerate())
        with self.assertRaises(DegenerateCurve):
            uv_to_moduli(uv)

    def test_strata_lines(self):
        self.assertTrue(on_d4_line(4, 16))
        self.assertFalse(on_d4_line(4, 15))
        self.assertTrue(on_d6_line(3, 201))
        self.assertTrue(on_d6_line(gmpy2.mpq(17, 5), (gmpy2.mpq(17, 5) ** 2 - 110 * gmpy2.mpq(17, 5) + 1125) / 4))
        self.assertFalse(on_d6_line(3, 200))

    def test_fibre_contains_the_point(self):
        uv = DihedralInvariants(-6, 19)
        fibre = uv_from_moduli(uv_to_moduli(uv))
        self.assertIn(uv, fibre)
        self.assertEqual(len(fibre), 1)

    def test_fibre_of_the_d6_curve(self):
        # y^2 = x^6 - 1 has two (u, v) values: (0, 0) and the point where the D6 line meets it
        sextic = BinarySextic([-1, 0, 0, 0, 0, 0, 1])
        fibre = uv_from_moduli(moduli_point(sextic))
        print(f"[test_fibre_of_the_d6_curve] {fibre}")
        self.assertEqual(len(fibre), 2)
        self.assertIn(DihedralInvariants(0, 0), fibre)
        self.assertIn(DihedralInvariants(225, 6750), fibre)
        self.assertTrue(DihedralInvariants(225, 6750).on_d6_line())
        for uv in fibre:
            self.assertFalse(uv.is_algebraic)
            self.assertEqual(uv_to_moduli(uv), moduli_point(sextic))

    def test_fibre_of_the_d4_curve(self):
        # y^2 = x^5 + 2x^3 - x; its fibre is (-15 +- 8i, 94 +- 104i)
        fibre = uv_from_moduli(moduli_point(BinarySextic([0, -1, 0, 2, 0, 1])))
        print(f"[test_fibre_of_the_d4_curve] {fibre}")
        self.assertGreater(len(fibre), 1)
        for uv in fibre:
            self.assertTrue(uv.is_algebraic)
            self.assertTrue(uv.on_d4_line())
            self.assertFalse(uv.is_degenerate())
        self.assertIn(DihedralInvariants(sympy.Integer(-15) + 8 * sympy.I, 94 + 104 * sympy.I, ring=None), fibre)

    def test_generic_fibre_is_a_point(self):
        for _ in range(5):
            s1, s2 = QQ.random_element(self.rng, 9), QQ.random_element(self.rng, 9)
            uv = dihedral_invariants(s1, s2)
            if uv.is_degenerate() or uv.on_d4_line() or uv.on_d6_line() or uv.u == 0:
                continue
            fibre = uv_from_moduli(moduli_point(normalized_sextic(s1, s2)))
            self.assertEqual(fibre, [uv])

    def test_json(self):
        self.assertEqual(DihedralInvariants(gmpy2.mpq(1, 2), 3).to_json(), {"u": "1/2", "v": "3"})


if __name__ == '__main__':
    unittest.main()
