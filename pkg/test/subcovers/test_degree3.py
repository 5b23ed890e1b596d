import random
import unittest

from gentino.algebra import QQ
from gentino.autloci import DegenerateCurve
from gentino.invariants import BinarySextic, moduli_point
from gentino.subcovers import (Deg3Case, Deg3Family, curve_from_ab, deg3_both_degenerate, deg3_degenerate_relation,
                               deg3_isomorphic_equations, deg3_isomorphic_subcovers, deg3_locus_test, j_pair_deg3,
                               l3_polynomial, subcover_deg3)


def random_families(rng, count):
    families = []
    while len(families) < count:
        family = Deg3Family(QQ.random_element(rng, 12), QQ.random_element(rng, 12))
        if not family.is_degenerate() and family.b != 0:
            families.append(family)
    return families


class TestDeg3Family(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(17)

    def test_cases(self):
        self.assertIs(Deg3Family(2, 0).case, Deg3Case.B_ZERO)
        self.assertIs(Deg3Family(QQ("5/2"), 1).case, Deg3Case.W_ZERO)
        self.assertIs(Deg3Family(1, 2).case, Deg3Case.GENERAL)

    def test_degenerate(self):
        self.assertTrue(Deg3Family(1, 3).is_degenerate())
        with self.assertRaises(DegenerateCurve):
            curve_from_ab(Deg3Family(1, 3))

    def test_maps_onto_the_subcovers(self):
        families = random_families(self.rng, 8) + [Deg3Family(2, 0), Deg3Family(QQ("5/2"), 1)]
        for family in families:
            for which in (1, 2):
                subcover = subcover_deg3(family, which)
                self.assertTrue(subcover.map_holds(), (family, which))

    def test_j_invariants_along_the_family(self):
        for family in random_families(self.rng, 8) + [Deg3Family(QQ("5/2"), 1)]:
            j1, j2 = j_pair_deg3(family.u, family.v)
            found = [subcover_deg3(family, which).j_invariant for which in (1, 2)]
            self.assertEqual(sorted(found), sorted([j1, j2]), family)

    def test_subcover_index(self):
        with self.assertRaises(ValueError):
            subcover_deg3(Deg3Family(1, 2), 3)


class TestDeg3Locus(unittest.TestCase):

    def test_locus_polynomial(self):
        self.assertEqual(l3_polynomial().weighted_degree, 80)
        self.assertEqual(len(l3_polynomial()), 318)

    def test_worked_sextic_is_on_the_locus(self):
        self.assertTrue(deg3_locus_test(moduli_point(BinarySextic([1, 3, 5, 10, 8, 9, 4]))))
        self.assertFalse(deg3_locus_test(moduli_point(BinarySextic([0, -1, 0, 2, 0, 0, 1]))))

    def test_family_is_on_the_locus(self):
        for family in random_families(random.Random(23), 5):
            self.assertTrue(deg3_locus_test(moduli_point(curve_from_ab(family))), family)

    def test_isomorphic_subcovers(self):
        first, _ = deg3_isomorphic_equations(20, 16)
        self.assertEqual(first, 0)
        self.assertTrue(deg3_isomorphic_subcovers(20, 16))

    def test_undefined_j_invariants(self):
        for u, v in ((1, 0), (1, 27)):
            with self.assertRaises(DegenerateCurve):
                j_pair_deg3(u, v)

    def test_degenerate_relation(self):
        self.assertEqual(deg3_degenerate_relation(1728, 1728), 0)
        self.assertTrue(deg3_both_degenerate(1728, 1728))
        self.assertFalse(deg3_both_degenerate(0, 1728))


if __name__ == '__main__':
    unittest.main()
