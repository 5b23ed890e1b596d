"""
Classical modular polynomials of level 2 and 3.
"""
from gentino.algebra import QQ, Ring, BivariatePoly, evaluate_symmetric

# coefficients of x^i y^j for i >= j; the mirrored terms are implied
_PHI_2 = {
    (3, 0): 1, (2, 2): -1, (2, 1): 1488, (2, 0): -162000, (1, 1): 40773375, (1, 0): 8748000000,
    (0, 0): -157464000000000,
}
_PHI_3 = {
    (4, 0): 1, (3, 3): -1, (3, 2): 2232, (3, 1): -1069956, (3, 0): 36864000, (2, 2): 2587918086,
    (2, 1): 8900222976000, (2, 0): 452984832000000, (1, 1): -770845966336000000,
    (1, 0): 1855425871872000000000,
}
_TABLES = {2: _PHI_2, 3: _PHI_3}


class ModularPolynomial:
    """
    Phi_n(x, y), vanishing at (j(E), j(E')) exactly when E and E' are related by a cyclic n-isogeny.
    """
    __slots__ = ('level', 'poly')

    def __init__(self, level: int, ring: Ring = QQ):
        if level not in _TABLES:
            raise ValueError(f"modular polynomial of level {level} is not available, expected one of {sorted(_TABLES)}")
        self.level = level
        terms = {}
        for (i, j), c in _TABLES[level].items():
            terms[(i, j)] = c
            terms[(j, i)] = c
        self.poly = BivariatePoly(terms, ring)

    @property
    def ring(self):
        return self.poly.ring

    def change_ring(self, ring: Ring):
        return ModularPolynomial(self.level, ring)

    def __call__(self, x, y):
        return self.poly(x, y)

    def evaluate_symmetric(self, s, p):
        """Phi_n(j1, j2) from s = j1 + j2 and p = j1 j2 alone."""
        return evaluate_symmetric(self.poly, s, p)

    def __repr__(self):
        return f"ModularPolynomial({self.level}, {self.ring})"


def modular_poly(n: int, ring: Ring = QQ) -> ModularPolynomial:
    """
    :param n: (int) the level, 2 or 3
    :param ring: (Ring) the coefficient ring
    :return: (ModularPolynomial)
    """
    return ModularPolynomial(n, ring)


__all__ = ['ModularPolynomial', 'modular_poly']
