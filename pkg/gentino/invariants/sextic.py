import math

from gentino.algebra import QQ, Ring, Poly, discriminant


class NotGenusTwo(ValueError):
    """The sextic has a repeated root, so J10 vanishes."""
    pass


class BinarySextic:
    """
    Binary sextic f(X, Z) = a6 X^6 + a5 X^5 Z + ... + a0 Z^6.

    ``coeffs[i]`` is a_i, the coefficient of X^i Z^(6-i). A vanishing a6 means a root at infinity.
    """
    DEGREE = 6

    def __init__(self, coeffs, ring: Ring = QQ):
        """
        :param coeffs: (list) a_0 .. a_k with k <= 6, lowest degree first; missing entries are zero
        :param ring: (Ring) the coefficient ring
        """
        coeffs = list(coeffs)
        if len(coeffs) > self.DEGREE + 1:
            raise ValueError(f"a binary sextic has 7 coefficients, got {len(coeffs)}")
        coeffs += [0] * (self.DEGREE + 1 - len(coeffs))
        self.ring = ring
        self.coeffs = tuple(ring(c) for c in coeffs)
        if all(ring.is_zero(c) for c in self.coeffs):
            raise ValueError("the zero form is not a binary sextic")

    @classmethod
    def from_poly(cls, poly: Poly):
        return cls(list(poly.coeffs), poly.ring)

    @property
    def poly(self) -> Poly:
        """Dehomogenization f(x, 1)."""
        return Poly(self.coeffs, self.ring)

    def discriminant(self):
        """
        Discriminant of the form, treating a drop in degree as roots at infinity.
        Zero exactly when the form has a repeated linear factor.
        """
        f = self.poly
        if f.degree == 6:
            return discriminant(f)
        if f.degree == 5:
            return discriminant(f) * f.leading ** 2
        return self.ring.zero

    def is_squarefree(self) -> bool:
        return not self.ring.is_zero(self.discriminant())

    def scaled(self, t):
        return BinarySextic([c * t for c in self.coeffs], self.ring)

    def to_json(self):
        return [self.ring.to_json(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, obj, ring: Ring = QQ):
        return cls([ring.from_json(c) for c in obj], ring)

    def __eq__(self, other):
        return isinstance(other, BinarySextic) and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(str(c) for c in self.coeffs))

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"BinarySextic([{', '.join(str(c) for c in self.coeffs)}])"


def weighted_coefficients(f: BinarySextic):
    """
    Binomially weighted coefficients b_i = (n-i)! i! / n! * a_i.

    :param f: (BinarySextic) the form
    :return: (list) b_0 .. b_6
    """
    n = f.DEGREE
    return [f.ring.divide(f.coeffs[i], f.ring(math.comb(n, i))) for i in range(n + 1)]


def gl2_transform(f: BinarySextic, matrix) -> BinarySextic:
    """
    The form f o M, i.e. f(aX + bZ, cX + dZ) for M = [[a, b], [c, d]].

    :param f: (BinarySextic) the form
    :param matrix: (list<list>) invertible 2x2 matrix over the ring of f
    :return: (BinarySextic)
    """
    ring = f.ring
    (a, b), (c, d) = [[ring(x) for x in row] for row in matrix]
    if ring.is_zero(a * d - b * c):
        raise ValueError("singular transformation matrix")
    top = Poly([b, a], ring)
    bottom = Poly([d, c], ring)
    result = Poly.zero(ring)
    for i, coeff in enumerate(f.coeffs):
        if ring.is_zero(coeff):
            continue
        result = result + top ** i * bottom ** (f.DEGREE - i) * coeff
    return BinarySextic([result[i] for i in range(f.DEGREE + 1)], ring)


__all__ = ['NotGenusTwo', 'BinarySextic', 'weighted_coefficients', 'gl2_transform']
