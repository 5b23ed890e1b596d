"""
Elliptic curves in long Weierstrass form over a ``Ring``, with affine chord-and-tangent arithmetic.

Over Z/nZ every division goes through ``IntegersModN.inverse``, so a slope whose denominator shares a
factor with n surfaces as ``FactorSignal``. The point at infinity is ``None``.
"""
from gentino.algebra import QQ, Ring

from gentino.autloci import DegenerateCurve


class EllipticCurve:
    """
    y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
    """
    __slots__ = ('a1', 'a2', 'a3', 'a4', 'a6', 'ring')

    def __init__(self, a1, a2, a3, a4, a6, ring: Ring = QQ):
        self.ring = ring
        self.a1, self.a2, self.a3, self.a4, self.a6 = (ring(c) for c in (a1, a2, a3, a4, a6))
        self._validate()

    @classmethod
    def short(cls, A, B, ring: Ring = QQ):
        """y^2 = x^3 + A x + B"""
        return cls(0, 0, 0, A, B, ring)

    @classmethod
    def from_cubic(cls, cubic, twist=1, ring: Ring = QQ):
        """
        The curve twist * y^2 = c3 x^3 + c2 x^2 + c1 x + c0, brought to Weierstrass form by
        (x, y) -> (c3 twist x, c3 twist^2 y).

        :param cubic: (list) c0, c1, c2, c3 with c3 a unit
        :param twist: the twisting factor, a unit
        :param ring: (Ring) the coefficient ring
        :return: (EllipticCurve)
        """
        c0, c1, c2, c3 = (ring(c) for c in cubic)
        k = ring(twist)
        return cls(0, c2 * k, 0, c1 * c3 * k * k, c0 * c3 * c3 * k ** 3, ring)

    @staticmethod
    def cubic_point(x, y, c3, twist=1):
        """Image of (x, y) on twist * y^2 = cubic(x) under the map used by ``from_cubic``."""
        return c3 * twist * x, c3 * twist * twist * y

    @property
    def b2(self):
        return self.a1 * self.a1 + self.a2 * 4

    @property
    def b4(self):
        return self.a1 * self.a3 + self.a4 * 2

    @property
    def b6(self):
        return self.a3 * self.a3 + self.a6 * 4

    @property
    def b8(self):
        return (self.a1 * self.a1 * self.a6 + self.a2 * self.a6 * 4 - self.a1 * self.a3 * self.a4
                + self.a2 * self.a3 * self.a3 - self.a4 * self.a4)

    @property
    def c4(self):
        return self.b2 * self.b2 - self.b4 * 24

    @property
    def discriminant(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - b4 ** 3 * 8 - b6 * b6 * 27 + b2 * b4 * b6 * 9

    @property
    def j_invariant(self):
        return self.ring.divide(self.c4 ** 3, self.discriminant)

    def is_on_curve(self, point) -> bool:
        if point is None:
            return True
        x, y = point
        lhs = y * y + self.a1 * x * y + self.a3 * y
        rhs = x ** 3 + self.a2 * x * x + self.a4 * x + self.a6
        return self.ring.is_zero(lhs - rhs)

    def negate(self, point):
        if point is None:
            return None
        x, y = point
        return x, -y - self.a1 * x - self.a3

    def add(self, p, q):
        """
        :param p: (tuple | None) affine point or None for infinity
        :param q: (tuple | None) affine point or None for infinity
        :return: (tuple | None) p + q
        """
        if p is None:
            return q
        if q is None:
            return p
        x1, y1 = p
        x2, y2 = q
        ring = self.ring
        if ring.is_zero(x1 - x2):
            if ring.is_zero(y1 + y2 + self.a1 * x2 + self.a3):
                return None
            slope = ring.divide(x1 * x1 * 3 + self.a2 * x1 * 2 + self.a4 - self.a1 * y1,
                                y1 * 2 + self.a1 * x1 + self.a3)
        else:
            slope = ring.divide(y2 - y1, x2 - x1)
        nu = y1 - slope * x1
        x3 = slope * slope + self.a1 * slope - self.a2 - x1 - x2
        y3 = -(slope + self.a1) * x3 - nu - self.a3
        return x3, y3

    def double(self, p):
        return self.add(p, p)

    def scalar_mul(self, k: int, p):
        """[k]p by double-and-add; negative k multiplies the negated point."""
        if k < 0:
            return self.scalar_mul(-k, self.negate(p))
        result, base = None, p
        while k:
            if k & 1:
                result = self.add(result, base)
            k >>= 1
            if k:
                base = self.double(base)
        return result

    def to_json(self):
        return {name: self.ring.to_json(getattr(self, name)) for name in ('a1', 'a2', 'a3', 'a4', 'a6')}

    def _validate(self):
        disc = self.discriminant
        if self.ring.is_field:
            if self.ring.is_zero(disc):
                raise DegenerateCurve(f"singular Weierstrass equation {self}")
        else:
            self.ring.inverse(disc)

    def __eq__(self, other):
        return isinstance(other, EllipticCurve) and all(
            getattr(self, n) == getattr(other, n) for n in ('a1', 'a2', 'a3', 'a4', 'a6'))

    def __hash__(self):
        return hash(tuple(str(getattr(self, n)) for n in ('a1', 'a2', 'a3', 'a4', 'a6')))

    def __repr__(self):
        return f"EllipticCurve([{self.a1}, {self.a2}, {self.a3}, {self.a4}, {self.a6}], {self.ring})"


def cubic_j_invariant(cubic, ring: Ring = QQ):
    """
    j-invariant of any twist of y^2 = c3 x^3 + c2 x^2 + c1 x + c0.

    :param cubic: (list) c0, c1, c2, c3
    :return: ring element
    """
    c0, c1, c2, c3 = (ring(c) for c in cubic)
    a, b, c = ring.divide(c2, c3), ring.divide(c1, c3), ring.divide(c0, c3)
    num = (a * a - b * 3) ** 3 * 256
    den = a * a * b * b - b ** 3 * 4 - a ** 3 * c * 4 + a * b * c * 18 - c * c * 27
    return ring.divide(num, den)


__all__ = ['EllipticCurve', 'cubic_j_invariant']
