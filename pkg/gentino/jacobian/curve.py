"""
Hyperelliptic curves y^2 = f(x) of genus 2 and point counts over small prime fields.
"""
import random

from gentino.algebra import Ring, Poly, PrimeField, discriminant
from gentino.autloci import DegenerateCurve


class HyperellipticCurve:
    """
    y^2 = f(x) with f of degree 5 or 6 and squarefree.

    Over Z/nZ, squarefreeness is checked by inverting the discriminant, so a failure raises ``FactorSignal``.
    Divisor arithmetic needs the degree 5 model; ``odd_degree_model`` moves a rational root of a sextic to infinity.
    """

    def __init__(self, f: Poly):
        self.f = f
        self.ring = f.ring
        self._validate()

    @property
    def genus(self) -> int:
        return 2

    @property
    def degree(self) -> int:
        return self.f.degree

    @property
    def is_odd_degree(self) -> bool:
        return self.f.degree == 5

    def contains(self, x, y) -> bool:
        return self.ring.is_zero(y * y - self.f(x))

    def odd_degree_model(self, root):
        """
        Degree 5 model through x -> root + 1/x, y -> y/x^3, for a root of f.

        :param root: a root of f in the coefficient ring
        :return: (HyperellipticCurve)
        """
        if self.is_odd_degree:
            return self
        ring = self.ring
        root = ring(root)
        if not ring.is_zero(self.f(root)):
            raise ValueError(f"{root} is not a root of {self.f}")
        # x^6 f(root + 1/x) = sum_i f^(i)(root)/i! x^(6-i)
        shifted = self.f.compose(Poly([root, 1], ring))
        return HyperellipticCurve(Poly(list(reversed([shifted[i] for i in range(7)])), ring))

    def rational_root(self):
        """A root of f in a prime field found by search, or None."""
        if not isinstance(self.ring, PrimeField):
            raise ValueError("root search needs a prime field")
        for x in self.ring.elements():
            if self.ring.is_zero(self.f(x)):
                return x
        return None

    def random_point(self, rng: random.Random, attempts=1000):
        """
        A random affine point over a prime field.

        :return: (tuple) (x, y)
        """
        for _ in range(attempts):
            x = self.ring.random_element(rng)
            y = self.ring.sqrt(self.f(x))
            if y is not None:
                return x, (y if rng.random() < 0.5 else -y)
        raise ValueError(f"no point found on {self} after {attempts} attempts")

    def to_json(self):
        return {"f": [self.ring.to_json(c) for c in self.f.coeffs]}

    def _validate(self):
        if self.f.degree not in (5, 6):
            raise DegenerateCurve(f"genus 2 needs f of degree 5 or 6, got degree {self.f.degree}")
        disc = discriminant(self.f)
        if self.ring.is_field:
            if self.ring.is_zero(disc):
                raise DegenerateCurve(f"{self.f} has a repeated root")
        else:
            self.ring.inverse(disc)

    def __eq__(self, other):
        return isinstance(other, HyperellipticCurve) and self.f == other.f

    def __hash__(self):
        return hash(self.f)

    def __repr__(self):
        return f"HyperellipticCurve(y^2 = {self.f})"


class QuadraticExtension:
    """
    F_p(sqrt(delta)) for a non-square delta; elements are pairs (a, b) meaning a + b sqrt(delta).
    """

    def __init__(self, field: PrimeField):
        self.field = field
        delta = field(2)
        while field.is_square(delta):
            delta = delta + 1
        self.delta = delta

    def mul(self, x, y):
        return x[0] * y[0] + x[1] * y[1] * self.delta, x[0] * y[1] + x[1] * y[0]

    def add(self, x, y):
        return x[0] + y[0], x[1] + y[1]

    def power(self, x, e: int):
        result = (self.field.one, self.field.zero)
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def evaluate(self, poly: Poly, x):
        acc = (self.field.zero, self.field.zero)
        for c in reversed(poly.coeffs):
            acc = self.add(self.mul(acc, x), (c, self.field.zero))
        return acc

    def quadratic_character(self, x) -> int:
        """1, -1 or 0 according as x is a nonzero square, a non-square or zero."""
        if x[0] == 0 and x[1] == 0:
            return 0
        q = self.field.characteristic ** 2
        return 1 if self.power(x, (q - 1) // 2) == (1, 0) else -1

    def elements(self):
        for a in self.field.elements():
            for b in self.field.elements():
                yield a, b


def count_points(curve: HyperellipticCurve, extension_degree=1) -> int:
    """
    Number of points on the smooth model over F_p or F_p^2, points at infinity included.

    :param curve: (HyperellipticCurve) a curve over a prime field
    :param extension_degree: (int) 1 or 2
    :return: (int)
    """
    field = curve.ring
    if not isinstance(field, PrimeField):
        raise ValueError("point counting needs a prime field")
    lead = curve.f.leading
    if extension_degree == 1:
        total = 0
        for x in field.elements():
            y2 = curve.f(x)
            total += 1 if y2 == 0 else (2 if field.is_square(y2) else 0)
        at_infinity = 1 if curve.is_odd_degree else (2 if field.is_square(lead) else 0)
        return total + at_infinity
    if extension_degree == 2:
        ext = QuadraticExtension(field)
        total = sum(1 + ext.quadratic_character(ext.evaluate(curve.f, x)) for x in ext.elements())
        # every element of F_p is a square in F_p^2
        at_infinity = 1 if curve.is_odd_degree else 2
        return total + at_infinity
    raise ValueError(f"extension degree must be 1 or 2, got {extension_degree}")


def jacobian_order(curve: HyperellipticCurve) -> int:
    """
    Order of the Jacobian over F_p from the point counts over F_p and F_p^2.

    With N1, N2 the point counts, c1 = N1 - p - 1 and c2 = (N2 - p^2 - 1 + c1^2)/2 are the
    coefficients of the L-polynomial and the order is L(1) = 1 + c1 + c2 + p c1 + p^2.
    """
    p = curve.ring.characteristic
    n1 = count_points(curve, 1)
    n2 = count_points(curve, 2)
    c1 = n1 - p - 1
    c2 = (n2 - p * p - 1 + c1 * c1) // 2
    return 1 + c1 + c2 + p * c1 + p * p


__all__ = ['HyperellipticCurve', 'QuadraticExtension', 'count_points', 'jacobian_order']
