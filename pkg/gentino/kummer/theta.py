"""
Theta constants of a principally polarized abelian surface and the Rosenhain model they determine.

Everything is expressed in the squared constants a^2, b^2, c^2, d^2; the constants themselves are only
needed to write points in the standard coordinates of the Kummer quartic.
"""
from gentino.algebra import QQ, Ring, Poly
from gentino.jacobian import HyperellipticCurve


class DegenerateTheta(ValueError):
    """The theta constants do not give a smooth Kummer surface or a genus 2 Rosenhain curve."""
    pass


def hadamard(values):
    """(x+y+z+t, x+y-z-t, x-y+z-t, x-y-z+t)"""
    x, y, z, t = values
    return x + y + z + t, x + y - z - t, x - y + z - t, x - y - z + t


def _nonzero(ring: Ring, value, message):
    if ring.is_field:
        if ring.is_zero(value):
            raise DegenerateTheta(message)
    else:
        ring.inverse(value)
    return value


class ThetaConstants:
    """
    Theta constants a, b, c, d, held through their squares.

    The dual squares satisfy 4A^2 = a^2+b^2+c^2+d^2, 4B^2 = a^2+b^2-c^2-d^2, 4C^2 = a^2-b^2+c^2-d^2,
    4D^2 = a^2-b^2-c^2+d^2.
    """
    __slots__ = ('squares', 'roots', 'ring')

    def __init__(self, a, b, c, d, ring: Ring = QQ):
        self.ring = ring
        self.roots = tuple(ring(x) for x in (a, b, c, d))
        self.squares = tuple(x * x for x in self.roots)
        self._validate()

    @classmethod
    def from_squares(cls, squares, ring: Ring = QQ):
        """
        :param squares: (list) a^2, b^2, c^2, d^2
        :param ring: (Ring) the coefficient ring
        :return: (ThetaConstants) constants whose square roots are not known
        """
        theta = cls.__new__(cls)
        theta.ring = ring
        theta.roots = None
        theta.squares = tuple(ring(x) for x in squares)
        theta._validate()
        return theta

    @property
    def has_roots(self) -> bool:
        return self.roots is not None

    @property
    def fourth_powers(self):
        return tuple(s * s for s in self.squares)

    @property
    def dual_squares(self):
        """(A^2, B^2, C^2, D^2)"""
        quarter = self.ring.inverse(4)
        return tuple(h * quarter for h in hadamard(self.squares))

    def dual(self):
        """
        Constants whose squares are A^2, B^2, C^2, D^2. The Rosenhain curve of the dual constants is the curve
        whose Kummer surface is the quartic of these ones; applied twice it gives back the squares up to 1/4.

        :return: (ThetaConstants) constants known through their squares
        """
        return ThetaConstants.from_squares(self.dual_squares, self.ring)

    @property
    def denominators(self):
        """a^2 d^2 - b^2 c^2, a^2 c^2 - b^2 d^2, a^2 b^2 - c^2 d^2"""
        a2, b2, c2, d2 = self.squares
        return a2 * d2 - b2 * c2, a2 * c2 - b2 * d2, a2 * b2 - c2 * d2

    def to_json(self):
        if self.has_roots:
            return {"theta": [self.ring.to_json(x) for x in self.roots]}
        return {"theta_squares": [self.ring.to_json(x) for x in self.squares]}

    def _validate(self):
        for s in self.squares:
            _nonzero(self.ring, s, f"theta constants must be nonzero, got squares {self.squares}")
        for den in self.denominators:
            _nonzero(self.ring, den, f"theta squares {self.squares} make a Kummer coefficient denominator vanish")

    def __repr__(self):
        if self.has_roots:
            return f"ThetaConstants({', '.join(str(x) for x in self.roots)})"
        return f"ThetaConstants(squares={self.squares})"


def alpha_trace(theta: ThetaConstants):
    """T in alpha^2 + T alpha + 1 = 0, T = (a^4 + b^4 - c^4 - d^4) / (c^2 d^2 - a^2 b^2)."""
    a4, b4, c4, d4 = theta.fourth_powers
    return theta.ring.divide(a4 + b4 - c4 - d4, -theta.denominators[2])


def alpha_roots(theta: ThetaConstants):
    """
    Both roots of alpha^2 + T alpha + 1; their product is 1.

    :return: (tuple) the two roots
    :raises DegenerateTheta: when the discriminant has no square root in the ring
    """
    ring = theta.ring
    t = alpha_trace(theta)
    root = ring.sqrt(t * t - 4)
    if root is None:
        raise DegenerateTheta(f"alpha^2 + ({t}) alpha + 1 has no root in {ring}")
    half = ring.inverse(2)
    return (-t + root) * half, (-t - root) * half


def rosenhain_from_theta(theta: ThetaConstants, alpha=None):
    """
    Rosenhain parameters lambda = a^2 c^2/(b^2 d^2), mu = (c^2/d^2) alpha, nu = (a^2/b^2) alpha.

    :param theta: (ThetaConstants) the constants
    :param alpha: a root of alpha^2 + T alpha + 1; the first root of ``alpha_roots`` when omitted
    :return: (tuple) (lambda, mu, nu)
    :raises DegenerateTheta: when alpha is not a root or the parameters collide with 0, 1 or each other
    """
    ring = theta.ring
    if alpha is None:
        alpha = alpha_roots(theta)[0]
    alpha = ring(alpha)
    if not ring.is_zero(alpha * alpha + alpha_trace(theta) * alpha + 1):
        raise DegenerateTheta(f"{alpha} is not a root of the alpha quadratic")
    a2, b2, c2, d2 = theta.squares
    lam = ring.divide(a2 * c2, b2 * d2)
    mu = ring.divide(c2 * alpha, d2)
    nu = ring.divide(a2 * alpha, b2)
    values = (ring.zero, ring.one, lam, mu, nu)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            _nonzero(ring, values[i] - values[j], f"Rosenhain parameters {values[2:]} collide")
    return lam, mu, nu


def rosenhain_curve(lam, mu, nu, ring: Ring = QQ) -> HyperellipticCurve:
    """y^2 = x(x-1)(x-lambda)(x-mu)(x-nu)"""
    return HyperellipticCurve(Poly.from_roots([0, 1, lam, mu, nu], ring))


__all__ = ['DegenerateTheta', 'hadamard', 'ThetaConstants', 'alpha_trace', 'alpha_roots', 'rosenhain_from_theta',
           'rosenhain_curve']
