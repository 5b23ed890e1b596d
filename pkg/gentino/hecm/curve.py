"""
Genus 2 curves over Z/nZ whose Jacobians split as a product of two elliptic curves.

A unit r gives alpha = (1 - 2r)/(1 - r^2) and Z = (alpha^2 - alpha + 1)/alpha. The theta squares (1, Z, 1, 1)
then have Rosenhain parameters lambda = 1/Z, mu = alpha, nu = alpha/Z; the Kummer surface of that curve is the
quartic of their dual constants. q = alpha(alpha - 1)/(1 - r alpha) is a square root of mu(mu - nu) with no square
root extraction modulo n. The Moebius map x -> (x - mu - q)/(x - mu + q) moves the branch
points to +-1, +-x2, +-x3 and the curve covers

    E1: kappa Y^2 = (X - 1)(X - x2^2)(X - x3^2)       through X = M(x)^2,
    E2: kappa Y^2 = (1 - W)(1 - x2^2 W)(1 - x3^2 W)   through W = M(x)^-2.
"""
import random

from gentino.algebra import FactorSignal, IntegersModN, Poly
from gentino.kummer import KummerSurface, ThetaConstants, rosenhain_curve
from gentino.subcovers import EllipticCurve


class DecomposableCurve:
    """
    y^2 = x(x-1)(x-lambda)(x-mu)(x-nu) over Z/nZ together with its two elliptic quotients.
    """

    def __init__(self, r, ring: IntegersModN):
        """
        :param r: the family parameter, a residue
        :param ring: (IntegersModN) Z/nZ
        :raises FactorSignal: when a quantity that has to be a unit is not
        """
        self.ring = ring
        self.r = r = ring(r)
        self.alpha = alpha = ring.divide(1 - 2 * r, 1 - r * r)
        z = ring.divide(alpha * alpha - alpha + 1, alpha)
        self.theta = ThetaConstants.from_squares((1, z, 1, 1), ring)
        self.surface = KummerSurface(self.theta.dual(), alpha=alpha)
        self.lam, self.mu, self.nu = self.surface.rosenhain()
        self.q = ring.divide(alpha * (alpha - 1), 1 - r * alpha)
        self.r1 = self.mu + self.q
        self.r2 = self.mu - self.q
        self.x2 = self.mobius(ring.zero)
        self.x3 = self.mobius(ring.one)
        self.curve = rosenhain_curve(self.lam, self.mu, self.nu, ring)
        self.kappa = ring.inverse(self.curve.f(self.r2))
        x2s, x3s = self.x2 * self.x2, self.x3 * self.x3
        # ascending coefficients
        self.first_cubic = (-x2s * x3s, x2s + x3s + x2s * x3s, -(1 + x2s + x3s), ring.one)
        self.second_cubic = (ring.one, -(1 + x2s + x3s), x2s + x3s + x2s * x3s, -x2s * x3s)
        self.first_elliptic = EllipticCurve.from_cubic(self.first_cubic, self.kappa, ring)
        self.second_elliptic = EllipticCurve.from_cubic(self.second_cubic, self.kappa, ring)

    @property
    def n(self) -> int:
        return self.ring.characteristic

    def mobius(self, x):
        """M(x) = (x - mu - q)/(x - mu + q)"""
        return self.ring.divide(x - self.r1, x - self.r2)

    def split_model_point(self, x, y):
        """
        Image of (x, y) on kappa Y^2 = (X^2 - 1)(X^2 - x2^2)(X^2 - x3^2), the model with the
        involution X -> -X.
        """
        scale = (-2 * self.q) ** 3
        return self.mobius(x), self.ring.divide(y * scale, (x - self.r2) ** 3)

    def first_map(self, x, y):
        """(x, y) -> (M(x)^2, y (-2q)^3/(x - mu + q)^3) onto E1."""
        m = self.mobius(x)
        return m * m, self.ring.divide(y * (-2 * self.q) ** 3, (x - self.r2) ** 3)

    def second_map(self, x, y):
        """(x, y) -> (M(x)^-2, y (-2q)^3/(x - mu - q)^3) onto E2."""
        m = self.mobius(x)
        return self.ring.inverse(m * m), self.ring.divide(y * (-2 * self.q) ** 3, (x - self.r1) ** 3)

    def cubic_value(self, index: int, x):
        cubic = self.first_cubic if index == 1 else self.second_cubic
        return Poly(cubic, self.ring)(x)

    def to_json(self):
        ring = self.ring
        return {"n": str(self.n), "r": ring.to_json(self.r), "lambda": ring.to_json(self.lam),
                "mu": ring.to_json(self.mu), "nu": ring.to_json(self.nu), "q": ring.to_json(self.q),
                "kappa": ring.to_json(self.kappa)}

    def __repr__(self):
        return f"DecomposableCurve(r={self.r}, n={self.n})"


def generate_curve(n, rng: random.Random, attempts=100) -> DecomposableCurve:
    """
    A random decomposable curve over Z/nZ.

    :param n: (int) the number to factor
    :param rng: (random.Random) the random source
    :param attempts: (int) parameters tried before giving up
    :return: (DecomposableCurve)
    :raises FactorSignal: with a proper factor of n found while building the curve
    """
    ring = IntegersModN(n)
    for _ in range(attempts):
        try:
            return DecomposableCurve(ring.random_element(rng), ring)
        except FactorSignal as signal:
            if signal.is_proper:
                raise
    raise ValueError(f"no decomposable curve found modulo {n} after {attempts} attempts")


__all__ = ['DecomposableCurve', 'generate_curve']
