"""
Passage between Mumford divisors on the Rosenhain curve and points of its Kummer surface.

A reduced divisor <u, v> is sent to the coordinate vector xi(D) = (u2, -u1, u0, v1^2 - K(u)), where
K(u) = f2 + f3 s + f4 s^2 + f5 s (s^2 - p) for u = x^2 - s x + p. A fixed linear map built from the
Rosenhain parameters turns xi(D) into the squared coordinates of a point of the dual quartic, and the
Hadamard step of ``KummerSurface.from_dual_squares`` carries those to the Kummer point of D. Both steps are
linear, so the inverse direction is one linear solve.
"""
from gentino.algebra import Poly, solve_linear
from gentino.jacobian import HyperellipticCurve, MumfordDivisor

from .surface import KummerPoint, KummerSurface


def rosenhain_rows(lam, mu, nu):
    """The linear map from divisor coordinates to the squared coordinates of the dual quartic."""
    return [
        [-mu * (lam + nu), mu, -(mu + 1), 1],
        [-lam * nu * (mu + 1), lam * nu, -(lam + nu), 1],
        [-nu * (lam + mu), nu, -(nu + 1), 1],
        [-lam * mu * (nu + 1), lam * mu, -(lam + mu), 1],
    ]


def _k_term(f: Poly, s, p):
    return f[2] + f[3] * s + f[4] * s * s + f[5] * s * (s * s - p)


def divisor_coordinates(divisor: MumfordDivisor, twist=None):
    """
    :param divisor: (MumfordDivisor) a reduced divisor on a Rosenhain curve, or on its twist y^2 = d f(x)
    :param twist: d when the divisor lies on the twist; the coordinates are then those of the curve itself
    :return: (list) xi(D); (0, 0, 0, 1) for the identity and (0, 1, x0, x0^2) for u = x - x0
    """
    ring = divisor.curve.ring
    u, v = divisor.u, divisor.v
    if u.degree == 0:
        return [ring.zero, ring.zero, ring.zero, ring.one]
    if u.degree == 1:
        x0 = -u[0]
        return [ring.zero, ring.one, x0, x0 * x0]
    s, p = -u[1], u[0]
    last = v[1] * v[1] - _k_term(divisor.curve.f, s, p)
    if twist is not None:
        last = ring.divide(last, twist)
    return [ring.one, s, p, last]


def jacobian_to_kummer(divisor: MumfordDivisor, surface: KummerSurface, twist=None) -> KummerPoint:
    """
    Kummer point of a divisor: D and -D share it and the identity goes to the base point.

    :param divisor: (MumfordDivisor) a divisor on ``surface.curve()``, or on its twist by ``twist``
    :param surface: (KummerSurface) the Kummer surface
    :param twist: d when the divisor lies on y^2 = d f(x)
    :return: (KummerPoint)
    """
    rows = rosenhain_rows(*surface.rosenhain())
    xi = divisor_coordinates(divisor, twist)
    return surface.from_dual_squares([sum((r * c for r, c in zip(row, xi)), surface.ring.zero) for row in rows])


class KummerPreimage:
    """
    The pair of opposite divisors over a Kummer point: u together with v1^2, v0 v1 and v0^2, which do not
    depend on the sign of v. Square roots are only needed by ``lifts``.
    """
    __slots__ = ('u', 'v1_squared', 'v0v1', 'v0_squared', 'curve')

    def __init__(self, u: Poly, v1_squared, v0v1, v0_squared, curve: HyperellipticCurve):
        self.u = u
        self.v1_squared = v1_squared
        self.v0v1 = v0v1
        self.v0_squared = v0_squared
        self.curve = curve

    @property
    def degree(self) -> int:
        return self.u.degree

    def ordinate_product(self):
        """y1 y2 for the two points of a degree 2 divisor: v1^2 u0 - v0 v1 u1 + v0^2."""
        return self.v1_squared * self.u[0] - self.v0v1 * self.u[1] + self.v0_squared

    def lifts(self):
        """
        The divisors D and -D over a prime field, or an empty list when v needs a square root
        that does not exist in the field.

        :return: (list<MumfordDivisor>)
        """
        ring = self.curve.ring
        if self.u.degree == 0:
            return [MumfordDivisor.identity(self.curve)]
        if self.u.degree == 1:
            v0 = ring.sqrt(self.v0_squared)
            if v0 is None:
                return []
            candidates = [Poly([v0], ring)]
        else:
            v1 = ring.sqrt(self.v1_squared)
            if v1 is None:
                return []
            if ring.is_zero(v1):
                v0 = ring.sqrt(self.v0_squared)
                if v0 is None:
                    return []
            else:
                v0 = ring.divide(self.v0v1, v1)
            candidates = [Poly([v0, v1], ring)]
        candidates.append(-candidates[0])
        found = []
        for v in candidates:
            divisor = MumfordDivisor(self.u, v, self.curve)
            if divisor not in found:
                found.append(divisor)
        return found

    def twisted_lift(self):
        """
        A divisor over this point on the twist y^2 = d f(x), found without square roots: v is sqrt(d) times
        a lift to the curve itself, with d = v1^2, or v0^2 when v1 vanishes. Points of the surface that come
        from the quadratic twist of the curve are covered as well.

        :return: (tuple) (MumfordDivisor, d)
        """
        ring = self.curve.ring
        if self.degree == 0:
            return MumfordDivisor.identity(self.curve), ring.one
        if self.degree == 2 and not ring.is_zero(self.v1_squared):
            twist = self.v1_squared
            v = Poly([self.v0v1, self.v1_squared], ring)
        elif not ring.is_zero(self.v0_squared):
            twist = self.v0_squared
            v = Poly([self.v0_squared], ring)
        else:
            return MumfordDivisor(self.u, Poly.zero(ring), self.curve), ring.one
        return MumfordDivisor(self.u, v, HyperellipticCurve(self.curve.f * twist)), twist

    def to_json(self):
        ring = self.curve.ring
        return {"u": [ring.to_json(c) for c in self.u.coeffs], "v1_squared": ring.to_json(self.v1_squared),
                "v0v1": ring.to_json(self.v0v1), "v0_squared": ring.to_json(self.v0_squared)}

    def __repr__(self):
        return f"KummerPreimage(u={self.u}, v1^2={self.v1_squared}, v0v1={self.v0v1}, v0^2={self.v0_squared})"


def kummer_to_mumford(point: KummerPoint, surface: KummerSurface, curve: HyperellipticCurve = None) -> KummerPreimage:
    """
    Divisors over a Kummer point, inverting ``jacobian_to_kummer``: the result describes the pair {D, -D}.

    Over Z/nZ the linear solve and the normalization divide by quantities that vanish modulo a factor of n
    exactly when the divisor degenerates there, which surfaces as ``FactorSignal``.

    :param point: (KummerPoint) a point on the surface
    :param surface: (KummerSurface) the surface
    :param curve: (HyperellipticCurve) the Rosenhain curve, rebuilt from the surface when omitted
    :return: (KummerPreimage)
    """
    ring = surface.ring
    curve = curve or surface.curve()
    f = curve.f
    rows = rosenhain_rows(*surface.rosenhain())
    xi = solve_linear(rows, list(surface.to_dual_squares(point)), ring)
    zero = ring.zero
    if ring.is_zero(xi[0]):
        if ring.is_zero(xi[1]):
            return KummerPreimage(Poly.one(ring), zero, zero, zero, curve)
        x0 = ring.divide(xi[2], xi[1])
        return KummerPreimage(Poly([-x0, 1], ring), zero, zero, f(x0), curve)
    inv = ring.inverse(xi[0])
    s, p, x4 = xi[1] * inv, xi[2] * inv, xi[3] * inv
    u = Poly([p, -s, 1], ring)
    v1_squared = x4 + _k_term(f, s, p)
    r = f % u
    v0_squared = r[0] + p * v1_squared
    v0v1 = (r[1] + u[1] * v1_squared) * ring.inverse(2)
    return KummerPreimage(u, v1_squared, v0v1, v0_squared, curve)


__all__ = ['rosenhain_rows', 'divisor_coordinates', 'jacobian_to_kummer', 'KummerPreimage', 'kummer_to_mumford']
