"""
The Kummer quartic of a set of theta constants and its pseudo-group law.

Points are held in coordinates normalized by the theta constants, X = x/a, Y = y/b, Z = z/c, T = t/d, so the
base point (a, b, c, d) becomes (1, 1, 1, 1) and only the squared constants enter the arithmetic.
Doubling and differential addition are the squaring, Hadamard and scaling steps of the theta duplication
formulas; over Z/nZ every division goes through the ring and may raise ``FactorSignal``.

Half of a doubling, X -> H(a^2 X^2)/A^2, lands on the quartic of the dual constants (A, B, C, D), and the other
half comes back. The quartic of (a, b, c, d) is therefore the Kummer surface of the Rosenhain curve of the dual
constants, and it is that curve ``KummerSurface.curve`` returns.
"""
from gentino.algebra import Ring

from .theta import ThetaConstants, _nonzero, alpha_roots, hadamard, rosenhain_curve, rosenhain_from_theta


class KummerPoint:
    """
    A projective point (x : y : z : t) on a Kummer surface. Equality is projective: all 2x2 minors vanish.
    """
    __slots__ = ('coords', 'ring')
    __hash__ = None

    def __init__(self, x, y, z, t, ring: Ring):
        self.ring = ring
        self.coords = tuple(ring(c) for c in (x, y, z, t))
        if all(ring.is_zero(c) for c in self.coords):
            raise ValueError("(0 : 0 : 0 : 0) is not a projective point")

    @classmethod
    def of(cls, coords, ring: Ring):
        return cls(*coords, ring)

    def squares(self):
        return tuple(c * c for c in self.coords)

    def to_json(self):
        return [self.ring.to_json(c) for c in self.coords]

    def __eq__(self, other):
        if not isinstance(other, KummerPoint):
            return NotImplemented
        p, q = self.coords, other.coords
        return all(self.ring.is_zero(p[i] * q[j] - p[j] * q[i]) for i in range(4) for j in range(i + 1, 4))

    def __repr__(self):
        return f"KummerPoint({' : '.join(str(c) for c in self.coords)})"


class KummerSurface:
    """
    a^4 X^4 + b^4 Y^4 + c^4 Z^4 + d^4 T^4 + 2 E' XYZT - F (a^2 d^2 X^2 T^2 + b^2 c^2 Y^2 Z^2)
        - G (a^2 c^2 X^2 Z^2 + b^2 d^2 Y^2 T^2) - H (a^2 b^2 X^2 Y^2 + c^2 d^2 Z^2 T^2) = 0

    in normalized coordinates, where E' = abcd E and in standard coordinates (x, y, z, t) = (aX, bY, cZ, dT)
    the quartic reads x^4 + y^4 + z^4 + t^4 + 2E xyzt - F(x^2 t^2 + y^2 z^2) - G(x^2 z^2 + y^2 t^2)
    - H(x^2 y^2 + z^2 t^2) = 0.
    """

    def __init__(self, theta: ThetaConstants, alpha=None):
        """
        :param theta: (ThetaConstants) the constants of the quartic
        :param alpha: a root of the alpha quadratic of the dual constants, the first one when omitted
        """
        self.theta = theta
        self.ring = theta.ring
        self._alpha = alpha
        self._validate()
        ring = self.ring
        a2, b2, c2, d2 = theta.squares
        a4, b4, c4, d4 = theta.fourth_powers
        den1, den2, den3 = theta.denominators
        self.dual_squares = theta.dual_squares
        self._dual_inverses = tuple(ring.inverse(a) for a in self.dual_squares)
        self._square_inverses = tuple(ring.inverse(s) for s in theta.squares)
        self.F = ring.divide(a4 - b4 - c4 + d4, den1)
        self.G = ring.divide(a4 - b4 + c4 - d4, den2)
        self.H = ring.divide(a4 + b4 - c4 - d4, den3)
        h = hadamard(theta.squares)
        self.normalized_E = ring.divide(a2 * b2 * c2 * d2 * h[0] * h[1] * h[2] * h[3], den1 * den2 * den3)

    @property
    def E(self):
        """The xyzt coefficient in standard coordinates, abcd (4A^2)(4B^2)(4C^2)(4D^2) over the denominators."""
        if not self.theta.has_roots:
            raise ValueError("the standard quartic needs the theta constants, not only their squares")
        a, b, c, d = self.theta.roots
        return self.ring.divide(self.normalized_E, a * b * c * d)

    @property
    def coefficients(self):
        """(E, F, G, H) of the standard quartic."""
        return self.E, self.F, self.G, self.H

    @property
    def alpha(self):
        if self._alpha is None:
            self._alpha = alpha_roots(self.theta.dual())[0]
        return self._alpha

    def rosenhain(self):
        """(lambda, mu, nu) of the curve whose Kummer surface this is, from the dual constants."""
        return rosenhain_from_theta(self.theta.dual(), self.alpha)

    def curve(self):
        return rosenhain_curve(*self.rosenhain(), ring=self.ring)

    def point(self, x, y, z, t) -> KummerPoint:
        return KummerPoint(x, y, z, t, self.ring)

    def base_point(self) -> KummerPoint:
        """Image of the identity."""
        return self.point(1, 1, 1, 1)

    def quartic(self, point: KummerPoint):
        """Value of the normalized quartic at the point."""
        a2, b2, c2, d2 = self.theta.squares
        x, y, z, t = point.coords
        x2, y2, z2, t2 = point.squares()
        return (a2 * a2 * x2 * x2 + b2 * b2 * y2 * y2 + c2 * c2 * z2 * z2 + d2 * d2 * t2 * t2
                + self.normalized_E * x * y * z * t * 2
                - self.F * (a2 * d2 * x2 * t2 + b2 * c2 * y2 * z2)
                - self.G * (a2 * c2 * x2 * z2 + b2 * d2 * y2 * t2)
                - self.H * (a2 * b2 * x2 * y2 + c2 * d2 * z2 * t2))

    def standard_quartic(self, x, y, z, t):
        """Value of x^4 + y^4 + z^4 + t^4 + 2E xyzt - F(...) - G(...) - H(...) in standard coordinates."""
        E, F, G, H = self.coefficients
        return (x ** 4 + y ** 4 + z ** 4 + t ** 4 + E * x * y * z * t * 2 - F * (x * x * t * t + y * y * z * z)
                - G * (x * x * z * z + y * y * t * t) - H * (x * x * y * y + z * z * t * t))

    def contains(self, point: KummerPoint) -> bool:
        return self.ring.is_zero(self.quartic(point))

    def to_standard(self, point: KummerPoint):
        """(aX, bY, cZ, dT)"""
        if not self.theta.has_roots:
            raise ValueError("standard coordinates need the theta constants, not only their squares")
        return tuple(r * c for r, c in zip(self.theta.roots, point.coords))

    def from_standard(self, x, y, z, t) -> KummerPoint:
        if not self.theta.has_roots:
            raise ValueError("standard coordinates need the theta constants, not only their squares")
        ring = self.ring
        return self.point(*(ring.divide(c, r) for c, r in zip((x, y, z, t), self.theta.roots)))

    def from_dual_squares(self, values) -> KummerPoint:
        """
        The point H(A^2 s)/a^2 of this surface over a point of the dual quartic whose squared coordinates are s.

        :param values: (tuple) s, up to a common factor
        :return: (KummerPoint)
        """
        s = hadamard([v * w for v, w in zip(values, self.dual_squares)])
        return self.point(*(v * w for v, w in zip(s, self._square_inverses)))

    def to_dual_squares(self, point: KummerPoint):
        """Inverse of ``from_dual_squares``: H(a^2 X)/A^2, up to the factor 4."""
        s = hadamard([v * w for v, w in zip(point.coords, self.theta.squares)])
        return tuple(v * w for v, w in zip(s, self._dual_inverses))

    def double_squares(self, squares) -> KummerPoint:
        """
        Double of the point whose squared coordinates are given.

        :param squares: (tuple) (X^2, Y^2, Z^2, T^2), up to a common factor
        :return: (KummerPoint)
        """
        s = hadamard([v * w for v, w in zip(squares, self.theta.squares)])
        s = hadamard([v * v * a for v, a in zip(s, self._dual_inverses)])
        return self.point(*(v * w for v, w in zip(s, self._square_inverses)))

    def double(self, point: KummerPoint) -> KummerPoint:
        return self.double_squares(point.squares())

    def differential_add(self, p: KummerPoint, q: KummerPoint, difference: KummerPoint) -> KummerPoint:
        """
        p + q from p, q and p - q.

        :raises ValueError: over a field, when p - q has a zero coordinate; ``ladder`` takes another route then
        """
        return self._add_scaled(p, q, self._difference_scale(difference))

    def _difference_scale(self, difference: KummerPoint):
        ring = self.ring
        if ring.is_field and any(ring.is_zero(c) for c in difference.coords):
            raise ValueError(f"differential addition needs a difference with no zero coordinate, got {difference}")
        return tuple(ring.inverse(w * r) for w, r in zip(self.theta.squares, difference.coords))

    def _add_scaled(self, p: KummerPoint, q: KummerPoint, scale):
        sq = self.theta.squares
        sp = hadamard([v * w for v, w in zip(p.squares(), sq)])
        sq_ = hadamard([v * w for v, w in zip(q.squares(), sq)])
        s = hadamard([v * w * a for v, w, a in zip(sp, sq_, self._dual_inverses)])
        return self.point(*(v * c for v, c in zip(s, scale)))

    def two_torsion_points(self):
        """
        The sixteen points of order dividing 2, as sign changes and permutations of the base point
        in standard coordinates.

        :return: (list<KummerPoint>) the base point first
        """
        if not self.theta.has_roots:
            raise ValueError("two-torsion points need the theta constants, not only their squares")
        roots = self.theta.roots
        permutations = ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0))
        signs = ((1, 1, 1, 1), (1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1))
        return [self.from_standard(*(roots[j] * s for j, s in zip(perm, sign)))
                for perm in permutations for sign in signs]

    def to_json(self):
        obj = self.theta.to_json()
        obj.update({"F": self.ring.to_json(self.F), "G": self.ring.to_json(self.G), "H": self.ring.to_json(self.H)})
        if self.theta.has_roots:
            obj["E"] = self.ring.to_json(self.E)
        return obj

    def _validate(self):
        for value in self.theta.dual_squares:
            _nonzero(self.ring, value, f"theta squares {self.theta.squares} have a vanishing dual square")

    def __repr__(self):
        return f"KummerSurface({self.theta!r})"


def surface_from_theta(theta: ThetaConstants, alpha=None) -> KummerSurface:
    """
    :param theta: (ThetaConstants) theta constants, or only their squares
    :param alpha: one root of the alpha quadratic, when it is already known
    :return: (KummerSurface)
    :raises DegenerateTheta: over a field, when a dual square or a denominator vanishes
    :raises FactorSignal: over Z/nZ, when one of them is not a unit
    """
    return KummerSurface(theta, alpha=alpha)


__all__ = ['KummerPoint', 'KummerSurface', 'surface_from_theta']
