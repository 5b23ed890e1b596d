"""
Genus 2 curves with a degree 3 elliptic subcover, in the family

    Y^2 = (4X^3 + b^2 X^2 + 2bX + 1)(X^3 + aX^2 + bX + 1)

whose invariants along the family are u = ab and v = b^3.
"""
import functools

from gentino.algebra import QQ, Ring, Poly, solve_linear
from gentino.autloci import DegenerateCurve, LocusPolynomial
from gentino.invariants import BinarySextic, ModuliPoint, invariants_from_moduli
from gentino.utils.io_utils import package_data_path

from .elliptic import EllipticCurve, cubic_j_invariant
from .type import Deg3Case


class Deg3Family:
    """
    Parameters (a, b) of the family; the curve is smooth when (4a^3 + 27 - 18ab - a^2 b^2 + 4b^3)(b^3 - 27) != 0.
    """
    __slots__ = ('a', 'b', 'ring')

    def __init__(self, a, b, ring: Ring = QQ):
        self.ring = ring
        self.a, self.b = ring(a), ring(b)

    @property
    def u(self):
        return self.a * self.b

    @property
    def v(self):
        return self.b ** 3

    @property
    def resultant(self):
        """R = 4a^3 + 27 - 18ab - a^2 b^2 + 4b^3, the resultant of the two cubic factors up to sign."""
        a, b = self.a, self.b
        return 4 * a ** 3 + 27 - 18 * a * b - a * a * b * b + 4 * b ** 3

    @property
    def w(self):
        """b^3 - 4ab + 9, selecting the shape of the map to the second subcover."""
        return self.b ** 3 - 4 * self.a * self.b + 9

    @property
    def case(self) -> Deg3Case:
        if self.ring.is_zero(self.b):
            return Deg3Case.B_ZERO
        if self.ring.is_zero(self.w):
            return Deg3Case.W_ZERO
        return Deg3Case.GENERAL

    @property
    def first_cubic(self) -> Poly:
        """F = X^3 + aX^2 + bX + 1"""
        return Poly([1, self.b, self.a, 1], self.ring)

    @property
    def second_cubic(self) -> Poly:
        """G = 4X^3 + b^2 X^2 + 2bX + 1"""
        return Poly([1, 2 * self.b, self.b * self.b, 4], self.ring)

    def is_degenerate(self) -> bool:
        return self.ring.is_zero(self.resultant * (self.b ** 3 - 27))

    def to_json(self):
        return {"a": self.ring.to_json(self.a), "b": self.ring.to_json(self.b)}

    def __repr__(self):
        return f"Deg3Family(a={self.a}, b={self.b})"


class Deg3Subcover:
    """
    A degree 3 map from y^2 = f(x) onto the elliptic curve twist * V^2 = cubic(U), given by
    U = u_num/u_den and V = y * v_num/v_den.
    """

    def __init__(self, index: int, f: Poly, cubic, twist, u_num: Poly, u_den: Poly, v_num: Poly, v_den: Poly):
        self.index = index
        self.f = f
        self.ring = f.ring
        self.cubic = tuple(self.ring(c) for c in cubic)
        self.twist = self.ring(twist)
        self.u_num, self.u_den = u_num, u_den
        self.v_num, self.v_den = v_num, v_den

    @property
    def curve(self) -> EllipticCurve:
        return EllipticCurve.from_cubic(self.cubic, self.twist, self.ring)

    @property
    def j_invariant(self):
        return cubic_j_invariant(self.cubic, self.ring)

    def identity_residual(self) -> Poly:
        """
        twist * f * v_num^2 * u_den^3 - cubic(u_num, u_den) * v_den^2, where cubic(.,.) is the homogenized cubic;
        zero exactly when the substitution satisfies the curve equation modulo y^2 - f.
        """
        c0, c1, c2, c3 = self.cubic
        n, d = self.u_num, self.u_den
        homogenized = n ** 3 * c3 + n * n * d * c2 + n * d * d * c1 + d ** 3 * c0
        return self.f * self.v_num * self.v_num * d ** 3 * self.twist - homogenized * self.v_den * self.v_den

    def map_holds(self) -> bool:
        return self.identity_residual().is_zero()

    def __repr__(self):
        return f"Deg3Subcover(E{self.index}, cubic={[str(c) for c in self.cubic]}, twist={self.twist})"


def curve_from_ab(family: Deg3Family) -> BinarySextic:
    """
    :param family: (Deg3Family) nondegenerate parameters
    :return: (BinarySextic) the product of the two cubic factors
    :raises DegenerateCurve: when the product has a repeated root
    """
    if family.is_degenerate():
        raise DegenerateCurve(f"{family} gives a singular curve")
    return BinarySextic.from_poly(family.first_cubic * family.second_cubic)


def _fit_cubic(target: Poly, num: Poly, den: Poly, ring: Ring):
    """
    Coefficients (e0, e1, e2, e3) with target = e3 num^3 + e2 num^2 den + e1 num den^2 + e0 den^3.
    """
    basis = [den ** 3, num * den * den, num * num * den, num ** 3]
    top = max(p.degree for p in basis + [target])
    matrix = [[p[d] for p in basis] for d in range(top + 1)]
    rhs = [target[d] for d in range(top + 1)]
    return solve_linear(matrix, rhs, ring)


def _first_subcover(family: Deg3Family, f: Poly) -> Deg3Subcover:
    ring = family.ring
    a, b = family.a, family.b
    r = family.resultant
    F = family.first_cubic
    cubic = [ring.divide(ring(-4), r), ring.divide(12 * a - b * b, r),
             ring.divide(2 * (a * b * b - 6 * a * a + 9 * b), r), 1]
    return Deg3Subcover(1, f, cubic, ring.divide(ring(-1), r), u_num=Poly([0, 0, 1], ring), u_den=F,
                        v_num=Poly([-2, -b, 0, 1], ring), v_den=F * F)


def _second_subcover(family: Deg3Family, f: Poly) -> Deg3Subcover:
    ring = family.ring
    a, b = family.a, family.b
    G = family.second_cubic
    case = family.case
    if case is Deg3Case.B_ZERO:
        num = Poly([ring.divide(-a, ring(3)), 1], ring)
        v_num = Poly([-1, 0, -4 * a, 8], ring)
        twist = ring.one
    elif case is Deg3Case.W_ZERO:
        num = Poly([3, b], ring) ** 2 * ring.inverse(b * b)
        v_num = Poly([b, b * b, 9, b], ring)
        twist = ring.divide(ring(64), b)
    else:
        s = ring.divide(ring(-3), b)
        t = ring.divide(3 * a - b * b, family.w)
        num = Poly([-s, 1], ring) ** 2 * Poly([-t, 1], ring)
        v_num = Poly([1, b, 4 * a - b * b, 4 * a * b - 8 - b ** 3], ring)
        twist = 27 - b ** 3
    cubic = _fit_cubic(family.first_cubic * v_num * v_num * twist, num, G, ring)
    return Deg3Subcover(2, f, cubic, twist, u_num=num, u_den=G, v_num=v_num, v_den=G * G)


def subcover_deg3(family: Deg3Family, which: int) -> Deg3Subcover:
    """
    One of the two degree 3 elliptic subcovers of ``curve_from_ab(family)``.

    :param family: (Deg3Family) nondegenerate parameters
    :param which: (int) 1 or 2
    :return: (Deg3Subcover) the elliptic curve and the map onto it
    """
    f = curve_from_ab(family).poly
    if which == 1:
        return _first_subcover(family, f)
    if which == 2:
        return _second_subcover(family, f)
    raise ValueError(f"subcover index must be 1 or 2, got {which}")


def _deg3_denominator(u, v):
    return 4 * v * v + 27 * v + 4 * u ** 3 - 18 * v * u - v * u * u


def j_pair_deg3(u, v, ring: Ring = QQ):
    """
    j-invariants of the two degree 3 subcovers as functions of u = ab, v = b^3.

    :return: (tuple) (j1, j2)
    :raises DegenerateCurve: when v is 0 or 27, or the common denominator vanishes
    """
    u, v = ring(u), ring(v)
    den = _deg3_denominator(u, v)
    if ring.is_zero(v) or ring.is_zero(v - 27) or ring.is_zero(den):
        raise DegenerateCurve(f"j-invariants are undefined at (u, v) = ({u}, {v})")
    inner = v * u * u + 216 * u * u - 126 * v * u - 972 * u + 12 * v * v + 405 * v
    j1 = ring.divide(16 * v * inner ** 3, (v - 27) ** 3 * den * den)
    j2 = ring.divide((u * u - 3 * v) ** 3 * -256, v * den)
    return j1, j2


def deg3_isomorphic_equations(u, v, ring: Ring = QQ):
    """
    The two polynomials in (u, v) whose vanishing makes the degree 3 subcovers isomorphic.
    """
    u, v = ring(u), ring(v)
    first = (8 * v ** 3 + 27 * v * v - 54 * u * v * v - u * u * v * v + 108 * u * u * v + 4 * u ** 3 * v
             - 108 * u ** 3)
    second = (324 * v ** 4 * u ** 2 - 5832 * v ** 4 * u + 37908 * v ** 4 - 314928 * v ** 3 * u
              - 81 * v ** 3 * u ** 4 + 255879 * v ** 3 + 30618 * v ** 3 * u ** 2 - 864 * v ** 3 * u ** 3
              - 6377292 * u * v ** 2 + 8503056 * v ** 2 - 324 * u ** 5 * v ** 2 + 2125764 * u ** 2 * v ** 2
              - 215784 * u ** 3 * v ** 2 + 14580 * u ** 4 * v ** 2 + 16 * u ** 6 * v ** 2 + 78732 * u ** 3 * v
              + 8748 * u ** 5 * v - 864 * u ** 6 * v - 157464 * u ** 4 * v + 11664 * u ** 6)
    return first, second


def deg3_isomorphic_subcovers(u, v, ring: Ring = QQ) -> bool:
    """Whether the two degree 3 subcovers have equal j-invariants."""
    j1, j2 = j_pair_deg3(u, v, ring)
    return j1 == j2


def deg3_degenerate_relation(j1, j2, ring: Ring = QQ):
    """729 j1 j2 - (j2 - 432)^3, zero when the cover onto the second subcover has a single branch point."""
    j1, j2 = ring(j1), ring(j2)
    return 729 * j1 * j2 - (j2 - 432) ** 3


def deg3_both_degenerate(j1, j2, ring: Ring = QQ) -> bool:
    """Whether both covers are degenerate: the relation holds in both orders."""
    return ring.is_zero(deg3_degenerate_relation(j1, j2, ring)) and \
        ring.is_zero(deg3_degenerate_relation(j2, j1, ring))


@functools.lru_cache(maxsize=None)
def l3_polynomial() -> LocusPolynomial:
    """Curves with a degree 3 elliptic subcover: a relation of weighted degree 80 among J2, J4, J6, J10."""
    return LocusPolynomial.from_csv('L3', package_data_path(__file__, 'data', 'l3_locus.csv'))


def deg3_locus_test(p: ModuliPoint) -> bool:
    """
    Whether the curve with moduli point ``p`` has a degree 3 elliptic subcover.

    :param p: (ModuliPoint) the moduli point
    :return: (bool)
    """
    return l3_polynomial().contains(invariants_from_moduli(p))


__all__ = ['Deg3Family', 'Deg3Subcover', 'curve_from_ab', 'subcover_deg3', 'j_pair_deg3',
           'deg3_isomorphic_equations', 'deg3_isomorphic_subcovers', 'deg3_degenerate_relation',
           'deg3_both_degenerate', 'l3_polynomial', 'deg3_locus_test']
