"""
Dihedral invariants u = s1 s2, v = s1^3 + s2^3 of the normalized sextic X^6 - s1 X^4 + s2 X^2 - 1,
which carries every genus 2 curve with an elliptic involution.
"""
import gmpy2
import sympy

from gentino.algebra import QQ, Ring
from gentino.invariants import BinarySextic, IgusaInvariants, ModuliPoint, invariants_from_moduli, moduli_point_of


class DegenerateCurve(ValueError):
    """The parameters give a singular (non squarefree) model."""
    pass


class DihedralInvariants:
    """
    A point (u, v) of the locus of curves with an elliptic involution.

    Values are ring elements, or sympy algebraic numbers for fibre points that are not rational.
    """
    __slots__ = ('u', 'v', 'ring')

    def __init__(self, u, v, ring: Ring = QQ):
        self.ring = ring
        if ring is None:
            self.u, self.v = sympy.sympify(u), sympy.sympify(v)
        else:
            self.u, self.v = ring(u), ring(v)

    @property
    def is_algebraic(self) -> bool:
        """True for points with irrational coordinates, held as sympy numbers."""
        return self.ring is None

    def squarefree_value(self):
        """27 - 18u - u^2 + 4v, nonzero exactly when the normalized sextic is squarefree."""
        return 27 - 18 * self.u - self.u ** 2 + 4 * self.v

    def _is_zero(self, value):
        if self.ring is None:
            return sympy.expand(value) == 0
        return self.ring.is_zero(value)

    def is_degenerate(self) -> bool:
        return self._is_zero(self.squarefree_value())

    def on_d4_line(self) -> bool:
        """v^2 - 4u^3 = 0"""
        return self._is_zero(self.v ** 2 - 4 * self.u ** 3)

    def on_d6_line(self) -> bool:
        """4v - u^2 + 110u - 1125 = 0"""
        return self._is_zero(4 * self.v - self.u ** 2 + 110 * self.u - 1125)

    def to_json(self):
        if self.ring is None:
            return {"u": str(self.u), "v": str(self.v)}
        return {"u": self.ring.to_json(self.u), "v": self.ring.to_json(self.v)}

    def __eq__(self, other):
        if not isinstance(other, DihedralInvariants):
            return NotImplemented
        if self.ring is None or other.ring is None:
            return sympy.expand(sympy.sympify(self.u) - sympy.sympify(other.u)) == 0 and \
                sympy.expand(sympy.sympify(self.v) - sympy.sympify(other.v)) == 0
        return self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((str(self.u), str(self.v)))

    def __repr__(self):
        return f"DihedralInvariants(u={self.u}, v={self.v})"


def normalized_sextic(s1, s2, ring: Ring = QQ) -> BinarySextic:
    """X^6 - s1 X^4 + s2 X^2 - 1"""
    return BinarySextic([-1, 0, ring(s2), 0, -ring(s1), 0, 1], ring)


def dihedral_invariants(s1, s2, ring: Ring = QQ) -> DihedralInvariants:
    s1, s2 = ring(s1), ring(s2)
    return DihedralInvariants(s1 * s2, s1 ** 3 + s2 ** 3, ring)


def igusa_from_uv(u, v, ring: Ring = QQ) -> IgusaInvariants:
    """
    Invariants of X^6 - s1 X^4 + s2 X^2 - 1 written in u = s1 s2, v = s1^3 + s2^3.
    """
    u, v = ring(u), ring(v)
    u2 = u * u
    u3 = u2 * u
    j2 = 240 + 16 * u
    j4 = 1620 - 504 * u + 4 * u2 + 48 * v
    j6 = 119880 - 20664 * u - 424 * u2 + 24 * u3 + 96 * v + 160 * u * v
    j10 = (46656 - 62208 * u + 17280 * u2 + 2304 * u3 + 64 * u2 * u2 + 13824 * v - 9216 * u * v
           - 512 * u2 * v + 1024 * v * v)
    return IgusaInvariants(j2, j4, j6, j10, ring)


def on_d4_line(u, v, ring: Ring = QQ) -> bool:
    """Whether (u, v) lies on the D4 stratum v^2 = 4u^3."""
    return DihedralInvariants(u, v, ring).on_d4_line()


def on_d6_line(u, v, ring: Ring = QQ) -> bool:
    """Whether (u, v) lies on the D6 stratum 4v = u^2 - 110u + 1125."""
    return DihedralInvariants(u, v, ring).on_d6_line()


def uv_to_moduli(uv: DihedralInvariants) -> ModuliPoint:
    """
    Moduli point of the curve with dihedral invariants (u, v); the value depends on (u, v) only,
    so no cube roots of the s-values are taken.

    :param uv: (DihedralInvariants) a rational point
    :return: (ModuliPoint)
    """
    if uv.is_algebraic:
        raise ValueError("uv_to_moduli works over the coefficient ring; algebraic points are not supported")
    if uv.is_degenerate():
        raise DegenerateCurve(f"(u, v) = ({uv.u}, {uv.v}) gives a singular sextic")
    return moduli_point_of(igusa_from_uv(uv.u, uv.v, uv.ring))


def _sym(x):
    x = gmpy2.mpq(x)
    return sympy.Rational(int(x.numerator), int(x.denominator))


def _family_invariants(u, v):
    return (
        240 + 16 * u,
        1620 - 504 * u + 4 * u ** 2 + 48 * v,
        119880 - 20664 * u - 424 * u ** 2 + 24 * u ** 3 + 96 * v + 160 * u * v,
        46656 - 62208 * u + 17280 * u ** 2 + 2304 * u ** 3 + 64 * u ** 4 + 13824 * v - 9216 * u * v
        - 512 * u ** 2 * v + 1024 * v ** 2,
    )


def _proportional_equations(J, I):
    """Equations saying that I is a weighted rescaling of J, for the nonzero entries of J."""
    weights = (2, 4, 6, 10)
    eqs = []
    nonzero = [k for k in range(4) if J[k] != 0]
    for k in range(4):
        if J[k] == 0:
            eqs.append(I[k])
    for a_pos, a in enumerate(nonzero):
        for b in nonzero[a_pos + 1:]:
            g = gmpy2.gcd(weights[a], weights[b])
            ea, eb = weights[b] // g, weights[a] // g
            eqs.append(J[a] ** ea * I[b] ** eb - I[a] ** ea * J[b] ** eb)
    return eqs


def _univariate_gcd(exprs, var):
    g = sympy.Integer(0)
    for e in exprs:
        e = sympy.expand(e)
        if e == 0:
            continue
        g = sympy.gcd(g, e) if g != 0 else e
    return sympy.Poly(g, var) if g != 0 else None


def _roots(poly: sympy.Poly):
    """Distinct complex roots, exact: rationals, radicals, or CRootOf objects."""
    found = []
    for factor, _ in poly.factor_list()[1]:
        if factor.degree() == 1:
            a1, a0 = factor.all_coeffs()
            found.append(-a0 / a1)
            continue
        explicit = sympy.roots(factor)
        if sum(explicit.values()) == factor.degree():
            found.extend(explicit.keys())
        else:
            found.extend(factor.all_roots())
    return found


def _to_point(u, v):
    if u.is_Rational and v.is_Rational:
        return DihedralInvariants(gmpy2.mpq(int(u.p), int(u.q)), gmpy2.mpq(int(v.p), int(v.q)), QQ)
    return DihedralInvariants(u, v, ring=None)


def uv_from_moduli(p: ModuliPoint):
    """
    All (u, v) over the algebraic closure whose curve has moduli point ``p``.

    :param p: (ModuliPoint) a rational point on the locus of curves with an elliptic involution
    :return: (list<DihedralInvariants>) distinct fibre points; rational ones over QQ, others as sympy numbers
    """
    if p.ring != QQ:
        raise ValueError("uv_from_moduli needs a rational moduli point")
    J = [_sym(x) for x in invariants_from_moduli(p).as_tuple()]
    u, v = sympy.symbols('u v')
    points = []
    if J[0] != 0:
        # J2^2 I4 = I2^2 J4 is linear in v
        i2 = 240 + 16 * u
        v_of_u = sympy.expand((J[1] * i2 ** 2 - J[0] ** 2 * (1620 - 504 * u + 4 * u ** 2)) / (48 * J[0] ** 2))
        I = [sympy.expand(x.subs(v, v_of_u)) for x in _family_invariants(u, v)]
        g = _univariate_gcd(_proportional_equations(J, I), u)
        if g is None:
            raise ValueError(f"{p} has a positive-dimensional fibre")
        candidates = [(r, sympy.expand(v_of_u.subs(u, r))) for r in _roots(g)]
    else:
        I = [sympy.expand(x.subs(u, -15)) for x in _family_invariants(u, v)]
        g = _univariate_gcd(_proportional_equations(J, I), v)
        if g is None:
            raise ValueError(f"{p} has a positive-dimensional fibre")
        candidates = [(sympy.Integer(-15), r) for r in _roots(g)]
    for cu, cv in candidates:
        inv = [sympy.expand(x.subs({u: cu, v: cv})) for x in _family_invariants(u, v)]
        if inv[3] == 0 or sympy.expand(27 - 18 * cu - cu ** 2 + 4 * cv) == 0:
            continue
        point = _to_point(cu, cv)
        if point not in points:
            points.append(point)
    if not points:
        raise ValueError(f"{p} is not on the locus of curves with an elliptic involution")
    return points


__all__ = ['DegenerateCurve', 'DihedralInvariants', 'normalized_sextic', 'dihedral_invariants', 'igusa_from_uv',
           'on_d4_line', 'on_d6_line', 'uv_to_moduli', 'uv_from_moduli']
