"""
Degree 2 elliptic subcovers of y^2 = x^6 - s1 x^4 + s2 x^2 - 1, read off the dihedral invariants (u, v).
"""
from gentino.algebra import QQ, Ring
from gentino.autloci import DegenerateCurve, DihedralInvariants

from .elliptic import EllipticCurve
from .modular import modular_poly


def _j_denominator(uv: DihedralInvariants):
    return uv.u * uv.u + 18 * uv.u - 4 * uv.v - 27


def j_pair_deg2(uv: DihedralInvariants):
    """
    Sum and product of the j-invariants j1, j2 of the two degree 2 elliptic subcovers.

    :param uv: (DihedralInvariants) a rational point
    :return: (tuple) (j1 + j2, j1 j2)
    :raises DegenerateCurve: when u^2 + 18u - 4v - 27 = 0
    """
    ring = uv.ring
    u, v = uv.u, uv.v
    den = _j_denominator(uv)
    if ring.is_zero(den):
        raise DegenerateCurve(f"u^2 + 18u - 4v - 27 vanishes at (u, v) = ({u}, {v})")
    total = ring.divide((2 * u ** 3 - 54 * u * u + 9 * u * v - v * v + 27 * v) * -256, den)
    product = ring.divide((u * u + 9 * u - 3 * v) ** 3 * 65536, den * den)
    return total, product


def j_discriminant_deg2(uv: DihedralInvariants):
    """(j1 - j2)^2, zero exactly on (v^2 - 4u^3)(v - 9u + 27) = 0."""
    total, product = j_pair_deg2(uv)
    return total * total - product * 4


def j_invariants_deg2(uv: DihedralInvariants):
    """
    The two j-invariants, when they lie in the coefficient ring.

    :return: (tuple | None) (j1, j2), or None when (j1 - j2)^2 has no square root in the ring
    """
    ring = uv.ring
    total, _ = j_pair_deg2(uv)
    root = ring.sqrt(j_discriminant_deg2(uv))
    if root is None:
        return None
    half = ring.inverse(ring(2))
    return (total + root) * half, (total - root) * half


def isomorphic_subcovers_deg2(uv: DihedralInvariants) -> bool:
    """Whether E1 and E2 are isomorphic because v = 9(u - 3); then j1 = j2 = 256(9 - u)."""
    return uv.ring.is_zero(uv.v - 9 * (uv.u - 3))


def isogeny_test_deg2(uv: DihedralInvariants, n: int) -> bool:
    """
    Whether the two degree 2 subcovers are n-isogenous, i.e. Phi_n(j1, j2) = 0.

    :param uv: (DihedralInvariants) a rational point
    :param n: (int) 2 or 3
    :return: (bool)
    """
    total, product = j_pair_deg2(uv)
    return uv.ring.is_zero(modular_poly(n, uv.ring).evaluate_symmetric(total, product))


def d4_isogenous_pair(v, ring: Ring = QQ):
    """
    j-invariants of the 2-isogenous pair attached to a curve with automorphism group D4.

    :param v: the parameter, v != -1
    :return: (tuple) (256 v^3/(v+1), -16 (v-15)^3/(v+1)^2)
    """
    v = ring(v)
    if ring.is_zero(v + 1):
        raise DegenerateCurve("v = -1")
    return ring.divide(v ** 3 * 256, v + 1), ring.divide((v - 15) ** 3 * -16, (v + 1) ** 2)


def elliptic_subcovers_deg2(s1, s2, ring: Ring = QQ):
    """
    The quotients of y^2 = x^6 - s1 x^4 + s2 x^2 - 1 by its elliptic involutions:
    E1: y^2 = x^3 - s1 x^2 + s2 x - 1 through x -> x^2, and
    E2: y^2 = -x^3 + s2 x^2 - s1 x + 1 through x -> 1/x^2.

    :return: (tuple<EllipticCurve, EllipticCurve>)
    """
    s1, s2 = ring(s1), ring(s2)
    e1 = EllipticCurve.from_cubic([-1, s2, -s1, 1], 1, ring)
    e2 = EllipticCurve.from_cubic([1, -s1, s2, -1], 1, ring)
    return e1, e2


__all__ = ['j_pair_deg2', 'j_discriminant_deg2', 'j_invariants_deg2', 'isomorphic_subcovers_deg2',
           'isogeny_test_deg2', 'd4_isogenous_pair', 'elliptic_subcovers_deg2']
