"""
Igusa invariants J2, J4, J6, J10 of a binary sextic and the moduli point they determine.

The quadruple is the Igusa-Clebsch normalization: with it, 144 J4/J2^2, -1728 (J2 J4 - 3 J6)/J2^3 and
486 J10/J2^5 are the absolute invariants i1, i2, i3, and J10 is the discriminant of the sextic.
"""
from gentino.algebra import Ring

from .sextic import BinarySextic, NotGenusTwo
from .transvectant import BinaryForm, clebsch_invariants
from .type import ModuliCase


class IgusaInvariants:
    """The invariants J2, J4, J6, J10 of a sextic, homogeneous of degrees 2, 4, 6, 10."""
    WEIGHTS = (2, 4, 6, 10)
    __slots__ = ('J2', 'J4', 'J6', 'J10', 'ring')

    def __init__(self, J2, J4, J6, J10, ring: Ring):
        self.ring = ring
        self.J2, self.J4, self.J6, self.J10 = (ring(x) for x in (J2, J4, J6, J10))

    def as_tuple(self):
        return self.J2, self.J4, self.J6, self.J10

    def scaled(self, t):
        """Weighted rescaling J_k -> t^k J_k."""
        return IgusaInvariants(*(j * t ** w for j, w in zip(self.as_tuple(), self.WEIGHTS)), ring=self.ring)

    def is_genus_two(self) -> bool:
        return not self.ring.is_zero(self.J10)

    def to_json(self):
        return {name: self.ring.to_json(value) for name, value in zip(('J2', 'J4', 'J6', 'J10'), self.as_tuple())}

    def __eq__(self, other):
        return isinstance(other, IgusaInvariants) and all(a == b for a, b in zip(self.as_tuple(), other.as_tuple()))

    def __hash__(self):
        return hash(tuple(str(x) for x in self.as_tuple()))

    def __repr__(self):
        return f"IgusaInvariants(J2={self.J2}, J4={self.J4}, J6={self.J6}, J10={self.J10})"


def igusa(f: BinarySextic) -> IgusaInvariants:
    """
    :param f: (BinarySextic) the sextic
    :return: (IgusaInvariants)
    """
    a, b, c, d = clebsch_invariants(BinaryForm(f.coeffs, f.ring))
    a2 = a * a
    a3 = a2 * a
    j2 = a * -120
    j4 = a2 * -720 + b * 6750
    j6 = a3 * 8640 + a * b * -108000 + c * 202500
    j10 = (a3 * a2 * -62208 + a3 * b * 972000 + a2 * c * 1620000 + a * b * b * -3037500 + b * c * -6075000
           + d * -4556250)
    return IgusaInvariants(j2, j4, j6, j10, f.ring)


def igusa_arithmetic(J: IgusaInvariants):
    """
    Igusa's arithmetic invariants (J2', J4', J6', J8', J10') from the Igusa-Clebsch quadruple.

    :return: (tuple) five ring elements
    """
    ring = J.ring
    div = ring.divide
    j2 = div(J.J2, ring(8))
    j4 = div(j2 * j2 * 4 - J.J4, ring(96))
    j6 = div(j2 * j2 * j2 * 8 - j2 * j4 * 160 - J.J6, ring(576))
    j8 = div(j2 * j6 - j4 * j4, ring(4))
    j10 = div(J.J10, ring(4096))
    return j2, j4, j6, j8, j10


def absolute_invariants(J: IgusaInvariants):
    """
    i1 = 144 J4/J2^2, i2 = -1728 (J2 J4 - 3 J6)/J2^3, i3 = 486 J10/J2^5.

    :raises ValueError: when J2 = 0; use ``alpha_invariants`` there
    """
    ring = J.ring
    if ring.is_zero(J.J2):
        raise ValueError("absolute invariants need J2 != 0")
    inv = ring.inverse(J.J2)
    inv2 = inv * inv
    inv3 = inv2 * inv
    i1 = J.J4 * 144 * inv2
    i2 = (J.J2 * J.J4 - J.J6 * 3) * -1728 * inv3
    i3 = J.J10 * 486 * inv3 * inv2
    return i1, i2, i3


def alpha_invariants(J: IgusaInvariants):
    """a1 = J4 J6 / J10, a2 = J6 J10 / J4^4."""
    ring = J.ring
    if ring.is_zero(J.J10) or ring.is_zero(J.J4):
        raise ValueError("alpha invariants need J4 != 0 and J10 != 0")
    return ring.divide(J.J4 * J.J6, J.J10), ring.divide(J.J6 * J.J10, J.J4 ** 4)


def t_invariants(J: IgusaInvariants):
    """t1 = J2^5/J10, t2 = J4^5/J10^2, t3 = J6^5/J10^3."""
    ring = J.ring
    if ring.is_zero(J.J10):
        raise NotGenusTwo("t-invariants need J10 != 0")
    inv = ring.inverse(J.J10)
    return J.J2 ** 5 * inv, J.J4 ** 5 * inv * inv, J.J6 ** 5 * inv ** 3


class ModuliPoint:
    """
    Isomorphism class of a genus 2 curve: a case tag for the vanishing pattern of J2, J4, J6 and the
    degree-zero invariants of that case.
    """
    __slots__ = ('case', 'values', 'ring')

    def __init__(self, case: ModuliCase, values, ring: Ring):
        self.case = case
        self.values = tuple(ring(v) for v in values)
        self.ring = ring

    def to_json(self):
        return {"case": self.case.name, "values": [self.ring.to_json(v) for v in self.values]}

    @classmethod
    def from_json(cls, obj, ring: Ring):
        return cls(ModuliCase[obj["case"]], [ring.from_json(v) for v in obj["values"]], ring)

    def __eq__(self, other):
        return isinstance(other, ModuliPoint) and self.case == other.case and \
            len(self.values) == len(other.values) and all(a == b for a, b in zip(self.values, other.values))

    def __hash__(self):
        return hash((self.case, tuple(str(v) for v in self.values)))

    def __repr__(self):
        return f"ModuliPoint({self.case.name}, ({', '.join(str(v) for v in self.values)}))"


def moduli_point_of(J: IgusaInvariants) -> ModuliPoint:
    """
    :param J: (IgusaInvariants) invariants with J10 != 0
    :return: (ModuliPoint)
    """
    ring = J.ring
    if ring.is_zero(J.J10):
        raise NotGenusTwo("J10 = 0: the sextic has a repeated root")
    zero = ring.is_zero
    if not zero(J.J2):
        return ModuliPoint(ModuliCase.ABSOLUTE, absolute_invariants(J), ring)
    if not zero(J.J4) and not zero(J.J6):
        return ModuliPoint(ModuliCase.ALPHA, alpha_invariants(J), ring)
    if not zero(J.J6):
        return ModuliPoint(ModuliCase.J6_RATIO, [ring.divide(J.J6 ** 5, J.J10 ** 3)], ring)
    if not zero(J.J4):
        return ModuliPoint(ModuliCase.J4_RATIO, [ring.divide(J.J4 ** 5, J.J10 ** 2)], ring)
    return ModuliPoint(ModuliCase.J10_ONLY, [], ring)


def invariants_from_moduli(p: ModuliPoint) -> IgusaInvariants:
    """
    Invariants (J2, J4, J6, J10) whose moduli point is ``p``; any weighted rescaling would do as well.

    :param p: (ModuliPoint) the moduli point
    :return: (IgusaInvariants)
    """
    ring = p.ring
    zero, one = ring.zero, ring.one
    if p.case is ModuliCase.ABSOLUTE:
        i1, i2, i3 = p.values
        j4 = ring.divide(i1, ring(144))
        j6 = ring.divide(j4 + ring.divide(i2, ring(1728)), ring(3))
        return IgusaInvariants(one, j4, j6, ring.divide(i3, ring(486)), ring)
    if p.case is ModuliCase.ALPHA:
        a1, a2 = p.values
        return IgusaInvariants(zero, a1 * a2, a1 * a1 * a2 * a2, a1 * a1 * a2 ** 3, ring)
    if p.case is ModuliCase.J6_RATIO:
        r, = p.values
        return IgusaInvariants(zero, zero, r * r, r ** 3, ring)
    if p.case is ModuliCase.J4_RATIO:
        r, = p.values
        return IgusaInvariants(zero, r, zero, r * r, ring)
    return IgusaInvariants(zero, zero, zero, one, ring)


def moduli_point(f: BinarySextic) -> ModuliPoint:
    return moduli_point_of(igusa(f))


def is_isomorphic(f: BinarySextic, g: BinarySextic) -> bool:
    """Whether two genus 2 curves y^2 = f, y^2 = g are isomorphic over the algebraic closure."""
    return moduli_point(f) == moduli_point(g)


__all__ = ['IgusaInvariants', 'igusa', 'igusa_arithmetic', 'absolute_invariants', 'alpha_invariants',
           't_invariants', 'ModuliPoint', 'moduli_point_of', 'invariants_from_moduli', 'moduli_point',
           'is_isomorphic']
