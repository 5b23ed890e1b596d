import functools

from gentino.algebra import QQ
from gentino.invariants import BinarySextic, NotGenusTwo, igusa, moduli_point_of

from .locus import l2_membership, d4_equation, d6_equations
from .type import AutGroupLabel

# sextic coefficients (lowest degree first) and a rational automorphism of each
EXCEPTIONAL_CURVES = (
    (AutGroupLabel.C10, (0, -1, 0, 0, 0, 0, 1)),
    (AutGroupLabel.C3_D4, (-1, 0, 0, 0, 0, 0, 1)),
    (AutGroupLabel.GL2_3, (0, -1, 0, 0, 0, 1, 0)),
)


@functools.lru_cache(maxsize=None)
def exceptional_moduli():
    """
    Moduli points of the three curves whose automorphism group is not determined by the locus equations.

    :return: (dict<ModuliPoint, AutGroupLabel>)
    """
    return {moduli_point_of(igusa(BinarySextic(coeffs))): label for label, coeffs in EXCEPTIONAL_CURVES}


def classify(f: BinarySextic) -> AutGroupLabel:
    """
    Automorphism group of y^2 = f(x) over the algebraic closure of Q.

    :param f: (BinarySextic) a rational sextic
    :return: (AutGroupLabel)
    :raises NotGenusTwo: when f has a repeated root
    """
    if f.ring != QQ:
        raise ValueError(f"classification is defined over Q, got a sextic over {f.ring}")
    J = igusa(f)
    if not J.is_genus_two():
        raise NotGenusTwo(f"{f} has a repeated root")
    label = exceptional_moduli().get(moduli_point_of(J))
    if label is not None:
        return label
    if not l2_membership(J):
        return AutGroupLabel.C2
    if all(value == 0 for value in d6_equations(J)):
        return AutGroupLabel.D6
    if d4_equation(J) == 0:
        return AutGroupLabel.D4
    return AutGroupLabel.V4


__all__ = ['EXCEPTIONAL_CURVES', 'exceptional_moduli', 'classify']
