"""
Scalar multiplication on a Kummer surface.
"""
from gentino.jacobian import scalar_mul

from .maps import jacobian_to_kummer, kummer_to_mumford
from .surface import KummerPoint, KummerSurface


def ladder(k: int, point: KummerPoint, surface: KummerSurface) -> KummerPoint:
    """
    Montgomery ladder for [k]point on the Kummer surface, keeping the pair ([m]P, [m+1]P) whose
    difference is always P.

    Differential addition divides by the coordinates of P. Over a field, a P with a zero coordinate is
    multiplied on the Jacobian instead; over Z/nZ the division raises ``FactorSignal``.

    :param k: (int) the multiplier; the sign is irrelevant on the Kummer surface
    :param point: (KummerPoint) P
    :param surface: (KummerSurface) the surface P lies on
    :return: (KummerPoint)
    """
    k = abs(int(k))
    if k == 0:
        return surface.base_point()
    if k == 1:
        return point
    ring = surface.ring
    if ring.is_field and any(ring.is_zero(c) for c in point.coords):
        return ladder_through_jacobian(k, point, surface)
    scale = surface._difference_scale(point)
    r0, r1 = point, surface.double(point)
    for bit in bin(k)[3:]:
        if bit == '1':
            r0 = surface._add_scaled(r1, r0, scale)
            r1 = surface.double(r1)
        else:
            r1 = surface._add_scaled(r1, r0, scale)
            r0 = surface.double(r0)
    return r0


def ladder_through_jacobian(k: int, point: KummerPoint, surface: KummerSurface) -> KummerPoint:
    """
    [k]point computed with Cantor's algorithm on a divisor over the point, on the curve or on its
    quadratic twist, and mapped back.

    :param k: (int) the multiplier
    :param point: (KummerPoint) a point of the surface
    :param surface: (KummerSurface) the surface, over a field
    :return: (KummerPoint)
    """
    divisor, twist = kummer_to_mumford(point, surface).twisted_lift()
    return jacobian_to_kummer(scalar_mul(abs(int(k)), divisor), surface, twist=twist)


__all__ = ['ladder', 'ladder_through_jacobian']
