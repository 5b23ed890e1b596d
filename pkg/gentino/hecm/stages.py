"""
The two stages of a trial.

Stage 1 multiplies a Kummer point by lcm(1..B1), recovers the divisor class and pushes it down to the two
elliptic quotients; a quotient that reaches the identity modulo a prime p | n makes one of the divisions
fail, and the failure carries p. Stage 2 continues on the elliptic quotients with a prime-gap table.
"""
import functools

import gmpy2

from gentino.algebra import FactorSignal, Poly
from gentino.kummer import KummerPoint, KummerPreimage, jacobian_to_kummer, kummer_to_mumford, ladder
from gentino.jacobian import MumfordDivisor
from gentino.subcovers import EllipticCurve

from .curve import DecomposableCurve
from .type import TrialOutcome


class StageResult:
    """
    Outcome of a stage: a factor, or the points on the elliptic quotients to carry on with.
    """
    __slots__ = ('outcome', 'factor', 'images')

    def __init__(self, outcome: TrialOutcome, factor=None, images=()):
        self.outcome = outcome
        self.factor = factor
        self.images = list(images)

    @classmethod
    def from_signal(cls, signal: FactorSignal, outcome: TrialOutcome):
        if signal.is_proper:
            return cls(outcome, factor=signal.factor)
        return cls(TrialOutcome.CONTINUE)

    def __repr__(self):
        return f"StageResult({self.outcome}, factor={self.factor})"


def stage1_exponent(b1: int):
    """
    k = lcm(1, ..., B1) as the product of the largest powers of the primes up to B1.

    :param b1: (int) the smoothness bound, at least 2
    :return: (gmpy2.mpz)
    """
    if b1 < 2:
        raise ValueError(f"B1 must be at least 2, got {b1}")
    k = gmpy2.mpz(1)
    prime = gmpy2.mpz(2)
    while prime <= b1:
        power = prime
        while power * prime <= b1:
            power *= prime
        k *= power
        prime = gmpy2.next_prime(prime)
    return k


def initial_point(curve: DecomposableCurve, x) -> KummerPoint:
    """
    Kummer point of the divisor (x, y) - infinity. Only the abscissa enters the computation, so no square
    root of f(x) is taken; for a non-square f(x) modulo p the point belongs to the quadratic twist there.
    """
    ring = curve.ring
    divisor = MumfordDivisor(Poly([-ring(x), 1], ring), Poly.zero(ring), curve.curve, check=False)
    return jacobian_to_kummer(divisor, curve.surface)


def _pushforward_x(curve: DecomposableCurve, pre: KummerPreimage, index: int):
    """
    Abscissa of phi(P1) + phi(P2) on the index-th quotient for the degree 2 divisor P1 + P2 described by
    ``pre``, computed from symmetric functions of P1, P2 and y1 y2 only.
    """
    ring = curve.ring
    u0, u1 = pre.u[0], pre.u[1]
    if index == 1:
        rn, rd, g = curve.r1, curve.r2, curve.first_cubic
    else:
        rn, rd, g = curve.r2, curve.r1, curve.second_cubic
    g0, g1, g2, g3 = g

    # F[s]/(s^2 + u1 s + u0), elements as (h0, h1) meaning h0 + h1 s
    def mul(a, b):
        c2 = a[1] * b[1]
        return a[0] * b[0] - c2 * u0, a[0] * b[1] + a[1] * b[0] - c2 * u1

    def trace(h):
        return h[0] * 2 - h[1] * u1

    def norm(h):
        return h[0] * h[0] - u1 * h[0] * h[1] + u0 * h[1] * h[1]

    root = (-rn, ring.one)
    conjugate = (-u1 - rd, -ring.one)
    first = mul(root, root)
    e1n = trace(mul(first, mul(conjugate, conjugate)))
    e2n = norm(first)
    ur = pre.u(rd)
    nd = ur * ur
    hs = (g3 * (e1n ** 3 - e1n * e2n * nd * 3) + g2 * nd * (e1n * e1n - e2n * nd * 2) + g1 * nd * nd * e1n
          + g0 * nd ** 3 * 2)
    yy = curve.kappa * curve.q ** 6 * pre.ordinate_product() * ur ** 3 * 128
    disc = e1n * e1n - e2n * nd * 4
    num = hs - yy - (g2 * nd + g3 * e1n) * disc
    return ring.divide(num, g3 * nd * disc)


def _add_two_torsion(cubic, x, ring):
    """Abscissa of Q + (1, 0) on a twist of y^2 = cubic(x) with cubic(1) = 0, from x(Q) = x."""
    g0, g1, g2, g3 = cubic
    return ring.one + ring.divide(g1 + g2 * 2 + g3 * 3, g3 * (x - 1))


def pushforward(curve: DecomposableCurve, pre: KummerPreimage):
    """
    Abscissae of the images of a divisor class on E1 and E2; an empty list for the identity.

    :param curve: (DecomposableCurve) the curve
    :param pre: (KummerPreimage) the divisor class, from ``kummer_to_mumford``
    :return: (list<tuple>) (index, x) pairs
    """
    if pre.degree == 0:
        return []
    if pre.degree == 1:
        # P - infinity goes to phi(P) + (1, 0): infinity lands on the 2-torsion point X = 1 of both quotients
        m = curve.mobius(-pre.u[0])
        return [(1, _add_two_torsion(curve.first_cubic, m * m, curve.ring)),
                (2, _add_two_torsion(curve.second_cubic, curve.ring.inverse(m * m), curve.ring))]
    return [(1, _pushforward_x(curve, pre, 1)), (2, _pushforward_x(curve, pre, 2))]


def short_weierstrass(curve: EllipticCurve, point):
    """
    y^2 = x^3 + a2 x^2 + a4 x + a6 to y^2 = x^3 + A x + B through x -> x + a2/3.

    :return: (tuple) (EllipticCurve, point)
    """
    ring = curve.ring
    if not (ring.is_zero(curve.a1) and ring.is_zero(curve.a3)):
        raise ValueError("short form needs a1 = a3 = 0")
    a2, a4, a6 = curve.a2, curve.a4, curve.a6
    if ring.is_zero(a2):
        return curve, point
    third = ring.inverse(3)
    shift = a2 * third
    A = a4 - a2 * a2 * third
    B = a6 - a2 * a4 * third + a2 ** 3 * 2 * ring.inverse(27)
    short = EllipticCurve.short(A, B, ring)
    if point is None:
        return short, None
    return short, (point[0] + shift, point[1])


def pushforward_to_weierstrass(curve: DecomposableCurve, pre: KummerPreimage):
    """
    Images of a divisor class on the two quotients, as points of short Weierstrass curves.

    Only the abscissa x' of each image is known. The point (x', 1) lies on T y^2 = g(x) with T = g(x'),
    a twist of kappa y^2 = g(x) that is isomorphic to it modulo every prime where the image is rational,
    so orders are preserved there.

    :return: (list<tuple>) (index, EllipticCurve, point)
    """
    ring = curve.ring
    images = []
    for index, x in pushforward(curve, pre):
        cubic = curve.first_cubic if index == 1 else curve.second_cubic
        twist = curve.cubic_value(index, x)
        ring.inverse(twist)
        long_form = EllipticCurve.from_cubic(cubic, twist, ring)
        point = EllipticCurve.cubic_point(x, ring.one, cubic[3], twist)
        short, image = short_weierstrass(long_form, point)
        images.append((index, short, image))
    return images


def stage1(curve: DecomposableCurve, point: KummerPoint, k) -> StageResult:
    """
    [k] point on the Kummer surface, then down to the elliptic quotients.

    :param curve: (DecomposableCurve) the curve over Z/nZ
    :param point: (KummerPoint) a point of its Kummer surface
    :param k: (int) the stage 1 exponent
    :return: (StageResult) a factor, or the images on the quotients to continue with
    """
    try:
        q = ladder(k, point, curve.surface)
        pre = kummer_to_mumford(q, curve.surface, curve.curve)
        images = pushforward_to_weierstrass(curve, pre)
    except FactorSignal as signal:
        return StageResult.from_signal(signal, TrialOutcome.STAGE1)
    return StageResult(TrialOutcome.CONTINUE, images=images)


@functools.lru_cache(maxsize=16)
def _prime_gaps(b1: int, b2: int):
    """The first prime above B1 and the gaps between consecutive primes up to B2."""
    first = gmpy2.next_prime(b1)
    gaps = []
    prime = first
    while True:
        following = gmpy2.next_prime(prime)
        if following > b2:
            break
        gaps.append(int(following - prime))
        prime = following
    return first, tuple(gaps)


def stage2(images, b1: int, b2: int) -> StageResult:
    """
    Standard continuation: walk [l]Q over the primes l in (B1, B2] by adding precomputed [d]Q for the
    prime gaps d; l Q = O modulo p makes one of the additions divide by a multiple of p.

    :param images: (list<tuple>) (index, EllipticCurve, point) from stage 1
    :param b1: (int) stage 1 bound
    :param b2: (int) stage 2 bound
    :return: (StageResult)
    """
    if b2 <= b1:
        return StageResult(TrialOutcome.CONTINUE)
    first, gaps = _prime_gaps(b1, b2)
    if first > b2:
        return StageResult(TrialOutcome.CONTINUE)
    for _, elliptic, point in images:
        if point is None:
            continue
        try:
            _walk_primes(elliptic, point, first, gaps)
        except FactorSignal as signal:
            # a trivial factor on one quotient leaves the other one to try
            result = StageResult.from_signal(signal, TrialOutcome.STAGE2)
            if result.outcome.found_factor:
                return result
    return StageResult(TrialOutcome.CONTINUE)


def _walk_primes(elliptic: EllipticCurve, point, first, gaps):
    table = {}
    for gap in sorted(set(gaps)):
        table[gap] = elliptic.scalar_mul(gap, point)
    current = elliptic.scalar_mul(int(first), point)
    for gap in gaps:
        if current is None:
            break
        current = elliptic.add(current, table[gap])


__all__ = ['StageResult', 'stage1_exponent', 'initial_point', 'pushforward', 'short_weierstrass',
           'pushforward_to_weierstrass', 'stage1', 'stage2']
