"""
Reduced divisors on the Jacobian of an odd degree genus 2 curve in Mumford form, and Cantor's group law.
"""
import random

from gentino.algebra import Poly, PrimeField, poly_xgcd
from .curve import HyperellipticCurve


class MumfordDivisor:
    """
    A reduced divisor <u, v>: u monic of degree at most 2, deg v < deg u, and u divides v^2 - f.
    The identity is <1, 0>.
    """
    __slots__ = ('u', 'v', 'curve')

    def __init__(self, u: Poly, v: Poly, curve: HyperellipticCurve, check=True):
        self.u = u
        self.v = v
        self.curve = curve
        if check:
            self._validate()

    @classmethod
    def identity(cls, curve: HyperellipticCurve):
        return cls(Poly.one(curve.ring), Poly.zero(curve.ring), curve, check=False)

    @classmethod
    def from_point(cls, curve: HyperellipticCurve, x, y):
        """The divisor P - infinity of an affine point P = (x, y)."""
        ring = curve.ring
        return cls(Poly([-ring(x), 1], ring), Poly([y], ring), curve)

    @classmethod
    def from_json(cls, obj, curve: HyperellipticCurve):
        ring = curve.ring
        return cls(Poly([ring.from_json(c) for c in obj["u"]], ring),
                   Poly([ring.from_json(c) for c in obj["v"]], ring), curve)

    @property
    def degree(self) -> int:
        return self.u.degree

    def is_identity(self) -> bool:
        return self.u.degree == 0

    def __neg__(self):
        return MumfordDivisor(self.u, -self.v, self.curve, check=False)

    def __add__(self, other):
        return cantor_add(self, other)

    def __sub__(self, other):
        return cantor_add(self, -other)

    def __mul__(self, k: int):
        return scalar_mul(k, self)

    __rmul__ = __mul__

    def to_json(self):
        ring = self.curve.ring
        return {"u": [ring.to_json(c) for c in self.u.coeffs], "v": [ring.to_json(c) for c in self.v.coeffs]}

    def _validate(self):
        if not self.curve.is_odd_degree:
            raise ValueError("Mumford divisors need the degree 5 model of the curve")
        if self.u.degree > 2 or self.u.is_zero() or self.u.leading != 1:
            raise ValueError(f"u = {self.u} must be monic of degree at most 2")
        if self.v.degree >= self.u.degree:
            raise ValueError(f"deg v must be below deg u, got v = {self.v}")
        if not ((self.v * self.v - self.curve.f) % self.u).is_zero():
            raise ValueError(f"u = {self.u} does not divide v^2 - f")

    def __eq__(self, other):
        return isinstance(other, MumfordDivisor) and self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((self.u, self.v))

    def __repr__(self):
        return f"MumfordDivisor(u={self.u}, v={self.v})"


def cantor_add(d1: MumfordDivisor, d2: MumfordDivisor) -> MumfordDivisor:
    """
    Composition followed by reduction.
    Over Z/nZ a non-invertible leading coefficient met on the way raises ``FactorSignal``.
    """
    f = d1.curve.f
    u1, v1, u2, v2 = d1.u, d1.v, d2.u, d2.v
    g1, e1, e2 = poly_xgcd(u1, u2)
    d, c1, s3 = poly_xgcd(g1, v1 + v2)
    s1 = c1 * e1
    s2 = c1 * e2
    u = (u1 * u2).exact_div(d * d)
    v = ((s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f)).exact_div(d)) % u
    while u.degree > 2:
        u = (f - v * v).exact_div(u).monic()
        v = (-v) % u
    return MumfordDivisor(u.monic(), v, d1.curve, check=False)


def scalar_mul(k: int, d: MumfordDivisor) -> MumfordDivisor:
    """[k]d by double-and-add; negative k multiplies -d."""
    if k < 0:
        return scalar_mul(-k, -d)
    result = MumfordDivisor.identity(d.curve)
    base = d
    while k:
        if k & 1:
            result = cantor_add(result, base)
        base = cantor_add(base, base)
        k >>= 1
    return result


def _split_square_roots(curve, u: Poly):
    """Every v with deg v < deg u = 2 and v^2 = f mod u, for u over a prime field."""
    field = curve.ring
    f = curve.f
    u0, u1 = u[0], u[1]
    half = field.inverse(2)
    disc = u1 * u1 - 4 * u0
    if disc == 0:
        a = -u1 * half
        fa = f(a)
        if fa == 0:
            return []
        y = field.sqrt(fa)
        if y is None:
            return []
        # v = y + y1 (x - a) with 2 y y1 = f'(a)
        found = []
        for y0 in (y, -y):
            y1 = f.derivative()(a) * field.inverse(2 * y0)
            found.append(Poly([y0 - y1 * a, y1], field))
        return found
    root = field.sqrt(disc)
    if root is not None:
        a, b = (-u1 + root) * half, (-u1 - root) * half
        ya, yb = field.sqrt(f(a)), field.sqrt(f(b))
        if ya is None or yb is None:
            return []
        found = []
        inv = field.inverse(a - b)
        for sa in (ya, -ya):
            for sb in (yb, -yb):
                slope = (sa - sb) * inv
                v = Poly([sa - slope * a, slope], field)
                if v not in found:
                    found.append(v)
        return found
    # F_p[x]/(u) is a field: with t = x + u1/2, t^2 = delta a non-square
    delta = u1 * u1 * half * half - u0
    r = f % u
    r0, r1 = r[0], r[1]
    a0, a1 = r0 - r1 * u1 * half, r1
    if a0 == 0 and a1 == 0:
        return [Poly.zero(field)]
    norm = field.sqrt(a0 * a0 - delta * a1 * a1)
    if norm is None:
        return []
    y0 = y1 = None
    if a1 == 0:
        s = field.sqrt(a0)
        if s is not None:
            y0, y1 = s, field.zero
        else:
            y0, y1 = field.zero, field.sqrt(a0 * field.inverse(delta))
    else:
        for n in (norm, -norm):
            s = field.sqrt((a0 + n) * half)
            if s is not None and s != 0:
                y0, y1 = s, a1 * field.inverse(2 * s)
                break
    if y0 is None or y1 is None:
        return []
    v = Poly([y0 + y1 * u1 * half, y1], field)
    return [v, -v]


def square_roots_mod(curve: HyperellipticCurve, u: Poly):
    """
    All v with deg v < deg u and u | v^2 - f, for monic u of degree at most 2 over a prime field.

    :return: (list<Poly>)
    """
    field = curve.ring
    if u.degree == 0:
        return [Poly.zero(field)]
    if u.degree == 1:
        y = field.sqrt(curve.f(-u[0]))
        if y is None:
            return []
        if y == 0:
            return [Poly.zero(field)]
        return [Poly([y], field), Poly([-y], field)]
    return _split_square_roots(curve, u)


def random_divisor(curve: HyperellipticCurve, rng: random.Random) -> MumfordDivisor:
    """
    A uniformly random element of the Jacobian over a prime field.

    Monic u of degree at most 2 is drawn uniformly, kept with probability |roots|/4 and then one
    of its square roots of f is chosen, which weighs every Mumford pair equally.

    :param curve: (HyperellipticCurve) an odd degree curve over a prime field
    :param rng: (random.Random) the random source
    :return: (MumfordDivisor)
    """
    field = curve.ring
    if not isinstance(field, PrimeField):
        raise ValueError("random divisors need a prime field")
    p = field.characteristic
    total = 1 + p + p * p
    while True:
        pick = rng.randrange(total)
        if pick == 0:
            u = Poly.one(field)
        elif pick <= p:
            u = Poly([pick - 1, 1], field)
        else:
            pick -= p + 1
            u = Poly([pick % p, pick // p, 1], field)
        roots = square_roots_mod(curve, u)
        if roots and rng.randrange(4) < len(roots):
            return MumfordDivisor(u, rng.choice(roots), curve, check=False)


__all__ = ['MumfordDivisor', 'cantor_add', 'scalar_mul', 'square_roots_mod', 'random_divisor']
