import math

from gentino.algebra import QQ, Ring


class BinaryForm:
    """
    Homogeneous form of a fixed order n in X, Z; ``coeffs[i]`` multiplies X^i Z^(n-i).
    """
    __slots__ = ('ring', 'coeffs')

    def __init__(self, coeffs, ring: Ring = QQ):
        if not coeffs:
            raise ValueError("a binary form needs at least one coefficient")
        self.ring = ring
        self.coeffs = tuple(ring(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def d_x(self):
        if self.order == 0:
            return BinaryForm([0], self.ring)
        return BinaryForm([self.coeffs[i] * i for i in range(1, self.order + 1)], self.ring)

    def d_z(self):
        n = self.order
        if n == 0:
            return BinaryForm([0], self.ring)
        return BinaryForm([self.coeffs[i] * (n - i) for i in range(n)], self.ring)

    def __mul__(self, other):
        if not isinstance(other, BinaryForm):
            return BinaryForm([c * other for c in self.coeffs], self.ring)
        out = [self.ring.zero] * (self.order + other.order + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return BinaryForm(out, self.ring)

    def __add__(self, other):
        if self.order != other.order:
            raise ValueError(f"cannot add forms of orders {self.order} and {other.order}")
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)], self.ring)

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(c) for c in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, BinaryForm) and self.order == other.order and \
            all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(str(c) for c in self.coeffs))

    def __repr__(self):
        return f"BinaryForm([{', '.join(str(c) for c in self.coeffs)}])"


def _repeat(form, op, times):
    for _ in range(times):
        form = op(form)
    return form


def transvection(f: BinaryForm, g: BinaryForm, r: int) -> BinaryForm:
    """
    The r-th transvectant

        (f, g)^r = (m-r)! (n-r)! / (m! n!) * sum_k (-1)^k C(r, k) d^r f / dX^(r-k) dZ^k * d^r g / dX^k dZ^(r-k)

    of forms of orders n and m; the result has order m + n - 2r.
    """
    n, m = f.order, g.order
    if r < 0 or r > min(m, n):
        raise ValueError(f"transvectant index {r} out of range for orders {n} and {m}")
    ring = f.ring
    total = BinaryForm([0] * (n + m - 2 * r + 1), ring)
    for k in range(r + 1):
        df = _repeat(_repeat(f, BinaryForm.d_x, r - k), BinaryForm.d_z, k)
        dg = _repeat(_repeat(g, BinaryForm.d_x, k), BinaryForm.d_z, r - k)
        term = df * dg * ((-1) ** k * math.comb(r, k))
        total = total + term
    scale = ring.divide(ring(math.factorial(m - r) * math.factorial(n - r)), ring(math.factorial(m) * math.factorial(n)))
    return total * scale


def clebsch_invariants(f: BinaryForm):
    """
    Clebsch invariants A, B, C, D of a sextic, built from the covariants
    i = (f,f)^4, delta = (i,i)^2, y1 = (f,i)^4, y2 = (i,y1)^2, y3 = (i,y2)^2.

    :return: (tuple) (A, B, C, D)
    """
    if f.order != 6:
        raise ValueError(f"Clebsch invariants need a sextic, got order {f.order}")
    i = transvection(f, f, 4)
    delta = transvection(i, i, 2)
    y1 = transvection(f, i, 4)
    y2 = transvection(i, y1, 2)
    y3 = transvection(i, y2, 2)
    a = transvection(f, f, 6).coeffs[0]
    b = transvection(i, i, 4).coeffs[0]
    c = transvection(i, delta, 4).coeffs[0]
    d = transvection(y3, y1, 2).coeffs[0]
    return a, b, c, d


__all__ = ['BinaryForm', 'transvection', 'clebsch_invariants']
