"""
Dense univariate polynomials over a ``Ring`` and sparse bivariate polynomials.

Division needs the leading coefficient of the divisor to be invertible; over Z/nZ a failed inversion
raises ``FactorSignal`` straight through every routine here.
"""
from .ring import Ring, QQ
from .linalg import determinant


class Poly:
    """
    Immutable univariate polynomial, coefficients in ascending degree. The zero polynomial has no coefficients.
    """
    __slots__ = ('ring', 'coeffs')

    def __init__(self, coeffs, ring: Ring = QQ):
        coeffs = [ring(c) for c in coeffs]
        while coeffs and ring.is_zero(coeffs[-1]):
            coeffs.pop()
        self.ring = ring
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, ring: Ring = QQ):
        return cls([], ring)

    @classmethod
    def one(cls, ring: Ring = QQ):
        return cls([1], ring)

    @classmethod
    def x(cls, ring: Ring = QQ):
        return cls([0, 1], ring)

    @classmethod
    def monomial(cls, coefficient, degree: int, ring: Ring = QQ):
        return cls([0] * degree + [coefficient], ring)

    @classmethod
    def from_roots(cls, roots, ring: Ring = QQ):
        """Monic polynomial with the given roots."""
        result = cls.one(ring)
        for r in roots:
            result = result * cls([-ring(r), 1], ring)
        return result

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.ring.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        return Poly([other], self.ring)

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)], self.ring)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.ring)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([c * other for c in self.coeffs], self.ring)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.ring)
        out = [self.ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if self.ring.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.ring)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly.one(self.ring), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def divrem(self, divisor):
        """
        Euclidean division.

        :param divisor: (Poly) nonzero divisor
        :return: (tuple<Poly, Poly>) quotient and remainder with deg remainder < deg divisor
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        inv_lead = self.ring.inverse(divisor.leading)
        rem = list(self.coeffs)
        dd = divisor.degree
        quot = [self.ring.zero] * max(len(rem) - dd, 0)
        for k in range(len(rem) - dd - 1, -1, -1):
            c = rem[k + dd] * inv_lead
            quot[k] = c
            if self.ring.is_zero(c):
                continue
            for i, b in enumerate(divisor.coeffs):
                rem[k + i] = rem[k + i] - c * b
        return Poly(quot, self.ring), Poly(rem[:dd], self.ring)

    def __floordiv__(self, other):
        return self.divrem(self._lift(other))[0]

    def __mod__(self, other):
        return self.divrem(self._lift(other))[1]

    def exact_div(self, other):
        """Quotient of an exact division; raises ValueError when a remainder is left."""
        q, r = self.divrem(self._lift(other))
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return q

    def monic(self):
        if self.is_zero():
            return self
        return self * self.ring.inverse(self.leading)

    def __call__(self, x):
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other):
        """self(other(x))"""
        acc = Poly.zero(self.ring)
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def derivative(self):
        return Poly([self.coeffs[i] * i for i in range(1, len(self.coeffs))], self.ring)

    def change_ring(self, ring: Ring):
        return Poly(self.coeffs if ring is self.ring else [ring(c) for c in self.coeffs], ring)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return len(self.coeffs) == len(other.coeffs) and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        return self == self._lift(other)

    def __hash__(self):
        return hash(tuple(str(c) for c in self.coeffs))

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if self.ring.is_zero(c):
                continue
            terms.append(f"({c})" + ("" if i == 0 else ("*x" if i == 1 else f"*x^{i}")))
        return " + ".join(reversed(terms))

    def __repr__(self):
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}], {self.ring})"


def poly_divrem(a: Poly, b: Poly):
    """
    :param a: (Poly) dividend
    :param b: (Poly) nonzero divisor
    :return: (tuple<Poly, Poly>) (q, r) with a = q*b + r, deg r < deg b
    """
    return a.divrem(b)


def poly_xgcd(a: Poly, b: Poly):
    """
    Extended Euclid. The gcd is made monic unless it is zero.

    :return: (tuple<Poly, Poly, Poly>) (g, s, t) with s*a + t*b = g
    """
    ring = a.ring
    r0, r1 = a, b
    s0, s1 = Poly.one(ring), Poly.zero(ring)
    t0, t1 = Poly.zero(ring), Poly.one(ring)
    while not r1.is_zero():
        q, r = r0.divrem(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = ring.inverse(r0.leading)
    return r0 * inv, s0 * inv, t0 * inv


def poly_gcd(a: Poly, b: Poly):
    return poly_xgcd(a, b)[0]


def resultant(a: Poly, b: Poly):
    """
    Resultant as the determinant of the Sylvester matrix.

    :param a: (Poly) nonzero polynomial
    :param b: (Poly) nonzero polynomial
    :return: the resultant, an element of the coefficient ring
    """
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant of the zero polynomial")
    m, n = a.degree, b.degree
    if m == 0 and n == 0:
        return a.ring.one
    size = m + n
    zero = a.ring.zero
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(a.coeffs)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(b.coeffs)):
            row[i + k] = c
        rows.append(row)
    return determinant(rows, a.ring)


def discriminant(f: Poly):
    """Discriminant, Res(f, f') / lc(f) up to the usual sign."""
    n = f.degree
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return f.ring.divide(resultant(f, f.derivative()) * sign, f.leading)


class BivariatePoly:
    """
    Sparse polynomial in two variables, stored as {(i, j): coefficient} for x^i y^j.
    """
    __slots__ = ('ring', 'terms')

    def __init__(self, terms: dict, ring: Ring = QQ):
        self.ring = ring
        self.terms = {k: ring(c) for k, c in terms.items() if not ring.is_zero(ring(c))}

    def __add__(self, other):
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, self.ring.zero) + c
        return BivariatePoly(terms, self.ring)

    def __neg__(self):
        return BivariatePoly({k: -c for k, c in self.terms.items()}, self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BivariatePoly):
            return BivariatePoly({k: c * other for k, c in self.terms.items()}, self.ring)
        terms = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, self.ring.zero) + c1 * c2
        return BivariatePoly(terms, self.ring)

    def __call__(self, x, y):
        acc = self.ring.zero
        for (i, j), c in self.terms.items():
            acc = acc + c * x ** i * y ** j
        return acc

    def swap(self):
        """The polynomial with x and y exchanged."""
        return BivariatePoly({(j, i): c for (i, j), c in self.terms.items()}, self.ring)

    def is_symmetric(self) -> bool:
        return self == self.swap()

    def degree_in(self, variable: int) -> int:
        return max((k[variable] for k in self.terms), default=-1)

    def specialize_x(self, x):
        """The univariate polynomial in y obtained by fixing x."""
        deg = self.degree_in(1)
        coeffs = [self.ring.zero] * (deg + 1)
        for (i, j), c in self.terms.items():
            coeffs[j] = coeffs[j] + c * x ** i
        return Poly(coeffs, self.ring)

    def change_ring(self, ring: Ring):
        return BivariatePoly(self.terms, ring)

    def __eq__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        zero = self.ring.zero
        return all(self.terms.get(k, zero) == other.terms.get(k, zero) for k in keys)

    def __hash__(self):
        return hash(tuple(sorted((k, str(c)) for k, c in self.terms.items())))

    def __repr__(self):
        return f"BivariatePoly({len(self.terms)} terms, {self.ring})"


def symmetric_power_sums(s, p, count: int):
    """
    Power sums x^k + y^k for k < count, from s = x + y and p = x*y.

    :return: (list) [P_0, P_1, ..., P_{count-1}]
    """
    one = s * 0 + 1
    sums = [one * 2, s]
    for _ in range(2, count):
        sums.append(s * sums[-1] - p * sums[-2])
    return sums[:count]


def evaluate_symmetric(poly: BivariatePoly, s, p):
    """
    Value of a symmetric bivariate polynomial at the two roots of z^2 - s z + p,
    computed from s and p alone.

    :param poly: (BivariatePoly) a symmetric polynomial
    :param s: sum of the roots
    :param p: product of the roots
    :return: the value, in the ring of s and p
    """
    if not poly.is_symmetric():
        raise ValueError("polynomial is not symmetric")
    top = max(max(i, j) for i, j in poly.terms) if poly.terms else 0
    sums = symmetric_power_sums(s, p, top + 1)
    acc = s * 0
    for (i, j), c in poly.terms.items():
        if i > j:
            continue
        lo, hi = i, j
        if lo == hi:
            acc = acc + c * p ** lo
        else:
            acc = acc + c * p ** lo * sums[hi - lo]
    return acc


__all__ = ['Poly', 'poly_divrem', 'poly_xgcd', 'poly_gcd', 'resultant', 'discriminant', 'BivariatePoly',
           'symmetric_power_sums', 'evaluate_symmetric']
