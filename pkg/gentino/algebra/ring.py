"""
Coefficient rings: the rationals, prime fields and Z/nZ.

Rationals are plain ``gmpy2.mpq`` values, which gmpy2 keeps reduced with a positive denominator.
Residues are ``ModInt`` values bound to an ``IntegersModN`` ring. Inverting a non-unit of Z/nZ raises
``FactorSignal`` carrying gcd(a, n), the hook the factoring code listens to.
"""
import abc
import random

import gmpy2
from sympy.ntheory.residue_ntheory import sqrt_mod

from gentino.utils.string_utils import rational_to_str, parse_rational

MPZ_TYPE = type(gmpy2.mpz(0))
MPQ_TYPE = type(gmpy2.mpq(0))


class FactorSignal(ArithmeticError):
    """
    A non-invertible residue was met while working modulo n.

    ``factor`` is gcd(a, n), always with 1 < factor; ``factor == modulus`` means the residue was zero.
    """

    def __init__(self, factor, modulus):
        self.factor = int(factor)
        self.modulus = int(modulus)
        super().__init__(f"non-invertible residue modulo {self.modulus}: gcd = {self.factor}")

    @property
    def is_proper(self):
        """Whether the factor is a proper divisor of the modulus."""
        return 1 < self.factor < self.modulus


class Ring(abc.ABC):
    """
    A commutative coefficient ring. Elements support ``+ - * **`` with each other and with Python ints.
    """

    @property
    @abc.abstractmethod
    def characteristic(self) -> int:
        pass

    @property
    @abc.abstractmethod
    def is_field(self) -> bool:
        pass

    @abc.abstractmethod
    def __call__(self, value):
        """Coerce an int, rational, string or element of this ring."""
        pass

    @abc.abstractmethod
    def inverse(self, x):
        pass

    @abc.abstractmethod
    def sqrt(self, x):
        """A square root of ``x`` in the ring, or None when there is none (or none can be found)."""
        pass

    @abc.abstractmethod
    def random_element(self, rng: random.Random):
        pass

    @abc.abstractmethod
    def to_json(self, x):
        pass

    @abc.abstractmethod
    def from_json(self, obj):
        pass

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def is_zero(self, x) -> bool:
        return x == 0

    def divide(self, a, b):
        return a * self.inverse(b)


class RationalField(Ring):
    """The field Q, with ``gmpy2.mpq`` elements."""

    characteristic = 0
    is_field = True

    def __call__(self, value):
        if isinstance(value, str):
            return parse_rational(value)
        return gmpy2.mpq(value)

    def inverse(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / gmpy2.mpq(x)

    def sqrt(self, x):
        x = gmpy2.mpq(x)
        if x < 0:
            return None
        num, den = x.numerator, x.denominator
        if not (gmpy2.is_square(num) and gmpy2.is_square(den)):
            return None
        return gmpy2.mpq(gmpy2.isqrt(num), gmpy2.isqrt(den))

    def random_element(self, rng: random.Random, bound=50):
        """
        :param rng: (random.Random) the random source
        :param bound: (int) numerator in [-bound, bound], denominator in [1, bound]
        :return: (gmpy2.mpq)
        """
        return gmpy2.mpq(rng.randint(-bound, bound), rng.randint(1, bound))

    def to_json(self, x):
        return rational_to_str(x)

    def from_json(self, obj):
        return self(obj)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash('QQ')

    def __str__(self):
        return "QQ"

    def __repr__(self):
        return "RationalField()"


QQ = RationalField()


class ModInt:
    """
    An immutable residue modulo ``ring.modulus``.
    """
    __slots__ = ('value', 'ring')

    def __init__(self, value, ring):
        self.value = gmpy2.mpz(value) % ring.modulus
        self.ring = ring

    @property
    def modulus(self):
        return self.ring.modulus

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.ring.modulus != self.ring.modulus:
                raise ValueError(f"moduli differ: {self.ring.modulus} and {other.ring.modulus}")
            return other.value
        if isinstance(other, (int, MPZ_TYPE)):
            return other
        if isinstance(other, MPQ_TYPE):
            return self.ring(other).value
        return NotImplemented

    def _new(self, value):
        return ModInt(value, self.ring)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * self.ring.inverse(self._new(o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(o) * self.ring.inverse(self)

    def __neg__(self):
        return self._new(-self.value)

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        exponent = int(exponent)
        if exponent < 0:
            return self.ring.inverse(self) ** (-exponent)
        return self._new(gmpy2.powmod(self.value, exponent, self.ring.modulus))

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.ring.modulus == other.ring.modulus and self.value == other.value
        if isinstance(other, (int, MPZ_TYPE)):
            return self.value == other % self.ring.modulus
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((int(self.value), int(self.ring.modulus)))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return int(self.value)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"ModInt({self.value}, {self.ring.modulus})"


class IntegersModN(Ring):
    """
    The ring Z/nZ for an arbitrary modulus n >= 2; n is never assumed prime.
    """
    is_field = False

    def __init__(self, modulus):
        self.modulus = gmpy2.mpz(modulus)
        self._validate()

    @property
    def characteristic(self):
        return int(self.modulus)

    def __call__(self, value):
        if isinstance(value, ModInt):
            if value.ring.modulus != self.modulus:
                raise ValueError(f"cannot coerce a residue modulo {value.ring.modulus} into {self}")
            return ModInt(value.value, self)
        if isinstance(value, str):
            value = parse_rational(value)
        if isinstance(value, MPQ_TYPE):
            num = ModInt(value.numerator, self)
            if value.denominator == 1:
                return num
            return num * self.inverse(ModInt(value.denominator, self))
        return ModInt(value, self)

    def inverse(self, x):
        x = self(x)
        try:
            return ModInt(gmpy2.invert(x.value, self.modulus), self)
        except ZeroDivisionError:
            raise FactorSignal(gmpy2.gcd(x.value, self.modulus) if x.value else self.modulus, self.modulus)

    def sqrt(self, x):
        return None

    def random_element(self, rng: random.Random):
        return ModInt(rng.randrange(int(self.modulus)), self)

    def random_unit(self, rng: random.Random):
        """A random residue together with a check that it is a unit; a non-unit raises FactorSignal."""
        x = self.random_element(rng)
        self.inverse(x)
        return x

    def to_json(self, x):
        return {"value": str(self(x).value), "modulus": str(self.modulus)}

    def from_json(self, obj):
        if isinstance(obj, dict):
            if gmpy2.mpz(obj["modulus"]) != self.modulus:
                raise ValueError(f"modulus {obj['modulus']} does not match {self.modulus}")
            return ModInt(gmpy2.mpz(obj["value"]), self)
        return self(obj)

    def _validate(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")

    def __eq__(self, other):
        return isinstance(other, IntegersModN) and type(other) is type(self) and other.modulus == self.modulus

    def __hash__(self):
        return hash((self.__class__.__name__, int(self.modulus)))

    def __str__(self):
        return f"Z/{self.modulus}Z"

    def __repr__(self):
        return f"{self.__class__.__name__}({self.modulus})"


class PrimeField(IntegersModN):
    """
    The field F_p. Zero has no inverse (ZeroDivisionError); square roots come from sympy's ``sqrt_mod``.
    """
    is_field = True

    def _validate(self):
        super()._validate()
        if not gmpy2.is_prime(self.modulus):
            raise ValueError(f"{self.modulus} is not prime")

    def inverse(self, x):
        x = self(x)
        if x.value == 0:
            raise ZeroDivisionError(f"inverse of zero in {self}")
        return ModInt(gmpy2.invert(x.value, self.modulus), self)

    def is_square(self, x):
        x = self(x)
        return x.value == 0 or gmpy2.legendre(x.value, self.modulus) == 1

    def sqrt(self, x):
        x = self(x)
        if x.value == 0:
            return x
        root = sqrt_mod(int(x.value), int(self.modulus))
        if root is None:
            return None
        return ModInt(root, self)

    def elements(self):
        """Iterate over every element of the field."""
        for i in range(int(self.modulus)):
            yield ModInt(i, self)


def mod_inverse(a: ModInt):
    """
    Inverse of a residue, or the FactorSignal describing why there is none.

    :param a: (ModInt) the residue
    :return: (ModInt | FactorSignal)
    """
    try:
        return IntegersModN(a.modulus).inverse(a)
    except FactorSignal as signal:
        return signal


def ring_from_json(obj):
    """
    The ring an encoded scalar lives in: {"value", "modulus"} objects belong to Z/nZ, strings to Q.

    :param obj: (str | dict) an encoded scalar
    :return: (Ring)
    """
    if isinstance(obj, dict):
        return IntegersModN(gmpy2.mpz(obj["modulus"]))
    return QQ


__all__ = ['FactorSignal', 'Ring', 'RationalField', 'QQ', 'ModInt', 'IntegersModN', 'PrimeField',
           'mod_inverse', 'ring_from_json']
