"""Exact scalars: rationals, prime fields, and the nonnegative rational line
with a genuine infinity element.

Everything downstream (orders, slopes, thresholds) flows through these types,
so no floats anywhere.
"""

from fractions import Fraction


class SlopelabError(Exception):
    """Base class for every error this package raises on purpose."""


def is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeFieldElement:
    """A residue modulo a prime, with field arithmetic."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        if not is_prime(p):
            raise ValueError("modulus %r is not prime" % (p,))
        self.value = value % p
        self.p = p

    def _check(self, other):
        if isinstance(other, int):
            return PrimeFieldElement(other, self.p)
        if not isinstance(other, PrimeFieldElement) or other.p != self.p:
            raise TypeError("mixed moduli: %r vs %r" % (self, other))
        return other

    def __add__(self, other):
        other = self._check(other)
        return PrimeFieldElement(self.value + other.value, self.p)

    __radd__ = __add__

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __sub__(self, other):
        other = self._check(other)
        return PrimeFieldElement(self.value - other.value, self.p)

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        return PrimeFieldElement(self.value * other.value, self.p)

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.p)
        # Fermat; p is small everywhere we run
        return PrimeFieldElement(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._check(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return PrimeFieldElement(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.p
        return (isinstance(other, PrimeFieldElement)
                and self.p == other.p and self.value == other.value)

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "%d mod %d" % (self.value, self.p)


class RationalField:
    """Coefficient-field handle for characteristic 0."""

    char = 0

    def from_int(self, n):
        return Fraction(n)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(("Q",))

    def __repr__(self):
        return "Q"


class PrimeField:
    """Coefficient-field handle for F_p."""

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError("characteristic %r is not prime" % (p,))
        self.char = p

    def from_int(self, n):
        return PrimeFieldElement(n, self.char)

    @property
    def zero(self):
        return PrimeFieldElement(0, self.char)

    @property
    def one(self):
        return PrimeFieldElement(1, self.char)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.char == other.char

    def __hash__(self):
        return hash(("F", self.char))

    def __repr__(self):
        return "F_%d" % self.char


def field_of_characteristic(char):
    return RationalField() if char == 0 else PrimeField(char)


class ExtendedRational:
    """A value in Q>=0 together with INFINITY.

    Infinity is its own variant (no float('inf'), no magic sentinel int):
    it absorbs addition and is the unique maximum of the order.
    """

    __slots__ = ("_value",)

    def __init__(self, value=None, _inf=False):
        if _inf:
            self._value = None
            return
        v = Fraction(value)
        if v < 0:
            raise ValueError("ExtendedRational lives on Q>=0, got %s" % v)
        self._value = v

    @classmethod
    def infinity(cls):
        return cls(_inf=True)

    @property
    def is_infinite(self):
        return self._value is None

    @property
    def as_fraction(self):
        if self._value is None:
            raise ValueError("infinity has no fraction value")
        return self._value

    def __add__(self, other):
        other = _coerce(other)
        if self.is_infinite or other.is_infinite:
            return INF
        return ExtendedRational(self._value + other._value)

    __radd__ = __add__

    def __mul__(self, other):
        # scalar scaling, used for r * nubar and friends
        if isinstance(other, ExtendedRational):
            if self.is_infinite or other.is_infinite:
                if self == ZERO or other == ZERO:
                    raise ValueError("0 * infinity is undefined here")
                return INF
            return ExtendedRational(self._value * other._value)
        k = Fraction(other)
        if k < 0:
            raise ValueError("negative scaling leaves Q>=0")
        if self.is_infinite:
            if k == 0:
                raise ValueError("0 * infinity is undefined here")
            return INF
        return ExtendedRational(self._value * k)

    __rmul__ = __mul__

    def __truediv__(self, other):
        k = Fraction(other)
        if k <= 0:
            raise ValueError("division only by positive rationals")
        if self.is_infinite:
            return INF
        return ExtendedRational(self._value / k)

    def _cmp_key(self):
        # (1, _) for infinity so it compares above every finite value
        return (1, 0) if self.is_infinite else (0, self._value)

    def __lt__(self, other):
        return self._cmp_key() < _coerce(other)._cmp_key()

    def __le__(self, other):
        return self._cmp_key() <= _coerce(other)._cmp_key()

    def __gt__(self, other):
        return self._cmp_key() > _coerce(other)._cmp_key()

    def __ge__(self, other):
        return self._cmp_key() >= _coerce(other)._cmp_key()

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self._cmp_key() == other._cmp_key()

    def __hash__(self):
        return hash(self._cmp_key())

    def is_integer(self):
        return (not self.is_infinite) and self._value.denominator == 1

    def serialize(self):
        if self.is_infinite:
            return "inf"
        if self._value.denominator == 1:
            return str(self._value.numerator)
        return "%d/%d" % (self._value.numerator, self._value.denominator)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text == "inf":
            return INF
        if "/" in text:
            num, den = text.split("/", 1)
            return cls(Fraction(int(num), int(den)))
        return cls(int(text))

    def __repr__(self):
        return self.serialize()


def _coerce(x):
    if isinstance(x, ExtendedRational):
        return x
    return ExtendedRational(x)


INF = ExtendedRational.infinity()
ZERO = ExtendedRational(0)


def ext_add(a, b):
    return _coerce(a) + _coerce(b)


def ext_min(a, b):
    a, b = _coerce(a), _coerce(b)
    return a if a <= b else b
