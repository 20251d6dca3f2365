"""Exact arithmetic: rationals and the quadratic field Q(sqrt 5).

Rationals are plain :class:`fractions.Fraction` values (always reduced,
positive denominator, zero stored as 0/1).  :class:`QuadRat` holds
``(a + b*sqrt5)/d`` in lowest terms and never touches floating point.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "BigRational",
    "ExactDivisionError",
    "QuadRat",
    "SQRT5",
    "PHI",
    "rat_div",
    "rat_cmp",
    "format_rational",
    "parse_rational",
    "quad_from_rational",
    "quad_to_decimal",
    "quad_to_scientific",
]

BigRational = Fraction


class ExactDivisionError(ZeroDivisionError):
    """Division by an exact zero; the message names the operands."""


def rat_div(x, y) -> Fraction:
    x, y = Fraction(x), Fraction(y)
    if y == 0:
        raise ExactDivisionError(f"division by zero: {format_rational(x)} / 0")
    return x / y


def rat_cmp(x, y) -> int:
    """Three-way comparison, -1/0/1."""
    x, y = Fraction(x), Fraction(y)
    return (x > y) - (x < y)


def format_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


_RAT_RE = re.compile(r"^\s*(-?\d+)/(\d+)\s*$")
_QUAD_RE = re.compile(r"^\s*\((-?\d+)([+-])(\d+)\*sqrt5\)/(\d+)\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q``.  Plain integers and decimals are rejected."""
    match = _RAT_RE.match(text)
    if not match:
        raise ValueError(f"not a rational of the form p/q: {text!r}")
    num, den = int(match.group(1)), int(match.group(2))
    if den == 0:
        raise ExactDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


class QuadRat:
    """Element ``(a + b*sqrt5)/d`` of Q(sqrt 5), kept in lowest terms.

    Instances are immutable and hashable.  Ordering is exact: the sign of
    ``a + b*sqrt5`` is read off the signs of ``a`` and ``b`` and, when they
    differ, by comparing ``a*a`` with ``5*b*b``.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a: int = 0, b: int = 0, d: int = 1):
        if d == 0:
            raise ExactDivisionError("QuadRat with zero denominator")
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(a, b, d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        if a == 0 and b == 0:
            d = 1
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadRat is immutable")

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    # -- construction -------------------------------------------------------

    @classmethod
    def coerce(cls, x) -> "QuadRat":
        if isinstance(x, QuadRat):
            return x
        if isinstance(x, int):
            return cls(x, 0, 1)
        if isinstance(x, Rational):
            return cls(x.numerator, 0, x.denominator)
        raise TypeError(f"cannot embed {type(x).__name__} in Q(sqrt5)")

    @classmethod
    def parse(cls, text: str) -> "QuadRat":
        match = _QUAD_RE.match(text)
        if match:
            a = int(match.group(1))
            b = int(match.group(3)) * (1 if match.group(2) == "+" else -1)
            d = int(match.group(4))
            if d == 0:
                raise ExactDivisionError(f"zero denominator in {text!r}")
            return cls(a, b, d)
        return cls.coerce(parse_rational(text))

    # -- predicates and conversions ------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    def to_fraction(self) -> Fraction:
        if self._b:
            raise ValueError(f"{self} is irrational")
        return Fraction(self._a, self._d)

    def sign(self) -> int:
        a, b = self._a, self._b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sa == 0 or sa == sb:
            return sb if sa == 0 else sa
        if sb == 0:
            return sa
        # mixed signs: the term of larger magnitude wins; a*a == 5*b*b is
        # impossible for nonzero integers since sqrt5 is irrational
        return sa if a * a > 5 * b * b else sb

    def conj(self) -> "QuadRat":
        return QuadRat(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Field norm ``x * conj(x)``, a rational."""
        return Fraction(self._a * self._a - 5 * self._b * self._b, self._d * self._d)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        try:
            o = QuadRat.coerce(other)
        except TypeError:
            return NotImplemented
        if self._d == o._d:
            return QuadRat(self._a + o._a, self._b + o._b, self._d)
        return QuadRat(self._a * o._d + o._a * self._d,
                       self._b * o._d + o._b * self._d,
                       self._d * o._d)

    __radd__ = __add__

    def __neg__(self):
        return QuadRat(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = QuadRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = QuadRat.coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        try:
            o = QuadRat.coerce(other)
        except TypeError:
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        return QuadRat(a1 * a2 + 5 * b1 * b2, a1 * b2 + a2 * b1, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadRat":
        a, b, d = self._a, self._b, self._d
        den = a * a - 5 * b * b
        if den == 0:
            raise ExactDivisionError("division by zero in Q(sqrt5)")
        # d/(a + b r) = d (a - b r) / (a^2 - 5 b^2)
        return QuadRat(d * a, -d * b, den)

    def __truediv__(self, other):
        try:
            o = QuadRat.coerce(other)
        except TypeError:
            return NotImplemented
        if o._a == 0 and o._b == 0:
            raise ExactDivisionError(f"division by zero: {self} / 0")
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = QuadRat.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadRat(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- comparison -----------------------------------------------------------

    def cmp(self, other) -> int:
        return (self - QuadRat.coerce(other)).sign()

    def __eq__(self, other):
        try:
            o = QuadRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __lt__(self, other):
        return self.cmp(other) < 0

    def __le__(self, other):
        return self.cmp(other) <= 0

    def __gt__(self, other):
        return self.cmp(other) > 0

    def __ge__(self, other):
        return self.cmp(other) >= 0

    def __bool__(self):
        return self._a != 0 or self._b != 0

    # -- rendering ------------------------------------------------------------

    def __str__(self):
        if self._b == 0:
            return f"{self._a}/{self._d}"
        op = "+" if self._b > 0 else "-"
        return f"({self._a}{op}{abs(self._b)}*sqrt5)/{self._d}"

    def __repr__(self):
        return f"QuadRat({self._a}, {self._b}, {self._d})"


SQRT5 = QuadRat(0, 1, 1)
PHI = QuadRat(1, 1, 2)


def quad_from_rational(x) -> QuadRat:
    return QuadRat.coerce(Fraction(x))


def _floor_scaled(x: QuadRat, scale: int) -> int:
    """floor(x * scale) for a positive integer ``scale``."""
    a, b, d = x.a, x.b, x.d
    if b == 0:
        return (a * scale) // d
    # b*sqrt5*scale is irrational; its floor comes from an integer sqrt
    root = math.isqrt(5 * b * b * scale * scale)
    t = root if b > 0 else -root - 1
    return (a * scale + t) // d


def _round_scaled(x: QuadRat, scale: int) -> int:
    """x * scale rounded to the nearest integer, ties to even."""
    if x.is_rational:
        return round(x.to_fraction() * scale)
    # irrational values never sit exactly on a tie
    return (_floor_scaled(x, 2 * scale) + 1) // 2


def quad_to_decimal(x, digits: int) -> str:
    """Render ``x`` with exactly ``digits`` fractional digits, correctly rounded."""
    if digits < 0 or digits > 10000:
        raise ValueError("digits must lie in [0, 10000]")
    x = QuadRat.coerce(x)
    value = _round_scaled(x, 10 ** digits)
    sign = "-" if value < 0 else ""
    value = abs(value)
    if digits == 0:
        return f"{sign}{value}"
    whole, frac = divmod(value, 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def quad_to_scientific(x, significant: int = 6) -> str:
    """Render ``x`` as ``d.ddddde-NN`` with exact rounding; zero gives ``0``."""
    x = QuadRat.coerce(x)
    if not x:
        return "0"
    sign = "-" if x.sign() < 0 else ""
    x = abs(x)
    # estimate the decimal exponent, then correct it exactly
    approx_bits = max(abs(x.a), abs(x.b) * 3).bit_length() - x.d.bit_length()
    exp = math.floor(approx_bits * math.log10(2))
    while x < QuadRat.coerce(Fraction(10) ** exp):
        exp -= 1
    while x >= QuadRat.coerce(Fraction(10) ** (exp + 1)):
        exp += 1
    shift = significant - 1 - exp
    scaled = x * QuadRat.coerce(Fraction(10) ** shift)
    mantissa = _round_scaled(scaled, 1)
    if mantissa >= 10 ** significant:
        mantissa //= 10
        exp += 1
    digits = str(mantissa)
    body = digits[0] + ("." + digits[1:] if len(digits) > 1 else "")
    return f"{sign}{body}e{exp:+03d}"
