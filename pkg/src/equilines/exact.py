"""Exact scalars: rationals and quadratic surds ``a + b*sqrt(d)``.

Rationals are plain :class:`fractions.Fraction` values. A :class:`QuadraticSurd`
keeps a single square-free radicand; mixing two different radicands in one
product or sum raises :class:`MixedRadicandError` instead of falling back to
floating point.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

__all__ = [
    "Rational",
    "QuadraticSurd",
    "MixedRadicandError",
    "Exact",
    "integer_sqrt",
    "sqrt_of_rational",
    "binomial",
    "simplify",
    "parse_exact",
    "format_exact",
]

Rational = Fraction


class MixedRadicandError(ArithmeticError):
    """Raised when an operation would need two distinct square-free radicands."""


def integer_sqrt(x: int) -> tuple[int, bool]:
    """Return ``(floor(sqrt(x)), is_perfect_square)``."""
    if x < 0:
        raise ValueError(f"integer_sqrt of negative number {x}")
    root = math.isqrt(x)
    return root, root * root == x


def binomial(n: int, k: int) -> int:
    return math.comb(n, k)


def _square_split(d: int) -> tuple[int, int]:
    # d == s*s*f with f square-free. After stripping every prime p with
    # p**3 <= rest, the cofactor has at most two prime factors, so its
    # square part is nontrivial only when it is itself a perfect square.
    s, f, rest, p = 1, 1, d, 2
    while p * p * p <= rest:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            f *= p
        p += 1 if p == 2 else 2
    root, exact = integer_sqrt(rest)
    if exact:
        s *= root
    else:
        f *= rest
    return s, f


class QuadraticSurd:
    """The number ``rational_part + coefficient * sqrt(radicand)``.

    Values are normalized on construction: square factors move out of the
    radicand, and a zero coefficient or a radicand of 0 or 1 collapses the
    value to a pure rational (stored with radicand 0).
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, rational_part=0, coefficient=0, radicand: int = 0):
        a = Fraction(rational_part)
        b = Fraction(coefficient)
        d = int(radicand)
        if d < 0:
            raise ValueError("radicand must be nonnegative")
        if not b or d == 0:
            b, d = Fraction(0), 0
        else:
            s, d = _square_split(d)
            b *= s
            if d == 1:
                a, b, d = a + b, Fraction(0), 0
        self._a, self._b, self._d = a, b, d

    @property
    def rational_part(self) -> Fraction:
        return self._a

    @property
    def coefficient(self) -> Fraction:
        return self._b

    @property
    def radicand(self) -> int:
        return self._d

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self._a

    def conjugate(self) -> QuadraticSurd:
        return QuadraticSurd(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Field norm ``a**2 - b**2 * d``; zero only for the zero surd."""
        return self._a * self._a - self._b * self._b * self._d

    def sign(self) -> int:
        a, b, d = self._a, self._b, self._d
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0 or sa == sb:
            return sa if sa else sb
        if sa == 0:
            return sb
        # opposite signs: compare a**2 against b**2*d
        lhs, rhs = a * a, b * b * d
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def square(self) -> QuadraticSurd:
        return self * self

    # arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(value) -> QuadraticSurd | None:
        if isinstance(value, QuadraticSurd):
            return value
        if isinstance(value, (int, Fraction)):
            return QuadraticSurd(value)
        return None

    def _radicand_with(self, other: QuadraticSurd) -> int:
        if self._d == 0:
            return other._d
        if other._d == 0 or other._d == self._d:
            return self._d
        raise MixedRadicandError(
            f"cannot combine sqrt({self._d}) with sqrt({other._d})"
        )

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._radicand_with(o)
        return QuadraticSurd(self._a + o._a, self._b + o._b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._radicand_with(o)
        a = self._a * o._a + self._b * o._b * d
        b = self._a * o._b + self._b * o._a
        return QuadraticSurd(a, b, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero surd")
        top = self * o.conjugate()
        return QuadraticSurd(top._a / n, top._b / n, top._d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self._a, self._b, self._d) == (o._a, o._b, o._d)

    def __hash__(self):
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def _cmp(self, other) -> int | None:
        o = self._coerce(other)
        if o is None:
            return None
        return (self - o).sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __bool__(self):
        return bool(self._a) or bool(self._b)

    def __float__(self):
        return float(self._a) + float(self._b) * math.sqrt(self._d)

    def __str__(self):
        if self.is_rational:
            return str(self._a)
        return f"{self._a} + {self._b}*sqrt({self._d})"

    def __repr__(self):
        return f"QuadraticSurd('{self}')"


Exact = Union[Fraction, QuadraticSurd]


def simplify(x) -> Exact:
    """Collapse a rational surd to a Fraction; pass anything else through."""
    if isinstance(x, QuadraticSurd):
        return x._a if x.is_rational else x
    if isinstance(x, int):
        return Fraction(x)
    return x


def sqrt_of_rational(x) -> QuadraticSurd:
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"square root of negative rational {x}")
    p, q = x.numerator, x.denominator
    # sqrt(p/q) = sqrt(p*q)/q
    return QuadraticSurd(0, Fraction(1, q), p * q) if p else QuadraticSurd(0)


_SURD_RE = re.compile(
    r"""^\s*
    (?:(?P<a>[-+]?\d+(?:/\d+)?)\s*(?P<op>[-+])\s*)?
    (?:(?P<b>[-+]?\d+(?:/\d+)?)\s*\*\s*)?
    sqrt\(\s*(?P<d>\d+)\s*\)\s*$""",
    re.VERBOSE,
)


def parse_exact(text: str) -> Exact:
    """Parse ``"p/q"``, ``"p"``, or ``"p/q + r/s*sqrt(d)"``."""
    m = _SURD_RE.match(text)
    if m is None:
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact value: {text!r}") from exc
    a = Fraction(m["a"]) if m["a"] else Fraction(0)
    b = Fraction(m["b"]) if m["b"] else Fraction(1)
    if m["op"] == "-":
        b = -b
    return simplify(QuadraticSurd(a, b, int(m["d"])))


def format_exact(x) -> str:
    return str(simplify(x))
