"""Exact commutative coefficient rings.

A :class:`Ring` describes one of three exact rings (big integers, rationals,
integers mod n) and performs arithmetic on *raw* values: Python ``int`` for
the integer and modular rings, :class:`fractions.Fraction` for the rationals.
The algebra modules store raw values in their term maps for speed and keep a
reference to the ring.  :class:`Coeff` is the checked, user-facing wrapper.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

INT = "int"
RAT = "rat"
MOD = "mod"


class RingMismatchError(ValueError):
    """Operands belong to different coefficient rings."""


@dataclass(frozen=True)
class Ring:
    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in (INT, RAT, MOD):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == MOD:
            if self.modulus is None or self.modulus < 2:
                raise ValueError("integers-mod-n needs a modulus n >= 2")
        elif self.modulus is not None:
            raise ValueError(f"ring kind {self.kind!r} takes no modulus")

    def __str__(self):
        return f"mod:{self.modulus}" if self.kind == MOD else self.kind

    # -- raw arithmetic -------------------------------------------------

    def coerce(self, value: Any):
        """Map an int, Fraction or :class:`Coeff` into this ring's raw form."""
        if isinstance(value, Coeff):
            if value.ring != self:
                raise RingMismatchError(f"{value.ring} element used in {self}")
            return value.value
        if isinstance(value, bool):
            value = int(value)
        if self.kind == INT:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError(f"{value} is not an integer")
                return int(value.numerator)
            if isinstance(value, int):
                return value
        elif self.kind == RAT:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
        else:
            if isinstance(value, Fraction):
                den = value.denominator % self.modulus
                if math.gcd(den, self.modulus) != 1:
                    raise ValueError(f"{value} has no image in {self}")
                return value.numerator * pow(den, -1, self.modulus) % self.modulus
            if isinstance(value, int):
                return value % self.modulus
        raise TypeError(f"cannot coerce {value!r} into {self}")

    @property
    def zero(self):
        return Fraction(0) if self.kind == RAT else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == RAT else 1

    def add(self, a, b):
        if self.kind == MOD:
            return (a + b) % self.modulus
        return a + b

    def sub(self, a, b):
        if self.kind == MOD:
            return (a - b) % self.modulus
        return a - b

    def neg(self, a):
        if self.kind == MOD:
            return -a % self.modulus
        return -a

    def mul(self, a, b):
        if self.kind == MOD:
            return a * b % self.modulus
        return a * b

    def pow(self, a, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        if self.kind == MOD:
            return pow(a, e, self.modulus)
        return a**e

    def is_zero(self, a) -> bool:
        return a == 0

    def binomial(self, n: int, k: int):
        if k < 0 or n < 0 or k > n:
            return self.zero
        return self.coerce(math.comb(n, k))

    # -- text ---------------------------------------------------------------

    def parse(self, text: str):
        """Parse a literal such as ``-1``, ``2/3`` or ``3`` in this ring."""
        m = re.fullmatch(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*", text)
        if not m:
            raise ValueError(f"malformed coefficient {text!r}")
        num = int(m.group(1))
        if m.group(2) is None:
            return self.coerce(num)
        den = int(m.group(2))
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return self.coerce(Fraction(num, den))

    def format(self, a) -> str:
        return str(a)


BIG_INT = Ring(INT)
RATIONAL = Ring(RAT)


def integers_mod(n: int) -> Ring:
    return Ring(MOD, n)


def parse_ring(text: str) -> Ring:
    """Parse the ring selector used on the command line: ``int``, ``rat``, ``mod:<n>``."""
    text = text.strip()
    if text == INT:
        return BIG_INT
    if text == RAT:
        return RATIONAL
    m = re.fullmatch(r"mod:(\d+)", text)
    if m:
        return integers_mod(int(m.group(1)))
    raise ValueError(f"unknown ring {text!r} (expected int, rat or mod:<n>)")


@dataclass(frozen=True)
class Coeff:
    """An element of a coefficient ring, compared and combined exactly."""

    ring: Ring
    value: Any = field(compare=False)

    def __post_init__(self):
        object.__setattr__(self, "value", self.ring.coerce(self.value))

    def _other(self, other):
        if isinstance(other, Coeff):
            if other.ring != self.ring:
                raise RingMismatchError(f"cannot combine {self.ring} and {other.ring}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.ring.coerce(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Coeff(self.ring, self.ring.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Coeff(self.ring, self.ring.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Coeff(self.ring, self.ring.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Coeff(self.ring, self.ring.mul(self.value, b))

    __rmul__ = __mul__

    def __neg__(self):
        return Coeff(self.ring, self.ring.neg(self.value))

    def __pow__(self, e: int):
        return Coeff(self.ring, self.ring.pow(self.value, e))

    def __eq__(self, other):
        if isinstance(other, Coeff):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self.value == self.ring.coerce(other)
            except ValueError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __bool__(self):
        return not self.ring.is_zero(self.value)

    def __int__(self):
        if self.ring.kind == RAT and self.value.denominator != 1:
            raise ValueError(f"{self.value} is not an integer")
        return int(self.value)

    def __str__(self):
        return self.ring.format(self.value)

    def __repr__(self):
        return f"Coeff({self.ring}, {self.value})"


def zero(ring: Ring) -> Coeff:
    return Coeff(ring, ring.zero)


def one(ring: Ring) -> Coeff:
    return Coeff(ring, ring.one)


def binomial(n: int, k: int, ring: Ring = BIG_INT) -> Coeff:
    """``n choose k`` as a ring element; zero when ``k > n``."""
    return Coeff(ring, ring.binomial(n, k))


@dataclass(frozen=True)
class Weight:
    """The fixed scalar lambda used by every mixable shuffle product."""

    value: Coeff

    @classmethod
    def of(cls, ring: Ring, value) -> "Weight":
        if isinstance(value, str):
            value = ring.parse(value)
        return cls(Coeff(ring, value))

    @property
    def ring(self) -> Ring:
        return self.value.ring

    @property
    def raw(self):
        return self.value.value

    def __str__(self):
        return str(self.value)


class LambdaPolynomials:
    """Polynomials in a formal weight over a base ring, as coefficient tuples.

    Substitutes for a :class:`Ring` inside the product routines so that the
    power of lambda attached to each term stays visible.  ``gen`` is lambda
    itself.  Tuples carry no trailing zeros.
    """

    kind = "lambda-poly"

    def __init__(self, base: Ring):
        self.base = base

    def __eq__(self, other):
        return isinstance(other, LambdaPolynomials) and other.base == self.base

    def __hash__(self):
        return hash(("lambda-poly", self.base))

    def __str__(self):
        return f"{self.base}[lambda]"

    def _trim(self, a):
        a = list(a)
        while a and self.base.is_zero(a[-1]):
            a.pop()
        return tuple(a)

    def coerce(self, value):
        if isinstance(value, tuple):
            return self._trim(self.base.coerce(v) for v in value)
        return self._trim((self.base.coerce(value),))

    @property
    def zero(self):
        return ()

    @property
    def one(self):
        return (self.base.one,)

    @property
    def gen(self):
        return (self.base.zero, self.base.one)

    def add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = self.base.add(out[i], c)
        return self._trim(out)

    def neg(self, a):
        return tuple(self.base.neg(c) for c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return ()
        out = [self.base.zero] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            for j, d in enumerate(b):
                out[i + j] = self.base.add(out[i + j], self.base.mul(c, d))
        return self._trim(out)

    def pow(self, a, e: int):
        out = self.one
        for _ in range(e):
            out = self.mul(out, a)
        return out

    def is_zero(self, a) -> bool:
        return not a

    def binomial(self, n, k):
        return self.coerce(self.base.binomial(n, k))

    def format(self, a) -> str:
        parts = [f"{c}*lambda^{i}" for i, c in enumerate(a) if not self.base.is_zero(c)]
        return " + ".join(parts) or "0"
