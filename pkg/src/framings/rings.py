"""Exact arithmetic over the coefficient rings Z, Q and Z/m.

Raw elements are plain Python ints (Z, Z/m) or ints/Fractions (Q); Ring
bundles normalization and arithmetic on raw values, Scalar is the public
value-with-ring wrapper used at API boundaries.  No floating point
appears anywhere: all identities checked downstream are exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Union

from .errors import InvalidModulus, NotInvertible, ParseError, RingMismatch

Raw = Union[int, Fraction]

_MOD_RE = re.compile(r"\A\s*Z\s*/\s*([0-9]+)\s*\Z")
_INT_RE = re.compile(r"\A[+-]?[0-9]+\Z")
_FRAC_RE = re.compile(r"\A([+-]?[0-9]+)\s*/\s*([0-9]+)\Z")


class Ring:
    """Integers, rationals, or integers mod m (m >= 2), with exact raw ops."""

    __slots__ = ("kind", "modulus")

    def __init__(self, kind: str, modulus: int | None = None):
        if kind not in ("Z", "Q", "mod"):
            raise ValueError(f"unknown ring kind {kind!r}")
        if kind == "mod":
            if not isinstance(modulus, int) or modulus < 2:
                raise InvalidModulus(f"modulus must be an integer >= 2, got {modulus!r}")
        elif modulus is not None:
            raise ValueError("modulus is only meaningful for Z/m")
        self.kind = kind
        self.modulus = modulus

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.kind == other.kind
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.kind, self.modulus))

    def __repr__(self):
        return f"Ring({str(self)!r})"

    def __str__(self):
        if self.kind == "mod":
            return f"Z/{self.modulus}"
        return self.kind

    @property
    def characteristic(self) -> int:
        return self.modulus if self.kind == "mod" else 0

    # -- raw-element arithmetic -------------------------------------------

    def normalize(self, value: Raw) -> Raw:
        if self.kind == "mod":
            return int(value) % self.modulus
        if self.kind == "Z":
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError(f"{value} is not an integer")
                return int(value)
            return int(value)
        # Q: ints stay ints, Fractions auto-reduce; denominator-1 collapses to int
        if isinstance(value, Fraction) and value.denominator == 1:
            return int(value)
        return value

    def from_int(self, n: int) -> Raw:
        return self.normalize(n)

    def add(self, a: Raw, b: Raw) -> Raw:
        return self.normalize(a + b)

    def sub(self, a: Raw, b: Raw) -> Raw:
        return self.normalize(a - b)

    def neg(self, a: Raw) -> Raw:
        return self.normalize(-a)

    def mul(self, a: Raw, b: Raw) -> Raw:
        return self.normalize(a * b)

    def is_zero(self, a: Raw) -> bool:
        return self.normalize(a) == 0

    def is_unit(self, a: Raw) -> bool:
        a = self.normalize(a)
        if self.kind == "Q":
            return a != 0
        if self.kind == "Z":
            return a in (1, -1)
        return gcd(a, self.modulus) == 1

    def inv(self, a: Raw) -> Raw:
        a = self.normalize(a)
        if not self.is_unit(a):
            raise NotInvertible(f"{self.str_of(a)} is not invertible in {self}")
        if self.kind == "Q":
            return self.normalize(Fraction(1, 1) / Fraction(a))
        if self.kind == "Z":
            return a  # +-1 are self-inverse
        return pow(a, -1, self.modulus)

    def str_of(self, a: Raw) -> str:
        return str(self.normalize(a))

    def parse_el(self, text: str) -> Raw:
        s = text.strip()
        if _INT_RE.match(s):
            return self.normalize(int(s))
        if self.kind == "Q":
            m = _FRAC_RE.match(s)
            if m and int(m.group(2)) != 0:
                return self.normalize(Fraction(int(m.group(1)), int(m.group(2))))
        raise ParseError(f"cannot parse {text!r} as an element of {self}")

    def scalar(self, value: Raw) -> "Scalar":
        return Scalar(self, self.normalize(value))


INTEGERS = Ring("Z")
RATIONALS = Ring("Q")


def mod_ring(m: int) -> Ring:
    return Ring("mod", m)


def ring_from_string(text: str) -> Ring:
    """Parse the ring grammar ``Z | Q | Z/<m>`` (m >= 2)."""
    s = text.strip()
    if s == "Z":
        return INTEGERS
    if s == "Q":
        return RATIONALS
    m = _MOD_RE.match(s)
    if m:
        return mod_ring(int(m.group(1)))
    raise ParseError(f"cannot parse ring {text!r}; expected Z, Q or Z/<m>")


class Scalar:
    """An element of a specific coefficient ring, stored canonically."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value: Raw):
        self.ring = ring
        self.value = ring.normalize(value)

    def _coerce(self, other) -> Raw:
        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise RingMismatch(f"cannot combine {self.ring} with {other.ring}")
            return other.value
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Scalar(self.ring, self.ring.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Scalar(self.ring, self.ring.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Scalar(self.ring, self.ring.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Scalar(self.ring, self.ring.mul(self.value, v))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.ring, self.ring.neg(self.value))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ring.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Scalar({self.ring}, {self.value})"

    def __str__(self):
        return self.ring.str_of(self.value)

    def is_invertible(self) -> bool:
        return self.ring.is_unit(self.value)

    def inverse(self) -> "Scalar":
        return Scalar(self.ring, self.ring.inv(self.value))


def from_integer(ring: Ring, n: int) -> Scalar:
    """The unit-induced map Z -> K applied to n."""
    return ring.scalar(n)
