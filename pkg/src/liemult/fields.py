"""Exact scalar fields: arbitrary-precision rationals and odd prime fields.

Rational scalars are plain ``fractions.Fraction`` values (always lowest terms,
positive denominator).  Prime-field scalars are ``PrimeFieldElement`` wrappers
holding a residue in [0, p).  Both kinds support +, -, *, /, unary - and
truthiness, so all linear algebra and bracket code downstream is field
agnostic.

Characteristic 2 is deliberately locked: ``PrimeField(2)`` requires the
``allow_char_two`` override, and the theorem-verification entry points reject
such fields outright.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import BadScalarLiteral, FieldMismatch, FieldSpecError

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_INTEGER_RE = re.compile(r"^[+-]?\d+$")
_FIELD_SPEC_RE = re.compile(r"^GF\((\d+)\)$")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """The rational numbers.  Use the module singleton ``QQ``."""

    tag = "Q"
    characteristic = 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def element(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise FieldMismatch(f"cannot coerce {value!r} into Q")

    def parse(self, text: str) -> Fraction:
        text = text.strip()
        if not _RATIONAL_RE.match(text):
            raise BadScalarLiteral(f"{text!r} is not a rational literal (use p/q or an integer)")
        value = text.split("/")
        if len(value) == 2 and int(value[1]) == 0:
            raise BadScalarLiteral(f"{text!r} has a zero denominator")
        return Fraction(text)

    def __repr__(self):
        return "Q"

    __str__ = __repr__

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")


class PrimeFieldElement:
    """A residue modulo an odd prime (or 2 under the unsafe override)."""

    __slots__ = ("p", "v")

    def __init__(self, p: int, v: int):
        self.p = p
        self.v = v % p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise FieldMismatch(f"GF({self.p}) vs GF({other.p}) operands")
            return other
        if isinstance(other, int):
            return PrimeFieldElement(self.p, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.p, self.v + o.v)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.p, self.v - o.v)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.p, o.v - self.v)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.p, self.v * o.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.v == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return PrimeFieldElement(self.p, self.v * pow(o.v, -1, self.p))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return PrimeFieldElement(self.p, -self.v)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash(self.v)

    def __repr__(self):
        return f"{self.v}"


class PrimeField:
    """GF(p) for an odd prime p; p = 2 only behind ``allow_char_two``."""

    def __init__(self, p: int, allow_char_two: bool = False):
        if not isinstance(p, int) or not _is_prime(p):
            raise FieldSpecError(f"modulus {p} is not prime")
        if p == 2 and not allow_char_two:
            raise FieldSpecError(
                "characteristic 2 requires the explicit unsafe-char-2 override"
            )
        self.p = p

    @property
    def tag(self) -> str:
        return f"GF({self.p})"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self) -> PrimeFieldElement:
        return PrimeFieldElement(self.p, 0)

    @property
    def one(self) -> PrimeFieldElement:
        return PrimeFieldElement(self.p, 1)

    def element(self, value) -> PrimeFieldElement:
        if isinstance(value, PrimeFieldElement):
            if value.p != self.p:
                raise FieldMismatch(f"GF({value.p}) element given to GF({self.p})")
            return value
        if isinstance(value, int):
            return PrimeFieldElement(self.p, value)
        if isinstance(value, str):
            return self.parse(value)
        raise FieldMismatch(f"cannot coerce {value!r} into GF({self.p})")

    def parse(self, text: str) -> PrimeFieldElement:
        text = text.strip()
        if not _INTEGER_RE.match(text):
            if _RATIONAL_RE.match(text):
                raise BadScalarLiteral(
                    f"rational literal {text!r} is not allowed over GF({self.p})"
                )
            raise BadScalarLiteral(f"{text!r} is not an integer literal")
        return PrimeFieldElement(self.p, int(text))

    def __repr__(self):
        return self.tag

    __str__ = __repr__

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


QQ = RationalField()


def parse_field_spec(text: str, allow_char_two: bool = False):
    """Parse a field descriptor: ``Q`` or ``GF(p)``."""
    text = text.strip()
    if text == "Q":
        return QQ
    m = _FIELD_SPEC_RE.match(text)
    if m:
        return PrimeField(int(m.group(1)), allow_char_two=allow_char_two)
    raise FieldSpecError(f"unrecognized field spec {text!r} (use Q or GF(p))")
