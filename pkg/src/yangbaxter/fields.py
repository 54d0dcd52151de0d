"""Exact coefficient fields and their elements.

Three fields are supported, each with fully exact arithmetic:

* the rationals, backed by arbitrary-precision ``fractions.Fraction``;
* prime fields GF(p), elements stored as canonical residues in ``[0, p)``;
* quadratic extensions Q(s) with ``s**2 = a`` for a rational non-square
  ``a``, elements stored as ``c0 + c1*s`` with rational ``c0``, ``c1``.

Scalars are immutable, hashable and compare by canonical representation,
so equality is always decidable and deterministic.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import DegenerateExtensionError, FieldError, FieldMismatchError, ParseError

RAT = "rat"
GF = "gf"
QUAD = "quad"

_RAT_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")
_INT_RE = re.compile(r"^[+-]?\d+$")
# c0 +/- c1*s, with either part optional but not both absent
_QUAD_RE = re.compile(
    r"^(?P<c0>[+-]?\d+(?:/[1-9]\d*)?)?"
    r"(?:(?P<sign>[+-])?(?P<c1>\d+(?:/[1-9]\d*)?)\*s)?$"
)


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


def _rational_sqrt(a: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None if it is not a square."""
    if a < 0:
        return None
    rn = math.isqrt(a.numerator)
    rd = math.isqrt(a.denominator)
    if rn * rn == a.numerator and rd * rd == a.denominator:
        return Fraction(rn, rd)
    return None


class Field:
    """A coefficient field: rationals, GF(p) or a quadratic extension of Q."""

    __slots__ = ("kind", "p", "radicand")

    def __init__(self, kind: str, p: int | None = None, radicand: Fraction | None = None):
        self.kind = kind
        self.p = p
        self.radicand = radicand
        if kind == GF:
            if p is None or not _is_prime(p):
                raise FieldError(f"modulus must be prime, got {p!r}")
        elif kind == QUAD:
            if radicand is None:
                raise FieldError("quadratic extension needs a radicand")
            if _rational_sqrt(radicand) is not None:
                raise DegenerateExtensionError(
                    f"radicand {radicand} is a square in Q; the extension is degenerate"
                )
        elif kind != RAT:
            raise FieldError(f"unknown field kind {kind!r}")

    @classmethod
    def rationals(cls) -> "Field":
        return cls(RAT)

    @classmethod
    def gf(cls, p: int) -> "Field":
        return cls(GF, p=p)

    @classmethod
    def quadratic(cls, a) -> "Field":
        return cls(QUAD, radicand=Fraction(a))

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == GF else 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and self.kind == other.kind
            and self.p == other.p
            and self.radicand == other.radicand
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.p, self.radicand))

    def __repr__(self) -> str:
        return f"Field({self.spec()!r})"

    def spec(self) -> str:
        """The textual field tag used by the matrix file format."""
        if self.kind == RAT:
            return "rat"
        if self.kind == GF:
            return f"gf:{self.p}"
        return f"quad:{self.radicand}"

    @classmethod
    def from_spec(cls, text: str) -> "Field":
        text = text.strip()
        if text == "rat":
            return cls.rationals()
        if text.startswith("gf:"):
            body = text[3:]
            if not _INT_RE.match(body):
                raise ParseError(f"bad prime field spec {text!r}")
            return cls.gf(int(body))
        if text.startswith("quad:"):
            body = text[5:]
            if not _RAT_RE.match(body):
                raise ParseError(f"bad quadratic field spec {text!r}")
            return cls.quadratic(Fraction(body))
        raise ParseError(f"unknown field spec {text!r}")

    # -- element construction -------------------------------------------------

    def scalar(self, value) -> "Scalar":
        """Coerce an int, Fraction, Scalar or (c0, c1) pair into this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"scalar from {value.field.spec()} used in {self.spec()}")
            return value
        if self.kind == GF:
            if isinstance(value, Fraction):
                if value.denominator == 1:
                    value = value.numerator
                else:
                    num = value.numerator % self.p
                    den = value.denominator % self.p
                    if den == 0:
                        raise FieldError(f"denominator of {value} vanishes mod {self.p}")
                    return Scalar(self, num * pow(den, -1, self.p) % self.p)
            if not isinstance(value, int):
                raise FieldError(f"cannot coerce {value!r} into {self.spec()}")
            return Scalar(self, value % self.p)
        if self.kind == RAT:
            if isinstance(value, (int, Fraction)):
                return Scalar(self, Fraction(value))
            raise FieldError(f"cannot coerce {value!r} into {self.spec()}")
        # quadratic
        if isinstance(value, (int, Fraction)):
            return Scalar(self, (Fraction(value), Fraction(0)))
        if isinstance(value, tuple) and len(value) == 2:
            return Scalar(self, (Fraction(value[0]), Fraction(value[1])))
        raise FieldError(f"cannot coerce {value!r} into {self.spec()}")

    def zero(self) -> "Scalar":
        return self.scalar(0)

    def one(self) -> "Scalar":
        return self.scalar(1)

    def symbol(self) -> "Scalar":
        """The adjoined square root s of a quadratic extension."""
        if self.kind != QUAD:
            raise FieldError(f"{self.spec()} has no adjoined symbol")
        return Scalar(self, (Fraction(0), Fraction(1)))

    def elements(self):
        """All field elements; only available for prime fields."""
        if self.kind != GF:
            raise FieldError(f"cannot enumerate {self.spec()}")
        for v in range(self.p):
            yield Scalar(self, v)

    def sqrt(self, s: "Scalar") -> "Scalar | None":
        """An exact square root of ``s`` in this field, or None.

        Prime fields are searched exhaustively; they stay tiny here.
        In a quadratic extension a rational element has a root exactly
        when it or its quotient by the radicand is a rational square.
        """
        s = self.scalar(s)
        if self.kind == RAT:
            r = _rational_sqrt(s.v)
            return None if r is None else Scalar(self, r)
        if self.kind == GF:
            for cand in self.elements():
                if (cand * cand).v == s.v:
                    return cand
            return None
        c0, c1 = s.v
        if c1 == 0:
            r = _rational_sqrt(c0)
            if r is not None:
                return Scalar(self, (r, Fraction(0)))
            r = _rational_sqrt(c0 / self.radicand)
            if r is not None:
                return Scalar(self, (Fraction(0), r))
            return None
        # (x + y*s)^2 = s.v needs x*y = c1/2 and x^2 + y^2*a = c0; solve the
        # resulting biquadratic in x^2 exactly.
        half = Fraction(1, 2)
        disc = (c0 * half) ** 2 - self.radicand * (c1 * half) ** 2
        rd = _rational_sqrt(disc)
        if rd is None:
            return None
        for x2 in (c0 * half + rd, c0 * half - rd):
            rx = _rational_sqrt(x2)
            if rx is not None and rx != 0:
                y = c1 * half / rx
                cand = Scalar(self, (rx, y))
                if (cand * cand) == s:
                    return cand
        return None

    # -- element parsing -------------------------------------------------------

    def parse(self, text: str) -> "Scalar":
        """Parse one scalar in the strict textual grammar of this field."""
        raw = text
        text = text.strip().replace("−", "-")
        if self.kind == RAT:
            if not _RAT_RE.match(text):
                raise ParseError(f"bad rational {raw!r}")
            return Scalar(self, Fraction(text))
        if self.kind == GF:
            if not _INT_RE.match(text):
                raise ParseError(f"bad residue {raw!r}")
            return Scalar(self, int(text) % self.p)
        m = _QUAD_RE.match(text)
        if not m or (m.group("c0") is None and m.group("c1") is None):
            raise ParseError(f"bad quadratic scalar {raw!r}")
        c0 = Fraction(m.group("c0")) if m.group("c0") is not None else Fraction(0)
        c1 = Fraction(0)
        if m.group("c1") is not None:
            c1 = Fraction(m.group("c1"))
            sign = m.group("sign")
            if m.group("c0") is not None and sign is None:
                raise ParseError(f"bad quadratic scalar {raw!r}")
            if sign == "-":
                c1 = -c1
        return Scalar(self, (c0, c1))


class Scalar:
    """An immutable element of a :class:`Field`."""

    __slots__ = ("field", "v")

    def __init__(self, field: Field, v):
        self.field = field
        self.v = v

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot combine {self.field.spec()} with {other.field.spec()}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return NotImplemented

    @property
    def is_zero(self) -> bool:
        if self.field.kind == QUAD:
            return self.v == (0, 0)
        return self.v == 0

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        if f.kind == GF:
            return Scalar(f, (self.v + other.v) % f.p)
        if f.kind == RAT:
            return Scalar(f, self.v + other.v)
        return Scalar(f, (self.v[0] + other.v[0], self.v[1] + other.v[1]))

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        if f.kind == GF:
            return Scalar(f, -self.v % f.p)
        if f.kind == RAT:
            return Scalar(f, -self.v)
        return Scalar(f, (-self.v[0], -self.v[1]))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        if f.kind == GF:
            return Scalar(f, (self.v * other.v) % f.p)
        if f.kind == RAT:
            return Scalar(f, self.v * other.v)
        a0, a1 = self.v
        b0, b1 = other.v
        return Scalar(f, (a0 * b0 + a1 * b1 * f.radicand, a0 * b1 + a1 * b0))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero:
            raise ZeroDivisionError("scalar is zero")
        f = self.field
        if f.kind == GF:
            return Scalar(f, pow(self.v, -1, f.p))
        if f.kind == RAT:
            return Scalar(f, 1 / self.v)
        c0, c1 = self.v
        norm = c0 * c0 - c1 * c1 * f.radicand
        return Scalar(f, (c0 / norm, -c1 / norm))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            try:
                other = self.field.scalar(other)
            except FieldError:
                return NotImplemented
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.v == other.v

    def __hash__(self) -> int:
        if self.field.kind == QUAD and self.v[1] == 0:
            return hash(self.v[0])
        return hash(self.v)

    def __str__(self) -> str:
        if self.field.kind != QUAD:
            return str(self.v)
        c0, c1 = self.v
        if c1 == 0:
            return str(c0)
        if c0 == 0:
            return f"{c1}*s"
        if c1 < 0:
            return f"{c0}-{-c1}*s"
        return f"{c0}+{c1}*s"

    def __repr__(self) -> str:
        return f"Scalar({self.field.spec()}, {self})"
