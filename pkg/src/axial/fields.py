"""Exact scalar arithmetic: the rationals and odd prime fields.

Nothing here ever rounds.  Rational scalars are `fractions.Fraction`
values (automatically kept in lowest terms with positive denominator),
prime-field scalars are `Fp` residues kept in [0, p).  A `Field` object
owns construction, text parsing and canonical rendering for its scalars.

Characteristic 2 is rejected outright: the whole analysis needs 1/2.
"""

from __future__ import annotations

import re
from fractions import Fraction


class FieldError(ValueError):
    """Invalid field specification or scalar."""


_SCALAR_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Fp:
    """A residue modulo an odd prime p, canonically kept in [0, p).

    Supports field arithmetic through the usual operators, with plain
    ints coerced on the fly (so `x / 2` and `x == 0` just work).
    """

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldError("mixed prime fields GF(%d) and GF(%d)" % (self.p, other.p))
            return other.value
        if isinstance(other, int):
            return other % self.p
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if v % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Fp(self.value * pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if self.value == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Fp(v * pow(self.value, -1, self.p), self.p)

    def __pow__(self, n: int):
        if n < 0:
            if self.value == 0:
                raise ZeroDivisionError("inverting zero in GF(%d)" % self.p)
            return Fp(pow(self.value, n, self.p), self.p)
        return Fp(pow(self.value, n, self.p), self.p)

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return "Fp(%d, %d)" % (self.value, self.p)

    def __str__(self):
        return str(self.value)


class Field:
    """Base interface shared by the two scalar domains."""

    kind = None  # "rational" | "prime"

    @property
    def characteristic(self) -> int:
        raise NotImplementedError

    def scalar(self, x):
        """Coerce an int, Fraction, scalar or text into this field."""
        raise NotImplementedError

    @property
    def zero(self):
        return self.scalar(0)

    @property
    def one(self):
        return self.scalar(1)

    def parse(self, text: str):
        """Parse canonical scalar text: optional sign, integer, or p/q."""
        text = text.strip()
        if not _SCALAR_RE.match(text):
            raise FieldError("malformed scalar %r" % text)
        if "/" in text:
            num, den = text.split("/")
            return self.scalar(Fraction(int(num), int(den)))
        return self.scalar(int(text))

    def render(self, s) -> str:
        return str(s)

    def sort_key(self, s):
        """Total order on canonical scalars, for deterministic reports."""
        raise NotImplementedError


class RationalField(Field):
    """The field of rationals, backed by arbitrary-precision Fractions."""

    kind = "rational"

    @property
    def characteristic(self) -> int:
        return 0

    def scalar(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise FieldError("cannot coerce %r into the rationals" % (x,))

    def sort_key(self, s):
        return s

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"

    def __str__(self):
        return "rational"


class PrimeField(Field):
    """GF(p) for an odd prime p (characteristic 2 is rejected)."""

    kind = "prime"

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise FieldError("modulus %r is not prime" % (p,))
        if p == 2:
            raise FieldError("characteristic 2 is not supported (1/2 must exist)")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    def scalar(self, x):
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldError("scalar from GF(%d) used in GF(%d)" % (x.p, self.p))
            return x
        if isinstance(x, int):
            return Fp(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError("denominator of %s vanishes in GF(%d)" % (x, self.p))
            return Fp(x.numerator, self.p) / x.denominator
        if isinstance(x, str):
            return self.parse(x)
        raise FieldError("cannot coerce %r into GF(%d)" % (x, self.p))

    def elements(self):
        for v in range(self.p):
            yield Fp(v, self.p)

    def sort_key(self, s):
        return s.value

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p

    def __str__(self):
        return "gf %d" % self.p


QQ = RationalField()


def field_from_text(text: str) -> Field:
    """Parse a field declaration: `rational` or `gf <p>`."""
    parts = text.split()
    if parts == ["rational"]:
        return RationalField()
    if len(parts) == 2 and parts[0] == "gf":
        try:
            p = int(parts[1])
        except ValueError:
            raise FieldError("bad modulus %r" % parts[1]) from None
        return PrimeField(p)
    raise FieldError("unknown field declaration %r" % text)
