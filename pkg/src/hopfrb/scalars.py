"""Exact base fields: the rationals and prime fields GF(p).

Rational scalars are plain :class:`fractions.Fraction` values (always reduced,
positive denominator).  Prime field scalars are :class:`ModP` residues.  Both
interoperate with Python ints, so ``0`` and ``1`` work as identities everywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction

_COEFF_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_fraction(text: str) -> Fraction:
    """Parse ``"n"`` or ``"n/d"`` exactly.  Floats and zero denominators are rejected."""
    if not isinstance(text, str):
        raise ValueError(f"coefficient must be a 'num/den' string, got {text!r}")
    m = _COEFF_RE.match(text)
    if m is None:
        raise ValueError(f"malformed coefficient {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in coefficient {text!r}")
    return Fraction(num, den)


class ModP:
    """A residue class modulo a prime ``p``, stored in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ModP(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ModP(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ModP(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ModP(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        if v == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return ModP(self.value * pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return ModP(v * pow(self.value, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return False
        return self.value == v

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


class RationalField:
    """The field of rational numbers."""

    kind = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, str):
            return parse_fraction(x)
        if isinstance(x, ModP):
            raise TypeError("cannot lift a GF(p) residue to the rationals")
        if isinstance(x, float):
            raise TypeError("floating point coefficients are not exact")
        return Fraction(x)

    def parse(self, text: str) -> Fraction:
        return parse_fraction(text)

    def format(self, x) -> str:
        return str(Fraction(x))

    def descriptor(self) -> dict:
        return {"kind": "rational"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for a prime ``p``."""

    kind = "gf"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = ModP(0, p)
        self.one = ModP(1, p)

    def __call__(self, x) -> ModP:
        if isinstance(x, str):
            x = parse_fraction(x)
        if isinstance(x, ModP):
            if x.p != self.p:
                raise ValueError(f"residue mod {x.p} is not in GF({self.p})")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ValueError(f"{x} has no image in GF({self.p})")
            return ModP(x.numerator * pow(x.denominator, -1, self.p), self.p)
        if isinstance(x, int):
            return ModP(x, self.p)
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def parse(self, text: str) -> ModP:
        return self(parse_fraction(text))

    def format(self, x) -> str:
        return str(self(x).value)

    def descriptor(self) -> dict:
        return {"kind": "gf", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def field_from_descriptor(desc) -> RationalField | PrimeField:
    """Build a field from ``{"kind": "rational"}``, ``{"kind": "gf", "p": p}`` or ``"gf:p"``."""
    if isinstance(desc, str):
        if desc in ("rational", "QQ", "q"):
            return QQ
        if desc.startswith("gf:"):
            return PrimeField(int(desc[3:]))
        raise ValueError(f"unknown field {desc!r}")
    if not isinstance(desc, dict) or "kind" not in desc:
        raise ValueError(f"field descriptor must be an object with 'kind', got {desc!r}")
    if desc["kind"] == "rational":
        return QQ
    if desc["kind"] == "gf":
        p = desc.get("p")
        if not isinstance(p, int):
            raise ValueError("field descriptor 'gf' needs an integer 'p'")
        return PrimeField(p)
    raise ValueError(f"unknown field kind {desc['kind']!r}")
