"""Coefficient fields: exact rationals and prime fields F_p with p odd.

Scalars are plain values with operator overloading: ``fractions.Fraction``
over the rationals, :class:`GFElem` over F_p.  Both are immutable, hashable,
and falsy exactly when zero, so the element layer can stay field-agnostic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import MismatchError, ParseError


def _is_prime(m: int) -> bool:
    # deterministic Miller-Rabin, exact for anything below 3.3e24
    if m < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % q == 0:
            return m == q
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


class GFElem:
    """Residue modulo an odd prime p, stored in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, GFElem):
            if other.p != self.p:
                raise MismatchError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return GFElem(other, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else GFElem(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else GFElem(self.v - o.v, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else GFElem(o.v - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else GFElem(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.v == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return GFElem(self.v * pow(o.v, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o / self

    def __neg__(self):
        return GFElem(-self.v, self.p)

    def __eq__(self, other):
        if isinstance(other, GFElem):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __str__(self):
        return str(self.v)

    def __repr__(self):
        return f"GFElem({self.v}, {self.p})"


class RationalField:
    """The field of exact rationals (descriptor ``q``)."""

    characteristic = 0
    name = "q"

    def __call__(self, num, den=1) -> Fraction:
        if isinstance(num, Fraction) and den == 1:
            return num
        return Fraction(num, den)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field F_p for an odd prime p >= 3 (descriptor ``fp:<p>``)."""

    def __init__(self, p: int):
        if p < 3 or p % 2 == 0 or not _is_prime(p):
            raise ParseError(f"modulus must be an odd prime >= 3, got {p}")
        self.p = p

    characteristic = property(lambda self: self.p)
    name = property(lambda self: f"fp:{self.p}")

    def __call__(self, num, den=1) -> GFElem:
        if isinstance(num, GFElem):
            if num.p != self.p:
                raise MismatchError(f"mixed moduli {self.p} and {num.p}")
            num = num.v
        c = GFElem(num, self.p)
        return c if den == 1 else c / GFElem(den, self.p)

    @property
    def zero(self) -> GFElem:
        return GFElem(0, self.p)

    @property
    def one(self) -> GFElem:
        return GFElem(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()

Scalar = Fraction | GFElem
Field = RationalField | PrimeField


def parse_field(text: str) -> Field:
    """Parse a field descriptor: ``q`` or ``fp:<p>``."""
    if text == "q":
        return QQ
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ParseError(f"bad field descriptor {text!r}") from None
        return PrimeField(p)
    raise ParseError(f"bad field descriptor {text!r} (expected 'q' or 'fp:<p>')")
