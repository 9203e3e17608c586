"""Arithmetic in the Grassmann algebra on n anticommuting generators.

Basis monomials are encoded as n-bit masks: bit i-1 set means generator x_i
occurs.  The product order inside a monomial is always ascending index, so
every sign reduces to counting bit inversions between masks.  Elements are
immutable sparse maps mask -> nonzero scalar.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import linalg
from .config import MAX_GENERATORS
from .errors import DomainError, MismatchError
from .fields import Field, GFElem, Scalar


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _mul_sign(alpha: int, beta: int) -> int:
    """+1/-1 from sorting the concatenation x^alpha * x^beta, disjoint masks."""
    swaps = 0
    b = beta
    while b:
        low = b & -b
        swaps += _popcount(alpha >> low.bit_length())
        b ^= low
    return -1 if swaps & 1 else 1


@lru_cache(maxsize=None)
def graded_masks(n: int) -> tuple[int, ...]:
    """All masks ordered by (degree, mask): the canonical coordinate order."""
    return tuple(sorted(range(1 << n), key=lambda m: (_popcount(m), m)))


@lru_cache(maxsize=None)
def mask_positions(n: int) -> dict[int, int]:
    return {m: i for i, m in enumerate(graded_masks(n))}


def _check_n(n: int):
    if not 1 <= n <= MAX_GENERATORS:
        raise DomainError(f"generator count must be in 1..{MAX_GENERATORS}, got {n}")


class Element:
    """An exact K-linear combination of the 2^n basis monomials."""

    __slots__ = ("n", "field", "coeffs")

    def __init__(self, n: int, field: Field, coeffs: dict[int, Scalar]):
        _check_n(n)
        clean = {}
        for mask, c in coeffs.items():
            if mask >> n:
                raise DomainError(f"mask {mask:#x} uses generators beyond n={n}")
            if c:
                clean[mask] = c
        self.n = n
        self.field = field
        self.coeffs = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(n: int, field: Field) -> "Element":
        return Element(n, field, {})

    @staticmethod
    def one(n: int, field: Field) -> "Element":
        return Element(n, field, {0: field.one})

    @staticmethod
    def generator(n: int, field: Field, i: int) -> "Element":
        if not 1 <= i <= n:
            raise DomainError(f"generator index {i} out of range 1..{n}")
        return Element(n, field, {1 << (i - 1): field.one})

    @staticmethod
    def monomial(n: int, field: Field, mask: int, coeff=1) -> "Element":
        return Element(n, field, {mask: field(coeff)})

    @staticmethod
    def scalar(n: int, field: Field, value) -> "Element":
        return Element(n, field, {0: field(value)})

    # -- plumbing -----------------------------------------------------

    def _require_compatible(self, other: "Element"):
        if self.n != other.n:
            raise MismatchError(f"generator counts differ: {self.n} vs {other.n}")
        if self.field != other.field:
            raise MismatchError(f"fields differ: {self.field!r} vs {other.field!r}")

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return (
            self.n == other.n
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.n, self.field, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, mask: int) -> Scalar:
        return self.coeffs.get(mask, self.field.zero)

    def constant_term(self) -> Scalar:
        return self.coefficient(0)

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def min_degree(self) -> int:
        if not self.coeffs:
            raise DomainError("zero element has no degree")
        return min(_popcount(m) for m in self.coeffs)

    def max_degree(self) -> int:
        if not self.coeffs:
            raise DomainError("zero element has no degree")
        return max(_popcount(m) for m in self.coeffs)

    # -- module structure ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._require_compatible(other)
        out = dict(self.coeffs)
        for mask, c in other.coeffs.items():
            s = out.get(mask, self.field.zero) + c
            if s:
                out[mask] = s
            else:
                out.pop(mask, None)
        return Element(self.n, self.field, out)

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Element(self.n, self.field, {m: -c for m, c in self.coeffs.items()})

    def scale(self, c) -> "Element":
        c = self.field(c)
        if not c:
            return Element.zero(self.n, self.field)
        return Element(self.n, self.field, {m: c * x for m, x in self.coeffs.items()})

    # -- ring structure -------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GFElem)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._require_compatible(other)
        out: dict[int, Scalar] = {}
        zero = self.field.zero
        for ma, ca in self.coeffs.items():
            for mb, cb in other.coeffs.items():
                if ma & mb:
                    continue
                m = ma | mb
                c = ca * cb
                if _mul_sign(ma, mb) < 0:
                    c = -c
                s = out.get(m, zero) + c
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Element(self.n, self.field, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GFElem)):
            return self.scale(other)
        return NotImplemented

    def commutator(self, other: "Element") -> "Element":
        return self * other - other * self

    # -- gradings ---------------------------------------------------------

    def grade(self, i: int) -> "Element":
        if not 0 <= i <= self.n:
            raise DomainError(f"degree {i} out of range 0..{self.n}")
        return Element(
            self.n, self.field,
            {m: c for m, c in self.coeffs.items() if _popcount(m) == i},
        )

    def even_part(self) -> "Element":
        return Element(
            self.n, self.field,
            {m: c for m, c in self.coeffs.items() if _popcount(m) % 2 == 0},
        )

    def odd_part(self) -> "Element":
        return Element(
            self.n, self.field,
            {m: c for m, c in self.coeffs.items() if _popcount(m) % 2 == 1},
        )

    def parity_split(self) -> tuple["Element", "Element"]:
        return self.even_part(), self.odd_part()

    def is_even(self) -> bool:
        return all(_popcount(m) % 2 == 0 for m in self.coeffs)

    def is_odd(self) -> bool:
        return all(_popcount(m) % 2 == 1 for m in self.coeffs)

    def grade_involution(self) -> "Element":
        """The parity automorphism: fixes even components, negates odd ones."""
        return Element(
            self.n, self.field,
            {m: (-c if _popcount(m) & 1 else c) for m, c in self.coeffs.items()},
        )

    # -- evaluation-style operators ----------------------------------------

    def substitute_zero(self, indices) -> "Element":
        """Kill every monomial that touches one of the given generators."""
        kill = 0
        for i in indices:
            if not 1 <= i <= self.n:
                raise DomainError(f"generator index {i} out of range 1..{self.n}")
            kill |= 1 << (i - 1)
        return Element(
            self.n, self.field,
            {m: c for m, c in self.coeffs.items() if not m & kill},
        )

    def partial(self, i: int) -> "Element":
        """Left skew partial derivative with respect to x_i.

        On a monomial containing x_i at sorted position p the result is
        (-1)^(p-1) times the monomial with x_i removed; other monomials die.
        """
        if not 1 <= i <= self.n:
            raise DomainError(f"generator index {i} out of range 1..{self.n}")
        bit = 1 << (i - 1)
        below = bit - 1
        out = {}
        for m, c in self.coeffs.items():
            if not m & bit:
                continue
            out[m ^ bit] = -c if _popcount(m & below) & 1 else c
        return Element(self.n, self.field, out)

    def containing(self, i: int) -> "Element":
        """Projection onto monomials containing x_i (the operator x_i * d/dx_i)."""
        if not 1 <= i <= self.n:
            raise DomainError(f"generator index {i} out of range 1..{self.n}")
        bit = 1 << (i - 1)
        return Element(
            self.n, self.field,
            {m: c for m, c in self.coeffs.items() if m & bit},
        )

    # -- coordinates / text -------------------------------------------------

    def to_vector(self) -> list[Scalar]:
        zero = self.field.zero
        return [self.coeffs.get(m, zero) for m in graded_masks(self.n)]

    @staticmethod
    def from_vector(n: int, field: Field, vec) -> "Element":
        return Element(n, field, dict(zip(graded_masks(n), vec)))

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"Element({self.n}, {self.field!r}, {format_element(self)!r})"


def top_monomial(n: int, field: Field) -> Element:
    """The full product x_1 x_2 ... x_n."""
    return Element.monomial(n, field, (1 << n) - 1)


def monomial_string(mask: int) -> str:
    if mask == 0:
        return "1"
    return "*".join(f"x{i + 1}" for i in range(mask.bit_length()) if mask >> i & 1)


def format_element(a: Element) -> str:
    """Canonical text form: graded-lex term order, reduced coefficients."""
    if not a.coeffs:
        return "0"
    parts = []
    for mask in graded_masks(a.n):
        c = a.coeffs.get(mask)
        if c is None:
            continue
        neg = isinstance(c, Fraction) and c < 0
        mag = -c if neg else c
        if mask == 0:
            body = str(mag)
        elif mag == a.field.one:
            body = monomial_string(mask)
        else:
            body = f"{mag}*{monomial_string(mask)}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# subspaces of the 2^n-dimensional module
# ---------------------------------------------------------------------------


class Subspace:
    """A K-linear subspace, stored as a row-reduced basis of Elements.

    Coordinates follow the (degree, mask) order, so two subspaces are equal
    exactly when their bases are syntactically equal.
    """

    __slots__ = ("n", "field", "basis", "pivots")

    def __init__(self, n: int, field: Field, basis, pivots):
        self.n = n
        self.field = field
        self.basis = tuple(basis)
        self.pivots = tuple(pivots)

    @staticmethod
    def span(n: int, field: Field, elements) -> "Subspace":
        rows = []
        for a in elements:
            if a.n != n or a.field != field:
                raise MismatchError("spanning elements must share n and field")
            if a:
                rows.append(a.to_vector())
        if not rows:
            return Subspace(n, field, [], [])
        red, pivots = linalg.rref(rows, field)
        basis = [Element.from_vector(n, field, row) for row in red]
        return Subspace(n, field, basis, pivots)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, a: Element) -> bool:
        if a.n != self.n or a.field != self.field:
            raise MismatchError("element lives over a different n or field")
        v = a.to_vector()
        for row, pc in zip(self.basis, self.pivots):
            if v[pc]:
                f = v[pc]
                rv = row.to_vector()
                v = [x - f * y for x, y in zip(v, rv)]
        return all(not x for x in v)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.n == other.n
            and self.field == other.field
            and list(self.basis) == list(other.basis)
        )

    def __hash__(self):
        return hash((self.n, self.field, self.basis))

    def add(self, other: "Subspace") -> "Subspace":
        if self.n != other.n or self.field != other.field:
            raise MismatchError("subspace sum across different spaces")
        return Subspace.span(self.n, self.field, list(self.basis) + list(other.basis))

    def __repr__(self):
        return f"Subspace(n={self.n}, dim={self.dim})"


def full_space(n: int, field: Field) -> Subspace:
    return Subspace.span(
        n, field, [Element.monomial(n, field, m) for m in range(1 << n)]
    )


def augmentation_power(n: int, field: Field, i: int) -> Subspace:
    """The i-th power of the ideal of constant-free elements; zero for i > n."""
    if i <= 0:
        return full_space(n, field)
    return Subspace.span(
        n, field,
        [Element.monomial(n, field, m) for m in range(1 << n) if _popcount(m) >= i],
    )


def centre_basis(n: int, field: Field) -> Subspace:
    """The centre: the even part, plus the top monomial when n is odd.

    For n = 1 the algebra is commutative and the whole space is returned.
    """
    _check_n(n)
    if n == 1:
        return full_space(1, field)
    masks = [m for m in range(1 << n) if _popcount(m) % 2 == 0]
    if n % 2 == 1:
        masks.append((1 << n) - 1)
    return Subspace.span(n, field, [Element.monomial(n, field, m) for m in masks])


def ideal_from_generators(gens) -> Subspace:
    """Smallest two-sided ideal containing the given elements."""
    gens = list(gens)
    if not gens:
        raise DomainError("need at least one generator element")
    n, field = gens[0].n, gens[0].field
    space = Subspace.span(n, field, gens)
    while True:
        extra = []
        for v in space.basis:
            for i in range(1, n + 1):
                xi = Element.generator(n, field, i)
                for w in (xi * v, v * xi):
                    if w and not space.contains(w):
                        extra.append(w)
        if not extra:
            return space
        space = space.add(Subspace.span(n, field, extra))
