"""The automorphism group: construction, composition, inversion, the
unipotent-times-linear factorization, torus membership, and the conjugation
action on derivations."""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import Element, _popcount, graded_masks, mask_positions
from .canonical import XaSolution, solve_xa_system
from .config import MAX_INVERT_N
from .derivations import Derivation
from .errors import DomainError, LimitError, MismatchError, ValidationError
from .fields import Field


def is_reduced_odd(a: Element) -> bool:
    """Odd parity with no component on the top monomial (the normalization
    that parameterizes inner conjugations uniquely)."""
    if not a.is_odd():
        return False
    top = (1 << a.n) - 1
    return top not in a.coeffs


def _drop_odd_top(a: Element) -> Element:
    if a.n % 2 == 1:
        top = (1 << a.n) - 1
        if top in a.coeffs:
            return a - Element.monomial(a.n, a.field, top, a.coeffs[top])
    return a


class Automorphism:
    """An algebra automorphism, stored as the image tuple of the generators.

    Images must be constant-free, satisfy the generator relations, and have
    an invertible linear part; the substitution extension is then bijective.
    """

    __slots__ = ("n", "field", "images", "_cache")

    def __init__(self, n: int, field: Field, images):
        images = tuple(images)
        if len(images) != n:
            raise MismatchError(f"expected {n} images, got {len(images)}")
        for u in images:
            if u.n != n or u.field != field:
                raise MismatchError("images must share n and field")
        violations = []
        for i, g in enumerate(images, start=1):
            if g.constant_term():
                violations.append(("constant_term", i))
        for i, g in enumerate(images, start=1):
            if g * g:
                violations.append(("square", i))
        for i in range(n):
            for j in range(i + 1, n):
                if images[i] * images[j] + images[j] * images[i]:
                    violations.append(("cross", i + 1, j + 1))
        if violations:
            raise ValidationError(
                f"images do not define an automorphism: {violations}", violations
            )
        lin = [[g.coefficient(1 << (j - 1)) for j in range(1, n + 1)] for g in images]
        if not linalg.is_invertible(lin, field):
            raise ValidationError("linear part is singular", [("singular",)])
        self.n = n
        self.field = field
        self.images = images
        self._cache: dict[int, Element] = {0: Element.one(n, field)}

    @staticmethod
    def identity(n: int, field: Field) -> "Automorphism":
        return Automorphism(
            n, field, [Element.generator(n, field, i) for i in range(1, n + 1)]
        )

    def is_identity(self) -> bool:
        return all(
            g == Element.generator(self.n, self.field, i)
            for i, g in enumerate(self.images, start=1)
        )

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        return (self.n, self.field, self.images) == (other.n, other.field, other.images)

    def __hash__(self):
        return hash((self.n, self.field, self.images))

    def linear_part(self):
        return [
            [g.coefficient(1 << (j - 1)) for j in range(1, self.n + 1)]
            for g in self.images
        ]

    def _on_monomial(self, mask: int) -> Element:
        cached = self._cache.get(mask)
        if cached is not None:
            return cached
        low = mask & -mask
        out = self.images[low.bit_length() - 1] * self._on_monomial(mask ^ low)
        self._cache[mask] = out
        return out

    def __call__(self, a: Element) -> Element:
        if a.n != self.n or a.field != self.field:
            raise MismatchError("element lives over a different n or field")
        out = Element.zero(self.n, self.field)
        for mask, c in a.coeffs.items():
            out = out + self._on_monomial(mask).scale(c)
        return out

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other."""
        if self.n != other.n or self.field != other.field:
            raise MismatchError("automorphisms live over different spaces")
        return Automorphism(self.n, self.field, [self(g) for g in other.images])

    __mul__ = compose

    def matrix(self):
        if self.n > MAX_INVERT_N:
            raise LimitError(f"dense automorphism matrices are capped at n <= {MAX_INVERT_N}")
        cols = [self._on_monomial(m).to_vector() for m in graded_masks(self.n)]
        return [[col[r] for col in cols] for r in range(1 << self.n)]

    def inverse(self) -> "Automorphism":
        """Exact inverse via the full monomial-basis matrix."""
        n, field = self.n, self.field
        minv = linalg.invert(self.matrix(), field)
        pos = mask_positions(n)
        images = []
        for i in range(1, n + 1):
            c = pos[1 << (i - 1)]
            images.append(Element.from_vector(n, field, [row[c] for row in minv]))
        return Automorphism(n, field, images)

    def __repr__(self):
        imgs = ", ".join(str(g) for g in self.images)
        return f"Automorphism({self.n}, {self.field!r}, [{imgs}])"


# ---------------------------------------------------------------------------
# the three factor subgroups
# ---------------------------------------------------------------------------


def conjugation(a: Element) -> Automorphism:
    """Conjugation by the unit 1 + a: x maps to x + [a, x].

    The argument must be odd with no top-monomial component.
    """
    if not is_reduced_odd(a):
        raise DomainError(
            "conjugator must be odd with no component on the top monomial"
        )
    n, field = a.n, a.field
    gens = [Element.generator(n, field, i) for i in range(1, n + 1)]
    return Automorphism(n, field, [x + a.commutator(x) for x in gens])


def generator_shift(shifts) -> Automorphism:
    """x_i maps to x_i + b_i with each b_i odd of degree at least 3."""
    shifts = list(shifts)
    if not shifts:
        raise DomainError("need one shift per generator")
    n, field = shifts[0].n, shifts[0].field
    for b in shifts:
        if not b.is_odd() or (b and b.min_degree() < 3):
            raise DomainError("shifts must be odd elements of degree >= 3")
    gens = [Element.generator(n, field, i) for i in range(1, n + 1)]
    return Automorphism(n, field, [x + b for x, b in zip(gens, shifts)])


def linear_substitution(field: Field, rows) -> Automorphism:
    """x_i maps to the linear form with the i-th coefficient row."""
    n = len(rows)
    rows = [[field(c) for c in row] for row in rows]
    if any(len(row) != n for row in rows):
        raise DomainError("coefficient matrix must be square")
    images = [
        Element(n, field, {1 << j: row[j] for j in range(n) if row[j]})
        for row in rows
    ]
    return Automorphism(n, field, images)


def diagonal_scaling(field: Field, scalars) -> Automorphism:
    scalars = [field(c) for c in scalars]
    n = len(scalars)
    rows = [
        [scalars[i] if i == j else field.zero for j in range(n)] for i in range(n)
    ]
    return linear_substitution(field, rows)


def torus_scalars(s: Automorphism):
    """The scaling vector when every generator maps to a multiple of itself,
    else None."""
    out = []
    for i, g in enumerate(s.images, start=1):
        if set(g.coeffs) != {1 << (i - 1)}:
            return None
        out.append(g.coeffs[1 << (i - 1)])
    return out


def is_torus(s: Automorphism) -> bool:
    return torus_scalars(s) is not None


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """The unique presentation of an automorphism as
    conjugation(inner) . generator_shift(shifts) . linear_substitution(linear).
    """

    inner: Element
    shifts: tuple[Element, ...]
    linear: tuple[tuple, ...]

    def reassemble(self) -> Automorphism:
        field = self.inner.field
        out = linear_substitution(field, [list(r) for r in self.linear])
        out = generator_shift(self.shifts).compose(out)
        return conjugation(self.inner).compose(out)


def shift_inverse_images(shifts) -> list[Element]:
    """Generator images of the inverse of a generator shift, by fixed-point
    iteration y <- x - b(y); each step raises the error filtration by two,
    so it stabilizes after at most about n/2 rounds."""
    shifts = list(shifts)
    n, field = shifts[0].n, shifts[0].field
    gens = [Element.generator(n, field, i) for i in range(1, n + 1)]

    def substitute(b: Element, ys) -> Element:
        out = Element.zero(n, field)
        for mask, c in b.coeffs.items():
            term = Element.one(n, field)
            rest = mask
            while rest:
                low = rest & -rest
                term = term * ys[low.bit_length() - 1]
                rest ^= low
            out = out + term.scale(c)
        return out

    ys = list(gens)
    for _ in range(n // 2 + 2):
        nxt = [x - substitute(b, ys) for x, b in zip(gens, shifts)]
        if nxt == ys:
            break
        ys = nxt
    return ys


def factor_automorphism(s: Automorphism) -> Factorization:
    """Split into the inner conjugator, the generator shifts, and the linear
    part; the reassembled product is checked to reproduce the input."""
    n, field = s.n, s.field
    lin = s.linear_part()
    lin_inv = linalg.invert(lin, field)

    odd_images = [g.odd_part() for g in s.images]
    shifts = []
    for i in range(n):
        acc = Element.zero(n, field)
        for j in range(n):
            if lin_inv[i][j]:
                acc = acc + odd_images[j].scale(lin_inv[i][j])
        shifts.append(acc - Element.generator(n, field, i + 1))

    shift_inv = Automorphism(n, field, shift_inverse_images(shifts))
    even_images = [shift_inv(g.even_part()) for g in s.images]
    primed = []
    for i in range(n):
        acc = Element.zero(n, field)
        for j in range(n):
            if lin_inv[i][j]:
                acc = acc + even_images[j].scale(lin_inv[i][j])
        primed.append(acc)

    sol = solve_xa_system(primed)
    assert isinstance(sol, XaSolution), (
        "the even components of an automorphism must form a solvable system"
    )
    gamma = generator_shift(shifts)
    half = field(1, 2)
    inner = _drop_odd_top(-gamma(sol.particular).scale(half))

    fact = Factorization(
        inner=inner,
        shifts=tuple(shifts),
        linear=tuple(tuple(row) for row in lin),
    )
    assert fact.reassemble() == s, "factorization failed to reassemble"
    return fact


def conjugate_derivation(s: Automorphism, d: Derivation) -> Derivation:
    """The conjugated derivation x -> s(d(s^{-1}(x)))."""
    if s.n != d.n or s.field != d.field:
        raise MismatchError("automorphism and derivation live over different spaces")
    inv = s.inverse()
    gens = [Element.generator(s.n, s.field, i) for i in range(1, s.n + 1)]
    return Derivation(s.n, s.field, [s(d(inv(x))) for x in gens])
