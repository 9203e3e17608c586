"""Left skew derivations: validation, application, parity decomposition with
recovery of the inner skew element, and skew-differential simplicity."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Element, Subspace, _popcount, top_monomial
from .canonical import XaSolution, solve_xa_system
from .derivations import _closure
from .errors import MismatchError, ValidationError
from .fields import Field


class SkewDerivation:
    """A left skew derivation, stored as the image tuple of the generators.

    The signed Leibniz rule on the relators gives the two validation
    families: each image must commute with its own generator, and the signed
    cross sums must vanish.
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
        gens = [Element.generator(n, field, i) for i in range(1, n + 1)]
        for i in range(n):
            if images[i] * gens[i] - gens[i] * images[i]:
                violations.append(("square", i + 1))
        for i in range(n):
            for j in range(i + 1, n):
                r = (images[i] * gens[j] - gens[i] * images[j]
                     + images[j] * gens[i] - gens[j] * images[i])
                if r:
                    violations.append(("cross", i + 1, j + 1))
        if violations:
            raise ValidationError(
                f"images do not define a skew derivation: {violations}", violations
            )
        self.n = n
        self.field = field
        self.images = images
        self._cache: dict[int, Element] = {}

    @staticmethod
    def zero(n: int, field: Field) -> "SkewDerivation":
        z = Element.zero(n, field)
        return SkewDerivation(n, field, [z] * n)

    def __eq__(self, other):
        if not isinstance(other, SkewDerivation):
            return NotImplemented
        return (self.n, self.field, self.images) == (other.n, other.field, other.images)

    def __hash__(self):
        return hash((self.n, self.field, self.images))

    def is_zero(self) -> bool:
        return all(u.is_zero() for u in self.images)

    def _on_monomial(self, mask: int) -> Element:
        # sign (-1)^(position-1): the parity of the left factor
        cached = self._cache.get(mask)
        if cached is not None:
            return cached
        n, field = self.n, self.field
        total = Element.zero(n, field)
        rest = mask
        pos = 0
        while rest:
            low = rest & -rest
            j = low.bit_length()
            prefix = Element.monomial(n, field, mask & (low - 1))
            suffix = Element.monomial(n, field, mask & ~((low << 1) - 1))
            term = prefix * self.images[j - 1] * suffix
            total = total + (term if pos % 2 == 0 else -term)
            rest ^= low
            pos += 1
        self._cache[mask] = total
        return total

    def __call__(self, a: Element) -> Element:
        if a.n != self.n or a.field != self.field:
            raise MismatchError("element lives over a different n or field")
        out = Element.zero(self.n, self.field)
        for mask, c in a.coeffs.items():
            out = out + self._on_monomial(mask).scale(c)
        return out

    def __repr__(self):
        imgs = ", ".join(str(u) for u in self.images)
        return f"SkewDerivation({self.n}, {self.field!r}, [{imgs}])"


def partial_derivation(n: int, field: Field, i: int) -> SkewDerivation:
    """The skew partial derivative d_i as a skew derivation."""
    z = Element.zero(n, field)
    one = Element.one(n, field)
    return SkewDerivation(n, field, [one if k == i else z for k in range(1, n + 1)])


def skew_scaled_partial(coeff: Element, j: int) -> SkewDerivation:
    """The skew derivation coeff * d_j; requires an even coefficient."""
    n, field = coeff.n, coeff.field
    z = Element.zero(n, field)
    return SkewDerivation(n, field, [coeff if k == j else z for k in range(1, n + 1)])


def skew_ad(a: Element) -> SkewDerivation:
    """The inner skew derivation b -> a*b - (-1)^|b| b*a.

    On the odd generators this reads a*x_i + x_i*a.
    """
    n, field = a.n, a.field
    gens = [Element.generator(n, field, i) for i in range(1, n + 1)]
    return SkewDerivation(n, field, [a * x + x * a for x in gens])


@dataclass(frozen=True)
class SkewDecomposition:
    """The unique split of a skew derivation into parity halves.

    ``odd_coeffs`` are the even elements c_i with parity-reversing part
    sum(c_i d_i); ``inner_element`` is the even element a (no component on
    the top monomial when n is even) with parity-preserving part
    1/2 sad(a), sad the inner skew derivation map.
    """

    odd_coeffs: tuple[Element, ...]
    inner_element: Element

    def apply(self, m: Element) -> Element:
        n, field = self.inner_element.n, self.inner_element.field
        out = Element.zero(n, field)
        for i, c in enumerate(self.odd_coeffs, start=1):
            out = out + c * m.partial(i)
        a = self.inner_element
        half = field(1, 2)
        even, odd = m.parity_split()
        inner = (a * even - even * a) + (a * odd + odd * a)
        return out + inner.scale(half)

    def as_skew_derivation(self) -> SkewDerivation:
        n, field = self.inner_element.n, self.inner_element.field
        gens = [Element.generator(n, field, i) for i in range(1, n + 1)]
        return SkewDerivation(n, field, [self.apply(x) for x in gens])


def decompose_skew(d: SkewDerivation) -> SkewDecomposition:
    """Split each image by parity; the odd image parts form a solvable
    left-multiplication system whose normalized solution is the inner skew
    element."""
    odd_parts = [u.odd_part() for u in d.images]
    even_parts = [u.even_part() for u in d.images]
    sol = solve_xa_system(odd_parts)
    assert isinstance(sol, XaSolution), (
        "odd image parts of a valid skew derivation must form a solvable system"
    )
    return SkewDecomposition(
        odd_coeffs=tuple(even_parts), inner_element=sol.particular
    )


def skew_differential_closure(seed: Element) -> Subspace:
    """Smallest ideal containing the seed and stable under all skew
    derivations; over a field this is 0 or everything."""
    n, field = seed.n, seed.field
    even_masks = [m for m in range(1 << n) if _popcount(m) % 2 == 0]
    top_mask = (1 << n) - 1
    ops = []
    for m in even_masks:
        mono = Element.monomial(n, field, m)
        for j in range(1, n + 1):
            ops.append(lambda v, mono=mono, j=j: mono * v.partial(j))
    for m in even_masks:
        if n % 2 == 0 and m == top_mask:
            continue
        d = skew_ad(Element.monomial(n, field, m))
        ops.append(d)
    return _closure(seed, ops)


def skew_ad_kernel(n: int, field: Field) -> Subspace:
    """Kernel of the inner-skew map a -> sad(a): the odd part plus the top
    monomial line."""
    odd = [Element.monomial(n, field, m) for m in range(1 << n) if _popcount(m) % 2]
    return Subspace.span(n, field, odd + [top_monomial(n, field)])
