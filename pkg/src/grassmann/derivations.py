"""Ordinary derivations: validation, application, parity decomposition with
inner-element recovery, Lie structure, Jordan predicates, differential ideals
and recovery of canonical generators from idempotent derivation tuples.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import Element, Subspace, _popcount, graded_masks
from .canonical import XaSolution, solve_xa_system
from .config import MAX_OPERATOR_MATRIX_N
from .errors import DomainError, LimitError, MismatchError, ValidationError
from .fields import Field


class Derivation:
    """A derivation, stored as the image tuple of the generators.

    The constructor verifies the two defining-relation families (images must
    kill the relators x_i^2 and x_i x_j + x_j x_i); by the standard
    presentation argument this makes the monomial-wise Leibniz extension a
    well-defined derivation.
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
            if images[i] * gens[i] + gens[i] * images[i]:
                violations.append(("square", i + 1))
        for i in range(n):
            for j in range(i + 1, n):
                r = (images[i] * gens[j] + gens[i] * images[j]
                     + images[j] * gens[i] + gens[j] * images[i])
                if r:
                    violations.append(("cross", i + 1, j + 1))
        if violations:
            raise ValidationError(
                f"images do not define a derivation: {violations}", violations
            )
        self.n = n
        self.field = field
        self.images = images
        self._cache: dict[int, Element] = {}

    @staticmethod
    def zero(n: int, field: Field) -> "Derivation":
        z = Element.zero(n, field)
        return Derivation(n, field, [z] * n)

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return (self.n, self.field, self.images) == (other.n, other.field, other.images)

    def __hash__(self):
        return hash((self.n, self.field, self.images))

    def is_zero(self) -> bool:
        return all(u.is_zero() for u in self.images)

    def _on_monomial(self, mask: int) -> Element:
        cached = self._cache.get(mask)
        if cached is not None:
            return cached
        n, field = self.n, self.field
        total = Element.zero(n, field)
        rest = mask
        while rest:
            low = rest & -rest
            j = low.bit_length()  # 1-based generator index
            prefix = Element.monomial(n, field, mask & (low - 1))
            suffix = Element.monomial(n, field, mask & ~((low << 1) - 1))
            total = total + prefix * self.images[j - 1] * suffix
            rest ^= low
        self._cache[mask] = total
        return total

    def __call__(self, a: Element) -> Element:
        if a.n != self.n or a.field != self.field:
            raise MismatchError("element lives over a different n or field")
        out = Element.zero(self.n, self.field)
        for mask, c in a.coeffs.items():
            out = out + self._on_monomial(mask).scale(c)
        return out

    def matrix(self):
        """Dense operator matrix in the (degree, mask) monomial basis."""
        if self.n > MAX_OPERATOR_MATRIX_N:
            raise LimitError(
                f"operator matrices are capped at n <= {MAX_OPERATOR_MATRIX_N}"
            )
        cols = [self._on_monomial(m).to_vector() for m in graded_masks(self.n)]
        return [[col[r] for col in cols] for r in range(1 << self.n)]

    def __repr__(self):
        imgs = ", ".join(str(u) for u in self.images)
        return f"Derivation({self.n}, {self.field!r}, [{imgs}])"


def ad(a: Element) -> Derivation:
    """The inner derivation b -> a*b - b*a."""
    gens = [Element.generator(a.n, a.field, i) for i in range(1, a.n + 1)]
    return Derivation(a.n, a.field, [a.commutator(x) for x in gens])


def scaled_partial(coeff: Element, j: int) -> Derivation:
    """The derivation coeff * d_j; requires an odd coefficient element."""
    n, field = coeff.n, coeff.field
    z = Element.zero(n, field)
    images = [coeff if k == j else z for k in range(1, n + 1)]
    return Derivation(n, field, images)


def generator_projection(n: int, field: Field, i: int) -> Derivation:
    """The idempotent derivation x_i d_i projecting onto monomials with x_i."""
    return scaled_partial(Element.generator(n, field, i), i)


def lie_bracket(d1: Derivation, d2: Derivation) -> Derivation:
    if d1.n != d2.n or d1.field != d2.field:
        raise MismatchError("derivations live over different spaces")
    gens = [Element.generator(d1.n, d1.field, i) for i in range(1, d1.n + 1)]
    return Derivation(
        d1.n, d1.field, [d1(d2(x)) - d2(d1(x)) for x in gens]
    )


def graded_parts(d: Derivation) -> dict[int, Derivation]:
    """Split into graded components; part i raises monomial degree by i."""
    parts = {}
    for deg in range(0, d.n):
        images = [u.grade(deg + 1) for u in d.images]
        if any(images):
            parts[deg] = Derivation(d.n, d.field, images)
    return parts


@dataclass(frozen=True)
class DerDecomposition:
    """The unique split of a derivation into parity-preserving and
    parity-reversing halves.

    ``even_coeffs`` are the odd elements c_i with parity-preserving part
    sum(c_i d_i); ``inner_element`` is the odd element a (no component on
    the top monomial) with parity-reversing part -1/2 ad(a).
    """

    even_coeffs: tuple[Element, ...]
    inner_element: Element

    def apply(self, m: Element) -> Element:
        """Evaluate the reassembled operator sum(c_i d_i) - 1/2 ad(a)."""
        n, field = self.inner_element.n, self.inner_element.field
        out = Element.zero(n, field)
        for i, c in enumerate(self.even_coeffs, start=1):
            out = out + c * m.partial(i)
        half = field(1, 2)
        return out - self.inner_element.commutator(m).scale(half)

    def as_derivation(self) -> Derivation:
        n, field = self.inner_element.n, self.inner_element.field
        gens = [Element.generator(n, field, i) for i in range(1, n + 1)]
        return Derivation(n, field, [self.apply(x) for x in gens])


def decompose_derivation(d: Derivation) -> DerDecomposition:
    """Split each image by parity; the even image parts form a solvable
    left-multiplication system whose normalized solution is the inner
    element."""
    even_parts = [u.even_part() for u in d.images]
    odd_parts = [u.odd_part() for u in d.images]
    sol = solve_xa_system(even_parts)
    assert isinstance(sol, XaSolution), (
        "even image parts of a valid derivation must form a solvable system"
    )
    return DerDecomposition(
        even_coeffs=tuple(odd_parts), inner_element=sol.particular
    )


# ---------------------------------------------------------------------------
# Jordan-type predicates
# ---------------------------------------------------------------------------


def operator_matrix(d: Derivation):
    return d.matrix()


def is_nilpotent(d: Derivation) -> bool:
    """True when the minimal polynomial is a pure power of t."""
    p = linalg.minimal_polynomial(d.matrix(), d.field)
    return all(not c for c in p[:-1])


def is_semisimple(d: Derivation) -> bool:
    """True when the minimal polynomial is squarefree (the base fields here
    are perfect, so this matches semisimplicity of the module)."""
    p = linalg.minimal_polynomial(d.matrix(), d.field)
    return linalg.poly_is_squarefree(p, d.field)


# ---------------------------------------------------------------------------
# differential ideals
# ---------------------------------------------------------------------------


def _closure(seed: Element, operators) -> Subspace:
    # ideal closure plus stability under the operator family; by linearity
    # each round only needs to touch vectors spanning the newly added part
    n, field = seed.n, seed.field
    gens = [Element.generator(n, field, i) for i in range(1, n + 1)]
    space = Subspace.span(n, field, [seed])
    frontier = list(space.basis)
    while frontier:
        fresh = []
        for v in frontier:
            for x in gens:
                fresh.append(x * v)
                fresh.append(v * x)
            for op in operators:
                fresh.append(op(v))
        frontier = [w for w in fresh if w and not space.contains(w)]
        if frontier:
            space = space.add(Subspace.span(n, field, frontier))
    return space


def differential_closure(seed: Element) -> Subspace:
    """Smallest ideal containing the seed and stable under all derivations.

    Stability under the spanning family {odd-monomial * d_j} together with
    {ad(odd monomial of degree < n)} suffices, since those span the
    parity-preserving and parity-reversing halves.
    """
    n, field = seed.n, seed.field
    odd_masks = [m for m in range(1 << n) if _popcount(m) % 2 == 1]
    ops = []
    for m in odd_masks:
        mono = Element.monomial(n, field, m)
        for j in range(1, n + 1):
            ops.append(lambda v, mono=mono, j=j: mono * v.partial(j))
    for m in odd_masks:
        if _popcount(m) <= n - 1:
            mono = Element.monomial(n, field, m)
            ops.append(lambda v, mono=mono: mono.commutator(v))
    return _closure(seed, ops)


# ---------------------------------------------------------------------------
# canonical-generator recovery from idempotent derivation tuples
# ---------------------------------------------------------------------------


def _stack(*matrices):
    out = []
    for m in matrices:
        out.extend(m)
    return out


def recover_generators(ders, strict: bool = False) -> list[Element]:
    """Given n commuting idempotent derivations with the kernel geometry of
    the projections x_i' d/dx_i', recover the canonical generators x_i'.

    With ``strict`` the kernel-product module equalities are verified as
    subspace identities as well.
    """
    ders = list(ders)
    if not ders:
        raise DomainError("need at least one derivation")
    n, field = ders[0].n, ders[0].field
    if len(ders) != n:
        raise ValidationError(f"expected {n} derivations, got {len(ders)}",
                              [("arity", len(ders))])
    mats = [d.matrix() for d in ders]
    dim = 1 << n
    ident = linalg.identity_matrix(dim, field)

    for i, m in enumerate(mats, start=1):
        if linalg.mat_mul(m, m, field) != m:
            raise ValidationError(f"derivation {i} is not idempotent",
                                  [("idempotent", i)])
    for i in range(n):
        for j in range(i + 1, n):
            ab = linalg.mat_mul(mats[i], mats[j], field)
            ba = linalg.mat_mul(mats[j], mats[i], field)
            if ab != ba:
                raise ValidationError(
                    f"derivations {i + 1} and {j + 1} do not commute",
                    [("commute", i + 1, j + 1)],
                )

    joint = linalg.nullspace(_stack(*mats), dim, field)
    if len(joint) != 1 or any(joint[0][1:]) or not joint[0][0]:
        raise ValidationError(
            "joint kernel of the tuple is not the scalars",
            [("joint_kernel", len(joint))],
        )

    constants_row = [[field.one] + [field.zero] * (dim - 1)]
    recovered = []
    for i in range(n):
        shifted = [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(mats[i], ident)]
        others = [mats[j] for j in range(n) if j != i]
        rows = _stack(constants_row, shifted, *others)
        kern = linalg.nullspace(rows, dim, field)
        if len(kern) != 1:
            raise ValidationError(
                f"eigenline for derivation {i + 1} has dimension {len(kern)}",
                [("eigenline", i + 1, len(kern))],
            )
        vec = kern[0]
        lead = next(c for c in vec if c)
        vec = [c / lead for c in vec]
        recovered.append(Element.from_vector(n, field, vec))

    for i, x in enumerate(recovered, start=1):
        if x * x:
            raise ValidationError(f"recovered element {i} does not square to zero",
                                  [("not_square_zero", i)])
    for i in range(n):
        for j in range(i + 1, n):
            if recovered[i] * recovered[j] + recovered[j] * recovered[i]:
                raise ValidationError(
                    f"recovered elements {i + 1}, {j + 1} do not anticommute",
                    [("not_anticommuting", i + 1, j + 1)],
                )
    linear = [
        [x.coefficient(1 << (j - 1)) for j in range(1, n + 1)] for x in recovered
    ]
    if not linalg.is_invertible(linear, field):
        raise ValidationError("recovered linear parts are not independent",
                              [("linear_part_singular",)])

    if strict:
        _verify_kernel_products(mats, recovered, n, field)
    return recovered


def _verify_kernel_products(mats, recovered, n, field):
    """Strict mode: ker chains satisfy K_{1..i} = K_{1..i+1} + x'_{i+1} K_{1..i+1},
    starting from the whole space = ker(s_1) + x'_1 ker(s_1)."""
    dim = 1 << n

    def kernel_chain(i):
        # intersection of the kernels of the first i derivations; i = 0 is all
        if i == 0:
            vecs = [[field.one if r == c else field.zero for c in range(dim)]
                    for r in range(dim)]
        else:
            vecs = linalg.nullspace(_stack(*mats[:i]), dim, field)
        return Subspace.span(n, field, [Element.from_vector(n, field, v) for v in vecs])

    for i in range(0, n):
        left = kernel_chain(i)
        deeper = kernel_chain(i + 1)
        prods = [recovered[i] * w for w in deeper.basis]
        right = deeper.add(Subspace.span(n, field, [p for p in prods if p]))
        if left != right:
            raise ValidationError(
                f"kernel-product identity fails at level {i + 1}",
                [("kernel_product", i + 1)],
            )
