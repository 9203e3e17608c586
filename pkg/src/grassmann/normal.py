"""Normal elements: detection, stratification by lowest degree, orbit
classification of the generic stratum with explicit witness automorphisms,
and stabilizer membership via the factorization."""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import Element, Subspace
from .automorphisms import (
    Automorphism,
    conjugation,
    diagonal_scaling,
    factor_automorphism,
    generator_shift,
    linear_substitution,
    shift_inverse_images,
)
from .errors import DomainError
from .fields import Field, Scalar

ORBIT_X1 = "X1"
ORBIT_X1_PLUS_THETA_TAIL = "X1_PLUS_THETA_TAIL"


def left_multiples(a: Element) -> Subspace:
    n, field = a.n, a.field
    return Subspace.span(
        n, field, [Element.monomial(n, field, m) * a for m in range(1 << n)]
    )


def right_multiples(a: Element) -> Subspace:
    n, field = a.n, a.field
    return Subspace.span(
        n, field, [a * Element.monomial(n, field, m) for m in range(1 << n)]
    )


def is_normal(a: Element) -> bool:
    """True when the left and right multiples of ``a`` coincide.

    It suffices to check the generators: a*x_i must be a left multiple and
    x_i*a a right multiple, the rest follows by induction on word length.
    """
    left = left_multiples(a)
    right = right_multiples(a)
    for i in range(1, a.n + 1):
        x = Element.generator(a.n, a.field, i)
        if not left.contains(a * x) or not right.contains(x * a):
            return False
    return True


def stratum(a: Element):
    """Lowest degree with a nonzero component; degree 0 reports "unit"."""
    if a.is_zero():
        raise DomainError("the zero element has no stratum")
    if not is_normal(a):
        raise DomainError("element is not normal")
    d = a.min_degree()
    return "unit" if d == 0 else d


@dataclass(frozen=True)
class OrbitReport:
    stratum: int
    orbit: str
    witness: Automorphism

    def representative(self) -> Element:
        n, field = self.witness.n, self.witness.field
        rep = Element.generator(n, field, 1)
        if self.orbit == ORBIT_X1_PLUS_THETA_TAIL:
            rep = rep + Element.monomial(n, field, ((1 << n) - 1) ^ 1)
        return rep


def classify_normal(a: Element, verify_normal: bool = True) -> OrbitReport:
    """Decide the orbit of a generic normal non-unit and build a witness
    automorphism sending the orbit representative to the input.

    With ``verify_normal`` off, the classifier's own reduction decides
    membership: inputs that are not normal are rejected when the residual
    even tail is not a multiple of x_2...x_n.
    """
    n, field = a.n, a.field
    if a.constant_term() or not a.grade(1):
        raise DomainError("element is not in the generic stratum (lowest degree 1)")
    if verify_normal and not is_normal(a):
        raise DomainError("element is not normal")

    # move the degree-1 part onto x_1 by completing it to a basis
    first_row = [a.coefficient(1 << j) for j in range(n)]
    rows = [first_row]
    for j in range(n):
        unit = [field.one if k == j else field.zero for k in range(n)]
        if linalg.rank(rows + [unit], field) > len(rows):
            rows.append(unit)
    sub_linear = linear_substitution(field, rows)
    inv_linear = linear_substitution(field, linalg.invert(rows, field))
    cur = inv_linear(a)

    # absorb the odd components above degree 1 into a generator shift
    odd_tail = cur.odd_part() - cur.grade(1)
    zero = Element.zero(n, field)
    shifts = [odd_tail] + [zero] * (n - 1)
    shift = generator_shift(shifts)
    shift_inv = Automorphism(n, field, shift_inverse_images(shifts))
    cur = shift_inv(cur)
    x1 = Element.generator(n, field, 1)
    assert cur.odd_part() == x1, "odd reduction failed"

    # the remaining even tail splits as 2*alpha*x_1 + beta with x_1-free beta;
    # writing the x_1 factor on the right flips the cofactor's sign
    even = cur.even_part()
    with_x1 = even.containing(1)
    beta = even - with_x1
    half = field(1, 2)
    alpha = Element(
        n, field, {m ^ 1: -(c * half) for m, c in with_x1.coeffs.items()}
    )
    inner = conjugation(-alpha)
    cur = inner(cur)
    assert cur == x1 + beta, "even reduction failed"

    chain = sub_linear.compose(shift).compose(conjugation(alpha))
    tail_mask = ((1 << n) - 1) ^ 1
    if beta.is_zero():
        orbit = ORBIT_X1
        witness = chain
        rep = x1
    elif set(beta.coeffs) == {tail_mask}:
        # only reachable for odd n: the tail x_2...x_n must be even
        lam = beta.coeffs[tail_mask]
        scalars = [field.one] * n
        scalars[1] = lam
        witness = chain.compose(diagonal_scaling(field, scalars))
        orbit = ORBIT_X1_PLUS_THETA_TAIL
        rep = x1 + Element.monomial(n, field, tail_mask)
    else:
        if verify_normal:
            raise AssertionError(
                "reduction of a verified normal element left an impossible tail"
            )
        raise DomainError("element is not normal (irreducible even tail)")
    assert witness(rep) == a, "witness verification failed"
    return OrbitReport(stratum=1, orbit=orbit, witness=witness)


def orbits_are_distinct(n: int, field: Field) -> bool:
    """Package the two-orbit statement for odd n: the classifier assigns
    different tags to x_1 and to x_1 + x_2...x_n."""
    if n < 3 or n % 2 == 0:
        raise DomainError("distinct orbits exist only for odd n >= 3")
    x1 = Element.generator(n, field, 1)
    tail = Element.monomial(n, field, ((1 << n) - 1) ^ 1)
    t1 = classify_normal(x1).orbit
    t2 = classify_normal(x1 + tail).orbit
    return t1 != t2


# ---------------------------------------------------------------------------
# stabilizer membership via factorization
# ---------------------------------------------------------------------------


def stabilizes_x1(s: Automorphism) -> bool:
    """Membership in the stabilizer of x_1, decided on the factorization and
    cross-checked against the direct fixed-point test."""
    n, field = s.n, s.field
    fact = factor_automorphism(s)
    x1 = Element.generator(n, field, 1)
    row_ok = list(fact.linear[0]) == [field.one] + [field.zero] * (n - 1)
    shift_ok = fact.shifts[0].is_zero()
    inner_ok = all(m & 1 for m in fact.inner.coeffs)
    verdict = row_ok and shift_ok and inner_ok
    direct = s(x1) == x1
    assert verdict == direct, "factored stabilizer test disagrees with direct check"
    return verdict


def stabilizes_x1_plus_tail(s: Automorphism) -> bool:
    """Membership in the stabilizer of x_1 + x_2...x_n (n odd >= 3)."""
    n, field = s.n, s.field
    if n < 3 or n % 2 == 0:
        raise DomainError("the representative x_1 + x_2...x_n needs odd n >= 3")
    fact = factor_automorphism(s)
    tail = Element.monomial(n, field, ((1 << n) - 1) ^ 1)
    y = Element.generator(n, field, 1) + tail

    row_ok = list(fact.linear[0]) == [field.one] + [field.zero] * (n - 1)
    shift_ok = fact.shifts[0].is_zero()
    moved = generator_shift(fact.shifts)(
        linear_substitution(field, [list(r) for r in fact.linear])(tail)
    )
    fixed_tail_ok = (moved - moved.containing(1)) == tail
    half = field(1, 2)
    diff = fact.inner - moved.partial(1).scale(half)
    inner_ok = all(m & 1 for m in diff.coeffs)
    verdict = row_ok and shift_ok and fixed_tail_ok and inner_ok
    direct = s(y) == y
    assert verdict == direct, "factored stabilizer test disagrees with direct check"
    return verdict


# ---------------------------------------------------------------------------
# units with a generic degree-1 tail
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UnitOrbit:
    scale: Scalar
    orbit: str
    witness: Automorphism


def classify_unit(u: Element) -> UnitOrbit:
    """Classify a unit of the form scale * (1 + v) with v in the generic
    normal stratum."""
    lam = u.constant_term()
    if not lam:
        raise DomainError("not a unit: zero constant term")
    v = u.scale(u.field.one / lam) - Element.one(u.n, u.field)
    if v.is_zero() or v.constant_term():
        raise DomainError("unit has no generic degree-1 tail")
    if v.min_degree() != 1 or not is_normal(v):
        raise DomainError("unit tail is not a generic normal element")
    report = classify_normal(v, verify_normal=False)
    return UnitOrbit(scale=lam, orbit=report.orbit, witness=report.witness)
