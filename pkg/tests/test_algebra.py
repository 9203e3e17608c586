from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from grassmann import linalg
from grassmann.algebra import (
    Element,
    Subspace,
    augmentation_power,
    centre_basis,
    full_space,
    graded_masks,
    ideal_from_generators,
    top_monomial,
)
from grassmann.errors import DomainError, MismatchError
from grassmann.fields import QQ, PrimeField
from grassmann.sampling import random_element

GF5 = PrimeField(5)


def q_elements(n):
    coeff = st.fractions(min_value=-4, max_value=4, max_denominator=3)
    pair = st.tuples(st.integers(0, (1 << n) - 1), coeff)
    return st.lists(pair, max_size=6).map(
        lambda pairs: Element(n, QQ, {m: QQ(c) for m, c in pairs})
    )


def x(n, i):
    return Element.generator(n, QQ, i)


# ---------------------------------------------------------------------------
# module structure
# ---------------------------------------------------------------------------


def test_add_scale_examples():
    a = x(2, 1)
    assert a + a == a.scale(2)
    assert (a + a.scale(-1)).is_zero()
    two_x1x2 = Element.monomial(2, QQ, 0b11, 2)
    assert two_x1x2.scale(Fraction(1, 2)) == Element.monomial(2, QQ, 0b11)


def test_mismatch_errors():
    with pytest.raises(MismatchError):
        x(2, 1) + x(3, 1)
    with pytest.raises(MismatchError):
        x(2, 1) * Element.generator(2, GF5, 1)


def test_mul_examples():
    assert x(2, 2) * x(2, 1) == -(x(2, 1) * x(2, 2))
    assert (x(2, 1) * x(2, 1)).is_zero()
    one, x1 = Element.one(2, QQ), x(2, 1)
    assert (one + x1) * (one - x1) == one


@settings(max_examples=60)
@given(a=q_elements(3), b=q_elements(3), c=q_elements(3))
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=60)
@given(a=q_elements(3), b=q_elements(3))
def test_generator_twist(a, b):
    # moving a generator across an element flips its odd part
    for i in range(1, 4):
        xi = x(3, i)
        assert xi * a == a.grade_involution() * xi


@settings(max_examples=40)
@given(a=q_elements(3), b=q_elements(3))
def test_involution_is_ring_automorphism(a, b):
    assert (a * b).grade_involution() == a.grade_involution() * b.grade_involution()
    assert a.grade_involution().grade_involution() == a


# ---------------------------------------------------------------------------
# gradings
# ---------------------------------------------------------------------------


def test_grade_component_examples():
    a = Element.one(3, QQ) + x(3, 1) + x(3, 1) * x(3, 2)
    assert a.grade(1) == x(3, 1)
    b = x(2, 1) + x(2, 1) * x(2, 2)
    assert b.parity_split() == (x(2, 1) * x(2, 2), x(2, 1))
    z = Element.zero(2, QQ)
    assert z.parity_split() == (z, z)
    with pytest.raises(DomainError):
        a.grade(4)


@settings(max_examples=40)
@given(a=q_elements(4))
def test_grades_sum_back(a):
    total = Element.zero(4, QQ)
    for i in range(5):
        total = total + a.grade(i)
    assert total == a
    even, odd = a.parity_split()
    assert even + odd == a


def test_substitute_zero_examples():
    a = x(2, 1) + x(2, 2)
    assert a.substitute_zero([1]) == x(2, 2)
    m = x(3, 1) * x(3, 2)
    assert m.substitute_zero([3]) == m


def test_substitute_zero_difference_in_ideal():
    rng = Random(1)
    for _ in range(10):
        a = random_element(rng, 3, QQ)
        for i in range(1, 4):
            ideal = ideal_from_generators([x(3, i)])
            assert ideal.contains(a - a.substitute_zero([i]))


# ---------------------------------------------------------------------------
# skew partials and projections
# ---------------------------------------------------------------------------


def test_partial_examples():
    m = x(3, 1) * x(3, 2) * x(3, 3)
    assert m.partial(2) == -(x(3, 1) * x(3, 3))
    assert Element.one(3, QQ).partial(1).is_zero()


@settings(max_examples=40)
@given(a=q_elements(3))
def test_partials_anticommute(a):
    for i in range(1, 4):
        assert a.partial(i).partial(i).is_zero()
        for j in range(1, 4):
            assert a.partial(i).partial(j) == -(a.partial(j).partial(i)) or i == j


@settings(max_examples=40)
@given(a=q_elements(3), b=q_elements(3))
def test_partial_signed_leibniz(a, b):
    # d_i(a_s b) = d_i(a_s) b + (-1)^s a_s d_i(b) on homogeneous left factors
    for s in range(4):
        hom = a.grade(s)
        sign = -1 if s % 2 else 1
        for i in range(1, 4):
            lhs = (hom * b).partial(i)
            rhs = hom.partial(i) * b + (hom * b.partial(i)).scale(sign)
            assert lhs == rhs


def test_containing_examples():
    m = x(3, 1) * x(3, 2)
    assert m.containing(2) == m
    assert m.containing(3).is_zero()
    assert (x(3, 2) * x(3, 3)).containing(1).is_zero()


@settings(max_examples=30)
@given(a=q_elements(3))
def test_containing_idempotent_and_commuting(a):
    for i in range(1, 4):
        assert a.containing(i).containing(i) == a.containing(i)
        for j in range(1, 4):
            assert a.containing(i).containing(j) == a.containing(j).containing(i)


def test_joint_projection_eigenspaces():
    # the simultaneous eigenspace with pattern alpha is the single monomial line
    n = 3
    for mask in range(1 << n):
        mono = Element.monomial(n, QQ, mask)
        for i in range(1, n + 1):
            expected = mono if mask >> (i - 1) & 1 else Element.zero(n, QQ)
            assert mono.containing(i) == expected


# ---------------------------------------------------------------------------
# centre and ideals
# ---------------------------------------------------------------------------


def brute_force_centre(n, field):
    dim = 1 << n
    rows = []
    for i in range(1, n + 1):
        xi = Element.generator(n, field, i)
        cols = []
        for mask in graded_masks(n):
            m = Element.monomial(n, field, mask)
            cols.append((m * xi - xi * m).to_vector())
        rows.extend([[col[r] for col in cols] for r in range(dim)])
    vecs = linalg.nullspace(rows, dim, field)
    return Subspace.span(n, field, [Element.from_vector(n, field, v) for v in vecs])


def test_centre_examples():
    c2 = centre_basis(2, QQ)
    assert [str(b) for b in c2.basis] == ["1", "x1*x2"]
    c3 = centre_basis(3, QQ)
    assert [str(b) for b in c3.basis] == ["1", "x1*x2", "x1*x3", "x2*x3", "x1*x2*x3"]


def test_centre_matches_commutant_small(field):
    for n in (2, 3, 4):
        assert centre_basis(n, field) == brute_force_centre(n, field)


def test_centre_n1_is_everything():
    assert centre_basis(1, QQ) == full_space(1, QQ)


def test_ideal_examples():
    for n in (2, 3, 4):
        ideal = ideal_from_generators([x(n, 1)])
        assert ideal.dim == 1 << (n - 1)
    assert not ideal_from_generators([x(3, 1)]).contains(x(3, 2))
    both = ideal_from_generators([x(3, 1), x(3, 2)])
    assert both.contains(x(3, 1) * x(3, 2))


def test_augmentation_powers_nest():
    prev = full_space(3, GF5)
    for i in range(1, 5):
        cur = augmentation_power(3, GF5, i)
        assert cur.dim <= prev.dim
        for b in cur.basis:
            assert prev.contains(b)
        prev = cur
    assert augmentation_power(3, GF5, 4).dim == 0
    assert augmentation_power(3, GF5, 3).basis == (top_monomial(3, GF5),)


def test_subspace_canonical_equality():
    a = Subspace.span(2, QQ, [x(2, 1) + x(2, 2), x(2, 2)])
    b = Subspace.span(2, QQ, [x(2, 1).scale(3), x(2, 2) - x(2, 1)])
    assert a == b
    assert a.contains(x(2, 1))
    assert not a.contains(Element.one(2, QQ))


def test_element_text_canonical():
    e = Element(3, QQ, {0: QQ(1), 0b11: QQ(-3, 2), 0b111: QQ(1)})
    assert str(e) == "1 - 3/2*x1*x2 + x1*x2*x3"
    assert str(Element.zero(2, QQ)) == "0"
    assert str(Element.one(2, QQ)) == "1"
    assert str(Element.monomial(2, GF5, 0b1, 4)) == "4*x1"
