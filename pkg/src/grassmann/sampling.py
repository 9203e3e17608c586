"""Seeded random generators for elements, derivations and automorphisms.

Coefficients come from a small pool so that rational arithmetic stays fast;
derivations and skew derivations are sampled through their structure theory
(coefficiented partials plus an inner part), which reaches everything.
"""

from __future__ import annotations

from random import Random

from .algebra import Element, _popcount
from .automorphisms import (
    Automorphism,
    conjugation,
    generator_shift,
    linear_substitution,
)
from .derivations import Derivation
from .fields import Field, PrimeField
from .skew import SkewDerivation
from . import linalg


def random_scalar(rng: Random, field: Field, nonzero: bool = False):
    if isinstance(field, PrimeField):
        lo = 1 if nonzero else 0
        return field(rng.randrange(lo, field.p))
    num = rng.randint(1, 6) if nonzero else rng.randint(-6, 6)
    if nonzero and rng.random() < 0.5:
        num = -num
    return field(num, rng.choice((1, 1, 2, 3)))


def random_element(
    rng: Random,
    n: int,
    field: Field,
    density: float = 0.4,
    parity: str | None = None,
    min_degree: int = 0,
    max_degree: int | None = None,
    exclude_top: bool = False,
) -> Element:
    if max_degree is None:
        max_degree = n
    coeffs = {}
    for mask in range(1 << n):
        deg = _popcount(mask)
        if deg < min_degree or deg > max_degree:
            continue
        if parity == "even" and deg % 2 == 1:
            continue
        if parity == "odd" and deg % 2 == 0:
            continue
        if exclude_top and mask == (1 << n) - 1:
            continue
        if rng.random() < density:
            c = random_scalar(rng, field, nonzero=True)
            if c:
                coeffs[mask] = c
    return Element(n, field, coeffs)


def random_derivation(rng: Random, n: int, field: Field) -> Derivation:
    """Sum of odd-coefficiented partials plus an inner derivation."""
    gens = [Element.generator(n, field, i) for i in range(1, n + 1)]
    coeffs = [random_element(rng, n, field, parity="odd") for _ in range(n)]
    inner = random_element(rng, n, field)
    return Derivation(
        n, field, [c + inner.commutator(x) for c, x in zip(coeffs, gens)]
    )


def random_skew_derivation(rng: Random, n: int, field: Field) -> SkewDerivation:
    """Sum of even-coefficiented partials plus an inner skew derivation."""
    gens = [Element.generator(n, field, i) for i in range(1, n + 1)]
    coeffs = [random_element(rng, n, field, parity="even") for _ in range(n)]
    inner = random_element(rng, n, field)
    return SkewDerivation(
        n, field, [c + inner * x + x * inner for c, x in zip(coeffs, gens)]
    )


def random_invertible_matrix(rng: Random, k: int, field: Field):
    while True:
        rows = [[random_scalar(rng, field) for _ in range(k)] for _ in range(k)]
        if linalg.is_invertible(rows, field):
            return rows


def random_admissible_triple(rng: Random, n: int, field: Field):
    """A factorization triple: reduced-odd conjugator, odd degree>=3 shifts,
    invertible linear part."""
    inner = random_element(
        rng, n, field, parity="odd", max_degree=n - 1, density=0.5
    )
    shifts = [
        random_element(rng, n, field, parity="odd", min_degree=3, density=0.5)
        for _ in range(n)
    ]
    linear = random_invertible_matrix(rng, n, field)
    return inner, shifts, linear


def random_automorphism(rng: Random, n: int, field: Field) -> Automorphism:
    inner, shifts, linear = random_admissible_triple(rng, n, field)
    out = linear_substitution(field, linear)
    out = generator_shift(shifts).compose(out)
    return conjugation(inner).compose(out)
