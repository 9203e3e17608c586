"""Triangular canonical presentation and the left-multiplication solver.

Every element decomposes uniquely along leading prefixes x_1...x_i, and the
components are computed by explicit skew-derivative operator strings.  The
same operator string solves the system x_i * a = u_i, whose solvability is
characterized by two checkable conditions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Element, top_monomial
from .errors import MismatchError
from .fields import Field, Scalar


def _prefix_monomial(n: int, field: Field, i: int) -> Element:
    """x_1 x_2 ... x_i (the empty product for i = 0)."""
    return Element.monomial(n, field, (1 << i) - 1)


def _descending_partials(a: Element, upto: int) -> Element:
    # apply d_1, then d_2, ..., then d_upto
    for j in range(1, upto + 1):
        a = a.partial(j)
    return a


@dataclass(frozen=True)
class TriangularForm:
    """Unique layered presentation of an element.

    ``top`` is the scalar coefficient of the full monomial x_1...x_n;
    ``layers[i]`` (0-based, i = 0..n-1) is the cofactor of the prefix
    x_1...x_i, an element supported on generators with index > i+1 only
    (index > 1 for the prefix-free layer 0).
    """

    n: int
    field: Field
    top: Scalar
    layers: tuple[Element, ...]

    def reassemble(self) -> Element:
        total = _prefix_monomial(self.n, self.field, self.n).scale(self.top)
        for i, layer in enumerate(self.layers):
            total = total + _prefix_monomial(self.n, self.field, i) * layer
        return total

    @property
    def tail(self) -> Scalar:
        """The scalar cofactor of x_1...x_{n-1} (constant by construction)."""
        return self.layers[-1].constant_term()


def triangular_presentation(a: Element) -> TriangularForm:
    n, field = a.n, a.field
    top = _descending_partials(a, n).constant_term()
    layers = [a - a.containing(1)]
    for i in range(1, n):
        without_next = a - a.containing(i + 1)
        layers.append(_descending_partials(without_next, i))
    return TriangularForm(n, field, top, tuple(layers))


@dataclass(frozen=True)
class XaSolution:
    """Solution family of {x_i * a = u_i}: ``particular`` has zero coefficient
    on the top monomial; the full set is particular + K * kernel."""

    particular: Element
    kernel: Element  # the top monomial x_1...x_n


@dataclass(frozen=True)
class XaFailure:
    """First violated solvability condition, in deterministic scan order."""

    kind: str  # "membership" (u_i not in (x_i)) or "antisymmetry"
    index: int | None = None
    pair: tuple[int, int] | None = None

    def describe(self) -> str:
        if self.kind == "membership":
            return f"u[{self.index}] is not in the ideal (x{self.index})"
        i, j = self.pair
        return f"x{i}*u[{j}] != -x{j}*u[{i}]"


def solve_xa_system(images) -> XaSolution | XaFailure:
    """Solve x_i * a = u_i for a, or certify why no solution exists.

    Solvable iff every u_i lies in (x_i) and x_i u_j = -x_j u_i for i != j;
    the returned particular solution is normalized to have no component on
    the top monomial, and the homogeneous solutions are its scalar multiples.
    """
    u = list(images)
    n, field = u[0].n, u[0].field
    for v in u:
        if v.n != n or v.field != field:
            raise MismatchError("system images must share n and field")
    if len(u) != n:
        raise MismatchError(f"expected {n} images, got {len(u)}")

    for i in range(1, n + 1):
        bit = 1 << (i - 1)
        if any(not mask & bit for mask in u[i - 1].coeffs):
            return XaFailure(kind="membership", index=i)
    for i in range(1, n + 1):
        xi = Element.generator(n, field, i)
        for j in range(i + 1, n + 1):
            xj = Element.generator(n, field, j)
            if xi * u[j - 1] != -(xj * u[i - 1]):
                return XaFailure(kind="antisymmetry", pair=(i, j))

    particular = u[0].partial(1)
    for i in range(1, n):
        v = _descending_partials(u[i].partial(i + 1), i)
        particular = particular + _prefix_monomial(n, field, i) * v
    return XaSolution(particular=particular, kernel=top_monomial(n, field))
