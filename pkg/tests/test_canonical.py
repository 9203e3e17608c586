from random import Random

from grassmann import linalg
from grassmann.algebra import Element, graded_masks, top_monomial
from grassmann.canonical import (
    XaFailure,
    XaSolution,
    solve_xa_system,
    triangular_presentation,
)
from grassmann.fields import QQ, PrimeField
from grassmann.parsing import parse_element
from grassmann.sampling import random_element

GF5 = PrimeField(5)


# ---------------------------------------------------------------------------
# triangular presentation
# ---------------------------------------------------------------------------


def test_top_monomial_presentation():
    for n in (1, 2, 4):
        form = triangular_presentation(top_monomial(n, QQ))
        assert form.top == QQ.one
        assert all(layer.is_zero() for layer in form.layers)


def test_single_generator_presentation():
    form = triangular_presentation(parse_element("x2", 2, QQ))
    assert form.top == QQ.zero
    assert form.layers[0] == parse_element("x2", 2, QQ)  # the prefix-free layer
    assert form.layers[1].is_zero()
    assert form.tail == QQ.zero


def test_reconstruction_random(field):
    rng = Random(9)
    for n in (1, 2, 3, 5):
        for _ in range(20):
            a = random_element(rng, n, field, density=0.6)
            form = triangular_presentation(a)
            assert form.reassemble() == a


def test_layer_supports():
    rng = Random(10)
    for _ in range(20):
        a = random_element(rng, 4, QQ, density=0.7)
        form = triangular_presentation(a)
        # layer i multiplies the prefix x_1..x_i and avoids x_1..x_{i+1}
        for i, layer in enumerate(form.layers):
            forbidden = (1 << (i + 1)) - 1
            assert all(not (m & forbidden) for m in layer.coeffs)


# ---------------------------------------------------------------------------
# the system x_i * a = u_i
# ---------------------------------------------------------------------------


def test_solver_worked_example():
    u = [parse_element("x1*x2", 2, QQ), parse_element("0", 2, QQ)]
    sol = solve_xa_system(u)
    assert isinstance(sol, XaSolution)
    assert sol.particular == parse_element("x2", 2, QQ)
    assert sol.kernel == top_monomial(2, QQ)
    x1, x2 = Element.generator(2, QQ, 1), Element.generator(2, QQ, 2)
    assert x1 * sol.particular == u[0]
    assert x2 * sol.particular == u[1]


def test_solver_zero_system():
    sol = solve_xa_system([Element.zero(3, QQ)] * 3)
    assert isinstance(sol, XaSolution)
    assert sol.particular.is_zero()


def test_solver_membership_failure():
    fail = solve_xa_system([parse_element("x2", 2, QQ), Element.zero(2, QQ)])
    assert isinstance(fail, XaFailure)
    assert fail.kind == "membership"
    assert fail.index == 1


def test_solver_antisymmetry_failure():
    # both images in their ideals, but the cross condition fails
    u1 = parse_element("x1*x2", 3, QQ)
    u2 = parse_element("x2*x3", 3, QQ)
    u3 = Element.zero(3, QQ)
    fail = solve_xa_system([u1, u2, u3])
    assert isinstance(fail, XaFailure)
    assert fail.kind == "antisymmetry"
    assert fail.pair == (1, 2)


def test_failure_scan_order_is_deterministic():
    # membership violations are reported before antisymmetry ones,
    # and the smallest index wins
    u = [parse_element("x2", 3, QQ), parse_element("x1", 3, QQ), Element.zero(3, QQ)]
    fail = solve_xa_system(u)
    assert (fail.kind, fail.index) == ("membership", 1)


def _stacked_left_multiplication(n, field):
    dim = 1 << n
    rows = []
    for i in range(1, n + 1):
        xi = Element.generator(n, field, i)
        cols = [(xi * Element.monomial(n, field, m)).to_vector()
                for m in graded_masks(n)]
        rows.extend([[col[r] for col in cols] for r in range(dim)])
    return rows


def brute_force_solve(u):
    n, field = u[0].n, u[0].field
    rows = _stacked_left_multiplication(n, field)
    rhs = []
    for v in u:
        rhs.extend(v.to_vector())
    sol = linalg.solve(rows, rhs, field)
    if sol is None:
        return None
    kernel = linalg.nullspace(rows, 1 << n, field)
    return Element.from_vector(n, field, sol), kernel


def test_solver_matches_brute_force(field):
    rng = Random(17)
    for n in (2, 3, 4):
        for trial in range(25):
            if trial % 2 == 0:
                a = random_element(rng, n, field)
                u = [Element.generator(n, field, i) * a for i in range(1, n + 1)]
            else:
                u = [random_element(rng, n, field, density=0.3)
                     for _ in range(n)]
            verdict = solve_xa_system(u)
            oracle = brute_force_solve(u)
            if isinstance(verdict, XaFailure):
                assert oracle is None
            else:
                assert oracle is not None
                particular, kernel = oracle
                # kernel of the stacked system is exactly the top monomial line
                assert len(kernel) == 1
                kern_elem = Element.from_vector(n, field, kernel[0])
                assert set(kern_elem.coeffs) == {(1 << n) - 1}
                diff = particular - verdict.particular
                assert diff.is_zero() or set(diff.coeffs) == {(1 << n) - 1}
                for i in range(1, n + 1):
                    xi = Element.generator(n, field, i)
                    assert xi * verdict.particular == u[i - 1]


def test_particular_has_no_top_component(field):
    rng = Random(23)
    for n in (2, 3, 4):
        for _ in range(10):
            a = random_element(rng, n, field)
            u = [Element.generator(n, field, i) * a for i in range(1, n + 1)]
            sol = solve_xa_system(u)
            assert isinstance(sol, XaSolution)
            assert (1 << n) - 1 not in sol.particular.coeffs
