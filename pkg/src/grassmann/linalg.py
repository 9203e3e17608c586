"""Exact dense linear algebra over the scalar types.

Everything works uniformly over Fraction and GFElem through operator
overloading; matrices are lists of row lists and are never mutated in place
by callers.  Polynomials (for minimal-polynomial work) are coefficient lists
in ascending degree.
"""

from __future__ import annotations

from .errors import DomainError


def identity_matrix(k, field):
    return [[field.one if i == j else field.zero for j in range(k)] for i in range(k)]


def mat_mul(a, b, field):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    zero = field.zero
    out = []
    for i in range(rows):
        ai = a[i]
        row = [zero] * cols
        for k in range(inner):
            c = ai[k]
            if not c:
                continue
            bk = b[k]
            for j in range(cols):
                if bk[j]:
                    row[j] = row[j] + c * bk[j]
        out.append(row)
    return out


def mat_vec(a, v, field):
    zero = field.zero
    out = []
    for row in a:
        s = zero
        for c, x in zip(row, v):
            if c and x:
                s = s + c * x
        out.append(s)
    return out


def rref(matrix, field):
    """Reduced row echelon form.  Returns (rows, pivot column indices)."""
    m = [list(row) for row in matrix]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = field.one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def rank(matrix, field) -> int:
    return len(rref(matrix, field)[0])


def nullspace(matrix, ncols, field):
    """Basis of the right kernel {v : Mv = 0}, one vector per free column."""
    rows, pivots = rref(matrix, field)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for row, pc in zip(rows, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def solve(matrix, rhs, field):
    """One solution of Mx = b, or None when inconsistent."""
    ncols = len(matrix[0]) if matrix else 0
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(aug, field)
    x = [field.zero] * ncols
    for row, pc in zip(rows, pivots):
        if pc == ncols:
            return None
        x[pc] = row[-1]
    return x


def invert(matrix, field):
    k = len(matrix)
    aug = [list(row) + ident for row, ident in zip(matrix, identity_matrix(k, field))]
    rows, pivots = rref(aug, field)
    if pivots[:k] != list(range(k)):
        raise DomainError("matrix is singular")
    return [row[k:] for row in rows]


def is_invertible(matrix, field) -> bool:
    return rank(matrix, field) == len(matrix)


# ---------------------------------------------------------------------------
# polynomials, ascending coefficients; always kept with exact trailing zeros
# stripped so that len-1 is the degree
# ---------------------------------------------------------------------------


def _trim(p):
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


def poly_is_zero(p) -> bool:
    return all(not c for c in p)


def poly_mul(p, q, field):
    out = [field.zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return _trim(out)


def poly_mod(p, q, field):
    p = list(p)
    dq = len(q) - 1
    lead_inv = field.one / q[-1]
    while len(p) - 1 >= dq and not poly_is_zero(p):
        shift = len(p) - 1 - dq
        f = p[-1] * lead_inv
        for i in range(len(q)):
            p[shift + i] = p[shift + i] - f * q[i]
        _trim(p)
    return p


def poly_divmod(p, q, field):
    p = list(p)
    dq = len(q) - 1
    lead_inv = field.one / q[-1]
    quot = [field.zero] * max(1, len(p) - dq)
    while len(p) - 1 >= dq and not poly_is_zero(p):
        shift = len(p) - 1 - dq
        f = p[-1] * lead_inv
        quot[shift] = f
        for i in range(len(q)):
            p[shift + i] = p[shift + i] - f * q[i]
        _trim(p)
    return _trim(quot), p


def poly_gcd(p, q, field):
    a, b = list(p), list(q)
    while not poly_is_zero(b):
        a, b = b, poly_mod(a, b, field)
    if poly_is_zero(a):
        return a
    inv = field.one / a[-1]
    return [c * inv for c in a]


def poly_lcm(p, q, field):
    g = poly_gcd(p, q, field)
    quot, rem = poly_divmod(poly_mul(p, q, field), g, field)
    assert poly_is_zero(rem)
    inv = field.one / quot[-1]
    return [c * inv for c in quot]


def poly_derivative(p, field):
    if len(p) == 1:
        return [field.zero]
    return _trim([field(i) * c for i, c in enumerate(p)][1:])


def poly_is_squarefree(p, field) -> bool:
    d = poly_derivative(p, field)
    if poly_is_zero(d):
        return len(p) == 1
    return len(poly_gcd(p, d, field)) == 1


def minimal_polynomial(matrix, field):
    """Monic minimal polynomial of a square matrix, ascending coefficients.

    LCM of the local minimal polynomials of the standard basis vectors;
    basis vectors already annihilated by the running LCM are skipped.
    """
    k = len(matrix)
    g = [field.one]

    def apply_poly(p, v):
        # p(M) v, accumulating successive powers M^i v
        acc = [field.zero] * k
        power = list(v)
        for i, c in enumerate(p):
            if c:
                acc = [x + c * y for x, y in zip(acc, power)]
            if i + 1 < len(p):
                power = mat_vec(matrix, power, field)
        return acc

    for j in range(k):
        e = [field.one if i == j else field.zero for i in range(k)]
        if all(not c for c in apply_poly(g, e)):
            continue
        # Krylov sequence of e until linear dependence; the dependence
        # coefficients give the local minimal polynomial.
        krylov = []
        reduced = []  # row-reduced copies aligned with krylov
        combos = []   # combos[i][t] = coefficient of krylov[t] in reduced[i]
        v = e
        local = None
        while local is None:
            w = list(v)
            combo = [field.zero] * (len(krylov) + 1)
            combo[-1] = field.one
            for row, rc in zip(reduced, combos):
                piv = next((idx for idx, c in enumerate(row) if c), None)
                if piv is not None and w[piv]:
                    f = w[piv] / row[piv]
                    w = [x - f * y for x, y in zip(w, row)]
                    for t, c in enumerate(rc):
                        combo[t] = combo[t] - f * c
            if all(not c for c in w):
                local = _trim(list(combo))
            else:
                krylov.append(v)
                reduced.append(w)
                combos.append(combo)
                v = mat_vec(matrix, v, field)
        inv = field.one / local[-1]
        local = [c * inv for c in local]
        g = poly_lcm(g, local, field)
        if len(g) - 1 == k:
            break
    return g
