"""Parser for the element text grammar.

    element := term (('+' | '-') term)* | '0'
    term    := [coeff '*'] monomial | coeff
    coeff   := integer | integer '/' positive-integer
    monomial := 'x'<idx> ('*'? 'x'<idx>)*

Indices may appear in any order on input; the sign is normalized to the
ascending canonical order.  A repeated index inside one monomial makes the
term vanish.  Canonical output is produced by ``algebra.format_element``.
"""

from __future__ import annotations

import re

from .algebra import Element, _mul_sign
from .errors import ParseError
from .fields import Field

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x\d+)|(?P<op>[+\-*/]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos:].strip()[0]!r}")
            break
        if m.group("num"):
            out.append(("num", int(m.group("num"))))
        elif m.group("var"):
            out.append(("var", int(m.group("var")[1:])))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    return out


def parse_element(text: str, n: int, field: Field) -> Element:
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty element expression")

    result = Element.zero(n, field)
    i = 0
    sign = 1
    first = True
    while i < len(tokens):
        if not first:
            kind, val = tokens[i]
            if kind != "op" or val not in "+-":
                raise ParseError(f"expected '+' or '-' between terms near {val!r}")
            sign = 1 if val == "+" else -1
            i += 1
        else:
            sign = 1
            # a leading minus on the very first term is accepted
            while i < len(tokens) and tokens[i] == ("op", "-"):
                sign = -sign
                i += 1
            first = False
        term, i = _parse_term(tokens, i, n, field)
        result = result + term.scale(sign)
    return result


def _parse_term(tokens, i, n, field):
    if i >= len(tokens):
        raise ParseError("dangling operator at end of expression")
    kind, val = tokens[i]
    num = den = None
    if kind == "num":
        num = val
        i += 1
        if i + 1 < len(tokens) and tokens[i] == ("op", "/") and tokens[i + 1][0] == "num":
            den = tokens[i + 1][1]
            if den == 0:
                raise ParseError("zero denominator")
            i += 2
        # separator before a monomial part, if any
        if i < len(tokens) and tokens[i] == ("op", "*"):
            if i + 1 < len(tokens) and tokens[i + 1][0] == "var":
                i += 1
    coeff = field.one if num is None else field(num, den or 1)

    indices = []
    while i < len(tokens):
        kind, val = tokens[i]
        if kind == "var":
            indices.append(val)
            i += 1
            if i < len(tokens) and tokens[i] == ("op", "*") \
                    and i + 1 < len(tokens) and tokens[i + 1][0] == "var":
                i += 1
        else:
            break
    if num is None and not indices:
        raise ParseError("expected a coefficient or a monomial")

    # fold the generators in the written order, normalizing the sign
    mask = 0
    for idx in indices:
        if not 1 <= idx <= n:
            raise ParseError(f"generator index {idx} out of range 1..{n}")
        bit = 1 << (idx - 1)
        if mask & bit:
            return Element.zero(n, field), i
        if _mul_sign(mask, bit) < 0:
            coeff = -coeff
        mask |= bit
    return Element(n, field, {mask: coeff}), i


def parse_element_list(text: str, n: int, field: Field, count: int | None = None):
    """Comma-separated list of elements, optionally of a required length."""
    parts = text.split(",")
    if count is not None and len(parts) != count:
        raise ParseError(f"expected {count} comma-separated elements, got {len(parts)}")
    return [parse_element(p, n, field) for p in parts]
