"""Command-line interface.

Every subcommand takes the global flags ``--n``, ``--field`` (q or fp:<p>),
``--json`` and ``--seed``; elements are quoted expressions in the element
grammar and lists are comma-separated.  Output is byte-deterministic:
canonical term order, canonical scalar form.  Exit codes: 0 success, 1
domain error, 2 parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import centre_basis, Subspace
from .automorphisms import Automorphism, factor_automorphism
from .canonical import XaFailure, solve_xa_system, triangular_presentation
from .derivations import (
    Derivation,
    decompose_derivation,
    differential_closure,
    is_nilpotent,
    is_semisimple,
)
from .errors import GrassmannError, ParseError
from .fields import parse_field
from .normal import classify_normal, is_normal
from .parsing import parse_element, parse_element_list
from .skew import SkewDerivation, decompose_skew, skew_differential_closure


def _images(args, n, field):
    return parse_element_list(args.images, n, field, count=n)


def _subspace_output(space: Subspace):
    lines = [f"dim = {space.dim}"]
    lines.extend(str(b) for b in space.basis)
    return {"dim": space.dim, "basis": [str(b) for b in space.basis]}, lines


def cmd_mul(args, n, field):
    r = parse_element(args.lhs, n, field) * parse_element(args.rhs, n, field)
    return str(r), [str(r)]


def cmd_apply_der(args, n, field):
    d = Derivation(n, field, _images(args, n, field))
    r = d(parse_element(args.element, n, field))
    return str(r), [str(r)]


def cmd_apply_sder(args, n, field):
    d = SkewDerivation(n, field, _images(args, n, field))
    r = d(parse_element(args.element, n, field))
    return str(r), [str(r)]


def cmd_decompose_der(args, n, field):
    dec = decompose_derivation(Derivation(n, field, _images(args, n, field)))
    lines = [f"coeff[{i}] = {c}" for i, c in enumerate(dec.even_coeffs, start=1)]
    lines.append(f"inner = {dec.inner_element}")
    return {
        "coeffs": [str(c) for c in dec.even_coeffs],
        "inner": str(dec.inner_element),
    }, lines


def cmd_decompose_sder(args, n, field):
    dec = decompose_skew(SkewDerivation(n, field, _images(args, n, field)))
    lines = [f"coeff[{i}] = {c}" for i, c in enumerate(dec.odd_coeffs, start=1)]
    lines.append(f"inner = {dec.inner_element}")
    return {
        "coeffs": [str(c) for c in dec.odd_coeffs],
        "inner": str(dec.inner_element),
    }, lines


def cmd_canon(args, n, field):
    form = triangular_presentation(parse_element(args.element, n, field))
    lines = [f"top = {form.top}"]
    lines.extend(f"b[{i}] = {layer}" for i, layer in enumerate(form.layers, start=1))
    return {
        "top": str(form.top),
        "b": [str(layer) for layer in form.layers],
    }, lines


def cmd_solve_xa(args, n, field):
    result = solve_xa_system(parse_element_list(args.images, n, field, count=n))
    if isinstance(result, XaFailure):
        return {
            "solvable": False,
            "kind": result.kind,
            "index": result.index,
            "pair": list(result.pair) if result.pair else None,
            "reason": result.describe(),
        }, [f"unsolvable: {result.describe()}"]
    return {
        "solvable": True,
        "particular": str(result.particular),
        "kernel": str(result.kernel),
    }, [
        f"particular = {result.particular}",
        f"kernel = K*{result.kernel}",
    ]


def _matrix_text(rows):
    return "[" + ", ".join(
        "[" + ", ".join(str(c) for c in row) + "]" for row in rows
    ) + "]"


def cmd_factor_aut(args, n, field):
    fact = factor_automorphism(Automorphism(n, field, _images(args, n, field)))
    lines = [f"a = {fact.inner}"]
    lines.extend(f"b[{i}] = {b}" for i, b in enumerate(fact.shifts, start=1))
    lines.append(f"A = {_matrix_text(fact.linear)}")
    return {
        "a": str(fact.inner),
        "b": [str(b) for b in fact.shifts],
        "A": [[str(c) for c in row] for row in fact.linear],
    }, lines


def cmd_is_normal(args, n, field):
    verdict = is_normal(parse_element(args.element, n, field))
    word = "true" if verdict else "false"
    return verdict, [word]


def cmd_classify_normal(args, n, field):
    report = classify_normal(parse_element(args.element, n, field))
    lines = [f"stratum = {report.stratum}", f"orbit = {report.orbit}"]
    lines.extend(
        f"witness[{i}] = {g}" for i, g in enumerate(report.witness.images, start=1)
    )
    return {
        "stratum": report.stratum,
        "orbit": report.orbit,
        "witness": [str(g) for g in report.witness.images],
    }, lines


def cmd_centre(args, n, field):
    return _subspace_output(centre_basis(n, field))


def cmd_diff_closure(args, n, field):
    return _subspace_output(
        differential_closure(parse_element(args.element, n, field))
    )


def cmd_sdiff_closure(args, n, field):
    return _subspace_output(
        skew_differential_closure(parse_element(args.element, n, field))
    )


def cmd_jordan(args, n, field):
    d = Derivation(n, field, _images(args, n, field))
    nil = is_nilpotent(d)
    semi = is_semisimple(d)
    return {"nilpotent": nil, "semisimple": semi}, [
        f"nilpotent = {'true' if nil else 'false'}",
        f"semisimple = {'true' if semi else 'false'}",
    ]


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--n", type=int, required=True,
                        help="number of generators (1..16)")
    shared.add_argument("--field", default="q",
                        help="coefficient field: q or fp:<odd prime>")
    shared.add_argument("--json", action="store_true",
                        help="structured output instead of plain text")
    shared.add_argument("--seed", type=int, default=0,
                        help="seed for randomized self-check subcommands")

    parser = argparse.ArgumentParser(
        prog="grassmann",
        description="exact computations in Grassmann algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, *, positionals=(), images=False):
        p = sub.add_parser(name, parents=[shared], help=help_text)
        for pos, pos_help in positionals:
            p.add_argument(pos, help=pos_help)
        if images:
            p.add_argument("--images", required=True,
                           help="comma-separated generator images f1,...,fn")
        p.set_defaults(handler=handler)

    add("mul", cmd_mul, "product of two elements",
        positionals=[("lhs", "left factor"), ("rhs", "right factor")])
    add("apply-der", cmd_apply_der, "apply the derivation with given images",
        positionals=[("element", "argument element")], images=True)
    add("apply-sder", cmd_apply_sder, "apply the skew derivation with given images",
        positionals=[("element", "argument element")], images=True)
    add("decompose-der", cmd_decompose_der,
        "parity decomposition of a derivation", images=True)
    add("decompose-sder", cmd_decompose_sder,
        "parity decomposition of a skew derivation", images=True)
    add("canon", cmd_canon, "triangular canonical presentation",
        positionals=[("element", "element to present")])
    add("solve-xa", cmd_solve_xa,
        "solve the left-multiplication system x_i*a = u_i",
        positionals=[("images", "comma-separated right-hand sides u1,...,un")])
    add("factor-aut", cmd_factor_aut,
        "factor an automorphism into conjugation, shift and linear parts",
        images=True)
    add("is-normal", cmd_is_normal, "decide normality",
        positionals=[("element", "element to test")])
    add("classify-normal", cmd_classify_normal,
        "orbit of a generic normal non-unit, with witness",
        positionals=[("element", "element to classify")])
    add("centre", cmd_centre, "basis of the centre")
    add("diff-closure", cmd_diff_closure,
        "smallest differential ideal containing the element",
        positionals=[("element", "seed element")])
    add("sdiff-closure", cmd_sdiff_closure,
        "smallest skew differential ideal containing the element",
        positionals=[("element", "seed element")])
    add("jordan", cmd_jordan, "nilpotent/semisimple predicates", images=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        field = parse_field(args.field)
        result, lines = args.handler(args, args.n, field)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GrassmannError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        envelope = {"n": args.n, "field": args.field, "result": result}
        print(json.dumps(envelope, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
