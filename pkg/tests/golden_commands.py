"""The golden-file command matrix shared by the test suite and the
regeneration helper (python -m tests.golden_commands)."""

GOLDEN_COMMANDS = [
    ("mul_basic", ["mul", "x2", "x1", "--n", "2"]),
    ("mul_unit_cancel", ["mul", "1 + x1", "1 - x1", "--n", "2", "--field", "fp:5"]),
    ("mul_json", ["mul", "x2", "x1", "--n", "2", "--json"]),
    ("apply_der_inner", ["apply-der", "--images", "0,2*x1*x2", "x2", "--n", "2"]),
    ("apply_sder_partial",
     ["apply-sder", "--images", "1,0,0", "x1*x2*x3", "--n", "3"]),
    ("decompose_der_inner", ["decompose-der", "--images", "0,2*x1*x2", "--n", "2"]),
    ("decompose_der_json",
     ["decompose-der", "--images", "0,2*x1*x2", "--n", "2", "--json"]),
    ("decompose_sder_inner",
     ["decompose-sder", "--images", "0,0,2*x1*x2*x3", "--n", "3"]),
    ("canon_mixed", ["canon", "1 - 3/2*x1*x2 + x1*x2*x3", "--n", "3"]),
    ("canon_json", ["canon", "1 - 3/2*x1*x2 + x1*x2*x3", "--n", "3", "--json"]),
    ("solve_xa_solvable", ["solve-xa", "x1*x2,0", "--n", "2"]),
    ("solve_xa_unsolvable", ["solve-xa", "x2,0", "--n", "2"]),
    ("solve_xa_antisym", ["solve-xa", "x1*x2,x2*x3,0", "--n", "3"]),
    ("solve_xa_json", ["solve-xa", "x1*x2,0", "--n", "2", "--json"]),
    ("factor_aut_inner", ["factor-aut", "--images", "x1 + x1*x2,x2", "--n", "2"]),
    ("factor_aut_fp",
     ["factor-aut", "--images", "2*x2,3*x1 + x1*x2*x3,x3 + x1*x2*x3",
      "--n", "3", "--field", "fp:5"]),
    ("factor_aut_json",
     ["factor-aut", "--images", "x1 + x1*x2,x2", "--n", "2", "--json"]),
    ("is_normal_true", ["is-normal", "x1 + x2*x3", "--n", "3"]),
    ("is_normal_false", ["is-normal", "x1 + x2*x3", "--n", "4"]),
    ("classify_tail", ["classify-normal", "x1 + x2*x3", "--n", "3",
                       "--field", "fp:5"]),
    ("classify_x1", ["classify-normal", "x1 + x1*x2", "--n", "2"]),
    ("classify_json", ["classify-normal", "x1 + x1*x2", "--n", "2", "--json"]),
    ("centre_odd", ["centre", "--n", "3"]),
    ("centre_even", ["centre", "--n", "2", "--field", "fp:5"]),
    ("centre_json", ["centre", "--n", "3", "--json"]),
    ("diff_closure_m2", ["diff-closure", "x1*x2", "--n", "3", "--field", "fp:5"]),
    ("sdiff_closure_top", ["sdiff-closure", "x1*x2*x3", "--n", "3",
                           "--field", "fp:5"]),
    ("jordan_nilpotent", ["jordan", "--images", "x2,0", "--n", "2"]),
    ("jordan_semisimple", ["jordan", "--images", "x1,0", "--n", "2"]),
    ("jordan_json", ["jordan", "--images", "x1,0", "--n", "2", "--json"]),
]


def regenerate():
    import contextlib
    import io
    import pathlib

    from grassmann.cli import main

    root = pathlib.Path(__file__).parent / "golden"
    root.mkdir(exist_ok=True)
    for name, argv in GOLDEN_COMMANDS:
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = main(argv)
        assert code == 0, (name, code)
        (root / f"{name}.txt").write_text(buf.getvalue())
        print(f"wrote {name}.txt")


if __name__ == "__main__":
    regenerate()
