import json
import pathlib

import pytest

from grassmann.cli import main
from grassmann.fields import parse_field
from grassmann.parsing import parse_element

from .golden_commands import GOLDEN_COMMANDS

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"


@pytest.mark.parametrize("name,argv", GOLDEN_COMMANDS, ids=[n for n, _ in GOLDEN_COMMANDS])
def test_golden(name, argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    expected = (GOLDEN_DIR / f"{name}.txt").read_text()
    assert code == 0
    assert out == expected


@pytest.mark.parametrize("name,argv", GOLDEN_COMMANDS, ids=[n for n, _ in GOLDEN_COMMANDS])
def test_output_is_deterministic(name, argv, capsys):
    code1 = main(argv)
    first = capsys.readouterr().out
    code2 = main(argv)
    second = capsys.readouterr().out
    assert (code1, first) == (code2, second)


def test_json_elements_roundtrip_through_parser(capsys):
    main(["decompose-der", "--images", "x2 + x1*x2*x3,0,0", "--n", "3", "--json"])
    payload = json.loads(capsys.readouterr().out)
    field = parse_field(payload["field"])
    n = payload["n"]
    for text in payload["result"]["coeffs"] + [payload["result"]["inner"]]:
        parse_element(text, n, field)  # must not raise
    main(["centre", "--n", "3", "--json"])
    payload = json.loads(capsys.readouterr().out)
    for text in payload["result"]["basis"]:
        parse_element(text, 3, parse_field(payload["field"]))


def test_domain_error_exit_code(capsys):
    code = main(["classify-normal", "x1*x2", "--n", "3"])
    err = capsys.readouterr().err
    assert code == 1
    assert err.startswith("error:")


def test_parse_error_exit_code(capsys):
    code = main(["mul", "x9", "x1", "--n", "2"])
    assert code == 2
    code = main(["mul", "x1", "x2", "--n", "2", "--field", "fp:4"])
    assert code == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["mul", "x1"])  # missing operand and --n
    assert exc.value.code == 2


def test_invalid_derivation_is_domain_error(capsys):
    code = main(["apply-der", "--images", "1,0", "x1", "--n", "2"])
    assert code == 1


def test_console_script_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "grassmann.cli", "mul", "x2", "x1", "--n", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "-x1*x2\n"
