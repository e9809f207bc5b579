import json

import pytest

from wittkit.cli import main
from wittkit.crysto import pgg_group
from wittkit.jsonio import group_to_json


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out


def series_doc(coeffs, kind="int", **extra):
    ring = {"kind": kind, **extra}
    return json.dumps(
        {"ring": ring, "trunc": len(coeffs), "coeffs": [str(c) for c in coeffs]}
    )


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def test_witt_mul_example(capsys, files):
    a = files("a.json", series_doc([-2, 0, 0, 0]))
    b = files("b.json", series_doc([-3, 0, 0, 0]))
    code, out = run(capsys, ["witt", "mul", a, b])
    assert code == 0
    assert json.loads(out)["coeffs"] == ["-6", "0", "0", "0"]


def test_witt_ghost_zero(capsys, monkeypatch):
    code, out = run(
        capsys, ["witt", "ghost", "-"], stdin=series_doc([0, 0, 0]), monkeypatch=monkeypatch
    )
    assert code == 0
    assert json.loads(out)["ghost"] == ["0", "0", "0"]


def test_ghost_round_trip_bytes(capsys, files, monkeypatch):
    # unghost(ghost(x)) = x, and re-serialization is byte-identical
    a = files("a.json", series_doc([5, -1, 2, 0]))
    code, ghost_text = run(capsys, ["witt", "ghost", a])
    assert code == 0
    code, back = run(capsys, ["witt", "unghost", "-"], stdin=ghost_text, monkeypatch=monkeypatch)
    assert code == 0
    code, again = run(capsys, ["witt", "ghost", "-"], stdin=back, monkeypatch=monkeypatch)
    assert code == 0
    assert again == ghost_text
    assert back.endswith("\n")


def test_exit_code_no_solution(capsys, monkeypatch):
    ghost = json.dumps({"ring": {"kind": "int"}, "trunc": 3, "ghost": ["1", "0", "0"]})
    code, _ = run(capsys, ["witt", "unghost", "-"], stdin=ghost, monkeypatch=monkeypatch)
    assert code == 3


def test_exit_code_invalid(capsys, monkeypatch, files):
    code, _ = run(capsys, ["witt", "ghost", "-"], stdin="not json", monkeypatch=monkeypatch)
    assert code == 2
    bad = files("bad.json", json.dumps({"ring": {"kind": "int"}, "trunc": 2, "coeffs": ["1"]}))
    code, _ = run(capsys, ["witt", "neg", bad])
    assert code == 2
    a = files("a.json", series_doc([1, 0]))
    b = files("b.json", series_doc([1, 0, 0]))
    code, _ = run(capsys, ["witt", "add", a, b])
    assert code == 2


def test_trunc_flag_checks(capsys, files):
    a = files("a.json", series_doc([1, 0]))
    code, _ = run(capsys, ["witt", "neg", a, "--trunc", "2"])
    assert code == 0
    code, _ = run(capsys, ["witt", "neg", a, "--trunc", "3"])
    assert code == 2


def test_unknown_flag_rejected(capsys, files):
    a = files("a.json", series_doc([1, 0]))
    with pytest.raises(SystemExit):
        main(["witt", "neg", a, "--frobulate"])
    capsys.readouterr()


def test_witt_operator_commands(capsys, monkeypatch):
    code, out = run(
        capsys,
        ["witt", "frob", "2", "-"],
        stdin=series_doc([0, -1, 0, 0]),
        monkeypatch=monkeypatch,
    )
    assert code == 0 and json.loads(out)["coeffs"] == ["-2", "1", "0", "0"]
    code, out = run(
        capsys,
        ["witt", "versch", "2", "-"],
        stdin=series_doc([-1, 0, 0, 0]),
        monkeypatch=monkeypatch,
    )
    assert code == 0 and json.loads(out)["coeffs"] == ["0", "-1", "0", "0"]
    code, out = run(
        capsys,
        ["witt", "lambda", "2", "-"],
        stdin=series_doc([-7, 10, 0]),
        monkeypatch=monkeypatch,
    )
    assert code == 0 and json.loads(out)["coeffs"] == ["-10", "0", "0"]


def test_orbit_commands(capsys, monkeypatch):
    code, out = run(
        capsys, ["witt", "orbit", "-"], stdin=series_doc([-1, -1, 1, 0]),
        monkeypatch=monkeypatch,
    )
    assert code == 0 and json.loads(out)["orbit"] == ["1", "1", "0", "0"]
    code, out = run(capsys, ["witt", "unorbit", "-"], stdin=out, monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["coeffs"] == ["-1", "-1", "1", "0"]


def test_binom_command(capsys, monkeypatch):
    code, out = run(
        capsys, ["witt", "binom", "-"], stdin=series_doc([-2, 1, 0]), monkeypatch=monkeypatch
    )
    assert code == 0 and json.loads(out)["binom"] == ["2", "0", "0"]


def test_endo_commands(capsys, monkeypatch, files):
    mat = json.dumps({"ring": {"kind": "int"}, "dim": 2, "rows": [["0", "1"], ["1", "0"]]})
    code, out = run(capsys, ["endo", "charpoly", "-"], stdin=mat, monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["coeffs"] == ["0", "-1"]
    code, out = run(capsys, ["endo", "traces", "4", "-"], stdin=mat, monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["ghost"] == ["0", "2", "0", "2"]
    a = files("ma.json", json.dumps({"ring": {"kind": "int"}, "dim": 1, "rows": [["2"]]}))
    b = files("mb.json", json.dumps({"ring": {"kind": "int"}, "dim": 1, "rows": [["3"]]}))
    code, out = run(capsys, ["endo", "tensor", a, b])
    assert code == 0 and json.loads(out)["rows"] == [["6"]]
    comp = json.dumps({"ring": {"kind": "int"}, "coeffs": ["3", "5"]})
    code, out = run(capsys, ["endo", "companion", "-"], stdin=comp, monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["rows"] == [["0", "-5"], ["1", "-3"]]


def test_burnside_commands(capsys, monkeypatch, files):
    x = json.dumps({"orbits": {"1": 1, "2": 1}})
    code, out = run(capsys, ["burnside", "ghost", "6", "-"], stdin=x, monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["ghost"] == ["1", "3", "1", "3", "1", "3"]
    code, out = run(capsys, ["burnside", "invert", "-"], stdin=out, monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out) == {"orbits": {"1": 1, "2": 1}}
    a = files("x.json", json.dumps({"orbits": {"2": 1}}))
    b = files("y.json", json.dumps({"orbits": {"3": 1}}))
    code, out = run(capsys, ["burnside", "mul", a, b])
    assert code == 0 and json.loads(out) == {"orbits": {"6": 1}}
    code, out = run(capsys, ["burnside", "frob", "2", a])
    assert code == 0 and json.loads(out) == {"orbits": {"1": 2}}
    code, out = run(capsys, ["burnside", "versch", "2", a])
    assert code == 0 and json.loads(out) == {"orbits": {"4": 1}}
    code, out = run(capsys, ["burnside", "embed", "4", a])
    assert code == 0 and json.loads(out)["coeffs"] == ["0", "-1", "0", "0"]


def test_crysto_commands(capsys, files):
    code, out = run(capsys, ["crysto", "lattice", "5", "0", "1"])
    assert code == 0 and json.loads(out) == {"S": 1, "T": 0}
    code, out = run(capsys, ["crysto", "prime", "6", "100"])
    assert code == 0 and json.loads(out) == {"p": 11}
    code, _ = run(capsys, ["crysto", "prime", "6", "5"])
    assert code == 3
    group = files("pgg.json", json.dumps(group_to_json(pgg_group())))
    code, out = run(capsys, ["crysto", "expansive", group, "5"])
    assert code == 0
    reply = json.loads(out)
    assert reply["u"] == ["1", "-1"] and reply["shift"]["1"] == [2, 2]
    code, _ = run(capsys, ["crysto", "expansive", group, "4"])
    assert code == 2
    code, out = run(capsys, ["crysto", "cohomology", group, "2"])
    assert code == 0 and json.loads(out) == {"invariant_factors": [2, 2]}
    code, out = run(capsys, ["crysto", "fixed", group])
    assert code == 0 and json.loads(out) == {"basis": []}


def test_cli_output_is_canonical(capsys, files):
    a = files("a.json", series_doc([-2, 0]))
    b = files("b.json", series_doc([-3, 0]))
    code, out = run(capsys, ["witt", "mul", a, b])
    assert out == '{"coeffs":["-6","0"],"ring":{"kind":"int"},"trunc":2}\n'


def test_console_script_subprocess(tmp_path):
    # the installed entry point, through real pipes
    import subprocess

    a = tmp_path / "a.json"
    a.write_text(series_doc([-2, 0, 0, 0]))
    ghost = subprocess.run(
        ["wittkit", "witt", "ghost", str(a)], capture_output=True, text=True
    )
    assert ghost.returncode == 0
    back = subprocess.run(
        ["wittkit", "witt", "unghost", "-"],
        input=ghost.stdout,
        capture_output=True,
        text=True,
    )
    assert back.returncode == 0
    assert json.loads(back.stdout) == json.loads(a.read_text())
    bad = subprocess.run(
        ["wittkit", "witt", "unghost", "-"],
        input='{"ring":{"kind":"int"},"trunc":2,"ghost":["1","0"]}',
        capture_output=True,
        text=True,
    )
    assert bad.returncode == 3
