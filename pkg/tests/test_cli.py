"""Command-line interface: golden outputs byte-for-byte, exit codes, and
diagnostics."""

import contextlib
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from syzcx import cli
from syzcx.cli import main

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"

FIB = str(DATA / "fib.alg")
LOOP3 = str(DATA / "loop3.alg")
A2 = str(DATA / "a2.alg")


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        rc = main(argv)
    return rc, out.getvalue(), err.getvalue()


GOLDEN_CASES = [
    ("validate_fib.json", ["validate", FIB]),
    ("paths_loop3.json", ["paths", LOOP3]),
    ("syzquiver_fib_s1.json", ["syzquiver", FIB, "--module", "S1", "--json"]),
    ("syzquiver_fib_s1.dot", ["syzquiver", FIB, "--module", "S1", "--dot"]),
    ("complexity_fib_s1.json", ["complexity", FIB, "--module", "S1"]),
    ("complexity_a2_s1.json", ["complexity", A2, "--module", "S1"]),
    ("lower_bound_fib.json",
     ["lower-bound", FIB, "--partial", str(DATA / "partial_fib.json"),
      "--vertex", "0"]),
    ("curvature_check_golden.json", ["curvature", "check", "[-1,-1,1]"]),
    ("curvature_check_indeterminate.json",
     ["curvature", "check", "[-1,-1,0,0,0,1]"]),
    ("curvature_combine_product.json",
     ["curvature", "combine", "--op", "product", "[-1,-1,1]", "[-1,-1,1]"]),
    ("curvature_combine_root.json",
     ["curvature", "combine", "--op", "root", "[1,-3,1]", "2"]),
    ("curvature_realize_12.json", ["curvature", "realize", "1,2"]),
    ("realize_loop_l1.txt",
     ["realize-class", "--quiver", str(DATA / "loopquiver.alg"),
      "--ell", "1"]),
    ("convolve_phi.json", ["convolve", "[-1,-1,1]^n", "[-1,-1,1]^n*n^1"]),
    ("oracle_dims_fib.json",
     ["oracle", "dims", FIB, "--module", "S1", "-n", "10"]),
    ("oracle_dims_xyz.json",
     ["oracle", "dims", "--builtin", "xyz-local", "--module", "k", "-n", "5"]),
    ("oracle_crosscheck_fib.json",
     ["oracle", "crosscheck", FIB, "--module", "S1", "-n", "10"]),
]


@pytest.mark.parametrize("golden,argv",
                         GOLDEN_CASES, ids=[g for g, _ in GOLDEN_CASES])
def test_golden(golden, argv):
    rc, out, err = run_cli(argv)
    assert rc == 0, err
    assert err == ""
    assert out == (GOLDEN / golden).read_text()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "syzcx.cli", "validate", FIB],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["algebra"] == "fib"


# -- exit code 1: usage -----------------------------------------------------------

@pytest.mark.parametrize("argv", [
    [],
    ["no-such-command"],
    ["syzquiver", FIB],                       # missing --module
    ["syzquiver", FIB, "--module", "S1", "--dot", "--json"],
    ["curvature", "realize", "1,-2"],          # negative count
    ["complexity"],                            # missing file
])
def test_usage_errors(argv):
    rc, _, err = run_cli(argv)
    assert rc == 1
    assert "error[usage]" in err


# -- exit code 2: parse ------------------------------------------------------------

def test_parse_missing_file():
    rc, _, err = run_cli(["validate", str(DATA / "does_not_exist.alg")])
    assert rc == 2
    assert "error[io]" in err


def test_parse_bad_algebra(tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text("algebra x\nvertex 1\nwhatever\n")
    rc, _, err = run_cli(["validate", str(bad)])
    assert rc == 2
    assert "error[syntax_error]" in err and "line 3" in err


def test_parse_bad_partial_json():
    rc, _, err = run_cli(["lower-bound", FIB, "--partial",
                          str(DATA / "notjson.json"), "--vertex", "0"])
    assert rc == 2
    assert "error[json]" in err


def test_parse_bad_class_literal():
    rc, _, err = run_cli(["convolve", "wat", "[-1,-1,1]^n"])
    assert rc == 2
    assert "error[input]" in err


def test_parse_bad_coeffs():
    rc, _, err = run_cli(["curvature", "check", "[1,two]"])
    assert rc == 2
    assert "error[input]" in err


# -- exit code 3: validation ---------------------------------------------------------

def test_validation_unknown_module():
    rc, _, err = run_cli(["complexity", FIB, "--module", "nope"])
    assert rc == 3
    assert "error[validation_error]" in err


def test_validation_infinite_dimensional():
    rc, _, err = run_cli(["validate", str(DATA / "infinite.alg")])
    assert rc == 3
    assert "error[infinite_dimensional]" in err
    assert "nonzero cycle l" in err


def test_validation_vertex_out_of_range():
    rc, _, err = run_cli(["lower-bound", FIB, "--partial",
                          str(DATA / "partial_fib.json"), "--vertex", "7"])
    assert rc == 3


def test_validation_invalid_partial():
    rc, _, err = run_cli(["lower-bound", FIB, "--partial",
                          str(DATA / "partial_bogus.json"), "--vertex", "0"])
    assert rc == 3
    assert "error[invalid_partial]" in err


def test_validation_unknown_builtin():
    rc, _, err = run_cli(["oracle", "dims", "--builtin", "nope",
                          "--module", "k", "-n", "3"])
    assert rc == 3


def test_validation_unknown_table_module():
    rc, _, err = run_cli(["oracle", "dims", "--builtin", "xyz-local",
                          "--module", "nope", "-n", "3"])
    assert rc == 3
    assert "available: k, regular" in err


# -- exit code 4: math preconditions ---------------------------------------------------

def test_math_non_monic():
    rc, _, err = run_cli(["curvature", "check", "[-1,2]"])
    assert rc == 4
    assert "error[not_monic]" in err


def test_math_trailing_zero_companion():
    rc, _, err = run_cli(["curvature", "realize", "1,0"])
    assert rc == 4
    assert "error[trailing_zero]" in err


def test_math_not_strongly_connected():
    rc, _, err = run_cli(["realize-class", "--quiver", A2, "--ell", "0"])
    assert rc == 4
    assert "error[not_strongly_connected]" in err


# -- exit code 5: internal inconsistency ------------------------------------------------

def test_internal_crosscheck_mismatch(monkeypatch):
    from syzcx import oracle as oracle_mod
    from syzcx.oracle import CrosscheckReport

    def fake(A, M, N, primes=None, cap=None):
        return CrosscheckReport((1, 1, 2), (1, 1, 3), False, 2)

    monkeypatch.setattr(cli, "crosscheck", fake)
    rc, out, err = run_cli(["oracle", "crosscheck", FIB,
                            "--module", "S1", "-n", "2"])
    assert rc == 5
    assert "error[inconsistent]" in err
    assert json.loads(out)["first_mismatch"] == 2
    del oracle_mod


def test_internal_prime_disagreement(monkeypatch):
    from syzcx.errors import PrimeDisagreementError

    def boom(A, M, N, primes=None, cap=None):
        raise PrimeDisagreementError(
            "syzygy dimensions differ between primes at n=3"
        )

    monkeypatch.setattr(cli, "crosscheck", boom)
    rc, _, err = run_cli(["oracle", "crosscheck", FIB,
                          "--module", "S1", "-n", "4"])
    assert rc == 5
    assert "error[prime_disagreement]" in err


# -- help text ----------------------------------------------------------------------

def test_help_exits_zero():
    with pytest.raises(SystemExit) as exc:
        run_cli(["--help"])
    assert exc.value.code == 0
