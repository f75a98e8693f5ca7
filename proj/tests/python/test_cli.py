"""Exit-code and output contract of the command-line front end."""

import os
import subprocess

import numpy as np
import pytest

import spin7cells as s7

CLI = os.environ.get("SPIN7CELLS_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="SPIN7CELLS_CLI not set")


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)


def test_census_spin7():
    r = run("census", "spin7")
    assert r.returncode == 0
    assert "cells 16" in r.stdout
    assert "e21" in r.stdout


def test_census_su2():
    r = run("census", "su2")
    assert r.returncode == 0
    assert "cells 2" in r.stdout
    assert "poincare 1 + t^3" in r.stdout


def test_census_unknown_space_is_usage_error():
    assert run("census", "so5").returncode == 2


def test_cat_spin8():
    r = run("cat", "spin8")
    assert r.returncode == 0
    assert "wcat_lower 6" in r.stdout
    assert "cat_upper 6" in r.stdout
    assert "verdict determined" in r.stdout


def test_cat_unknown_space():
    assert run("cat", "f9").returncode == 2


def test_verify_subsuite_and_determinism():
    a = run("verify", "cayley", "--samples", "40", "--seed", "7")
    b = run("verify", "cayley", "--samples", "40", "--seed", "7")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    assert "cayley.table_derivation" in a.stdout


def test_verify_unknown_suite():
    assert run("verify", "nonsense").returncode == 2


def test_verify_data_format():
    r = run("verify", "cayley", "--samples", "20", "--format", "data")
    assert r.returncode == 0
    import json

    rows = json.loads(r.stdout)
    assert all(row["status"] == "pass" for row in rows)


def test_factorize_identity():
    matrix = "\n".join(" ".join("1" if i == j else "0" for j in range(8)) for i in range(8))
    r = run("factorize", "-", stdin=matrix)
    assert r.returncode == 0
    assert "cell e0" in r.stdout


def test_factorize_chart_element(tmp_path):
    g = s7.char_map(6, [0.2, 0.1, 0.3, -0.2, 0.4, 0.1])
    path = tmp_path / "g.mat"
    path.write_text("\n".join(" ".join(f"{x:.17g}" for x in row) for row in np.asarray(g)))
    r = run("factorize", str(path))
    assert r.returncode == 0
    assert "cell e6" in r.stdout
    assert "stage 6 params" in r.stdout


def test_factorize_rejects_non_members():
    bad = np.eye(8)
    bad[7, 7] = -1.0
    matrix = "\n".join(" ".join(f"{x:.17g}" for x in row) for row in bad)
    r = run("factorize", "-", stdin=matrix)
    assert r.returncode == 3
    assert "rejected" in r.stderr


def test_data_dir_override():
    data_dir = os.environ.get("SPIN7CELLS_DATA")
    if data_dir is None:
        pytest.skip("SPIN7CELLS_DATA not set")
    r = run("--data-dir", data_dir, "verify", "cayley", "--samples", "20")
    assert r.returncode == 0
    r = run("--data-dir", "/nonexistent", "cat", "spin7")
    assert r.returncode == 2
