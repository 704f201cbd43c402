"""Smoke tests for the python module and the CLI."""

import json
import os
import subprocess
from fractions import Fraction

import pytest

import widthone


def test_binomial_and_pochhammer():
    assert widthone.binomial(5, 2) == 10
    assert widthone.binomial(4, 7) == 0
    assert widthone.pochhammer(2, 3) == 24
    assert isinstance(widthone.binomial(200, 100), int)


def test_f43_unit_is_exact():
    assert widthone.f43_unit(5, 5, -1, -1, 1, -1, -1) == Fraction(26)
    assert widthone.f43_unit(1, 1, 0, 0, 1, 1, 1) == 1


def test_sum_matrix_known_row():
    s = widthone.sum_matrix(2, 5, 5)
    assert s[0] == [26, 22, 18, 14, 10]
    assert s == widthone.sum_matrix(2, 5, 5, method="stanley")
    assert s == widthone.sum_matrix(2, 5, 5, method="oracle")


def test_entries_agree():
    for d in (1, 3, 6):
        for i in range(1, 5):
            for j in range(1, 4):
                expected = widthone.entry_rsk(d, 4, 3, i, j)
                assert widthone.entry_stanley(d, 4, 3, i, j) == expected
                assert widthone.entry_rsk_4f3(d, 4, 3, i, j) == expected
                assert widthone.convolution_check(d, 4, 3, i, j) == expected


def test_big_entries_are_python_ints():
    s = widthone.sum_matrix(10000, 30, 30, method="stanley")
    top = max(max(row) for row in s)
    assert top.bit_length() > 500
    assert str(top).startswith("23")  # ~2.4e172


def test_biword_roundtrip():
    matrix = [[0, 3, 0, 0], [0, 2, 0, 0], [0, 1, 2, 0], [0, 0, 1, 1]]
    top, bottom = widthone.matrix_to_biword(matrix)
    assert top == [1, 1, 1, 2, 2, 3, 3, 3, 4, 4]
    assert bottom == [2, 2, 2, 2, 2, 2, 3, 3, 3, 4]
    assert widthone.biword_to_matrix(top, bottom, 4, 4) == matrix
    assert widthone.is_width_one(matrix)
    assert not widthone.is_width_one([[0, 1], [1, 0]])


def test_h_polynomials():
    assert widthone.h_poly_closed(5, 7) == [1, 24, 90, 80, 15]
    assert widthone.h_poly_shelling(5, 7) == widthone.h_poly_closed(5, 7)
    assert widthone.corner_count_convolution(5, 5, 1, 1, 1) == 16


def test_transport():
    assert widthone.nw_corner([3, 2, 3, 2], [0, 6, 3, 1]) == [
        [0, 3, 0, 0],
        [0, 2, 0, 0],
        [0, 1, 2, 0],
        [0, 0, 1, 1],
    ]
    assert widthone.mean_emd(1, 2) == Fraction(1, 2)
    assert widthone.mean_emd(3, 3) == widthone.mean_emd_oracle(3, 3)
    cost = [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
    assert widthone.is_monge(cost)
    assert widthone.emd([1, 0, 0], [0, 0, 1], cost) == 2
    assert not widthone.is_monge([[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        widthone.mean_emd(2, 2, [[1, 0], [0, 1]])
    with pytest.raises(widthone.FeasibilityError):
        widthone.mean_emd_oracle(50, 6)


def test_compositions():
    assert widthone.compositions(1, 2) == [[1, 0], [0, 1]]
    assert len(widthone.compositions(10, 4)) == 286
    assert widthone.width_one_count(10, 4, 4) == 286**2


# --- CLI ------------------------------------------------------------------

CLI = os.environ.get("WIDTHONE_CLI")

needs_cli = pytest.mark.skipif(not CLI, reason="WIDTHONE_CLI not set")


def run_cli(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


@needs_cli
def test_cli_sum_matrix_csv():
    r = run_cli("sum-matrix", "--d", "2", "--n", "5", "--format", "csv")
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "26,22,18,14,10"


@needs_cli
def test_cli_sum_matrix_json_matches_module():
    r = run_cli("sum-matrix", "--d", "3", "--rows", "4", "--cols", "5", "--format", "json",
                "--method", "rsk")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["rows"] == 4 and payload["cols"] == 5 and payload["d"] == 3
    entries = [[int(v) for v in row] for row in payload["entries"]]
    assert entries == widthone.sum_matrix(3, 4, 5)


@needs_cli
def test_cli_exit_codes():
    assert run_cli("sum-matrix", "--d", "2").returncode == 1          # usage
    assert run_cli("sum-matrix", "--d", "30", "--n", "10",
                   "--method", "oracle").returncode == 3              # guard
    assert run_cli("verify", "--d-max", "3", "--n-max", "3").returncode == 0


@needs_cli
def test_cli_mean_emd_oracle():
    r = run_cli("mean-emd", "--d", "3", "--n", "3", "--cost", "l1", "--oracle", "--format", "json")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert Fraction(payload["exact"]) == Fraction(payload["oracle"])
    assert payload["label"] == "mean EMD"


@needs_cli
def test_cli_enumerate_and_plot():
    r = run_cli("enumerate", "--d", "1", "--n", "2", "--what", "biwords")
    assert r.returncode == 0
    assert len(r.stdout.splitlines()) == 4

    r = run_cli("plot-data", "--d", "1", "--n", "2")
    assert r.returncode == 0
    rows = r.stdout.splitlines()
    assert rows[1] == "i,j,value,log10"
    assert len(rows) == 2 + 4
