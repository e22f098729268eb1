import json
import subprocess
import sys

import pytest

CMD = [sys.executable, "-m", "gwmirror"]


def run(*args, **kwargs):
    return subprocess.run(
        CMD + list(args), capture_output=True, text=True, **kwargs
    )


# -- quintic ---------------------------------------------------------------------


def test_quintic_default_output_has_exact_values():
    r = run("quintic", "--dmax", "2")
    assert r.returncode == 0
    assert "2875" in r.stdout
    assert "4876875/8" in r.stdout


def test_quintic_csv_bytes():
    r = run("quintic", "--dmax", "1", "--format", "csv")
    assert r.returncode == 0
    assert r.stdout == "d,value\n1,2875\n"


def test_quintic_json_schema():
    r = run("quintic", "--dmax", "2", "--format", "json")
    record = json.loads(r.stdout)
    assert record["case"] == "quintic"
    assert record["params"] == {"dmax": 2}
    assert record["entries"] == [
        {"d": 1, "value": "2875"},
        {"d": 2, "value": "4876875/8"},
    ]
    assert record["crosscheck"] == "absent"


def test_quintic_crosscheck_flag():
    r = run("quintic", "--dmax", "3", "--crosscheck", "--format", "json")
    assert r.returncode == 0
    assert json.loads(r.stdout)["crosscheck"] == "ok"


def test_quintic_dmax_zero_is_usage_error():
    r = run("quintic", "--dmax", "0")
    assert r.returncode == 2
    assert "usage" in r.stderr.lower()


# -- local-p2 ---------------------------------------------------------------------


def test_local_p2_table():
    r = run("local-p2", "--dmax", "3", "--format", "csv")
    assert r.stdout == "d,value\n1,9\n2,135/4\n3,244\n"


def test_local_p2_default_dmax_is_eight():
    r = run("local-p2", "--format", "json")
    record = json.loads(r.stdout)
    assert record["params"] == {"dmax": 8}
    assert record["entries"][-1] == {"d": 8, "value": "3422490759/64"}


def test_local_p2_emit_kd():
    r = run("local-p2", "--dmax", "2", "--emit-kd", "--format", "csv")
    assert r.stdout == "d,value,kd\n1,9,-3\n2,135/4,45/8\n"


# -- naive ------------------------------------------------------------------------


def test_naive_json_lists_h_coefficients():
    r = run("naive", "--ambient", "4", "--degree", "2", "--dmax", "1", "--format", "json")
    record = json.loads(r.stdout)
    assert record["entries"] == [{"d": 1, "value": ["0", "4", "-8", "8", "0"]}]


def test_naive_csv_columns():
    r = run("naive", "--ambient", "4", "--degree", "2", "--dmax", "1", "--format", "csv")
    assert r.stdout == "d,h0,h1,h2,h3,h4\n1,0,4,-8,8,0\n"


def test_naive_rejects_degree_at_least_n():
    for degree in ("4", "5"):
        r = run("naive", "--ambient", "4", "--degree", degree, "--dmax", "1")
        assert r.returncode == 2
        assert "at most" in r.stderr


def test_naive_leading_coefficient_vanishes():
    r = run("naive", "--ambient", "5", "--degree", "3", "--dmax", "3", "--format", "json")
    for entry in json.loads(r.stdout)["entries"]:
        assert entry["value"][0] == "0"


# -- lemma ------------------------------------------------------------------------


def test_lemma_a1_passes():
    r = run("lemma", "a1", "--vars", "2", "--xdeg", "4", "--trials", "20", "--seed", "7")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert len(lines) >= 20
    assert all(line.endswith("PASS") for line in lines)


def test_lemma_a2_passes():
    r = run("lemma", "a2", "--vars", "3", "--xdeg", "4", "--trials", "20", "--seed", "7")
    assert r.returncode == 0
    assert all(line.endswith("PASS") for line in r.stdout.strip().splitlines())


def test_lemma_no_variables():
    r = run("lemma", "a1", "--vars", "0", "--trials", "2", "--seed", "1")
    assert r.returncode == 0
    # with no variables every c vector is trivially zero: closed forms run too
    assert "closed-form PASS" in r.stdout


def test_lemma_rejects_bad_flags():
    assert run("lemma", "a1", "--vars", "-1").returncode == 2
    assert run("lemma", "a1", "--trials", "0").returncode == 2
    assert run("lemma", "a3").returncode == 2


# -- shared output contracts ---------------------------------------------------------


def test_out_file_matches_stdout(tmp_path):
    out = tmp_path / "table.json"
    r = run("quintic", "--dmax", "2", "--format", "json", "--out", str(out))
    assert out.read_text(encoding="utf-8") == r.stdout


def test_output_is_deterministic():
    a = run("lemma", "a1", "--vars", "2", "--xdeg", "3", "--trials", "5", "--seed", "3")
    b = run("lemma", "a1", "--vars", "2", "--xdeg", "3", "--trials", "5", "--seed", "3")
    assert a.stdout == b.stdout


@pytest.mark.parametrize("fmt", ["json", "csv", "pretty"])
def test_formats_carry_identical_value_strings(fmt):
    r = run("local-p2", "--dmax", "4", "--format", fmt)
    for value in ("9", "135/4", "244", "36999/16"):
        assert value in r.stdout
