import json
import os

import pytest

from genbinom.cli import EXIT_SHAPE, EXIT_USAGE
from genbinom.coefficients import gb_sum
from genbinom.partitions import ConjectureReport, ConjectureResult


def test_value_all_formulas(run_cli):
    res = run_cli("value", "5", "2", "3", "--formula", "all")
    assert res.code == 0
    assert res.lines == ["45"] * 5


def test_value_defaults(run_cli):
    assert run_cli("value", "7", "3", "1").lines == ["7"]
    assert run_cli("value", "3", "1", "7").lines == ["0"]
    assert run_cli("value", "6", "6", "0").lines == ["1"]


def test_value_all_skips_second_for_p_zero(run_cli):
    res = run_cli("value", "5", "0", "2", "--formula", "all")
    assert res.code == 0 and res.lines == ["10"] * 4


def test_value_json_and_csv(run_cli):
    payload = json.loads(run_cli("value", "4", "2", "2", "--formula", "sum", "--format", "json").stdout)
    assert payload == {"n": 4, "p": 2, "k": 2, "values": {"sum": 14}}
    assert run_cli("value", "4", "2", "2", "--formula", "alt", "--format", "csv").lines == [
        "formula,value",
        "alt,14",
    ]


@pytest.mark.parametrize(
    "argv",
    [
        ("value", "3", "4", "1"),
        ("value", "0", "0", "1"),
        ("value", "3", "1", "0", "--formula", "def"),
        ("value", "3", "0", "1", "--formula", "second"),
        ("value", "3", "1", "1", "--formula", "bogus"),
    ],
)
def test_value_usage_errors(run_cli, argv):
    assert run_cli(*argv).code == EXIT_USAGE


def test_value_disagreement_exits_one(run_cli, monkeypatch):
    from genbinom import coefficients as cf

    monkeypatch.setitem(cf.FORMULAS, "alt", lambda n, p, k: 999)
    res = run_cli("value", "5", "2", "3", "--formula", "all")
    assert res.code == 1


def test_table_csv(run_cli):
    res = run_cli("table", "1", "--format", "csv")
    assert res.lines == ["p\\k,0,1", "0,1,1", "1,1,1"]
    row = run_cli("table", "2", "--format", "csv").lines[2]
    assert row.split(",", 1)[1] == "0,2,2"


def test_table_json(run_cli):
    payload = json.loads(run_cli("table", "2", "--format", "json").stdout)
    assert payload == {"n": 2, "rows": [[1, 2, 1], [0, 2, 2], [1, 2, 1]]}


def test_table_plain(run_cli):
    assert run_cli("table", "2").lines == ["1 2 1", "0 2 2", "1 2 1"]


def test_table_zero_is_usage_error(run_cli):
    assert run_cli("table", "0").code == EXIT_USAGE


@pytest.mark.parametrize("suite", ["core", "gf", "partition", "lemma", "conjecture"])
def test_verify_each_suite(run_cli, suite):
    res = run_cli("verify", "--suites", suite, "--max-n", "6", "--workers", "1")
    assert res.code == 0, res.stdout
    assert res.lines[0].startswith(f"{suite}: ")


def test_verify_json_report(run_cli):
    res = run_cli("verify", "--suites", "core,lemma", "--max-n", "5", "--workers", "1", "--format", "json")
    payload = json.loads(res.stdout)
    assert payload["ok"] is True
    assert [s["suite"] for s in payload["suites"]] == ["core", "lemma"]
    assert all(s["cases"] > 0 and s["failures"] == [] for s in payload["suites"])


def test_verify_csv_report(run_cli):
    res = run_cli("verify", "--suites", "core", "--max-n", "3", "--workers", "1", "--format", "csv")
    assert res.lines[0] == "suite,cases,failures"
    assert res.lines[1].startswith("core,") and res.lines[1].endswith(",0")


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "--suites", "nope"),
        ("verify", "--max-n", "0"),
        ("verify", "--workers", "0"),
    ],
)
def test_verify_usage_errors(run_cli, argv):
    assert run_cli(*argv).code == EXIT_USAGE


def test_verify_output_is_deterministic_across_workers(run_cli):
    argv = ("verify", "--suites", "core,gf,partition,lemma", "--max-n", "7", "--format", "json")
    one = run_cli(*argv, "--workers", "1").stdout
    many = run_cli(*argv, "--workers", "3").stdout
    assert one == many


def test_conjecture_m2_matches_value(run_cli):
    payload = json.loads(run_cli("conjecture", "--r", "2,2", "--n", "5", "--format", "json").stdout)
    coeffs = {c["k"]: c["c"] for c in payload["results"][0]["coeffs"]}
    assert coeffs == {k: gb_sum(4, 2, k) for k in range(1, 5)}
    for k, c in coeffs.items():
        assert run_cli("value", "4", "2", str(k)).lines == [str(c)]


def test_conjecture_single(run_cli):
    payload = json.loads(run_cli("conjecture", "--r", "1", "--n", "3", "--format", "json").stdout)
    assert payload["results"][0]["coeffs"] == [{"k": 1, "c": 1}]


def test_conjecture_m3_json_schema(run_cli):
    res = run_cli("conjecture", "--r", "1,1,1", "--n", "3,4,5", "--format", "json")
    assert res.code == 0
    payload = json.loads(res.stdout)
    assert set(payload) == {"r", "results", "stable"}
    assert payload["r"] == [1, 1, 1] and payload["stable"] is True
    for entry in payload["results"]:
        assert set(entry) == {"n", "coeffs", "integral", "positive"}
        assert entry["integral"] and entry["positive"]
        assert [c["c"] for c in entry["coeffs"]] == [3, 9, 6]


def test_conjecture_plain_and_csv(run_cli):
    plain = run_cli("conjecture", "--r", "2,1")
    assert plain.lines[1].startswith("n=3: c_1=3 c_2=6 c_3=3")
    assert run_cli("conjecture", "--r", "1", "--n", "2", "--format", "csv").lines == ["n,k,c", "2,1,1"]


def test_conjecture_shape_violation_exit_code(run_cli, monkeypatch):
    from genbinom import cli

    bad = ConjectureResult(3, (1,), (), overflow=((2, 1),))
    monkeypatch.setattr(cli, "check_conjecture", lambda r, ns: ConjectureReport((1,), (bad,), True))
    res = run_cli("conjecture", "--r", "1", "--n", "3")
    assert res.code == EXIT_SHAPE
    assert "shape violation" in res.stdout


@pytest.mark.parametrize("r", ["0,1", "a", ""])
def test_conjecture_usage_error(run_cli, r):
    assert run_cli("conjecture", "--r", r).code == EXIT_USAGE


def test_module_entry_point(run_subprocess):
    proc = run_subprocess("value", "5", "2", "3")
    assert proc.returncode == 0 and proc.stdout == "45\n"


def test_workers_env_var(run_subprocess):
    env = dict(os.environ, GENBINOM_WORKERS="2")
    proc = run_subprocess("verify", "--suites", "core", "--max-n", "4", env=env)
    assert proc.returncode == 0
    assert "time core" in proc.stderr and "time" not in proc.stdout


def test_missing_subcommand_is_usage_error(run_subprocess):
    assert run_subprocess().returncode == EXIT_USAGE
