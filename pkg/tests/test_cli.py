import io
import json
import subprocess
import sys

import pytest

from confgal.cli import run


def invoke(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


def test_verify_phi_json():
    code, out = invoke("verify-phi", "--l", "3/2")
    assert code == 0
    report = json.loads(out)
    assert report["pass"] is True
    assert set(report) == {"command", "params", "results", "pass"}
    names = {r["name"] for r in report["results"]}
    assert {"[E,F]", "[H,E]", "[H,F]", "[H,p0]", "[E,p3]", "[F,p2]"} <= names


def test_character_csv():
    code, out = invoke("character", "--family", "extended", "--l", "1/2", "--hw", "1/3", "--z", "1", "--depth", "6", "--format", "csv")
    assert code == 0
    assert out.split() == ["n,dim", "0,1", "1,1", "2,2", "3,2", "4,3", "5,3", "6,4"]


def test_d_module_expect_simple_fails():
    code, out = invoke("d-module", "--a", "2", "--z", "1", "--window", "10", "--expect-simple")
    assert code == 1
    report = json.loads(out)
    assert report["data"]["p0_kernel_exponents"] == [-2]
    failing = [r for r in report["results"] if not r["pass"]]
    assert [r["name"] for r in failing] == ["no-invariant-subspace"]
    assert "x^-2" in failing[0]["witness"]


def test_d_module_simple_case_passes():
    assert invoke("d-module", "--a", "1/3", "--z", "-2/3")[0] == 0


@pytest.mark.parametrize(
    "argv,flag",
    [
        (["character", "--l", "1/2", "--z", "one", "--hw", "0"], "--z"),
        (["verify-phi", "--l", "1/3"], "--l"),
        (["check-theorem3", "--l", "1/2", "--m", "-1"], "--m"),
        (["d-module", "--a", "1/0"], "--a"),
        (["fock-relations", "--example", "2", "--l", "1/2", "--mu", "1,x"], "--mu"),
    ],
)
def test_usage_errors_name_the_flag(argv, flag, capsys):
    code, _ = invoke(*argv)
    assert code == 2
    assert flag in capsys.readouterr().err


def test_semantic_usage_error():
    # the extended algebra does not exist at integer l
    assert invoke("verify-algebra", "--l", "1", "--family", "extended")[0] == 2
    assert invoke("character", "--l", "1/2", "--family", "extended")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["verify-algebra", "--l", "3/2", "--triples", "10", "--seed", "3"],
        ["verify-theta", "--l", "1/2", "--seed", "7"],
        ["fock-relations", "--example", "3", "--l", "3/2", "--window", "3", "--seed", "5"],
        ["radical", "--l", "1/2", "--hw", "1/2", "--z", "1", "--depth", "8"],
    ],
)
def test_output_is_deterministic(argv):
    first, second = invoke(*argv), invoke(*argv)
    assert first == second
    assert first[0] == 0


def test_every_verb_runs():
    cases = [
        ["verify-algebra", "--l", "1", "--triples", "5"],
        ["verify-phi", "--l", "1/2"],
        ["verify-theta", "--l", "1/2"],
        ["character", "--l", "2", "--family", "centerless", "--hw", "0", "--pl", "1", "--depth", "6"],
        ["radical", "--l", "1", "--family", "sl2", "--hw", "2", "--depth", "6"],
        ["check-theorem2", "--l", "1/2", "--hw", "1/3", "--depth", "6"],
        ["check-theorem3", "--l", "1/2", "--m", "1", "--depth", "6"],
        ["check-highestN", "--l", "1", "--pl", "1", "--hw", "0", "--depth", "6"],
        ["fock-relations", "--example", "1", "--l", "1/2", "--window", "4"],
        ["d-module", "--a", "-5/2"],
    ]
    for argv in cases:
        code, out = invoke(*argv, "--format", "table")
        assert code == 0, out
        assert out.startswith(argv[0])


def test_highest_n_inconsistent_f1_exits_one():
    code, out = invoke("check-highestN", "--l", "1", "--pl", "2", "--hw", "0", "--depth", "4")
    assert code == 1
    assert "F1[e,p2]" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "confgal", "d-module", "--a", "0", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "name,pass,witness"
