import io
import json
import subprocess
import sys

import pytest

from stickelberger.cli import run
from stickelberger.groupring import GroupRingElement


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_theta_json_exact():
    code, out, _ = call("theta", "--n", "0", "--b", "5", "--f", "3", "--json")
    assert code == 0
    assert out == '{"f":3,"H":[1],"coeffs":{"1":"1/1","2":"-1/1"}}\n'


def test_theta_json_roundtrip_subfield():
    code, out, _ = call("theta", "--n", "1", "--b", "3", "--f", "13", "--subgroup", "1,3,9", "--json")
    assert code == 0
    x = GroupRingElement.from_json(json.loads(out))
    assert x.field.subgroup == frozenset({1, 3, 9})
    assert json.dumps(x.to_json(), separators=(",", ":")) + "\n" == out


def test_theta_human_readable():
    code, out, _ = call("theta", "--n", "0", "--b", "2", "--f", "3")
    assert code == 0
    assert "integral: False" in out and "[2]" in out


def test_verify_restriction_subcommand():
    code, out, _ = call("verify", "lemma21", "--n", "0", "--b", "7", "--f", "3", "--fprime", "15")
    assert code == 0 and "PASS" in out


def test_verify_character_json():
    code, out, _ = call("verify", "character", "--f", "7", "--n", "1", "--b", "3", "--json")
    assert code == 0
    lines = [json.loads(x) for x in out.splitlines()]
    assert len(lines) == 7 and all(x["ok"] for x in lines)


def test_verify_congruence_single_case():
    code, out, _ = call("verify", "congruence", "--n", "1", "--a", "2", "--b", "5", "--f", "3", "--json")
    assert code == 0
    assert json.loads(out)["difference"] == "12/1"


def test_verify_congruence_failure_exits_2_with_counterexample():
    code, out, _ = call("verify", "congruence", "--range", "4", "2", "4")
    assert code == 2
    last = json.loads(out.splitlines()[-1])
    assert last["counterexamples"][0] == {
        "f": 1, "n": 2, "a": 1, "b": 2, "difference": "2/1", "modulus": 24, "odd": {"3": [0, 1]}
    }


def test_tower_json():
    code, out, _ = call("tower", "--f", "3", "--l", "5", "--n", "0", "--b", "7", "--depth", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["compat"] == [True, True]
    assert data["conductors"] == [3, 15, 75]
    for level in data["levels"] + [data["theta_f"], data["theta_f0"]]:
        assert GroupRingElement.from_json(level).to_json() == level


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("kv", "--l", "3", "--q", "7", "--n", "3"), "2\n"),
        (("wn", "--n", "2", "--f", "1"), "24\n"),
        (("wn", "--n", "1", "--f", "3"), "6\n"),
        (("hminus", "--f", "23"), "3\n"),
        (("k2order", "--f", "5", "--subgroup", "1,4"), "4\n"),
        (("k2order", "--f", "1"), "2\n"),
        (("index", "--p", "23"), "3\n"),
        (("divcheck", "--f", "3", "--n", "0", "--b", "5", "--chi", "1", "--l", "3"), "0\n"),
    ],
)
def test_scalar_commands(argv, expected):
    code, out, _ = call(*argv)
    assert code == 0 and out == expected


def test_json_everywhere():
    for argv in (
        ("kv", "--l", "3", "--q", "7", "--n", "3"),
        ("wn", "--n", "2", "--f", "1"),
        ("hminus", "--f", "23"),
        ("k2order", "--f", "5", "--subgroup", "1,4"),
        ("index", "--p", "5"),
        ("divcheck", "--f", "3", "--n", "0", "--b", "1", "--chi", "1", "--l", "3"),
    ):
        code, out, _ = call(*argv, "--json")
        assert code == 0
        json.loads(out)
    _, out, _ = call("divcheck", "--f", "3", "--n", "0", "--b", "1", "--chi", "1", "--l", "3", "--json")
    assert json.loads(out)["valuation"] == "+inf"


@pytest.mark.parametrize(
    "argv",
    [
        (),
        ("bogus",),
        ("theta", "--n", "0", "--b", "5"),
        ("theta", "--n", "x", "--b", "5", "--f", "3"),
        ("theta", "--n", "0", "--b", "3", "--f", "3"),
        ("theta", "--n", "0", "--b", "5", "--f", "6"),
        ("theta", "--n", "0", "--b", "5", "--f", "15", "--subgroup", "1,11"),
        ("theta", "--n", "0", "--b", "5", "--f", "7", "--subgroup", "1,a"),
        ("kv", "--l", "2", "--q", "7", "--n", "1"),
        ("index", "--p", "9"),
        ("hminus", "--f", "5", "--subgroup", "1,4"),
        ("divcheck", "--f", "3", "--n", "0", "--b", "5", "--chi", "9", "--l", "3"),
        ("verify", "lemma21", "--n", "0"),
    ],
)
def test_usage_errors_exit_1(argv):
    code, _, err = call(*argv)
    assert code == 1 and err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "stickelberger", "kv", "--l", "3", "--q", "7", "--n", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "2\n"
    proc = subprocess.run([sys.executable, "-m", "stickelberger", "nope"], capture_output=True, text=True)
    assert proc.returncode == 1
