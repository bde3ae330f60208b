import json
import subprocess
import sys

import pytest

from wfusion.catalog import parse_algebra
from wfusion.cli import parse_label, parse_object, run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_fuse_example(capsys):
    code, out, _ = call(capsys, "fuse", "--algebra", "Bp:3", "W[1,2,1/2]", "Q[1,1,0]")
    assert code == 0
    assert out == "1*Q[1,2,1/2] (+) 1*W[1,3,-1] (+) 1*W[1,3,2]"


def test_two_index_labels_for_bp(capsys):
    code, out, _ = call(capsys, "fuse", "--algebra", "Bp:3", "W_2^{(1/2)}", "Q_1^{(0)}")
    assert code == 0 and out == "1*Q[1,2,1/2] (+) 1*W[1,3,-1] (+) 1*W[1,3,2]"


def test_classify_example(capsys):
    code, out, _ = call(capsys, "classify", "--algebra", "Bp:2", "E[1/4,0]", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == "wfusion/1"
    assert doc["lower_bounded"] is True and doc["grading_restricted"] is False
    assert doc["lowest_weight"] == "-1/8"


def test_enumerate_example(capsys):
    code, out, _ = call(capsys, "enumerate", "--algebra", "B2orb:3", "--predicate", "c1")
    assert code == 0 and len(out.splitlines()) == 3


def test_json_terms(capsys):
    code, out, _ = call(capsys, "fuse", "--algebra", "Bp:3", "W[1,2,-1/2]", "W[1,2,1/2]", "--format", "json")
    terms = json.loads(out)["terms"]
    assert terms[0] == {"mult": 1, "label": {"kind": "W", "r": 1, "s": 1, "ell2": 0, "text": "W[1,1,0]"}}


@pytest.mark.parametrize(
    "argv,code",
    [
        (["fuse", "--algebra", "Bp:3", "W[1,2"], 2),
        (["fuse", "--algebra", "Nope:3", "W[1,1,0]"], 2),
        (["bogus"], 2),
        (["weight", "--algebra", "Bp:2", "E[e + 1/4,0]"], 1),
        (["enumerate", "--algebra", "Sp:3"], 1),
        (["fuse", "--algebra", "Bp:3", "E[-1/2*am,0]", "W[1,1,0]"], 1),
        (["translate", "--dialect", "betagamma", "W_{3}"], 1),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, out, err = call(capsys, *argv)
    assert got == code
    assert json.loads(err)["schema"] == "wfusion/1"


def test_weight_and_dual(capsys):
    assert call(capsys, "weight", "--algebra", "Bp:2", "W[1,1,1]")[1] == "unbounded"
    assert call(capsys, "dual", "--algebra", "Bp:3", "W[1,2,1/2]")[1] == "1*W[1,2,-1/2]"


def test_induce_and_translate(capsys):
    assert call(capsys, "induce", "--algebra", "Bp:3", "3/2", "M[2,1]")[1] == "W[1,1,3]"
    assert call(capsys, "translate", "--dialect", "betagamma", "sigma^2(W_{1/4})")[1] == "E[-1/4,3/2]"
    code, out, _ = call(capsys, "translate", "--dialect", "betagamma", "--inverse", "E[-1/4,3/2]")
    assert out == "sigma^{2}(W_{1/4})"


@pytest.mark.parametrize("fmt", ["csv", "md", "json", "text"])
def test_table_formats(capsys, fmt):
    code, out, _ = call(capsys, "table", "--algebra", "Bp:3", "--format", fmt)
    assert code == 0
    if fmt == "json":
        assert len(json.loads(out)["entries"]) == 16
    elif fmt == "csv":
        assert len(out.splitlines()) == 5


def test_env_default_format(capsys, monkeypatch):
    monkeypatch.setenv("WFUSION_FORMAT", "json")
    code, out, _ = call(capsys, "weight", "--algebra", "Bp:4", "W[1,1,3/2]")
    assert json.loads(out)["results"][0]["lowest_weight"] == "-9/16"


def test_verify_command(capsys):
    code, out, _ = call(capsys, "verify", "--algebra", "Bp:2", "--samples", "20", "--suite", "Unit",
                        "--format", "json")
    rep = json.loads(out)["reports"][0]
    assert code == 0 and rep["passed"] == 20


def test_printed_labels_reparse(capsys):
    spec = parse_algebra("Sp:4")
    for argv in (
        ["fuse", "--algebra", "Sp:4", "E[1/3 + 1/5*am,1]", "E[2/7 - am,-1/2]"],
        ["fuse", "--algebra", "Sp:4", "W[2,2,1/2]", "Q[1,1,0]"],
    ):
        _, out, _ = call(capsys, *argv)
        obj = parse_object(out, spec.ext)
        assert str(obj) == out
        for lab in obj.labels():
            assert parse_label(str(lab), spec.ext) == lab


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "wfusion", "fuse", "--algebra", "Bp:2", "W[1,1,1]", "W[1,1,0]"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "1*W[1,1,1]"
