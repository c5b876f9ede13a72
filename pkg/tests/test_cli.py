import json

import pytest

from approxdim import cli
from approxdim.corpus import corpus_algebra, source_text
from approxdim.fileio import save_module
from approxdim.repmod import dual_regular_module


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def a3_files(tmp_path):
    (tmp_path / "a3.alg").write_text(source_text("a3"))
    save_module(dual_regular_module(corpus_algebra("a3")), tmp_path / "dlambda.mod")
    return tmp_path


def test_fadim_from_files(capsys, a3_files):
    code, out, _ = run(capsys, "fadim", "--algebra", str(a3_files / "a3.alg"),
                       "--omega", str(a3_files / "dlambda.mod"), "--cutoff", "12")
    assert code == 0
    assert out.strip() == "Infinity (certified)"


def test_verify_syzygy_pair(capsys):
    code, out, _ = run(capsys, "verify", "--pair", "nak33-syz1", "--check", "lapp",
                       "--cutoff", "6", "--seed", "0")
    assert code == 0
    assert "0 fail" in out


def test_domdim_both(capsys):
    code, out, _ = run(capsys, "domdim", "--algebra", "a3", "--module", "regular", "--method", "both")
    assert code == 0
    assert out.strip() == "1 / 1 (agree)"


def test_global_flags_before_or_after_verb(capsys):
    a = run(capsys, "--json", "--cutoff", "5", "lapp", "--algebra", "a3", "--omega", "regular", "--module", "S1")
    b = run(capsys, "lapp", "--algebra", "a3", "--omega", "regular", "--module", "S1", "--cutoff", "5", "--json")
    assert a == b
    doc = json.loads(a[1])
    assert doc["cutoff"] == 5 and doc["results"][0]["lapp"] == {"kind": "finite", "value": 0}


def test_json_is_byte_identical_across_runs(capsys):
    argv = ["--json", "verify", "--pair", "a3-id", "--check", "fadim", "--samples", "5", "--cutoff", "4"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    doc = json.loads(first[1])
    assert doc["tool"] == "approxdim" and doc["seed"] == 0
    assert all({"pair", "check", "pass", "hypothesis_flags", "evidence"} <= set(c) for c in doc["checks"])


def test_emit_report_empty():
    assert cli.emit_report([]) == {"checks": []}


def test_failed_check_exit_code(capsys):
    code, out, _ = run(capsys, "check-wakamatsu", "--algebra", "kx2", "--omega", "regular+S1")
    assert code == 1
    assert out.startswith("no")


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["lapp", "--algebra", "a3", "--omega", "S1", "--module", "S1", "--cutoff", "0"],
    ["lapp", "--algebra", "a3", "--omega", "S1", "--module", "S1", "--seed", str(2**64)],
    ["lapp", "--algebra", "nope", "--omega", "S1", "--module", "S1"],
    ["domdim", "--algebra", "a3", "--module", "S7"],
    ["verify", "--pair", "nope", "--check", "lapp"],
    ["lapp", "--algebra", "a3", "--omega", "+", "--module", "S1"],
])
def test_input_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_computation_error_exit_code(capsys, monkeypatch):
    def boom(*a, **k):
        raise ArithmeticError("forced")
    monkeypatch.setattr(cli, "fadim", boom)
    code, _, err = run(capsys, "fadim", "--algebra", "a3", "--omega", "dual")
    assert code == 3 and "forced" in err


@pytest.mark.parametrize("argv", [
    ["corpus-list"],
    ["algebra-check", "--algebra", "square"],
    ["invariants", "--algebra", "nak33"],
    ["tau", "--algebra", "a3", "--module", "S2", "--inverse"],
    ["decompose", "--algebra", "nak33", "--module", "regular+dual"],
    ["check-tilting", "--algebra", "a3", "--omega", "dual"],
])
def test_commands_succeed(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out
    code, out, _ = run(capsys, "--json", *argv)
    assert code == 0
    json.loads(out)


def test_tau_output(capsys):
    code, out, _ = run(capsys, "tau", "--algebra", "a3", "--module", "S1")
    assert out.strip() == "tau: dims (0, 1, 0); summands [[0, 1, 0]]"
