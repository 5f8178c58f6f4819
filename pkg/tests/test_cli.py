import json

import pytest

from bsdh import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_coh_text(capsys):
    code, out, _ = run(capsys, "coh", "--sys", "G2", "--word", "1,2", "--alpha", "2")
    assert code == 0
    assert "H^1" in out


def test_coh_json(capsys):
    code, out, _ = run(
        capsys,
        "--format",
        "json",
        "coh",
        "--sys",
        "G2",
        "--word",
        "1,2",
        "--alpha",
        "2",
    )
    assert code == 0
    js = json.loads(out)
    assert js["word"] == [1, 2]
    assert "1" in js["cohomology"]


def test_coh_seed_weight(capsys):
    code, out, _ = run(
        capsys, "coh", "--sys", "F4", "--word", "1", "--seed", "0,1,0,0"
    )
    assert code == 0
    assert "H^0" in out


def test_coh_rejects_bad_word(capsys):
    code, _, err = run(capsys, "coh", "--sys", "F4", "--word", "1,1", "--alpha", "1")
    assert code == 1
    assert "error" in err


def test_rigidity_coxeter_f4(capsys):
    code, out, _ = run(capsys, "rigidity", "--sys", "F4", "--coxeter", "3,2,1")
    assert code == 0
    assert "verdict: Nonrigid" in out
    assert "prefix 3" in out
    assert "(0,1,1,0)" in out


def test_rigidity_coxeter_g2_json(capsys):
    code, out, _ = run(
        capsys, "--format", "json", "rigidity", "--sys", "G2", "--coxeter", "2,1"
    )
    assert code == 0
    js = json.loads(out)
    assert js["verdict"] == "Nonrigid"
    assert js["certificate"]["prefix"] == 3
    assert [1, 1] in js["certificate"]["weights"]


def test_rigidity_explicit_word(capsys):
    code, out, _ = run(capsys, "rigidity", "--sys", "G2", "--word", "1,2,1,2,1,2")
    assert code == 0
    assert "verdict" in out


def test_rigidity_rejects_non_w0(capsys):
    code, _, err = run(capsys, "rigidity", "--sys", "F4", "--word", "1,2")
    assert code == 1
    assert "longest" in err


def test_verify_paper_full(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert "196 passed, 0 failed, 4 disputed" in out


def test_verify_paper_filter(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "Lemma 4.2")
    assert code == 0
    assert out.count("PASS") + out.count("DISPUTED") >= 2


def test_verify_paper_empty_filter(capsys):
    code, _, err = run(capsys, "verify-paper", "--only", "no such fixture")
    assert code == 1
    assert "no fixtures selected" in err


def test_unknown_system(capsys):
    code, _, err = run(capsys, "coh", "--sys", "H3", "--word", "1", "--alpha", "1")
    assert code == 1


def test_missing_subcommand_exits():
    with pytest.raises(SystemExit):
        cli.main([])
