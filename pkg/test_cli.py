import json
from pathlib import Path

import pytest

from bundle_auts.cli import main
from bundle_auts.fixtures import Corpus, check_corpus, corpus_path, load_corpus

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "pyproject.toml"
    path.write_text('[tool.bundle-auts]\ng = 2\nk = 1\ntrials = 4\nmax_word_len = 4\noracle_depth = 3\n')
    return str(path)


def run(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    return exc.value.code, capsys.readouterr().out


def run_both(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    captured = capsys.readouterr()
    return exc.value.code, captured.out, captured.err


def test_reduce_relator(capsys, config_file):
    code, out = run(capsys, "--config", config_file, "reduce", "-g", "2", "-k", "3", "a1 b1 ~a1 ~b1 a2 b2 ~a2 ~b2")
    assert code == 0
    assert "Loading config..." in out
    assert "trivial; z^3" in out


def test_reduce_cancelled_relator(capsys, config_file):
    code, out = run(capsys, "--config", config_file, "reduce", "-g", "2", "-k", "3", "A1 B1 ~A1 ~B1 A2 B2 ~A2 ~B2 ~z ~z ~z")
    assert code == 0
    assert "trivial; z^0" in out


def test_reduce_nontrivial(capsys, config_file):
    code, out = run(capsys, "--config", config_file, "reduce", "a1 b1")
    assert code == 0
    assert "nontrivial" in out
    assert "residual: A1 B1" in out


def test_reduce_genus_one(capsys, config_file):
    code, out = run(capsys, "--config", config_file, "reduce", "-g", "1", "-k", "2", "b1 a1 ~b1 ~a1")
    assert code == 0
    assert "trivial; z^-2" in out


def test_reduce_json(capsys, config_file):
    code, out = run(capsys, "--config", config_file, "reduce", "--json", "a1 b1 ~a1 ~b1 a2 b2 ~a2 ~b2")
    assert code == 0
    result = json.loads(out)
    assert result["trivial"] is True
    assert result["z_exponent"] == 1
    assert result["method"] == "dehn"


def test_excluded_context_exit_code(capsys, config_file):
    code, out = run(capsys, "--config", config_file, "info", "-g", "1", "-k", "0")
    assert code == 3
    assert "Error:" in out


def test_bad_token_exit_code(capsys, config_file):
    code, out = run(capsys, "--config", config_file, "reduce", "a1 q7")
    assert code == 2
    assert "Error:" in out


def test_unknown_statement_exit_code(config_file):
    with pytest.raises(SystemExit) as exc:
        main(["--config", config_file, "verify", "no-such-statement"])
    assert exc.value.code == 2


def test_invalid_option_exit_code(capsys, config_file):
    code, _ = run(capsys, "--config", config_file, "verify", "euler", "--trials", "0")
    assert code == 2


def test_info(capsys, config_file):
    code, out = run(capsys, "--config", config_file, "info", "-g", "3", "-k", "4")
    assert code == 0
    assert "2g-2 = 4 divides k = 4: the extension splits" in out
    code, out = run(capsys, "--config", config_file, "info", "-g", "3", "-k", "1")
    assert "2g-2 = 4 does not divide k = 1: no splitting" in out
    code, out = run(capsys, "--config", config_file, "info", "-g", "2", "-k", "-2")
    assert "unit tangent bundle of S_2" in out


def test_verify_text(capsys, config_file):
    code, out = run(capsys, "--config", config_file, "verify", "push-identity", "--seed", "3")
    assert code == 0
    assert "push-identity: g=2 k=1 seed=3" in out
    assert "trials: 4  passed: 4  failed: 0" in out
    assert out.rstrip().endswith("PASS")


def test_verify_json_report(capsys, config_file, tmp_path):
    report_path = tmp_path / "reports" / "cor.json"
    code, out, err = run_both(
        capsys, "--config", config_file, "verify", "cor-3-4", "-k", "2", "--json", "--report", str(report_path)
    )
    assert code == 0
    assert f"Report written: {report_path}" in err
    assert json.loads(out)["statement"] == "push-factorization"
    report = json.loads(report_path.read_text())
    assert report["statement"] == "push-factorization"
    assert report["k"] == 2
    assert report["failed"] == 0
    assert report["convention"] == "left/+"


def test_frozen_corpora_check(capsys, config_file):
    for g, k in ((2, 3), (1, 2)):
        code, out = run(
            capsys, "--config", config_file, "corpus", "--check", "-g", str(g), "-k", str(k), "--fixtures-dir", str(FIXTURES)
        )
        assert code == 0
        assert "0 mismatches" in out


def test_corpus_regeneration(capsys, config_file, tmp_path):
    code, out = run(
        capsys, "--config", config_file, "corpus", "-g", "2", "-k", "3", "--seed", "5", "--trials", "6",
        "--fixtures-dir", str(tmp_path),
    )
    assert code == 0
    path = corpus_path(str(tmp_path), 2, 3)
    assert f"Corpus written: {path}" in out
    corpus = load_corpus(path)
    assert len(corpus.entries) == 6
    assert corpus.seed == 5
    assert check_corpus(corpus) == []
    assert all(entry.z_exponent is not None for entry in corpus.entries[::2])


def test_corpus_check_reports_mismatches(capsys, config_file, tmp_path):
    broken = Corpus(g=2, k=1, entries=[{"word": "a1 b1 ~a1 ~b1 a2 b2 ~a2 ~b2", "z_exponent": 2}])
    corpus_path(str(tmp_path), 2, 1).write_text(broken.model_dump_json())
    code, out = run(capsys, "--config", config_file, "corpus", "--check", "--fixtures-dir", str(tmp_path))
    assert code == 1
    assert "expected 2, got 1" in out


def test_endo_command(capsys, config_file):
    code, out = run(capsys, "--config", config_file, "endo", "-g", "1", "-k", "2", '{"b1": "b1 a1"}')
    assert code == 0
    assert "fixes c: True" in out
    assert "symplectic type: 1" in out
    code, out = run(capsys, "--config", config_file, "endo", "-g", "1", "-k", "2", '{"a1": "b1", "b1": "a1"}')
    assert "fixes c: False" in out
    assert "symplectic type: -1" in out


def test_json_output_without_a_config_file(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, err = run_both(capsys, "info", "-g", "2", "-k", "1", "--json")
    assert code == 0
    assert json.loads(out)["relator"] == "A1 B1 ~A1 ~B1 A2 B2 ~A2 ~B2"
    assert "Config not found" in err

    code, out, _ = run_both(capsys, "reduce", "-g", "2", "-k", "3", "--json", "a1 b1 ~a1 ~b1 a2 b2 ~a2 ~b2")
    assert code == 0
    assert json.loads(out)["z_exponent"] == 3

    code, out, err = run_both(
        capsys, "verify", "euler", "--json", "--report", str(tmp_path / "euler.json")
    )
    assert code == 0
    assert json.loads(out)["trials"] == 16
    assert "Report written" in err


def test_json_mode_errors_go_to_stderr(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, err = run_both(capsys, "reduce", "--json", "a1 q7")
    assert code == 2
    assert out == ""
    assert "Error:" in err
