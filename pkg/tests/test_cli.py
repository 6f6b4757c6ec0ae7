import pytest

from terncode.classify import load_manifest
from terncode.cli import main
from terncode.code import make_code, save_code, tetracode
from terncode.equivalence import canonical_certificate


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, code in [("tetra", tetracode()),
                       ("tetra2", make_code([[1, 1, 1, 0], [0, 1, 2, 1]])),
                       ("line", make_code([[1, 1, 1, 0]]))]:
        paths[name] = tmp_path / f"{name}.code"
        save_code(code, paths[name])
    bad = tmp_path / "bad.code"
    bad.write_text("4 2\n1011\n01x2\n")
    paths["bad"] = bad
    return paths


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_mass_and_bound(capsys):
    assert run(capsys, "mass", "-n", 25, "-k", 12)[:2] == (0, "25701205307660304745058529866383360000")
    assert run(capsys, "mass", "-n", 24, "-k", 11)[:2] == (0, "12850554292569078425974899530137600000")
    assert run(capsys, "bound", "-n", 27, "-k", 13)[:2] == (0, "56074757")
    code, _, err = run(capsys, "mass", "-n", 4, "-k", 1)
    assert code == 2 and "error" in err


def test_code_queries(capsys, files):
    assert run(capsys, "aut", files["tetra"])[:2] == (0, "48")
    assert run(capsys, "minwt", files["tetra"])[:2] == (0, "3")
    code, out, _ = run(capsys, "canon", files["tetra"])
    assert code == 0 and bytes.fromhex(out) == canonical_certificate(tetracode()).data


def test_equiv(capsys, files):
    assert run(capsys, "equiv", files["tetra"], files["tetra"])[:2] == (0, "equivalent")
    assert run(capsys, "equiv", files["tetra"], files["tetra2"])[:2] == (0, "equivalent")
    assert run(capsys, "equiv", files["tetra"], files["line"])[:2] == (1, "inequivalent")


def test_bad_input(capsys, files, tmp_path):
    code, _, err = run(capsys, "aut", files["bad"])
    assert code == 2 and "line 3" in err
    assert run(capsys, "minwt", tmp_path / "missing.code")[0] == 2


def test_classify(capsys, tmp_path):
    assert run(capsys, "classify", "-n", 3, "-k", 1, "--out", tmp_path)[:2] == (0, "classes=1 residual=0")
    assert load_manifest(tmp_path / "so_n3_k1.manifest").complete
    assert run(capsys, "classify", "--maximal", "-n", 10, "--out", tmp_path)[:2] == (0, "classes=5 residual=0")
    assert (tmp_path / "max_n10.manifest").exists()
    code = run(capsys, "classify", "--maximal", "-n", 10, "--out", tmp_path, "--resume", "--threads", 2)
    assert code[:2] == (0, "classes=5 residual=0")


def test_classify_cap(capsys, tmp_path):
    code, _, err = run(capsys, "classify", "-n", 4, "-k", 1, "--cap", 0, "--out", tmp_path)
    assert code == 3 and "error" in err


def test_usage_errors(capsys, tmp_path):
    for argv in (["classify", "-n", "5", "--out", str(tmp_path)],
                 ["classify", "-n", "5", "-k", "1", "--maximal"],
                 ["classify", "-n", "5", "-k", "9"],
                 ["mass", "-n", "x", "-k", "1"],
                 ["bogus"]):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2
    capsys.readouterr()


def test_classify_audit_failure(capsys, tmp_path, monkeypatch):
    from terncode import classify

    monkeypatch.setattr(classify, "lengthen_all", lambda parent, d_min=0: iter(()))
    code, out, err = run(capsys, "classify", "-n", 4, "-k", 2, "--out", tmp_path)
    # the first sub-problem to fail, [3,1], is the one reported
    assert code == 4 and out == "classes=0 residual=4" and "[3,1]" in err
