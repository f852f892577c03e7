import json

import pytest

import positroids.positroid as pos
from positroids import campaigns
from positroids.cli import main
from positroids.enumeration import enumerate_positroids


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, obj, name="in.json"):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def test_analyze_uniform(tmp_path, capsys):
    bases = [[a, b] for a in range(1, 5) for b in range(a + 1, 5)]
    code, out, _ = run(capsys, "analyze", write(tmp_path, {"n": 4, "bases": bases}))
    rep = json.loads(out)
    assert code == 0
    assert rep["positroid"] and rep["da_silva"] and rep["circular"]
    assert rep["rank"] == 2 and rep["bases"] == 6
    assert rep["grassmann_necklace"] == [[1, 2], [2, 3], [3, 4], [1, 4]]


def test_analyze_crossing_sum(tmp_path, capsys):
    code, out, _ = run(capsys, "analyze", write(tmp_path, {"n": 4, "bases": [[1, 2], [1, 4], [2, 3], [3, 4]]}))
    rep = json.loads(out)
    assert code == 0 and rep["positroid"] is False and rep["positroid_certificate"] == [1, 3]
    assert rep["components_noncrossing"] is False


def test_analyze_chirotope_and_matrix(tmp_path, capsys):
    chi = {"n": 3, "d": 2, "signs": {"1,2": 1, "1,3": -1, "2,3": 1}}
    code, out, _ = run(capsys, "analyze", write(tmp_path, chi))
    rep = json.loads(out)
    assert code == 0 and rep["positively_orientable"] and rep["reorientation"] is not None
    mat = {"d": 2, "n": 3, "entries": [["1", "1", "1"], ["0", "1", "2"]]}
    code, out, _ = run(capsys, "analyze", write(tmp_path, mat, "m.json"))
    rep = json.loads(out)
    assert code == 0 and rep["totally_nonnegative"] and rep["positroid"]


def test_analyze_errors(tmp_path, capsys):
    code, _, err = run(capsys, "analyze", write(tmp_path, "{oops"))
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "analyze", str(tmp_path / "missing.json"))
    assert code == 2
    code, _, _ = run(capsys, "analyze", write(tmp_path, {"d": 2, "n": 2, "entries": [["1", "2"], ["2", "4"]]}))
    assert code == 2


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "main-5.1", "--n", "5")
    rep = json.loads(out)
    assert code == 0 and rep["passed"] and rep["counterexamples"] == [] and rep["instances"] > 0
    code, out, _ = run(capsys, "verify", "noncrossing-3.7", "--n", "4")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_out_file_and_k(tmp_path, capsys):
    out = tmp_path / "rep.json"
    code, stdout, _ = run(capsys, "verify", "closure-3.5", "--n", "4", "--k", "2", "--out", str(out))
    assert code == 0 and stdout == ""
    rep = json.loads(out.read_text())
    assert rep["parameters"] == {"n_max": 4, "k": 2}


def test_verify_unknown_theorem(capsys):
    code, _, err = run(capsys, "verify", "fermat", "--n", "3")
    assert code == 2 and "unknown theorem" in err


def test_verify_detects_injected_fault(monkeypatch, capsys):
    real = pos.is_positroid

    def broken(M):
        v = real(M)
        if M.n == 4 and M.k == 2 and len(M.bases) == 6:
            return pos.PositroidVerdict(False, M.bases[0])
        return v

    monkeypatch.setattr(pos, "is_positroid", broken)
    code, out, _ = run(capsys, "verify", "main-5.1", "--n", "4")
    rep = json.loads(out)
    assert code == 1 and not rep["passed"]
    assert rep["counterexamples"][0]["matroid"]["bases"] == [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]


def test_verify_parallel_matches_serial():
    a = campaigns.run_campaign("connected-4.13", 4, jobs=1)
    b = campaigns.run_campaign("connected-4.13", 4, jobs=2)
    assert (a.instances, a.counterexamples) == (b.instances, b.counterexamples)


def test_soft_bound_warning(monkeypatch, caplog):
    monkeypatch.setenv("POSITROID_MAX_N", "2")
    with caplog.at_level("WARNING"):
        campaigns.run_campaign("main-5.1", 3)
    assert "soft bound" in caplog.text


def test_report_merge_is_associative():
    R = campaigns.VerificationReport
    a, b, c = R("t", {}, 1, [1], 0.5), R("t", {}, 2, [], 0.25), R("t", {}, 3, [2, 3], 1.0)
    left, right = a.merge(b).merge(c), a.merge(b.merge(c))
    assert left.as_dict() == right.as_dict()
    assert not left.passed and R("t", {}, 5).passed


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "matroids", "--n", "2", "--k", "1")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 3
    assert all(json.loads(line)["n"] == 2 for line in lines)
    total = 0
    for k in range(4):
        code, out, _ = run(capsys, "enumerate", "positroids", "--n", "3", "--k", str(k), "--count-only")
        total += int(out)
    assert total == 16
    _, poms, _ = run(capsys, "enumerate", "poms", "--n", "4", "--k", "2", "--count-only")
    assert int(poms) == len(list(enumerate_positroids(4, 2)))
    code, _, _ = run(capsys, "enumerate", "matroids", "--n", "2", "--k", "3")
    assert code == 2


def test_enumerate_is_deterministic(capsys):
    _, a, _ = run(capsys, "enumerate", "chirotopes", "--n", "4", "--k", "2")
    _, b, _ = run(capsys, "enumerate", "chirotopes", "--n", "4", "--k", "2")
    assert a == b and a


def test_poset_check(capsys):
    code, out, _ = run(capsys, "poset", "1", "3", "--check")
    rep = json.loads(out)
    assert code == 0 and rep["graded"] and rep["thin"] and rep["eulerian"]
    code, out, _ = run(capsys, "poset", "0", "3", "--check")
    rep = json.loads(out)
    assert code == 0 and rep["elements"] == 2 and rep["eulerian"]


def test_poset_export(tmp_path, capsys):
    out = tmp_path / "p.dot"
    code, _, _ = run(capsys, "poset", "2", "4", "--export", "dot", "--out", str(out))
    text = out.read_text()
    assert code == 0 and text.count("label=") == len(list(enumerate_positroids(4, 2))) + 1
    code, stdout, _ = run(capsys, "poset", "1", "3", "--export", "json")
    assert json.loads(stdout)["elements"][0] == "hat0"


def test_poset_reorientations_flag(capsys):
    code, out, _ = run(capsys, "poset", "1", "2", "--check", "--reorientations")
    assert json.loads(out)["elements"] > 4


def test_bad_arguments_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["enumerate", "bogus", "--n", "3", "--k", "1"])
    assert info.value.code == 2
