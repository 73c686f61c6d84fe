import json

import pytest

from frobtool.cli import main
from frobtool.groebner import clear_memo, set_persistent_cache

KATZMAN = """\
char 2
vars x y z
ideal I = x*y, y*z
"""


@pytest.fixture(autouse=True)
def fresh_state():
    clear_memo()
    set_persistent_cache(None)
    yield
    clear_memo()
    set_persistent_cache(None)


@pytest.fixture
def katzman_file(tmp_path):
    path = tmp_path / "katzman.frob"
    path.write_text(KATZMAN, encoding="utf-8")
    return str(path)


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_gb(capsys, katzman_file):
    code, report = run_json(capsys, ["gb", "--input", katzman_file, "--ideal", "I",
                                     "--json", "--no-cache"])
    assert code == 0
    assert report["components"][0]["generators"] == ["y*z", "x*y"]
    assert report["command"] == "frobtool gb"


def test_fops_report(capsys, katzman_file):
    code, report = run_json(capsys, ["fops", "--input", katzman_file, "--ideal", "I",
                                     "--emax", "3", "--json", "--no-cache"])
    assert code == 0
    rows = report["components"]
    assert [r["min_gen_count"] for r in rows] == [3, 3, 3]
    assert [r["new_gen_count"] for r in rows] == [3, 2, 2]
    assert rows[1]["generated_from_lower"] is False
    assert "input_digest" in report and len(report["input_digest"]) == 64


def test_fpow(capsys, katzman_file):
    code, report = run_json(capsys, ["fpow", "--input", katzman_file, "--ideal", "I",
                                     "--e", "2", "--json", "--no-cache"])
    assert code == 0
    assert report["components"][0]["generators"] == ["x^4*y^4", "y^4*z^4"]


def test_colon_missing_ideal_names_it(capsys, katzman_file):
    code = main(["colon", "--input", katzman_file, "--lhs", "J", "--rhs", "I",
                 "--no-cache"])
    err = capsys.readouterr().err
    assert code == 2
    assert "'J'" in err


def test_colon_runs(capsys, katzman_file, tmp_path):
    extended = tmp_path / "two.frob"
    extended.write_text(KATZMAN + "ideal J = x^2*y^2, y^2*z^2\n", encoding="utf-8")
    code, report = run_json(capsys, ["colon", "--input", str(extended), "--lhs", "J",
                                     "--rhs", "I", "--json", "--no-cache"])
    assert code == 0
    assert report["components"][0]["generators"] == ["y*z^2", "x*y*z", "x^2*y"]


def test_usage_error_exit2(capsys):
    assert main(["gb", "--ideal", "I"]) == 2
    assert main(["nonsense"]) == 2


def test_degree_guard_exit3(capsys, tmp_path):
    path = tmp_path / "guarded.frob"
    path.write_text("char 2\nvars x y z\ndegree_guard 2\n"
                    "ideal I = x^2 + y*z, x*y + z^2\n", encoding="utf-8")
    code = main(["gb", "--input", str(path), "--ideal", "I", "--no-cache"])
    assert code == 3
    assert "degree guard" in capsys.readouterr().err


def test_gallery_pass_and_fail_exit_codes(capsys, monkeypatch):
    assert main(["gallery", "fedder", "--p", "2", "--no-cache"]) == 0
    capsys.readouterr()

    import frobtool.cli as cli_mod
    from frobtool.gallery import CaseResult, Expectation

    def failing_case(name, **kwargs):
        return CaseResult(name, {"p": 2},
                          [Expectation("forced", "fail", {}, "direct")])

    monkeypatch.setattr(cli_mod, "run_case", failing_case)
    assert main(["gallery", "fedder", "--no-cache"]) == 1
    out = capsys.readouterr().out
    assert "FAIL forced" in out


def test_twisted_poly(capsys):
    code, report = run_json(capsys, ["twisted-poly", "--dim", "2", "--p", "3",
                                     "--emax", "4", "--json", "--no-cache"])
    assert code == 0
    assert all(r["generated_from_lower"] for r in report["components"] if r["e"] >= 2)


def test_json_reports_byte_stable(capsys, katzman_file):
    code1, rep1 = run_json(capsys, ["fops", "--input", katzman_file, "--ideal", "I",
                                    "--emax", "2", "--json", "--no-cache"])
    clear_memo()
    code2, rep2 = run_json(capsys, ["fops", "--input", katzman_file, "--ideal", "I",
                                    "--emax", "2", "--json", "--no-cache"])
    rep1.pop("timing")
    rep2.pop("timing")
    assert json.dumps(rep1, sort_keys=True) == json.dumps(rep2, sort_keys=True)


def test_cache_dir_env_and_hits(capsys, katzman_file, tmp_path, monkeypatch):
    monkeypatch.setenv("FROBTOOL_CACHE", str(tmp_path / "cachedir"))
    code1, rep1 = run_json(capsys, ["fops", "--input", katzman_file, "--ideal", "I",
                                    "--emax", "2", "--json"])
    assert code1 == 0
    clear_memo()
    code2, rep2 = run_json(capsys, ["fops", "--input", katzman_file, "--ideal", "I",
                                    "--emax", "2", "--json"])
    assert code2 == 0
    stats = rep2["timing"]["persistent_cache"]
    assert stats["hits"] >= 1
    rep1.pop("timing")
    rep2.pop("timing")
    assert rep1 == rep2


def test_threads_env_validated(capsys, katzman_file, monkeypatch):
    monkeypatch.setenv("FROBTOOL_THREADS", "quick")
    assert main(["gb", "--input", katzman_file, "--ideal", "I", "--no-cache"]) == 2
    monkeypatch.setenv("FROBTOOL_THREADS", "2")
    assert main(["gb", "--input", katzman_file, "--ideal", "I", "--no-cache"]) == 0
    capsys.readouterr()


def test_human_output(capsys, katzman_file):
    code = main(["fops", "--input", katzman_file, "--ideal", "I", "--emax", "2",
                 "--no-cache"])
    out = capsys.readouterr().out
    assert code == 0
    assert "new generators required at e = 2" in out
