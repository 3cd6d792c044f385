import json

import pytest

from gelfand.cli import main
from gelfand.pipeline import default_points, run_sweep, run_verify


# ---------------------------------------------------------
# pipeline reports
# ---------------------------------------------------------

def test_run_verify_gl_1_2():
    r = run_verify("gl", 1, 2)
    assert r.passed and r.k == 1 and r.max_dim_inv == 2 and r.attained
    assert set(r.checks) == {"lemma_3_1", "corollary_3_3", "mackey_sum",
                             "dual_dims", "transpose_classes"}
    assert all(r.checks.values())


def test_run_verify_o_2_3():
    r = run_verify("o", 2, 3)
    assert r.passed and r.k == 0 and r.max_dim_inv <= 1
    assert set(r.checks) == {"theorem_4_1", "mackey_sum", "dual_dims",
                             "transpose_classes"}


def test_run_verify_rejects_even_q_for_o():
    from gelfand.errors import DomainError
    with pytest.raises(DomainError):
        run_verify("o", 1, 4)


def test_report_schema_and_shape():
    r = run_verify("gl", 1, 3)
    d = r.to_json_dict()
    assert d["schema"] == "gelfand-report/1"
    assert d["pair"] == {"kind": "gl", "n": 1, "q": 3}
    assert d["group_order"] == 48 and d["subgroup_order"] == 2
    assert d["center_order"] == 2
    assert set(d["cosets"]) == {"plain_count", "mod_center_count",
                                "sigma_fixed", "sigma_nonfixed", "k"}
    assert d["cosets"]["k"] == 1 and d["bound"] == 2
    assert all(set(c) == {"degree", "dim_inv", "dim_dual_inv"}
               for c in d["characters"])
    assert "timings" in d
    assert "timings" not in r.to_json_dict(include_timings=False)


def test_report_determinism():
    a = run_verify("gl", 1, 3).canonical_bytes()
    b = run_verify("gl", 1, 3).canonical_bytes()
    assert a == b


def test_cache_coherence(tmp_path):
    cold = run_verify("gl", 1, 3, cache_dir=tmp_path)
    assert (tmp_path / "chartab-gl2-q3-v1.json").is_file()
    warm = run_verify("gl", 1, 3, cache_dir=tmp_path)
    assert cold.canonical_bytes() == warm.canonical_bytes()
    no_cache = run_verify("gl", 1, 3)
    assert no_cache.canonical_bytes() == cold.canonical_bytes()


def test_stage_name_is_attached_to_errors():
    from gelfand.errors import CapExceededError
    with pytest.raises(CapExceededError, match=r"\[stage enumerate_group\]"):
        run_verify("gl", 2, 5, cap=100)


# ---------------------------------------------------------
# sweep
# ---------------------------------------------------------

def test_default_points():
    pts = default_points("gl")
    assert pts[0] == ("gl", 1, 2) and len(pts) == 7
    assert default_points("o") == [("o", 1, 3), ("o", 2, 3), ("o", 1, 5)]
    assert len(default_points("all")) == 10


def test_empty_sweep():
    summary = run_sweep([])
    assert summary.rows == [] and summary.all_passed
    assert "0 points" in summary.table_text()


def test_sweep_writes_reports(tmp_path):
    summary = run_sweep([("gl", 1, 2), ("o", 1, 3)], tmp_path)
    assert summary.all_passed
    assert (tmp_path / "gl-n1-q2.json").is_file()
    assert (tmp_path / "o-n1-q3.json").is_file()
    assert (tmp_path / "summary.txt").is_file()
    data = json.loads((tmp_path / "summary.json").read_text())
    assert data["all_pass"] is True and len(data["points"]) == 2
    report = json.loads((tmp_path / "gl-n1-q2.json").read_text())
    assert report["schema"] == "gelfand-report/1"


def test_sweep_records_per_point_failures():
    summary = run_sweep([("o", 1, 4), ("gl", 1, 2)])
    assert not summary.all_passed
    assert summary.rows[0].error is not None
    assert summary.rows[1].passed


def test_default_o_sweep_is_gelfand_everywhere():
    summary = run_sweep(default_points("o"))
    assert summary.all_passed and len(summary.rows) == 3
    assert all(r.k == 0 and r.max_dim_inv <= 1 and r.bound == 1
               for r in summary.rows)


# ---------------------------------------------------------
# command line
# ---------------------------------------------------------

def test_cli_field_info(capsys):
    assert main(["field", "info", "--q", "4"]) == 0
    out = capsys.readouterr().out
    assert out == "q: 4\np: 2\ne: 2\nmodulus: 1,1,1\ngenerator: 2\n"


def test_cli_field_info_json(capsys):
    assert main(["field", "info", "--q", "5", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"q": 5, "p": 5, "e": 1, "modulus": [], "generator": 2}


def test_cli_field_info_bad_q(capsys):
    assert main(["field", "info", "--q", "6"]) == 2


def test_cli_group_order_and_dump(tmp_path, capsys):
    dump = tmp_path / "els.txt"
    assert main(["group", "order", "--type", "gl", "--n", "2", "--q", "2",
                 "--dump", str(dump)]) == 0
    assert capsys.readouterr().out == "order: 6\n"
    lines = dump.read_text().splitlines()
    assert len(lines) == 6
    assert lines[0] == "0,1;1,0"  # lexicographically least invertible


def test_cli_cosets_json(capsys):
    assert main(["cosets", "--pair", "gl", "--n", "1", "--q", "2",
                 "--mod-center", "--involution", "transpose", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["count"] == 6 and data["nonfixed"] == 2 and data["k"] == 1
    assert sorted(data["nonfixed_reps"]) == ["1,0;1,1", "1,1;0,1"]


def test_cli_solve_symmetric(capsys):
    assert main(["solve-symmetric", "--q", "2", "--phi", "1,0",
                 "--v", "1,1"]) == 0
    out = capsys.readouterr().out
    assert "B: 1,1;1,0" in out
    assert "symmetric: true invertible: true maps_phi_to_v: true" in out


def test_cli_solve_symmetric_zero_vector_is_usage_error(capsys):
    assert main(["solve-symmetric", "--q", "3", "--phi", "0,0",
                 "--v", "1,0"]) == 2


def test_cli_swap_reflection(capsys):
    assert main(["swap-reflection", "--q", "3", "--u", "1,0",
                 "--v", "0,1"]) == 0
    out = capsys.readouterr().out
    assert "g: 0,1;1,0" in out
    assert "orthogonal: true" in out and "maps_v_to_u: true" in out


def test_cli_chartab_json_stdout(capsys):
    assert main(["chartab", "--type", "o", "--n", "2", "--q", "3",
                 "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert sum(d * d for d in data["degrees"]) == 8
    assert len(data["class_reps"]) == len(data["class_sizes"])


def test_cli_chartab(tmp_path, capsys):
    assert main(["chartab", "--type", "gl", "--n", "2", "--q", "2"]) == 0
    out = capsys.readouterr().out
    assert "degrees: 1,1,2" in out
    target = tmp_path / "table.json"
    assert main(["chartab", "--type", "gl", "--n", "2", "--q", "2",
                 "--json", str(target)]) == 0
    capsys.readouterr()
    data = json.loads(target.read_text())
    assert data["degrees"] == [1, 1, 2] and data["l"] == 13


def test_cli_verify_json_and_exit_codes(capsys):
    assert main(["verify", "--kind", "gl", "--n", "1", "--q", "2",
                 "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["pass"] is True

    assert main(["verify", "--kind", "o", "--n", "1", "--q", "4"]) == 2


def test_cli_verify_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert main(["verify", "--kind", "o", "--n", "2", "--q", "3",
                 "--out", str(target)]) == 0
    capsys.readouterr()
    data = json.loads(target.read_text())
    assert data["pass"] is True and data["cosets"]["k"] == 0


def test_parallel_sweep_matches_sequential(tmp_path):
    points = [("gl", 1, 2), ("gl", 1, 3), ("o", 1, 3)]
    seq = run_sweep(points, tmp_path / "seq")
    par = run_sweep(points, tmp_path / "par", jobs=3)
    assert seq.all_passed and par.all_passed
    for name in ("gl-n1-q2.json", "gl-n1-q3.json", "o-n1-q3.json"):
        a = json.loads((tmp_path / "seq" / name).read_text())
        b = json.loads((tmp_path / "par" / name).read_text())
        a.pop("timings")
        b.pop("timings")
        assert a == b


def test_cli_verify_uses_cache_dir(tmp_path, capsys):
    assert main(["verify", "--kind", "gl", "--n", "1", "--q", "3",
                 "--cache-dir", str(tmp_path)]) == 0
    capsys.readouterr()
    assert (tmp_path / "chartab-gl2-q3-v1.json").is_file()


def test_cli_cache_dir_from_environment(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("GELFAND_CACHE_DIR", str(tmp_path))
    assert main(["verify", "--kind", "gl", "--n", "1", "--q", "2"]) == 0
    capsys.readouterr()
    assert (tmp_path / "chartab-gl2-q2-v1.json").is_file()


def test_cli_sweep_empty_points(capsys):
    assert main(["sweep", "--points", ""]) == 0
    assert "0 points" in capsys.readouterr().out


def test_cli_sweep_explicit_points(tmp_path, capsys):
    assert main(["sweep", "--points", "gl:2:2,o:2:3",
                 "--out-dir", str(tmp_path), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["all_pass"] is True
    assert [p["pair"] for p in data["points"]] == [
        {"kind": "gl", "n": 1, "q": 2}, {"kind": "o", "n": 1, "q": 3}]


def test_cli_sweep_bad_points(capsys):
    assert main(["sweep", "--points", "gl:2"]) == 2
    assert main(["sweep", "--points", "sp:2:3"]) == 2


def test_cli_internal_error_exit_code(monkeypatch, capsys):
    from gelfand import cli
    from gelfand.errors import InternalCheckError

    def boom(*args, **kwargs):
        raise InternalCheckError("synthetic consistency failure")

    monkeypatch.setattr(cli, "run_verify", boom)
    assert main(["verify", "--kind", "gl", "--n", "1", "--q", "2"]) == 3
    assert "internal error" in capsys.readouterr().err
