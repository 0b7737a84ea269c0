"""Command-line behavior: exit codes, artifacts, headers, caps."""

import json

import pytest

from hamlab.cli import main


def run(argv):
    return main([str(a) for a in argv])


def test_construct_theorem1_then_metrics(tmp_path, capsys):
    part_path = tmp_path / "p.part"
    assert run(["construct", "theorem1", "--m", 3, "--d", 2, "--n", 4,
                "--out", part_path, "--verify"]) == 0
    out = capsys.readouterr().out
    assert "# hamlab construct theorem1" in out
    assert "achieved imbalance: 18" in out

    metrics_path = tmp_path / "m.json"
    assert run(["metrics", part_path, "--out", metrics_path]) == 0
    doc = json.loads(metrics_path.read_text())
    assert doc["maxDegree"] == 2
    assert doc["imbalance"] == 18
    assert doc["partSizes"] == [27, 36, 18]


def test_construct_subgraph_and_check(tmp_path):
    vset_path = tmp_path / "s.vset"
    assert run(["construct", "subgraph", "--m", 4, "--n", 3, "--d", 1,
                "--out", vset_path, "--verify"]) == 0
    doc = json.loads(vset_path.read_text())
    assert len(doc["ranks"]) == 17

    report_path = tmp_path / "r.csv"
    assert run(["bounds", "check", vset_path, "--format", "csv",
                "--out", report_path]) == 0
    lines = report_path.read_text().splitlines()
    assert lines[0] == "bound,m,n,d_or_eps,value,measured,verdict"
    assert any("markov" in line and "PASS" in line for line in lines[1:])


def test_construct_lift_roundtrip(tmp_path):
    base_path = tmp_path / "base.part"
    assert run(["construct", "degree1", "--m", 3, "--n", 2, "--out", base_path]) == 0
    lifted_path = tmp_path / "lifted.part"
    assert run(["construct", "lift", "--base", base_path, "--n", 4, "--d", 2,
                "--out", lifted_path, "--verify"]) == 0
    doc = json.loads(lifted_path.read_text())
    assert len(doc["assignment"]) == 81


def test_fn_pipeline_files(tmp_path, capsys):
    fn_path = tmp_path / "f.json"
    assert run(["fn", "lifted-tribes", "--m", 3, "--a", 0, "--s", 2,
                "--out", fn_path, "--verify"]) == 0
    assert "verdict PASS" in capsys.readouterr().out

    poly_path = tmp_path / "poly.json"
    assert run(["fn", "interpolate", fn_path, "--out", poly_path]) == 0
    poly = json.loads(poly_path.read_text())
    assert max(sum(entry["exponents"]) for entry in poly) == 8

    verify_path = tmp_path / "verify.json"
    assert run(["fn", "verify", fn_path, "--out", verify_path]) == 0
    doc = json.loads(verify_path.read_text())
    assert doc["holds"] is True and doc["sensitivity"] == 4

    witness_path = tmp_path / "w.json"
    assert run(["fn", "restrict", fn_path, "--out", witness_path]) == 0
    witness = json.loads(witness_path.read_text())
    assert witness["targetSupport"] == 4
    assert witness["degree"] >= 4

    decomposed_path = tmp_path / "d.json"
    assert run(["fn", "decompose", fn_path, "--out", decomposed_path]) == 0
    assert len(json.loads(decomposed_path.read_text())) == 2


def test_oracle_commands(tmp_path, capsys):
    assert run(["oracle", "sigma", "--m", 3, "--n", 2]) == 0
    assert "sigma = 1" in capsys.readouterr().out

    assert run(["oracle", "subsets", "--m", 2, "--n", 2, "--k", 3]) == 0
    assert "= 2" in capsys.readouterr().out

    part_path = tmp_path / "p.part"
    run(["construct", "degree1", "--m", 4, "--n", 3, "--out", part_path])
    capsys.readouterr()
    assert run(["oracle", "metrics", part_path, "--verify",
                "--cap-vertices", 100]) == 0
    assert "fast path agrees" in capsys.readouterr().out

    out_path = tmp_path / "fns.json"
    assert run(["oracle", "functions", "--m", 2, "--b", 2, "--n", 2,
                "--out", out_path]) == 0
    doc = json.loads(out_path.read_text())
    assert doc["functionsChecked"] == 16 and doc["violations"] == 0


def test_oracle_sampling_needs_seed(capsys):
    assert run(["oracle", "functions", "--m", 3, "--b", 2, "--n", 2,
                "--samples", 5]) == 1
    assert "seed" in capsys.readouterr().err


def test_report_grid_flags_divisibility_gap(tmp_path):
    grid_path = tmp_path / "grid.csv"
    assert run(["report", "grid", "--m-range", "4", "--n-range", "2",
                "--d-range", "5", "--format", "csv", "--out", grid_path]) == 0
    lines = grid_path.read_text().splitlines()
    assert lines[1].startswith("4,2,5,64/3,16,16,")
    assert lines[1].endswith("FLAG")


def test_report_grid_skips_cells_over_cap(tmp_path):
    grid_path = tmp_path / "grid.csv"
    assert run(["report", "grid", "--m-range", "3:6", "--n-range", "4",
                "--d-range", "1", "--cap-vertices", 700,
                "--format", "csv", "--out", grid_path]) == 0
    lines = grid_path.read_text().splitlines()
    assert any(line.startswith("6,4,1") and line.endswith("SKIPPED") for line in lines)
    assert any(line.startswith("3,4,1") and line.endswith("PASS") for line in lines)


def test_oracle_report_rows(tmp_path):
    sigma_path = tmp_path / "sigma.jsonl"
    assert run(["oracle", "sigma", "--m", 2, "--n", 3, "--format", "records",
                "--out", sigma_path]) == 0
    record = json.loads(sigma_path.read_text().strip())
    assert record["bound"] == "sigma"
    assert record["measured"] == 2 and record["value"] == 2
    assert record["verdict"] == "PASS"

    fns_path = tmp_path / "fns.csv"
    assert run(["oracle", "functions", "--m", 2, "--b", 2, "--n", 2,
                "--format", "csv", "--out", fns_path]) == 0
    lines = fns_path.read_text().splitlines()
    assert lines[1].startswith("sensitivity-theorem,2,2,functions=16,")
    assert lines[1].endswith("PASS")


def test_report_grid_empty_ranges(tmp_path):
    grid_path = tmp_path / "grid.csv"
    assert run(["report", "grid", "--m-range", "5:3", "--n-range", "2",
                "--d-range", "1", "--format", "csv", "--out", grid_path]) == 0
    assert grid_path.read_text().splitlines() == [
        "m,n,d,paper_bound,achieved_imbalance,measured_imbalance,"
        "measured_max_degree,verdict"
    ]


def test_usage_errors_exit_one(capsys):
    assert run(["construct", "degree1", "--m", 1, "--n", 3]) == 1
    capsys.readouterr()
    assert run(["nonsense"]) == 1
    capsys.readouterr()
    assert run(["metrics", "/definitely/not/a/file.json"]) == 1
    capsys.readouterr()


def test_cap_violation_exits_one(tmp_path, capsys):
    assert run(["construct", "degree1", "--m", 6, "--n", 4,
                "--cap-vertices", 100]) == 1
    assert "cap" in capsys.readouterr().err


def test_env_cap_override(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("HAMLAB_CAP_VERTICES", "100")
    assert run(["construct", "degree1", "--m", 6, "--n", 4]) == 1
    monkeypatch.setenv("HAMLAB_CAP_VERTICES", "2000")
    capsys.readouterr()
    assert run(["construct", "degree1", "--m", 6, "--n", 4]) == 0


def test_config_file_defaults(tmp_path, capsys):
    config_path = tmp_path / "caps.json"
    config_path.write_text(json.dumps({"capVertices": 100}))
    assert run(["construct", "degree1", "--m", 6, "--n", 4,
                "--config", config_path]) == 1
    assert run(["construct", "degree1", "--m", 6, "--n", 4,
                "--config", config_path, "--cap-vertices", 2000]) == 0


def test_corrupted_partition_file_exits_one(tmp_path, capsys):
    bad = tmp_path / "bad.part"
    bad.write_text(json.dumps({"m": 3, "n": 2, "assignment": [0] * 5}))
    assert run(["metrics", bad]) == 1
    bad.write_text("not json at all")
    assert run(["metrics", bad]) == 1


def test_verification_failure_exits_two(tmp_path, capsys):
    # a hand-built partition that badly violates the degree-1 guarantee
    # cannot be produced by the library, so exercise exit 2 via fn verify on
    # a corrupted report path instead: craft a function file and tamper with
    # the expected tribes values through construct --verify on a lift whose
    # cap is too tight
    base_path = tmp_path / "base.part"
    run(["construct", "degree1", "--m", 3, "--n", 2, "--out", base_path])
    capsys.readouterr()
    assert run(["construct", "lift", "--base", base_path, "--n", 5,
                "--d", 1]) == 2
    assert "verification failure" in capsys.readouterr().err


def test_header_reports_seed_and_caps(capsys):
    run(["oracle", "functions", "--m", 2, "--b", 2, "--n", 2, "--seed", 9,
         "--samples", 3])
    out = capsys.readouterr().out
    assert "# seed: 9" in out
    assert "# caps: vertices=32" in out
