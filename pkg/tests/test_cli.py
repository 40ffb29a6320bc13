import io
import json
import sys

import pytest

from hypercover.cli import build_parser, main, run


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr()
    return code, out


def test_solve_singleton_certified(capsys):
    code, out = run_json(capsys, ["solve", "--n", "3", "--avoid", "111"])
    assert code == 0
    obj = json.loads(out.out)
    assert obj["v"] == 1
    assert obj["size"] == 3
    assert obj["optimal"] is True
    assert len(obj["hyperplanes"]) == 3


def test_solve_budgeted_large_n(capsys):
    code, out = run_json(capsys, ["solve", "--n", "6", "--avoid", "111111"])
    assert code == 0
    obj = json.loads(out.out)
    assert obj["optimal"] is False
    assert obj["size"] <= 6


def test_solve_budget_exhausted(capsys):
    code, out = run_json(capsys, ["solve", "--n", "3", "--avoid", "111", "--budget", "2"])
    assert code == 1
    err = json.loads(out.err)
    assert "budget" in err["error"]


def test_construct_verify_round_trip(capsys, monkeypatch):
    code, out = run_json(capsys, ["construct", "minus2", "--n", "4", "--avoid", "0000,1110"])
    assert code == 0
    cover = out.out
    assert json.loads(cover)["size"] == 3
    monkeypatch.setattr(sys, "stdin", io.StringIO(cover))
    code2, out2 = run_json(capsys, ["verify"])
    assert code2 == 0
    assert json.loads(out2.out)["verified"] is True


def test_construct_wrong_cardinality(capsys):
    code, out = run_json(capsys, ["construct", "minus1", "--n", "3", "--avoid", "000,111"])
    assert code == 2
    assert "error" in json.loads(out.err)


def test_construct_layer_and_verify(capsys, monkeypatch):
    code, out = run_json(capsys, ["construct", "layer", "--n", "5", "--i", "2"])
    assert code == 0
    obj = json.loads(out.out)
    assert obj["size"] == 2
    assert obj["verified"] is True
    assert obj["base_point"] == "11000"
    monkeypatch.setattr(sys, "stdin", io.StringIO(out.out))
    code2, out2 = run_json(capsys, ["verify"])
    assert code2 == 0
    assert json.loads(out2.out)["layer"] == 2


def test_verify_flags_defective_cover(capsys, monkeypatch):
    code, out = run_json(capsys, ["construct", "minus1", "--n", "3", "--avoid", "101"])
    assert code == 0
    obj = json.loads(out.out)
    obj["hyperplanes"] = obj["hyperplanes"][:-1]
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(obj)))
    code2, out2 = run_json(capsys, ["verify"])
    assert code2 == 1
    rep = json.loads(out2.out)
    assert rep["verified"] is False
    assert rep["uncovered"]


def test_avoid_file_indirection(tmp_path, capsys):
    f = tmp_path / "avoid.txt"
    f.write_text("000 111\n")
    code, out = run_json(capsys, ["solve", "--n", "3", "--avoid", f"@{f}"])
    assert code == 0
    assert json.loads(out.out)["size"] == 2


def test_patterns_count_and_out(tmp_path, capsys):
    code, out = run_json(capsys, ["patterns", "--n", "3", "--count-only"])
    assert code == 0
    assert json.loads(out.out)["count"] == 56

    dest = tmp_path / "p3.txt"
    code, out = run_json(capsys, ["patterns", "--n", "3", "--out", str(dest)])
    assert code == 0
    obj = json.loads(out.out)
    assert len(obj["patterns"]) == 56
    head = dest.read_text().splitlines()[0]
    assert head.startswith("hypercover-patterns v1 n=3")

    code, out = run_json(capsys, ["patterns", "--n", "6"])
    assert code == 2


def test_experiment_afmiss(capsys):
    code, out = run_json(
        capsys, ["experiment", "afmiss", "--n", "3", "--m", "2", "--samples", "50"]
    )
    assert code == 0
    obj = json.loads(out.out)
    assert obj["passed"] is True
    assert obj["violations"] == 0


def test_experiment_hitting_batches(capsys):
    code, out = run_json(
        capsys,
        [
            "experiment",
            "hitting",
            "--n",
            "3",
            "--threshold",
            "4",
            "--trials",
            "30",
            "--batch-size",
            "10",
            "--seed",
            "2",
        ],
    )
    assert code == 0
    lines = [json.loads(line) for line in out.out.splitlines() if line.strip()]
    batches = [o for o in lines if o["kind"] == "batch"]
    summaries = [o for o in lines if o["kind"] == "summary"]
    assert len(batches) == 3 and len(summaries) == 1
    assert sum(b["successes"] for b in batches) == summaries[0]["successes"]
    assert summaries[0]["trials"] == 30


def test_experiment_gsubcube(capsys):
    code, out = run_json(capsys, ["experiment", "gsubcube", "--n", "3", "--d", "1"])
    assert code == 0
    assert json.loads(out.out)["g"] == 4


def test_eck(capsys):
    code, out = run_json(capsys, ["eck", "--n", "3", "--k", "2"])
    assert code == 0
    obj = json.loads(out.out)
    assert obj["ec"] == 2
    assert sum(row["orbit"] for row in obj["orbits"]) == 28


def test_table_format(capsys):
    code, out = run_json(
        capsys, ["construct", "minus1", "--n", "3", "--avoid", "110", "--format", "table"]
    )
    assert code == 0
    assert "size" in out.out
    assert "=" in out.out  # hyperplane equations render as text


def test_bad_flag_exits_2(capsys):
    code, out = run_json(capsys, ["solve", "--n", "3", "--no-such-flag"])
    assert code == 2


def test_missing_required_args(capsys):
    code, out = run_json(capsys, ["experiment", "hitting", "--n", "3"])
    assert code == 2
    assert "error" in json.loads(out.err)


def test_build_parser_and_main(capsys, monkeypatch):
    parser = build_parser()
    assert parser.prog == "hypercover"
    monkeypatch.setattr(sys, "argv", ["hypercover", "patterns", "--n", "2", "--count-only"])
    with pytest.raises(SystemExit) as exc:
        main()
    assert exc.value.code == 0
    assert json.loads(capsys.readouterr().out)["count"] == 10
