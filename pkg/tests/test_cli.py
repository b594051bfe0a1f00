import io
import json

from pointedcat.cli import main
from pointedcat.metric import preset
from pointedcat.serde import category_from_json, category_to_json


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out)


# -- smatrix -----------------------------------------------------------------

def test_smatrix_level1_semion(capsys):
    report = run_json(capsys, "smatrix", "--cat", "semion", "--level", "1")
    results = report["results"]
    assert results["matrix"] == [["1", "1"], ["1", "-1"]]
    assert results["rank"] == 2
    assert results["invertible"] is True


def test_smatrix_level2_svect(capsys):
    report = run_json(capsys, "smatrix", "--cat", "svect", "--level", "2")
    results = report["results"]
    assert results["matrix"] == [["1", "1"], ["1", "-1"]]
    assert results["character_table_match"] is True
    assert results["square"] is True and results["invertible"] is True


def test_smatrix_level2_trivial(capsys):
    report = run_json(capsys, "smatrix", "--cat", "trivial", "--level", "2")
    assert report["results"]["matrix"] == [["1"]]


def test_smatrix_human_mode(capsys):
    code, out, _ = run_cli(capsys, "smatrix", "semion", "--level", "1", "--human")
    assert code == 0
    assert "rank 2 of 2" in out


# -- piping double into lagrangian ---------------------------------------------

def test_double_pipes_into_lagrangian(capsys, monkeypatch):
    report = run_json(capsys, "double", "Z2")
    assert report["results"]["category"]["group"] == "Z2xZ2"
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(report)))
    chained = run_json(capsys, "lagrangian", "-")
    assert chained["results"]["lagrangian_count"] == 2
    assert chained["results"]["is_center"] is True
    assert chained["results"]["lagrangian"] == [
        [[0, 0], [0, 1]],
        [[0, 0], [1, 0]],
    ]


# -- other subcommands ------------------------------------------------------------

def test_classify_z2(capsys):
    report = run_json(capsys, "classify", "Z2", "--values", "4")
    results = report["results"]
    assert results["count"] == 4
    qs = sorted(cls["q"].get("1", "1") for cls in results["classes"])
    assert qs == sorted(["1", "-1", "z4^1", "z4^3"])


def test_modcats_svect(capsys):
    report = run_json(capsys, "modcats", "--cat", "svect")
    results = report["results"]
    assert results["pi0"] == {"pi0": 2, "pi0_omega": 2, "equal": True}
    assert results["classes"] == [[0], [1]]
    assert all(rep["H"] == [[0]] for rep in results["representatives"])


def test_center_and_tmatrix(capsys):
    report = run_json(capsys, "center", "--cat", "double:Z3")
    assert report["results"]["order"] == 1
    assert report["results"]["nondegenerate"] is True

    report = run_json(capsys, "tmatrix", "--cat", "semion")
    assert report["results"]["diagonal"] == ["1", "z4^1"]


def test_cocycle_check(capsys):
    report = run_json(capsys, "cocycle-check", "--cat", "semion")
    results = report["results"]
    assert results["is_abelian_cocycle"] is True
    assert results["trace_q"] == {"1": "z4^1"}


# -- exit codes ---------------------------------------------------------------------

def test_exit_code_validation_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"group": "Z4", "q": {"1": "1", "2": "-1", "3": "1"}}))
    code, _, err = run_cli(capsys, "center", str(bad))
    assert code == 2
    assert "bimultiplicative" in err


def test_exit_code_broken_cocycle(tmp_path, capsys):
    bad = tmp_path / "bad_cocycle.json"
    bad.write_text(json.dumps({"group": "Z2", "psi": {"1,1,1": "z4^1"}}))
    code, _, err = run_cli(capsys, "smatrix", str(bad))
    assert code == 2
    assert "pentagon" in err


def test_exit_code_bounds(capsys):
    code, _, err = run_cli(capsys, "lagrangian", "double:Z32")
    assert code == 4
    code, _, err = run_cli(capsys, "classify", "Z8")
    assert code == 4


def test_exit_code_unknown_source(capsys):
    code, _, err = run_cli(capsys, "smatrix", "nosuchpreset")
    assert code == 2
    assert "preset" in err


def test_exit_code_map_covers_inconsistency():
    from pointedcat.errors import InternalInconsistency, exit_code_for

    assert exit_code_for(InternalInconsistency()) == 3


# -- round trips and reports ---------------------------------------------------------

def test_emitted_categories_reparse_to_equal_values(capsys):
    for name in ("trivial", "svect", "semion", "semion-bar", "toric", "double:Z3"):
        cat = preset(name)
        again = category_from_json(category_to_json(cat))
        assert again == cat


def test_report_digest_is_deterministic(capsys):
    first = run_json(capsys, "center", "--cat", "semion")
    second = run_json(capsys, "center", "--cat", "semion")
    assert first["digest"] == second["digest"]
    assert first["results"] == second["results"]
    assert first["version"] == second["version"]


def test_out_flag_writes_report(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "center", "semion", "--out", str(target))
    assert code == 0
    assert out == ""
    data = json.loads(target.read_text())
    assert data["command"] == "center"
    assert data["results"]["order"] == 1


# -- battery ---------------------------------------------------------------------------

def test_battery_cli_passes(capsys):
    code, out, _ = run_cli(capsys, "battery", "--human")
    assert code == 0
    assert "PASS" in out
    assert "FAIL" not in out


def test_cocycle_check_invalid_reports_and_exits_2(tmp_path, capsys):
    bad = tmp_path / "notcoc.json"
    bad.write_text(
        json.dumps({"group": "Z2", "psi": {"1,1,1": "z4^1"}, "omega": {"1,1": "z8^1"}})
    )
    code, out, _ = run_cli(capsys, "cocycle-check", str(bad), "--json")
    assert code == 2
    report = json.loads(out)
    assert report["results"]["is_abelian_cocycle"] is False
    assert report["results"]["pentagon"]["witness"] == [[1], [1], [1], [1]]


def test_q_gen_category_file(tmp_path, capsys):
    spec = tmp_path / "gen.json"
    spec.write_text(json.dumps({"group": "Z4", "q_gen": ["z8^1"], "label": "gen-form"}))
    report = run_json(capsys, "tmatrix", str(spec))
    assert report["results"]["diagonal"] == ["1", "z8^1", "-1", "z8^1"]


def test_smatrix2_on_double_z4(capsys):
    report = run_json(capsys, "smatrix", "double:Z4", "--level", "2")
    assert report["results"]["matrix"] == [["1"]]
    assert report["results"]["character_table_match"] is True


def test_modcats_needs_a_cocycle(capsys):
    code, _, err = run_cli(capsys, "modcats", "double:Z8")
    assert code == 2
    assert "cocycle" in err
