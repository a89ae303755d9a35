from __future__ import annotations

import io
import json
import pathlib
import subprocess
import sys

import pytest

from mpreclusion.cli import run
from mpreclusion.constructions import GENERATORS, complete, cycle, star
from mpreclusion.graph import from_graph6, to_graph6
from mpreclusion.preclusion import mp

GOLDEN = pathlib.Path(__file__).parent / "golden"

SAMPLE_ARGS = {
    "complete": (9, None), "empty": (6, None), "path": (7, None), "cycle": (8, None), "star": (6, None),
    "near-pm-plus-isolated": (9, None), "one-factor-union": (8, 3), "ham-cycle-union": (9, 2),
    "complete-minus-edge": (9, None), "complete-minus-p3": (9, None), "complete-minus-matching": (10, 3),
    "f-witness": (9, 4), "example-5-1": (12, None), "thm-5-6": (8, 4),
}


def call(argv, stdin: str = "", env: dict | None = None) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err, env=env or {})
    return code, out.getvalue(), err.getvalue()


def without_timing(text: str) -> dict:
    doc = json.loads(text)
    doc.pop("timing")
    return doc


@pytest.mark.parametrize("name, g", [("K4", complete(4)), ("C5", cycle(5)), ("K13", star(4))])
def test_mp_json_matches_golden(name, g):
    code, out, _ = call(["mp", "--output", "json"], to_graph6(g) + "\n")
    assert code == 0
    assert without_timing(out) == json.loads((GOLDEN / f"mp_{name}.json").read_text())


def test_mp_json_for_k4_reports_three_edges():
    code, out, _ = call(["mp", "--format", "graph6", "--output", "json"], "C~\n")
    row = json.loads(out)["results"][0]
    assert code == 0 and row["mp"] == 3 and len(row["certificate"]["F"]) == 3
    assert json.loads(out)["timing"]["seconds"] >= 0


@pytest.mark.parametrize("name", sorted(SAMPLE_ARGS))
def test_generate_then_mp_round_trip(name):
    n, k = SAMPLE_ARGS[name]
    argv = ["generate", name, "--n", str(n)] + ([] if k is None else ["--k", str(k)])
    code, text, _ = call(argv)
    assert code == 0
    g = GENERATORS[name](n, k)
    assert from_graph6(text.strip()) == g
    code, out, _ = call(["mp", "--output", "json"], text)
    assert code == 0
    assert json.loads(out)["results"][0]["mp"] == mp(g).value


def test_generate_edgelist_round_trip():
    code, text, _ = call(["generate", "one-factor-union", "--n", "8", "--k", "3", "--format", "edgelist"])
    assert code == 0
    code, out, _ = call(["mp", "--format", "edgelist", "--output", "json"], text)
    assert json.loads(out)["results"][0]["mp"] == 3


def test_generate_needs_secondary_parameter():
    code, _, err = call(["generate", "f-witness", "--n", "8"])
    assert code == 2 and "--k" in err


def test_batch_keeps_order_and_reports_bad_lines():
    lines = [to_graph6(complete(4)), "C~~", to_graph6(cycle(5)), "@@@@", to_graph6(star(4))]
    for threads in ("1", "2"):
        code, out, _ = call(["mp", "--output", "json", "--threads", threads], "\n".join(lines) + "\n")
        rows = json.loads(out)["results"]
        assert code == 2
        assert [r["index"] for r in rows] == [0, 1, 2, 3, 4]
        assert [r.get("mp") for r in rows] == [3, None, 3, None, 0]
        assert "line 2" in rows[1]["error"] and "byte" in rows[1]["error"]
        assert "line 4" in rows[3]["error"]


def test_not_precludable_is_rendered():
    code, out, _ = call(["mp", "--output", "json"], to_graph6(complete(1)) + "\n")
    assert code == 0 and json.loads(out)["results"][0]["mp"] == "not_precludable"
    code, out, _ = call(["mp"], to_graph6(complete(1)) + "\n")
    assert "not precludable" in out


def test_oracle_cross_check_flag():
    code, out, _ = call(["mp", "--oracle", "--output", "json"], to_graph6(cycle(6)) + "\n")
    row = json.loads(out)["results"][0]
    assert code == 0 and row["oracle_mp"] == row["mp"] == 2


def test_bounds_command():
    code, out, _ = call(["bounds", "--output", "json"], to_graph6(complete(9)) + "\n")
    assert code == 0 and json.loads(out)["results"][0]["upper_bounds"]["odd_xi"] == 15


def test_certify_accepts_and_rejects(tmp_path):
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"F": [[0, 1], [0, 2], [0, 3]], "S": []}))
    code, out, _ = call(["certify", "--cert", str(good), "--output", "json"], "C~\n")
    assert code == 0 and json.loads(out)["results"][0]["valid"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"F": [[0, 1]], "S": []}))
    assert call(["certify", "--cert", str(bad)], "C~\n")[0] == 1
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert call(["certify", "--cert", str(broken)], "C~\n")[0] == 2
    foreign = tmp_path / "foreign.json"
    foreign.write_text(json.dumps({"F": [[0, 9]], "S": []}))
    assert call(["certify", "--cert", str(foreign)], "C~\n")[0] == 2


def test_certify_own_certificate():
    code, out, _ = call(["certify"], to_graph6(cycle(7)) + "\n")
    assert code == 0 and "valid" in out


def test_verify_theorem_exit_codes():
    assert call(["verify-theorem", "Thm3.3", "--n", "6"])[0] == 0
    code, out, _ = call(["verify-theorem", "Thm4.1", "--n", "7", "--output", "json"])
    assert code == 1 and json.loads(out)["reports"][0]["counterexample"]["graph6"] == "F?F~w"
    assert call(["verify-theorem", "Thm3.3"])[0] == 2
    assert call(["verify-theorem", "Obs5.2", "--n", "5"])[0] == 2
    assert call(["verify-theorem", "Nope", "--n", "5"])[0] == 2


def test_scan_subset_and_csv():
    code, out, _ = call(["scan", "--only", "Thm3.3", "Obs5.2", "--output", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "theorem_id,mode,range,status"
    assert {line.split(",")[0] for line in lines[1:]} == {"Thm3.3", "Obs5.2"}


def test_scan_respects_enum_cap():
    code, out, _ = call(["scan", "--only", "Prop3.4", "--enum-cap", "4", "--output", "json"])
    statuses = {r["params"]["n"]: r["status"] for r in json.loads(out)["reports"]}
    assert code == 0 and statuses[6] == "skipped_out_of_range" and statuses[4] == "verified"


def test_sfg_outputs_and_cap_refusal():
    code, out, _ = call(["s-f-g", "--n", "6", "--output", "csv"])
    assert code == 0 and "6,3,9," in out
    code, _, err = call(["s-f-g", "--n", "8"])
    assert code == 2 and "268435456" in err


def test_environment_precedence():
    env = {"MPRECLUSION_OUTPUT": "json"}
    code, out, _ = call(["mp"], "C~\n", env)
    assert json.loads(out)["results"][0]["mp"] == 3
    code, out, _ = call(["mp", "--output", "text"], "C~\n", env)
    assert out.startswith("[0] n=4 m=6 mp=3")
    code, _, err = call(["mp"], "C~\n", {"MPRECLUSION_THREADS": "many"})
    assert code == 2 and "MPRECLUSION_THREADS" in err
    code, out, _ = call(["mp"], "C~\n")
    assert out.startswith("[0] n=4")


def test_same_seed_gives_identical_json():
    argv = ["ng-scan", "--n", "9", "--samples", "30", "--seed", "4", "--output", "json"]
    first = without_timing(call(argv)[1])
    second = without_timing(call(argv)[1])
    assert first == second and first["seed"] == 4
    env_seeded = without_timing(call(argv[:-4] + ["--output", "json"], env={"MPRECLUSION_SEED": "4"})[1])
    assert env_seeded["reports"] == first["reports"]


def test_missing_input_file_is_usage_error(tmp_path):
    assert call(["mp", str(tmp_path / "absent.g6")])[0] == 2


def test_module_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "mpreclusion", "generate", "complete", "--n", "4"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "C~"
