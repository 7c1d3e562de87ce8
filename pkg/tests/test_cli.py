"""CLI dispatch, exit codes, rendering invariants, spec files, fixture suite."""

import json
import shutil
from pathlib import Path

import pytest

from ivhs import (
    FIXTURES_DIR,
    Report,
    SpecFileError,
    load_degeneration_spec,
    render_json,
    run_fixture_suite,
)
from ivhs.cli import run_command

GOLDEN = Path(__file__).parent / "golden"


def ok(argv):
    code, out = run_command(argv)
    assert code == 0, out
    return out


# --- exit codes -----------------------------------------------------------

def test_unknown_subcommand_is_usage_error():
    code, out = run_command(["bogus"])
    assert code == 64


def test_missing_subcommand_is_usage_error():
    code, _ = run_command([])
    assert code == 64
    code, _ = run_command(["mu"])
    assert code == 64


def test_bad_polynomial_is_validation_error():
    code, out = run_command(["mu", "plane", "--poly", "x^4+w^4"])
    assert code == 2
    assert "--poly" in out and "unknown variable" in out


def test_singular_plane_curve_accepted_but_jacobian_rejects():
    code, _ = run_command(["mu", "plane", "--poly", "x^4+y^4"])
    assert code == 0
    code, out = run_command(["jacobian", "--poly", "x^4+y^4"])
    assert code == 2
    assert "not smooth" in out


def test_low_genus_is_validation_error():
    code, _ = run_command(["mu", "hyperelliptic", "--genus", "1"])
    assert code == 2


# --- golden renderings ------------------------------------------------------

@pytest.mark.parametrize(
    "argv,golden",
    [
        (["mu", "plane", "--poly", "x^4+y^4+z^4", "--json"], "mu_plane_quartic.json"),
        (["degenerate", "--pa", "6", "--step", "node:smooth", "--json"],
         "degenerate_quintic_node.json"),
        (["class", "--genus", "5", "--class", "trigonal", "--json"],
         "class_trigonal_g5.json"),
    ],
)
def test_json_output_matches_golden_bytes(argv, golden):
    out = ok(argv)
    assert out == (GOLDEN / golden).read_text()


def test_quartic_report_values():
    out = ok(["mu", "plane", "--poly", "x^4+y^4+z^4", "--json"])
    payload = json.loads(out)["payload"]
    assert payload["rank"] == 6
    assert payload["kernel_dim"] == 0
    assert payload["matrix"] == [
        [1 if i == j else 0 for j in range(6)] for i in range(6)
    ]


def test_degenerate_report_values():
    out = ok(["degenerate", "--pa", "6", "--step", "node:smooth", "--json"])
    payload = json.loads(out)["payload"]
    assert payload["rank_defect"] == 1
    assert payload["predicted_max_rank"] == 5


def test_json_round_trip_and_stability():
    out = ok(["mu", "ci", "--q", "x0*x1-x2*x3", "--c", "x0^3+x1^3+x2^3+x3^3",
              "--json"])
    report = Report.from_json(out)
    assert render_json(report) == out


def test_text_and_json_numeric_content_agree():
    base = ["jacobian", "--poly", "x^4+y^4+z^4", "--xi", "x^3*y", "--budget", "50"]
    text = ok(base)
    payload = json.loads(ok(base + ["--json"]))["payload"]
    assert f"xi_rank: {payload['xi']['rank']}" in text
    assert f"best_rank: {payload['search']['best_rank']}" in text
    dims = payload["dims"]
    assert (
        f"dims: sections {dims['sections']}, deformations "
        f"{dims['deformations']}, targets {dims['targets']}"
    ) in text


def test_step_parsing_with_parametric_kinds():
    out = ok(["degenerate", "--pa", "8", "--step", "ordinary:3:smooth", "--json"])
    payload = json.loads(out)["payload"]
    assert payload["steps"] == [{"initial": "ordinary:3", "target": "smooth"}]
    out = ok(["degenerate", "--pa", "8", "--step", "A:3:A:1", "--json"])
    payload = json.loads(out)["payload"]
    assert payload["rank_defect"] == 1


def test_step_validation_errors():
    code, out = run_command(["degenerate", "--pa", "6", "--step", "node:tacnode"])
    assert code == 2
    code, out = run_command(["degenerate", "--pa", "6"])
    assert code == 2
    assert "--step" in out


def test_declared_singularities_switch_plane_model_label():
    out = ok(["mu", "plane", "--poly", "x^4+y^4", "--sing", "node", "--json"])
    assert json.loads(out)["payload"]["model"] == "singular-plane(d=4)"


# --- degeneration spec files -------------------------------------------------

def test_load_shipped_spec_files():
    spec = load_degeneration_spec(FIXTURES_DIR / "specs" / "quintic_node.json")
    assert spec.pa == 6
    assert len(spec.steps) == 1
    assert spec.steps[0].initial.kind == "node"
    assert spec.steps[0].target.kind == "smooth"

    spec = load_degeneration_spec(FIXTURES_DIR / "specs" / "tacnode_partial.json")
    assert spec.steps[0].initial.kind == "tacnode"
    assert spec.steps[0].target.kind == "node"


def test_degenerate_subcommand_reads_spec_file():
    path = FIXTURES_DIR / "specs" / "quintic_node.json"
    out = ok(["degenerate", str(path), "--json"])
    assert json.loads(out)["payload"]["predicted_max_rank"] == 5


def test_spec_file_errors_name_the_file(tmp_path):
    missing = tmp_path / "nope.json"
    with pytest.raises(SpecFileError) as err:
        load_degeneration_spec(missing)
    assert "nope.json" in str(err.value)

    bad = tmp_path / "bad.json"
    bad.write_text('{"pa": 6}')
    with pytest.raises(SpecFileError) as err:
        load_degeneration_spec(bad)
    assert "steps" in str(err.value)

    unknown = tmp_path / "unknown.json"
    unknown.write_text('{"pa": 6, "steps": [{"initial": "swallowtail", "target": "smooth"}]}')
    with pytest.raises(SpecFileError) as err:
        load_degeneration_spec(unknown)
    assert "swallowtail" in str(err.value)

    increase = tmp_path / "increase.json"
    increase.write_text('{"pa": 6, "steps": [{"initial": "node", "target": "tacnode"}]}')
    with pytest.raises(SpecFileError):
        load_degeneration_spec(increase)

    code, out = run_command(["degenerate", str(missing)])
    assert code == 2


# --- fixture suite -----------------------------------------------------------

def test_fixture_suite_passes():
    suite = run_fixture_suite()
    assert suite.ok, [r.to_dict() for r in suite.results if not r.ok]
    assert suite.summary_dict()["failed"] == 0


def test_fixture_suite_cli_emits_json_objects():
    code, out = run_command(["fixtures", "--json"])
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    summary = lines[-1]
    assert summary["failed"] == 0
    assert all(entry["status"] == "pass" for entry in lines[:-1])
    assert len(lines) - 1 == summary["total"]


def test_perturbed_fixture_fails_suite(tmp_path):
    shutil.copytree(FIXTURES_DIR, tmp_path / "fixtures")
    target = tmp_path / "fixtures" / "plane_quartic_identity.json"
    data = json.loads(target.read_text())
    data["expected"]["rank"] = 7
    target.write_text(json.dumps(data))
    code, out = run_command(["fixtures", "--dir", str(tmp_path / "fixtures")])
    assert code != 0
    assert "FAIL plane_quartic_identity" in out
    assert "rank" in out
    suite = run_fixture_suite(tmp_path / "fixtures")
    assert not suite.ok
    failing = [r for r in suite.results if not r.ok]
    assert [r.name for r in failing] == ["plane_quartic_identity"]
