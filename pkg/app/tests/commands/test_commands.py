import json
import math

import pytest

from app.models.family import FamilyId
from app.verify import Status
from app.verify.reports import ResidualReport

# --- HELPERS ---

SET_A_RAW = {
    "lambda1": "3/2",
    "mu1": "5/2",
    "nu1": 2,
    "nu2": 3,
    "nu4": 5,
    "rho": 3,
    "c": 4,
    "delta": "5/2",
    "epsilon": "7/2",
}


def report(status, family="sg.case1.tanh.plus"):
    return ResidualReport(
        family=FamilyId.parse(family),
        points_sampled=100,
        points_skipped_near_singularity=0,
        max_abs_pde_residual=1e-3 if status is Status.FLAGGED_ERRATUM else 1e-12,
        max_abs_ode_residual=1e-12,
        status=status,
    )


# --- PARAMS ---


def test_params_default_material(invoke):
    result = invoke("params")
    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert data["derived"]["alpha2"] == "38065/55296"
    assert data["derived"]["beta1"] == "96/5"
    assert data["decimal"]["n1"] == pytest.approx(0.1875)
    assert data["constants"]["delta"] == "5/2"


def test_params_from_file(invoke, write_config):
    path = write_config({"material": {"preset": "B"}})
    result = invoke("params", path)
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["derived"]["alpha1"] == "19/196"


def test_params_explicit_constants_match_preset(invoke, write_config):
    explicit = json.loads(invoke("params", write_config({"material": SET_A_RAW})).stdout)
    preset = json.loads(invoke("params").stdout)
    assert explicit == preset


@pytest.mark.parametrize(
    "material, error",
    [
        ({**SET_A_RAW, "lambda1": 0}, "ZeroPoissonRatio"),
        ({**SET_A_RAW, "rho": "-1"}, "InvalidConstants"),
        ({k: v for k, v in SET_A_RAW.items() if k != "c"}, "InvalidConstants"),
        ({"preset": "Z"}, "ValueError"),
    ],
)
def test_params_invalid_material(invoke, write_config, material, error):
    result = invoke("params", write_config({"material": material}))
    assert result.exit_code == 2
    assert error in result.output


def test_config_root_must_be_object(invoke, write_config):
    result = invoke("--config", write_config([1, 2, 3]), "params")
    assert result.exit_code == 2
    assert "atteso un oggetto JSON" in result.output


# --- LIST ---


def test_list_json(invoke):
    result = invoke("--json", "list")
    assert result.exit_code == 0, result.output
    entries = json.loads(result.stdout)
    assert len(entries) == 54
    assert entries[0]["id"].startswith("sg.case1")
    assert {"id", "classification", "free", "constraint"} <= set(entries[0])


def test_list_table(invoke):
    result = invoke("list")
    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert lines[-1] == "--- Totale: 54 ---"
    assert len(lines) == 55


# --- EVAL ---


def test_eval_json(invoke):
    result = invoke("--json", "eval", "sg.case1.tanh.plus", "--x", "0.5", "--t", "1", "--jet")
    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert data["family"] == "sg.case1.tanh.plus"
    assert math.isfinite(float(data["value"]["re"]))
    assert float(data["jet"][0]["re"]) == pytest.approx(float(data["value"]["re"]))
    assert len(data["jet"]) >= 3


def test_eval_text_with_override(invoke):
    result = invoke("eval", "sg.case1.tanh.minus", "--x", "1", "--t", "0", "-p", "mu=1/2", "--jet")
    assert result.exit_code == 0, result.output
    assert result.stdout.startswith("sg.case1.tanh.minus (1, 0) = ")
    assert "u^(2)" in result.stdout


@pytest.mark.parametrize(
    "args, error",
    [
        (["eval", "sg.case9.tanh.plus", "--x", "0", "--t", "0"], "UnknownFamily"),
        (["eval", "sg.case1.coth.plus", "--x", "0", "--t", "0"], "SingularPoint"),
        (["eval", "sg.case1.tanh.plus", "--x", "0", "--t", "0", "-p", "mu"], "ValueError"),
        (["eval", "mefm.case7.tanh.plus", "--x", "0", "--t", "0", "-p", "tau=5/2", "-p", "sigma=5/2"], "GateViolated"),
    ],
)
def test_eval_errors(invoke, args, error):
    result = invoke(*args)
    assert result.exit_code == 2
    assert error in result.output


# --- VERIFY ---


@pytest.mark.parametrize("family", ["sg.case1.tanh.plus", "sg.case4.coth.plus", "mefm.case8.tan.minus"])
def test_verify_single_family_passes(invoke, family):
    result = invoke("verify", "--family", family)
    assert result.exit_code == 0, result.output
    assert "PASS" in result.stdout


def test_verify_impossible_tolerance_fails(invoke):
    result = invoke("verify", "--family", "sg.case1.tanh.plus", "--tol", "1e-30")
    assert result.exit_code == 1
    assert "FAIL" in result.stdout


def test_verify_json_with_identities(invoke):
    result = invoke("verify", "--family", "mefm.case13.exp.plus", "--json", "--identities")
    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert data["reports"][0]["status"] == "PASS"
    assert data["reports"][0]["points_sampled"] == 10 * 5 + 50
    assert all(check["passed"] for check in data["identities"])


def test_verify_seed_is_deterministic(invoke):
    args = ("--json", "--seed", "7", "verify", "--family", "sg.case2.coth.plus")
    assert invoke(*args).stdout == invoke(*args).stdout


@pytest.mark.parametrize("grid", ["10", "0x5", "axb"])
def test_verify_bad_grid(invoke, grid):
    result = invoke("verify", "--grid", grid, "--family", "sg.case1.tanh.plus")
    assert result.exit_code == 2


def test_verify_flagged_needs_allow_errata(invoke, mocker):
    mocker.patch("commands.verify_catalog", return_value=[report(Status.FLAGGED_ERRATUM)])
    assert invoke("verify").exit_code == 1
    assert invoke("verify", "--allow-errata").exit_code == 0


def test_verify_fail_ignores_allow_errata(invoke, mocker):
    mocker.patch(
        "commands.verify_catalog",
        return_value=[report(Status.PASS), report(Status.FAIL, "sg.case2.tanh.plus")],
    )
    assert invoke("verify", "--allow-errata").exit_code == 1


# --- FIGURE ---


def test_figure_writes_manifest(invoke, tmp_path):
    out = tmp_path / "fig1"
    result = invoke("--json", "figure", "fig1", "--out", str(out))
    assert result.exit_code == 0, result.output
    manifest = json.loads(result.stdout)["manifest"]
    data = json.loads((out / "fig1_manifest.json").read_text(encoding="utf-8"))
    assert manifest.endswith("fig1_manifest.json")
    # TestingConfig: 101 punti per curva
    assert all(entry["rows"] == 101 for entry in data["datasets"])


def test_figure_unknown_preset(invoke, tmp_path):
    result = invoke("figure", "fig42", "--out", str(tmp_path))
    assert result.exit_code == 2
    assert "UnknownPreset" in result.output


# --- SYSTEM ---


def test_system_sg(invoke):
    result = invoke("system", "sg")
    assert result.exit_code == 0, result.output
    assert result.stdout.strip() == "equations: 9, unknowns: 7"


def test_system_mefm_counts(invoke):
    result = invoke("system", "mefm", "1", "full")
    assert result.exit_code == 0, result.output
    assert result.stdout.strip() == "equations: 8 (predicted 8), unknowns: 8 (predicted 8)"


def test_system_check_case13(invoke):
    result = invoke("system", "mefm", "1", "sigma0", "--check", "mefm.case13")
    assert result.exit_code == 0, result.output
    assert result.stdout.strip().endswith("all residuals zero")


def test_system_check_json(invoke):
    result = invoke("--json", "system", "sg", "--check", "sg.case1.minus")
    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert data["equations"] == 9
    assert data["predicted"] is None
    assert data["check"]["all_zero"] is True
    assert len(data["system"]) == 9


@pytest.mark.parametrize(
    "args, error",
    [
        (["system", "mefm", "4"], "UnsupportedOrder"),
        (["system", "mefm", "0"], "UnsupportedOrder"),
        (["system", "sg", "--check", "mefm.case13"], "ValueError"),
        (["system", "sg", "--check", "case1"], "ValueError"),
        (["system", "sg", "--check", "sg.case7"], "UnknownFamily"),
    ],
)
def test_system_errors(invoke, args, error):
    result = invoke(*args)
    assert result.exit_code == 2
    assert error in result.output
