from __future__ import annotations

import json

import numpy as np
import pytest

from quantinfo import bloch_state, cq_ensemble, ensemble_to_json, pure_state
from quantinfo.cli import run


def cli(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def cli_json(capsys, *argv):
    code, out, err = cli(capsys, *argv, "--json")
    payload = json.loads(out)
    return code, payload, err


@pytest.fixture()
def ensemble_file(tmp_path):
    ens = cq_ensemble([0.5, 0.5], [pure_state([1, 0]), pure_state([1, 1])], ("0", "+"))
    path = tmp_path / "zero_plus.json"
    path.write_text(json.dumps(ensemble_to_json(ens)))
    return str(path)


class TestExitCodes:
    def test_success_is_zero(self, capsys):
        code, out, _ = cli(capsys, "entropy", "--dist", "0.5,0.5")
        assert code == 0
        assert "H = 1.000000 bits" in out

    def test_validation_failure_is_one(self, capsys):
        code, out, err = cli(capsys, "entropy", "--dist", "0.5,0.6")
        assert code == 1
        assert out == ""
        assert err.startswith("error:")

    def test_usage_error_is_two(self, capsys):
        code, _, _ = cli(capsys, "no-such-command")
        assert code == 2
        code, _, _ = cli(capsys, "entropy")
        assert code == 2

    def test_help_is_zero(self, capsys):
        code, out, _ = cli(capsys, "--help")
        assert code == 0
        assert "subcommand" in out or "usage" in out


class TestDistributionWindow:
    def test_small_drift_normalized_with_warning(self, capsys):
        code, payload, err = cli_json(capsys, "entropy", "--dist", "0.5000001,0.5")
        assert code == 0
        assert "warning: normalizing" in err
        assert sum(payload["dist"]) == pytest.approx(1.0, abs=1e-15)

    def test_exact_input_gets_no_warning(self, capsys):
        _, _, err = cli(capsys, "entropy", "--dist", "0.5,0.5")
        assert err == ""

    def test_large_drift_rejected(self, capsys):
        code, _, err = cli(capsys, "entropy", "--dist", "0.5,0.6")
        assert code == 1
        assert "away from 1" in err

    def test_unparseable_rejected(self, capsys):
        code, _, _ = cli(capsys, "entropy", "--dist", "0.5,zebra")
        assert code == 1


class TestScalarCommands:
    def test_entropy_worked_example(self, capsys):
        code, payload, _ = cli_json(
            capsys, "entropy", "--dist", "0.5,0.3333333333333333,0.1666666666666667")
        assert code == 0
        assert payload["entropy_bits"] == pytest.approx(1.459148, abs=1e-5)
        assert payload["command"] == "entropy"
        assert payload["tol"] == 1e-9

    def test_tol_is_echoed(self, capsys):
        _, payload, _ = cli_json(capsys, "entropy", "--dist", "0.5,0.5", "--tol", "1e-6")
        assert payload["tol"] == 1e-6

    def test_bzinfo(self, capsys):
        code, payload, _ = cli_json(capsys, "bzinfo", "--dist", "0.65,0.35")
        assert code == 0
        assert payload["information"] == pytest.approx(0.045, abs=1e-12)

    def test_bzinfo_norm(self, capsys):
        _, payload, _ = cli_json(capsys, "bzinfo", "--dist", "0.65,0.35", "--norm", "2")
        assert payload["information"] == pytest.approx(0.09, abs=1e-12)
        assert payload["norm"] == 2.0

    def test_grouping(self, capsys):
        code, payload, _ = cli_json(
            capsys, "grouping", "--dist", "0.5,0.3333333333333333,0.1666666666666667")
        assert code == 0
        assert payload["entropy_bits"] == pytest.approx(1.459148, abs=1e-5)
        assert abs(payload["residual"]) < 1e-9


class TestStateCommands:
    def test_itot_bloch(self, capsys):
        code, payload, _ = cli_json(capsys, "itot", "--bloch", "0.3,0,0.4")
        assert code == 0
        assert payload["purity"] == pytest.approx(0.625, abs=1e-12)
        assert payload["total_information"] == pytest.approx(0.125, abs=1e-12)
        assert payload["state"]["dim"] == 2

    def test_itot_state_file(self, capsys, tmp_path):
        from quantinfo import state_to_json

        path = tmp_path / "state.json"
        path.write_text(json.dumps(state_to_json(np.eye(3) / 3)))
        code, payload, _ = cli_json(capsys, "itot", "--state", str(path))
        assert code == 0
        assert payload["total_information"] == pytest.approx(0.0, abs=1e-12)

    def test_itot_missing_file(self, capsys):
        code, _, err = cli(capsys, "itot", "--state", "/nonexistent/state.json")
        assert code == 1
        assert "error:" in err

    def test_itot_requires_exactly_one_source(self, capsys):
        code, _, _ = cli(capsys, "itot", "--bloch", "0,0,0", "--state", "x.json")
        assert code == 2


class TestMubCommands:
    def test_verify_dim_seven(self, capsys):
        code, payload, _ = cli_json(capsys, "mub-verify", "--dim", "7")
        assert code == 0
        assert payload["bases"] == 8
        assert payload["unbiasedness"]["passed"]
        assert payload["hyperplane_orthogonality"]["passed"]
        assert payload["unbiasedness"]["max_deviation"] < 1e-12

    def test_verify_text_mode(self, capsys):
        code, out, _ = cli(capsys, "mub-verify", "--dim", "3")
        assert code == 0
        assert out.count("pass") == 2

    def test_verify_composite_dim_fails(self, capsys):
        code, _, err = cli(capsys, "mub-verify", "--dim", "6")
        assert code == 1
        assert "odd prime" in err

    def test_mub_sum_bloch(self, capsys):
        code, payload, _ = cli_json(capsys, "mub-sum", "--bloch", "0.3,0,0.4")
        assert code == 0
        assert payload["per_basis"] == pytest.approx([0.08, 0.045, 0.0], abs=1e-12)
        assert payload["sum"] == pytest.approx(0.125, abs=1e-12)
        assert payload["difference"] < 1e-12

    def test_reconstruct_round_trip(self, capsys):
        code, payload, _ = cli_json(
            capsys, "reconstruct", "--probs", "0.7,0.3;0.65,0.35;0.5,0.5")
        assert code == 0
        rebuilt = np.array([[complex(re, im) for re, im in row]
                            for row in payload["state"]["matrix"]])
        assert np.allclose(rebuilt, bloch_state([0.3, 0.0, 0.4]), atol=1e-12)
        assert payload["smallest_eigenvalue"] == pytest.approx(0.25, abs=1e-12)

    def test_reconstruct_flags_indefinite_statistics(self, capsys):
        code, payload, _ = cli_json(
            capsys, "reconstruct", "--probs", "1,0;0.55,0.45;0.55,0.45")
        assert code == 0
        assert payload["smallest_eigenvalue"] < -1e-6

    def test_reconstruct_needs_several_groups(self, capsys):
        code, _, _ = cli(capsys, "reconstruct", "--probs", "0.7,0.3")
        assert code == 1


class TestChannelCommands:
    def test_holevo(self, capsys, ensemble_file):
        code, payload, _ = cli_json(capsys, "holevo", "--ensemble", ensemble_file)
        assert code == 0
        assert payload["letters"] == ["0", "+"]
        assert payload["holevo_chi"] == pytest.approx(0.600878, abs=1e-4)
        assert payload["specification_information"] == pytest.approx(1.0, abs=1e-12)

    def test_accessible(self, capsys, ensemble_file):
        code, payload, _ = cli_json(capsys, "accessible", "--ensemble", ensemble_file)
        assert code == 0
        assert payload["method"] == "grid"
        assert payload["accessible_information"] == pytest.approx(0.39912, abs=1e-3)
        assert payload["gap"] > 0.19

    def test_accessible_repeat_runs_are_identical(self, capsys, ensemble_file):
        _, first, _ = cli(capsys, "accessible", "--ensemble", ensemble_file, "--json")
        _, second, _ = cli(capsys, "accessible", "--ensemble", ensemble_file, "--json")
        assert first == second

    def test_missing_ensemble_file(self, capsys):
        code, _, err = cli(capsys, "holevo", "--ensemble", "/nonexistent.json")
        assert code == 1
        assert "cannot read" in err

    def test_wrongbasis(self, capsys):
        code, payload, _ = cli_json(
            capsys, "wrongbasis", "--theta", str(np.pi / 3))
        assert code == 0
        assert payload["mutual_information"] == pytest.approx(0.188722, abs=1e-5)
        assert payload["conditional_entropy"] == pytest.approx(0.811278, abs=1e-5)
        assert np.allclose(payload["joint"], [[0.375, 0.125], [0.125, 0.375]], atol=1e-12)


class TestCodingCommands:
    def test_coding_census(self, capsys):
        code, payload, _ = cli_json(
            capsys, "coding", "--dist", "0.8,0.2", "--block", "10", "--epsilon", "0.1")
        assert code == 0
        assert payload["count"] == 45
        assert payload["rate"] == pytest.approx(0.549, abs=1e-3)

    def test_coding_bad_block(self, capsys):
        code, _, _ = cli(capsys, "coding", "--dist", "0.8,0.2",
                         "--block", "0", "--epsilon", "0.1")
        assert code == 1

    def test_questions_single_symbols(self, capsys):
        code, payload, _ = cli_json(capsys, "questions", "--dist", "0.5,0.25,0.25")
        assert code == 0
        assert payload["lengths"] == [1, 2, 2]
        assert payload["average_length"] == pytest.approx(1.5, abs=1e-12)
        assert payload["kraft_sum"] == pytest.approx(1.0, abs=1e-12)
        assert sorted(payload["codewords"], key=len) == ["0", "10", "11"]

    def test_questions_block_rate(self, capsys):
        code, payload, _ = cli_json(
            capsys, "questions", "--dist", "0.9,0.1", "--block", "2")
        assert code == 0
        assert payload["rate"] == pytest.approx(0.645, abs=1e-12)

    def test_questions_bad_block(self, capsys):
        code, _, _ = cli(capsys, "questions", "--dist", "0.5,0.5", "--block", "0")
        assert code == 1

    def test_majorize(self, capsys):
        code, payload, _ = cli_json(
            capsys, "majorize", "--p", "0.5,0.5", "--q", "0.25,0.25,0.25,0.25")
        assert code == 0
        assert payload["p_majorizes_q"] is True
        assert payload["q_majorizes_p"] is False


class TestEntangleCommand:
    def test_bell_state_from_observables(self, capsys):
        code, payload, _ = cli_json(
            capsys, "entangle", "--obs", "xx,yy", "--answers", "1,-1")
        assert code == 0
        assert payload["individual"] == pytest.approx(0.0, abs=1e-12)
        assert payload["correlation"] == pytest.approx(1.5, abs=1e-12)

    def test_state_file(self, capsys, tmp_path):
        from quantinfo import state_to_json

        path = tmp_path / "mixed.json"
        path.write_text(json.dumps(state_to_json(np.eye(4) / 4)))
        code, payload, _ = cli_json(capsys, "entangle", "--state", str(path))
        assert code == 0
        assert payload["individual"] == pytest.approx(0.0, abs=1e-12)
        assert payload["correlation"] == pytest.approx(0.0, abs=1e-12)

    def test_obs_needs_answers(self, capsys):
        code, _, err = cli(capsys, "entangle", "--obs", "xx,yy")
        assert code == 1
        assert "requires --answers" in err

    def test_single_qubit_state_rejected(self, capsys, tmp_path):
        from quantinfo import state_to_json

        path = tmp_path / "qubit.json"
        path.write_text(json.dumps(state_to_json(np.eye(2) / 2)))
        code, _, _ = cli(capsys, "entangle", "--state", str(path))
        assert code == 1

    def test_obs_and_state_are_exclusive(self, capsys):
        code, _, _ = cli(capsys, "entangle", "--obs", "xx,yy",
                         "--state", "x.json", "--answers", "1,1")
        assert code == 2


class TestSelftestCommand:
    def test_all_checks_pass(self, capsys):
        code, out, _ = cli(capsys, "selftest")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[-1].endswith("checks passed")
        check_lines = lines[:-1]
        assert len(check_lines) >= 11
        assert all(line.startswith("PASS") for line in check_lines)

    def test_json_payload(self, capsys):
        code, payload, _ = cli_json(capsys, "selftest")
        assert code == 0
        assert payload["passed"] is True
        assert len(payload["checks"]) >= 11
