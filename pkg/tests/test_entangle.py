from __future__ import annotations

import numpy as np
import pytest

from quantinfo import (
    InfoSplit,
    ValidationError,
    correlation_questions,
    hs_distance,
    individual_questions,
    info_split,
    joint_eigenstate,
    pauli_product,
    proposition_information,
    pure_state,
    total_information,
)

BELL_PHI_PLUS = pure_state(np.array([1, 0, 0, 1]) / np.sqrt(2))
PLUS_PLUS = pure_state(np.array([1, 1, 1, 1]) / 2)


class TestPauliProduct:
    def test_xx_spectrum(self):
        values = np.linalg.eigvalsh(pauli_product("x", "x"))
        assert values == pytest.approx([-1, -1, 1, 1], abs=1e-12)

    def test_identity_component(self):
        op = pauli_product("z", "1")
        assert np.allclose(op, np.diag([1, 1, -1, -1]), atol=1e-12)

    def test_bad_label(self):
        with pytest.raises(ValidationError):
            pauli_product("x", "w")


class TestJointEigenstate:
    def test_xx_yy_picks_a_bell_state(self):
        rho = joint_eigenstate(pauli_product("x", "x"), pauli_product("y", "y"), (1, -1))
        assert hs_distance(rho, BELL_PHI_PLUS) < 1e-9

    def test_xx_x1_picks_the_product_state(self):
        rho = joint_eigenstate(pauli_product("x", "x"), pauli_product("x", "1"), (1, 1))
        assert hs_distance(rho, PLUS_PLUS) < 1e-9

    def test_all_four_bell_states_are_reachable(self):
        xx = pauli_product("x", "x")
        zz = pauli_product("z", "z")
        seen = []
        for sx in (1, -1):
            for sz in (1, -1):
                rho = joint_eigenstate(xx, zz, (sx, sz))
                assert total_information(rho) == pytest.approx(0.75, abs=1e-12)
                seen.append(rho)
        for i in range(4):
            for j in range(i + 1, 4):
                assert hs_distance(seen[i], seen[j]) > 0.5

    def test_noncommuting_pair_rejected(self):
        with pytest.raises(ValidationError, match="commute"):
            joint_eigenstate(pauli_product("x", "1"), pauli_product("z", "1"), (1, 1))

    def test_degenerate_answers_name_the_dimension(self):
        with pytest.raises(ValidationError, match="dimension 2"):
            joint_eigenstate(pauli_product("x", "x"), pauli_product("1", "1"), (1, 1))

    def test_absent_eigenvalue_rejected(self):
        with pytest.raises(ValidationError):
            joint_eigenstate(pauli_product("x", "x"), pauli_product("y", "y"), (2, 1))
        with pytest.raises(ValidationError, match="on that eigenspace"):
            # 3 is an eigenvalue of the second observable, just not on the
            # first observable's +1 eigenspace
            joint_eigenstate(np.diag([1.0, 1.0, -1.0, -1.0]),
                             np.diag([1.0, 2.0, 3.0, 4.0]), (1, 3))

    def test_xx_yy_plus_plus_is_the_triplet_bell_state(self):
        rho = joint_eigenstate(pauli_product("x", "x"), pauli_product("y", "y"), (1, 1))
        psi_plus = pure_state(np.array([0, 1, 1, 0]) / np.sqrt(2))
        assert hs_distance(rho, psi_plus) < 1e-9

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValidationError):
            joint_eigenstate(pauli_product("x", "x"), np.eye(2), (1, 1))


class TestPropositionInformation:
    def test_certain_answer(self):
        rho = pure_state([1, 0])
        q = np.diag([1.0, 0.0])
        assert proposition_information(rho, q) == pytest.approx(0.5, abs=1e-12)
        assert proposition_information(rho, np.diag([0.0, 1.0])) == pytest.approx(
            0.5, abs=1e-12)

    def test_coin_flip_answer(self):
        rho = pure_state(np.array([1, 1]) / np.sqrt(2))
        assert proposition_information(rho, np.diag([1.0, 0.0])) == pytest.approx(
            0.0, abs=1e-15)

    def test_intermediate_answer(self):
        rho = np.diag([0.8, 0.2]).astype(complex)
        assert proposition_information(rho, np.diag([1.0, 0.0])) == pytest.approx(
            2 * 0.3 ** 2, abs=1e-12)

    def test_non_projector_rejected(self):
        with pytest.raises(ValidationError):
            proposition_information(pure_state([1, 0]), np.diag([0.5, 0.5]))

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValidationError):
            proposition_information(BELL_PHI_PLUS, np.diag([1.0, 0.0]))


class TestQuestionSets:
    def test_individual_set(self):
        questions = individual_questions()
        assert len(questions) == 6
        labels = [label for label, _ in questions]
        assert "spin 1 up along x" in labels
        assert "spin 2 up along z" in labels
        for _, q in questions:
            assert np.allclose(q @ q, q, atol=1e-12)
            assert np.trace(q).real == pytest.approx(2.0, abs=1e-12)

    def test_correlation_set(self):
        questions = correlation_questions()
        assert len(questions) == 3
        for _, q in questions:
            assert np.allclose(q @ q, q, atol=1e-12)
            assert np.trace(q).real == pytest.approx(2.0, abs=1e-12)

    def test_correlation_projector_contains_bell_state(self):
        for _, q in correlation_questions():
            overlap = np.einsum("ij,ji->", BELL_PHI_PLUS, q).real
            assert overlap == pytest.approx(1.0, abs=1e-12) or overlap == pytest.approx(
                0.0, abs=1e-12)


class TestInfoSplit:
    def test_bell_state_is_all_correlation(self):
        split = info_split(BELL_PHI_PLUS)
        assert isinstance(split, InfoSplit)
        assert split.individual == pytest.approx(0.0, abs=1e-12)
        assert split.correlation == pytest.approx(1.5, abs=1e-12)
        for _, value in split.correlation_terms:
            assert value == pytest.approx(0.5, abs=1e-12)

    def test_product_state_favors_individual_questions(self):
        split = info_split(PLUS_PLUS)
        assert split.individual == pytest.approx(1.0, abs=1e-12)
        assert split.correlation == pytest.approx(0.5, abs=1e-12)

    def test_maximally_mixed_state_answers_nothing(self):
        split = info_split(np.eye(4) / 4)
        assert split.individual == pytest.approx(0.0, abs=1e-15)
        assert split.correlation == pytest.approx(0.0, abs=1e-15)

    def test_term_labels_carry_the_axes(self):
        split = info_split(BELL_PHI_PLUS)
        assert len(split.individual_terms) == 6
        assert len(split.correlation_terms) == 3
        assert dict(split.correlation_terms).keys() == {
            "spins agree along x", "spins agree along y", "spins agree along z"}

    def test_wrong_dimension_rejected(self):
        with pytest.raises(ValidationError):
            info_split(np.eye(2) / 2)
