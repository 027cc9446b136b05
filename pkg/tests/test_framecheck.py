import math
from fractions import Fraction

import numpy as np
import pytest

from movingframes import (augment_with_normal, build_minimal_balanced,
                          check_tight, enumerate_full, frame_operator,
                          is_balanced, make_operator, operator_images,
                          probe_points, reconstruct, s3_basis,
                          verify_moving_funtf, witness_cross_term,
                          witness_unbalanced)
from movingframes.operators import OperatorSet
from movingframes.sphere import project_tangent, sample_sphere

MIN2 = build_minimal_balanced(2)


class TestFrameOperator:
    def test_orthonormal_basis(self):
        assert np.allclose(frame_operator(np.eye(2)), np.eye(2))

    def test_mercedes_benz(self):
        angles = np.deg2rad([90.0, 210.0, 330.0])
        vectors = np.column_stack([np.cos(angles), np.sin(angles)])
        assert np.allclose(frame_operator(vectors), 1.5 * np.eye(2), atol=1e-15)

    def test_repeated_vector_is_not_a_frame(self):
        s = frame_operator([[1.0, 0.0], [1.0, 0.0]])
        assert np.allclose(s, np.diag([2.0, 0.0]))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            frame_operator(np.empty((0, 3)))


class TestCheckTight:
    def test_orthonormal_basis(self):
        report = check_tight(np.eye(4))
        assert report.tight
        assert report.frame_constant == pytest.approx(1.0)
        assert report.theoretical_constant == pytest.approx(1.0)

    def test_augmented_minimal_set_on_s3(self):
        a = sample_sphere(4, 1, seed=7)[0]
        report = check_tight(augment_with_normal(MIN2, a), expected_constant=2.0)
        assert report.tight
        assert report.frame_constant == pytest.approx(2.0, abs=1e-12)

    def test_redundant_but_not_tight(self):
        vectors = np.array([[1.0, 0.0], [0.0, 1.0], [1 / math.sqrt(2), 1 / math.sqrt(2)]])
        report = check_tight(vectors)
        assert not report.tight
        assert report.max_offdiag == pytest.approx(0.5)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            check_tight([])


class TestAugmentWithNormal:
    def test_circle_field_gives_orthonormal_basis(self):
        from movingframes import s1_basis
        augmented = augment_with_normal(s1_basis(), np.array([1.0, 0.0]))
        assert np.allclose(augmented, [[1.0, 0.0], [0.0, 1.0]])

    def test_minimal_n2_at_e1(self):
        augmented = augment_with_normal(MIN2, np.array([1.0, 0.0, 0.0, 0.0]))
        assert augmented.shape == (7, 4)
        assert np.allclose(augmented[0], [math.sqrt(2), 0.0, 0.0, 0.0])
        assert np.allclose(np.linalg.norm(augmented[1:], axis=1), 1.0)

    def test_balanced_set_is_tight_after_augmentation(self):
        a_set = build_minimal_balanced(3)
        expected = len(a_set) / 5
        for seed in range(5):
            a = sample_sphere(6, 1, seed)[0]
            s = frame_operator(augment_with_normal(a_set, a))
            assert np.allclose(s, expected * np.eye(6), atol=1e-12)

    def test_rejects_non_unit_point(self):
        with pytest.raises(ValueError, match="unit"):
            augment_with_normal(MIN2, np.array([1.0, 1.0, 0.0, 0.0]))

    def test_rejects_dimension_mismatch(self):
        with pytest.raises(ValueError, match="length"):
            augment_with_normal(MIN2, np.array([1.0, 0.0]))


class TestVerifyMovingFuntf:
    def test_s3_preset_is_moving_orthonormal_basis(self):
        report = verify_moving_funtf(s3_basis(), num_samples=50, seed=3)
        assert report.tight
        assert report.theoretical_constant == pytest.approx(1.0)
        assert report.frame_constant == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_minimal_sets(self, n):
        report = verify_moving_funtf(build_minimal_balanced(n), num_samples=20, seed=n)
        assert report.tight
        assert report.theoretical_constant == pytest.approx(2 ** (n - 1))

    def test_full_set_n2(self):
        report = verify_moving_funtf(enumerate_full(2), num_samples=20, seed=1)
        assert report.tight
        assert report.theoretical_constant == pytest.approx(4.0)

    def test_unbalanced_set_fails_at_probe(self):
        clipped = OperatorSet(4, MIN2.members[:-1])
        report = verify_moving_funtf(clipped, num_samples=5, seed=0)
        assert not report.tight
        assert report.max_offdiag > 0.1
        assert report.points_checked == 11  # 6 probes + 5 samples


class TestReconstruct:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_round_trip(self, n):
        a_set = build_minimal_balanced(n)
        d = 2 * n
        constant = len(a_set) / (d - 1)
        rng = np.random.default_rng(n)
        a = rng.standard_normal(d)
        a /= np.linalg.norm(a)
        x = project_tangent(a, rng.standard_normal(d))
        coeffs = operator_images(a_set, a) @ x
        rebuilt = reconstruct(a_set, a, coeffs, constant)
        assert np.linalg.norm(rebuilt - x) <= 1e-12 * np.linalg.norm(x)

    def test_zero_coefficients(self):
        a = sample_sphere(4, 1, seed=0)[0]
        assert np.allclose(reconstruct(MIN2, a, np.zeros(6), 2.0), np.zeros(4))

    def test_single_erasure_error_is_bounded(self):
        constant = 2.0
        rng = np.random.default_rng(42)
        a = rng.standard_normal(4)
        a /= np.linalg.norm(a)
        x = project_tangent(a, rng.standard_normal(4))
        coeffs = operator_images(MIN2, a) @ x
        erased = coeffs.copy()
        erased[3] = 0.0
        error = np.linalg.norm(reconstruct(MIN2, a, erased, constant) - x)
        assert error == pytest.approx(abs(coeffs[3]) / constant, abs=1e-12)

    def test_rejects_wrong_count(self):
        a = sample_sphere(4, 1, seed=0)[0]
        with pytest.raises(ValueError, match="coefficients"):
            reconstruct(MIN2, a, np.zeros(5), 2.0)

    def test_rejects_nonpositive_constant(self):
        a = sample_sphere(4, 1, seed=0)[0]
        with pytest.raises(ValueError, match="positive"):
            reconstruct(MIN2, a, np.zeros(6), 0.0)


class TestWitnessUnbalanced:
    def test_minimal_minus_one(self):
        keep = [u for u in MIN2 if u.pairing[0] != 2]
        removed_one = [u for u in MIN2 if u.pairing[0] == 2][1:]
        clipped = OperatorSet(4, tuple(keep + removed_one))
        report = is_balanced(clipped)
        witness = witness_unbalanced(clipped, report)
        assert witness.probe_pair == (1, 2)
        assert witness.defect == Fraction(1, 3)
        expected = np.zeros(4)
        expected[0] = expected[1] = 1 / math.sqrt(2)
        assert np.allclose(witness.point, expected)
        assert witness_cross_term(clipped, witness) == pytest.approx(1 / 3, abs=1e-12)

    def test_single_operator(self):
        single = OperatorSet.from_members([make_operator(4, (3, 4, 1, 2), (1, 1, -1, -1))])
        report = is_balanced(single)
        witness = witness_unbalanced(single, report)
        assert witness.probe_pair == (1, 2)
        assert witness.defect == Fraction(1, 6)
        assert witness_cross_term(single, witness) == pytest.approx(1 / 6, abs=1e-12)

    def test_condition_ii_witness(self):
        # flipping signs inside one member keeps every pair count (condition i)
        # but skews a sign slice, so only condition ii fails
        from movingframes import sign_flip_bijection
        members = list(MIN2.members)
        idx = next(i for i, u in enumerate(members) if u.pairing == (3, 4, 1, 2))
        members[idx] = sign_flip_bijection(members[idx], 1)
        skewed = OperatorSet(4, tuple(members))
        report = is_balanced(skewed)
        assert not report.balanced
        assert not report.condition_i_failures
        assert report.condition_ii_failures
        witness = witness_unbalanced(skewed, report)
        p, q, r, s, plus, minus = min(report.condition_ii_failures)
        assert witness.probe_pair == (r, s)
        assert witness.defect == Fraction(plus - minus, 2)
        assert witness_cross_term(skewed, witness) == pytest.approx(
            float(witness.defect), abs=1e-12)

    def test_rejects_balanced_report(self):
        report = is_balanced(MIN2)
        with pytest.raises(ValueError, match="balanced"):
            witness_unbalanced(MIN2, report)


class TestProbePoints:
    def test_count_and_shape(self):
        pts = probe_points(4)
        assert pts.shape == (6, 4)
        assert np.allclose(np.linalg.norm(pts, axis=1), 1.0)
        assert np.all(np.sum(pts > 0, axis=1) == 2)
