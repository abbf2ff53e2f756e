"""Unit tests for foliamod.numkernel.linalg."""

import numpy as np
import pytest

from foliamod.numkernel.linalg import CMatrix, as_array, eig2, singular_values


class TestCMatrix:
    def test_round_trip(self) -> None:
        a = np.array([[1, 2j], [3, 4]])
        m = CMatrix.from_array(a)
        assert m.rows == 2 and m.cols == 2
        assert m[0, 1] == 2j
        np.testing.assert_array_equal(m.to_array(), a)

    def test_wrong_entry_count(self) -> None:
        with pytest.raises(ValueError):
            CMatrix(2, 2, (1, 2, 3))

    def test_non_finite_rejected(self) -> None:
        with pytest.raises(ValueError):
            CMatrix(1, 1, (float("nan"),))

    def test_as_array_accepts_nested_lists(self) -> None:
        assert as_array([[1, 0], [0, 1]]).dtype == complex


class TestEig2:
    def test_diagonal_sorted(self) -> None:
        assert eig2([[3, 0], [0, -1]]) == (-1, 3)

    def test_matches_numpy(self) -> None:
        a = np.array([[1 + 1j, 2], [-0.5, 3 - 2j]])
        ours = sorted(eig2(a), key=lambda z: (z.real, z.imag))
        ref = sorted(np.linalg.eigvals(a), key=lambda z: (z.real, z.imag))
        for x, y in zip(ours, ref):
            assert x == pytest.approx(y, abs=1e-12)

    def test_tangent_selects_second_eigenvalue(self) -> None:
        # eigenvector (1, 0) has eigenvalue 2, (1, 1) has eigenvalue 5
        a = [[2, 3], [0, 5]]
        lam, mu = eig2(a, tangent=(1, 0))
        assert mu == pytest.approx(2)
        assert lam == pytest.approx(5)

    def test_rejects_non_square(self) -> None:
        with pytest.raises(ValueError):
            eig2(np.ones((2, 3)))


class TestSingularValues:
    def test_descending(self) -> None:
        s = singular_values(np.diag([1.0, 5.0, 3.0]))
        np.testing.assert_allclose(s, [5.0, 3.0, 1.0])

    def test_unitary_invariance(self) -> None:
        rng = np.random.default_rng(11)
        a = rng.standard_normal((7, 6)) + 1j * rng.standard_normal((7, 6))
        q1, _ = np.linalg.qr(rng.standard_normal((7, 7)) + 1j * rng.standard_normal((7, 7)))
        q2, _ = np.linalg.qr(rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6)))
        s = singular_values(a)
        np.testing.assert_allclose(singular_values(q1 @ a @ q2), s, rtol=0, atol=1e-10 * s[0])

    def test_constructed_spectrum(self) -> None:
        rng = np.random.default_rng(5)
        u, _ = np.linalg.qr(rng.standard_normal((7, 6)) + 1j * rng.standard_normal((7, 6)))
        w, _ = np.linalg.qr(rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6)))
        a = u @ np.diag([3.0, 2.0, 1.0, 0.0, 0.0, 0.0]) @ w.conj().T
        np.testing.assert_allclose(
            singular_values(a), [3.0, 2.0, 1.0, 0.0, 0.0, 0.0], rtol=0, atol=1e-12
        )
