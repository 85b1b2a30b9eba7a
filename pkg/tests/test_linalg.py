import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abrealism.linalg import (
    ConvergenceError,
    DensityMatrix,
    NotHermitianError,
    hermitian_eigendecompose,
    partial_trace,
    tensor,
)
from abrealism.sampling import random_density_matrix, random_ket


def random_hermitian(d, rng, scale=1.0):
    X = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return scale * (X + X.conj().T)


def test_identity_spectrum():
    w, V = hermitian_eigendecompose(np.eye(2))
    assert np.allclose(w, [1, 1])
    assert np.allclose(V.conj().T @ V, np.eye(2))


def test_pauli_x_spectrum():
    w, V = hermitian_eigendecompose([[0, 1], [1, 0]])
    assert np.allclose(w, [1, -1], atol=1e-14)
    assert np.allclose(V @ np.diag(w) @ V.conj().T, [[0, 1], [1, 0]])


def test_random_14_reconstruction():
    H = random_hermitian(14, np.random.default_rng(14))
    w, V = hermitian_eigendecompose(H)
    assert np.abs(V @ np.diag(w) @ V.conj().T - H).max() <= 1e-10
    assert np.abs(V.conj().T @ V - np.eye(14)).max() <= 1e-10
    assert np.all(np.diff(w) <= 0)
    assert np.allclose(w, np.sort(np.linalg.eigvalsh(H))[::-1], atol=1e-10)


@settings(max_examples=60, deadline=None)
@given(d=st.integers(1, 26), seed=st.integers(0, 2**32 - 1), log_scale=st.floats(-6, 6))
def test_eigendecompose_property(d, seed, log_scale):
    H = random_hermitian(d, np.random.default_rng(seed), 10.0**log_scale)
    w, V = hermitian_eigendecompose(H)
    scale = max(1.0, np.abs(H).max())
    assert np.abs(V @ np.diag(w) @ V.conj().T - H).max() <= 1e-10 * scale
    assert np.abs(V.conj().T @ V - np.eye(d)).max() <= 1e-10
    assert np.all(np.diff(w) <= 0)


def test_degenerate_and_diagonal_inputs():
    D = np.diag([3.0, 1.0, 3.0, -2.0]).astype(complex)
    w, V = hermitian_eigendecompose(D)
    assert np.allclose(w, [3, 3, 1, -2])
    assert np.allclose(V @ np.diag(w) @ V.conj().T, D)


def test_non_hermitian_names_entry_pair():
    M = np.eye(3, dtype=complex)
    M[0, 2] = 0.5
    with pytest.raises(NotHermitianError, match=r"M\[0,2\]|M\[2,0\]"):
        hermitian_eigendecompose(M)


def test_sweep_cap_reports_residual():
    H = random_hermitian(8, np.random.default_rng(0))
    with pytest.raises(ConvergenceError) as info:
        hermitian_eigendecompose(H, max_sweeps=1)
    assert info.value.off_norm > 0
    assert "off-diagonal" in str(info.value)


def test_density_matrix_validation():
    with pytest.raises(ValueError, match="trace"):
        DensityMatrix(np.eye(2))
    with pytest.raises(NotHermitianError):
        DensityMatrix(np.array([[0.5, 0.1], [0.2, 0.5]]))
    with pytest.raises(ValueError, match="split"):
        DensityMatrix(np.eye(6) / 6, (4, 2))
    rho = DensityMatrix.maximally_mixed(6, (2, 3))
    with pytest.raises(ValueError):
        rho.matrix[0, 0] = 1.0


def test_partial_trace_product_state():
    rng = np.random.default_rng(3)
    a = random_density_matrix(2, rng).matrix
    b = random_density_matrix(3, rng).matrix
    rho = DensityMatrix(tensor(a, b), (2, 3))
    assert np.abs(partial_trace(rho, "S").matrix - a).max() <= 1e-12
    assert np.abs(partial_trace(rho, "R").matrix - b).max() <= 1e-12


def test_partial_trace_bell_state():
    bell = DensityMatrix.from_ket(np.array([1, 0, 0, 1]) / np.sqrt(2), (2, 2))
    assert np.allclose(partial_trace(bell).matrix, np.eye(2) / 2, atol=1e-15)


def test_partial_trace_requires_split():
    with pytest.raises(ValueError, match="split"):
        partial_trace(DensityMatrix.maximally_mixed(4))
    with pytest.raises(ValueError):
        partial_trace(DensityMatrix.maximally_mixed(4, (2, 2)), keep="X")


@settings(max_examples=40, deadline=None)
@given(d_s=st.integers(1, 4), d_r=st.integers(1, 5), seed=st.integers(0, 2**32 - 1))
def test_partial_trace_is_a_state(d_s, d_r, seed):
    rng = np.random.default_rng(seed)
    rho = random_density_matrix(d_s * d_r, rng, split=(d_s, d_r))
    red = partial_trace(rho, "S")
    assert red.dim == d_s
    assert np.linalg.eigvalsh(red.matrix).min() >= -1e-9
    # tr_S(X_S ⊗ 1 rho) = tr(X_S rho_S)
    X = random_hermitian(d_s, rng)
    lhs = np.trace(np.kron(X, np.eye(d_r)) @ rho.matrix)
    assert abs(lhs - np.trace(X @ red.matrix)) <= 1e-10


def test_tensor_trivial_and_mixed_product():
    rng = np.random.default_rng(9)
    A = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    assert np.array_equal(tensor(A, np.eye(1)), A)
    assert np.array_equal(tensor(np.eye(2), np.eye(3)), np.eye(6))
    B, C, D = (rng.normal(size=(3, 3)) for _ in range(3))
    assert np.abs(tensor(A, B) @ tensor(C, D) - tensor(A @ C, B @ D)).max() <= 1e-10
    assert abs(np.trace(tensor(A, B)) - np.trace(A) * np.trace(B)) <= 1e-10


def test_from_ket_checks_norm():
    with pytest.raises(ValueError, match="norm"):
        DensityMatrix.from_ket([1.0, 1.0])
    psi = random_ket(5, np.random.default_rng(1))
    assert DensityMatrix.from_ket(psi).is_pure()
