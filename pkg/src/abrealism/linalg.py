"""Dense complex-matrix primitives for small quantum systems.

Everything here works on plain ``numpy`` arrays of dtype ``complex128``.
States are wrapped in :class:`DensityMatrix`, which validates on
construction and keeps an optional bipartite split ``(d_S, d_R)``.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numba
import numpy as np

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100


class NotHermitianError(ValueError):
    """Raised when a matrix that must be Hermitian is not."""


class ConvergenceError(RuntimeError):
    """Raised when the Jacobi sweeps hit the sweep cap."""

    def __init__(self, sweeps, off_norm):
        self.sweeps = sweeps
        self.off_norm = off_norm
        super().__init__(
            f"Jacobi eigensolver did not converge after {sweeps} sweeps "
            f"(off-diagonal Frobenius norm {off_norm:.3e})"
        )


def as_matrix(M) -> np.ndarray:
    A = np.asarray(M, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    return A


def hermiticity_defect(M) -> Tuple[float, Tuple[int, int]]:
    """Largest ``|M[i, j] - conj(M[j, i])|`` and the index pair where it occurs."""
    A = as_matrix(M)
    diff = np.abs(A - A.conj().T)
    i, j = np.unravel_index(np.argmax(diff), diff.shape)
    return float(diff[i, j]), (int(i), int(j))


def check_hermitian(M, tol=HERMITIAN_TOL) -> np.ndarray:
    A = as_matrix(M)
    defect, (i, j) = hermiticity_defect(A)
    if defect > tol:
        raise NotHermitianError(
            f"matrix is not Hermitian: |M[{i},{j}] - conj(M[{j},{i}])| = "
            f"{defect:.3e} exceeds {tol:.0e}"
        )
    return A


@numba.njit(cache=True)
def _jacobi_sweeps(A, V, tol, max_sweeps):
    # Cyclic-by-row complex Jacobi. A is overwritten with a diagonal matrix,
    # V accumulates the rotations. Returns (sweeps used or -1, off-norm).
    n = A.shape[0]
    off = 0.0
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += A[i, j].real ** 2 + A[i, j].imag ** 2
        off = np.sqrt(off)
        if off < tol:
            return sweep, off
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = A[p, q]
                r = abs(b)
                if r == 0.0:
                    continue
                theta = (A[q, q].real - A[p, p].real) / (2.0 * r)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                elif theta >= 0.0:
                    t = 1.0 / (theta + np.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # U = diag(1, conj(b)/|b|) @ [[c, s], [-s, c]]
                ph = np.conj(b / r)
                u10 = -s * ph
                u11 = c * ph
                for k in range(n):
                    akp = A[k, p]
                    akq = A[k, q]
                    A[k, p] = akp * c + akq * u10
                    A[k, q] = akp * s + akq * u11
                for k in range(n):
                    apk = A[p, k]
                    aqk = A[q, k]
                    A[p, k] = c * apk + np.conj(u10) * aqk
                    A[q, k] = s * apk + np.conj(u11) * aqk
                A[p, q] = 0.0
                A[q, p] = 0.0
                A[p, p] = A[p, p].real
                A[q, q] = A[q, q].real
                for k in range(n):
                    vkp = V[k, p]
                    vkq = V[k, q]
                    V[k, p] = vkp * c + vkq * u10
                    V[k, q] = vkp * s + vkq * u11
    return -1, off


def hermitian_eigendecompose(M, tol=JACOBI_TOL, max_sweeps=JACOBI_MAX_SWEEPS):
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Args:
        M: square Hermitian matrix (within ``1e-12`` entrywise).
        tol: stop once the off-diagonal Frobenius norm falls below
            ``tol * max(1, ||M||_F)``.
        max_sweeps: sweep cap.

    Returns:
        ``(eigenvalues, eigenvectors)`` with eigenvalues real and sorted in
        descending order, eigenvectors as the columns of a unitary matrix.

    Raises:
        NotHermitianError: if ``M`` is not Hermitian; the message names the
            worst entry pair.
        ConvergenceError: if the sweep cap is reached.
    """
    A = check_hermitian(M).copy()
    A = 0.5 * (A + A.conj().T)
    n = A.shape[0]
    V = np.eye(n, dtype=complex)
    scale = max(1.0, float(np.linalg.norm(A)))
    sweeps, off = _jacobi_sweeps(A, V, tol * scale, max_sweeps)
    if sweeps < 0:
        raise ConvergenceError(max_sweeps, off)
    w = np.diag(A).real.copy()
    order = np.argsort(-w, kind="stable")
    return w[order], V[:, order]


def eigvalsh(M) -> np.ndarray:
    return hermitian_eigendecompose(M)[0]


def tensor(A, B) -> np.ndarray:
    """Kronecker product ``A ⊗ B``."""
    return np.kron(np.asarray(A, dtype=complex), np.asarray(B, dtype=complex))


def ket_to_projector(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    return np.outer(psi, psi.conj())


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated density matrix with an optional bipartite split.

    ``split = (d_S, d_R)`` means the Hilbert space is ``H_S ⊗ H_R`` with
    the system factor first in the Kronecker ordering. Positivity is
    checked lazily, when the spectrum is first needed.
    """

    matrix: np.ndarray
    split: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        A = check_hermitian(self.matrix).copy()
        tr = np.trace(A)
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"density matrix trace is {tr.real:.15g}, not 1")
        A.setflags(write=False)
        object.__setattr__(self, "matrix", A)
        if self.split is not None:
            d_s, d_r = (int(d) for d in self.split)
            if d_s < 1 or d_r < 1 or d_s * d_r != A.shape[0]:
                raise ValueError(
                    f"split {self.split} does not factor dimension {A.shape[0]}"
                )
            object.__setattr__(self, "split", (d_s, d_r))

    @classmethod
    def from_ket(cls, psi, split=None) -> "DensityMatrix":
        psi = np.asarray(psi, dtype=complex).reshape(-1)
        norm = np.linalg.norm(psi)
        if abs(norm - 1.0) > 1e-10:
            raise ValueError(f"state vector has norm {norm:.15g}, not 1")
        return cls(ket_to_projector(psi), split)

    @classmethod
    def maximally_mixed(cls, dim, split=None) -> "DensityMatrix":
        return cls(np.eye(dim, dtype=complex) / dim, split)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def with_split(self, split) -> "DensityMatrix":
        return DensityMatrix(self.matrix, split)

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))

    def is_pure(self, tol=1e-10) -> bool:
        return abs(self.purity() - 1.0) <= tol

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.matrix, dtype=dtype)


def as_density_matrix(rho, split=None) -> DensityMatrix:
    if isinstance(rho, DensityMatrix):
        if split is not None and rho.split != tuple(split):
            return rho.with_split(split)
        return rho
    return DensityMatrix(np.asarray(rho, dtype=complex), split)


def partial_trace(rho: DensityMatrix, keep: str = "S") -> DensityMatrix:
    """Reduced state on ``S`` (tracing out ``R``) or on ``R``.

    Raises:
        ValueError: if ``rho`` has no bipartite split or ``keep`` is not
            ``"S"``/``"R"``.
    """
    if rho.split is None:
        raise ValueError("partial_trace needs a state with a bipartite split")
    d_s, d_r = rho.split
    T = rho.matrix.reshape(d_s, d_r, d_s, d_r)
    if keep == "S":
        red = np.einsum("ajbj->ab", T)
    elif keep == "R":
        red = np.einsum("iaib->ab", T)
    else:
        raise ValueError(f"keep must be 'S' or 'R', not {keep!r}")
    # restore exact Hermiticity lost to summation order
    return DensityMatrix(0.5 * (red + red.conj().T))
