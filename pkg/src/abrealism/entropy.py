"""Shannon and von Neumann entropies, relative entropy.

Convention: ``0 log 0 = 0``. Spectra of density matrices are clamped to
``[0, 1]`` after checking that no eigenvalue lies below ``-1e-9``.
"""

import math

import numpy as np

from .linalg import as_density_matrix, hermitian_eigendecompose

NEG_EIG_TOL = 1e-9
PROB_TOL = 1e-10
SUPPORT_EIG_TOL = 1e-12
SUPPORT_WEIGHT_TOL = 1e-10


def _check_base(base):
    if not base > 1:
        raise ValueError(f"logarithm base must exceed 1, got {base}")
    return math.log(base)


def _xlogx_sum(p, log_base):
    p = p[p > 0]
    return float(-np.sum(p * np.log(p)) / log_base)


def clamped_spectrum(rho) -> np.ndarray:
    """Eigenvalues of ``rho`` clamped to ``[0, 1]``.

    Raises:
        ValueError: if an eigenvalue is below ``-1e-9`` (not a valid state).
    """
    rho = as_density_matrix(rho)
    w = hermitian_eigendecompose(rho.matrix)[0]
    if w.min() < -NEG_EIG_TOL:
        raise ValueError(
            f"density matrix has eigenvalue {w.min():.3e} below -{NEG_EIG_TOL:.0e}"
        )
    return np.clip(w, 0.0, 1.0)


def shannon_entropy(p, base=2) -> float:
    """Shannon entropy of a probability vector."""
    log_base = _check_base(base)
    p = np.asarray(p, dtype=float).reshape(-1)
    if np.any(p < -PROB_TOL) or np.any(p > 1 + PROB_TOL):
        raise ValueError("probabilities must lie in [0, 1]")
    if abs(p.sum() - 1.0) > PROB_TOL:
        raise ValueError(f"probabilities sum to {p.sum():.15g}, not 1")
    return _xlogx_sum(np.clip(p, 0.0, 1.0), log_base)


def binary_entropy(lam) -> float:
    """``h(λ) = -λ log2 λ - (1-λ) log2(1-λ)``."""
    lam = float(lam)
    if lam < -PROB_TOL or lam > 1 + PROB_TOL:
        raise ValueError(f"binary entropy argument {lam} outside [0, 1]")
    lam = min(max(lam, 0.0), 1.0)
    return _xlogx_sum(np.array([lam, 1.0 - lam]), math.log(2))


def von_neumann_entropy(rho, base=2) -> float:
    """``S(ρ) = -tr(ρ log ρ)`` in the given logarithm base."""
    log_base = _check_base(base)
    return _xlogx_sum(clamped_spectrum(rho), log_base)


def relative_entropy(rho, sigma, base=2) -> float:
    """``S(ρ||σ) = tr[ρ(log ρ - log σ)]``.

    Returns ``inf`` when the support of ``ρ`` is not contained in that of
    ``σ``: some eigenvector of ``σ`` with eigenvalue below ``1e-12``
    carries ``ρ``-weight above ``1e-10``.
    """
    log_base = _check_base(base)
    rho = as_density_matrix(rho)
    sigma = as_density_matrix(sigma)
    if rho.dim != sigma.dim:
        raise ValueError(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    mu, W = hermitian_eigendecompose(sigma.matrix)
    weights = np.real(np.einsum("ik,ij,jk->k", W.conj(), rho.matrix, W))
    null = mu < SUPPORT_EIG_TOL
    if np.any(weights[null] > SUPPORT_WEIGHT_TOL):
        return math.inf
    cross = -float(np.sum(weights[~null] * np.log(mu[~null]))) / log_base
    value = cross - von_neumann_entropy(rho, base)
    return max(value, 0.0)


__all__ = [
    "binary_entropy",
    "clamped_spectrum",
    "relative_entropy",
    "shannon_entropy",
    "von_neumann_entropy",
]
