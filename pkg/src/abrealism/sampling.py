"""Random states, unitaries and observables for property checks."""

import numpy as np

from .linalg import DensityMatrix
from .measures import Observable


def random_unitary(d, rng):
    """Haar-random unitary via QR of a complex Ginibre matrix."""
    Z = (rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))) / np.sqrt(2)
    Q, R = np.linalg.qr(Z)
    ph = np.diag(R) / np.abs(np.diag(R))
    return Q * ph


def random_ket(d, rng):
    psi = rng.normal(size=d) + 1j * rng.normal(size=d)
    return psi / np.linalg.norm(psi)


def random_pure_state(d, rng, split=None) -> DensityMatrix:
    return DensityMatrix.from_ket(random_ket(d, rng), split)


def random_density_matrix(d, rng, rank=None, split=None) -> DensityMatrix:
    """Mixed state ``G G^† / tr`` with ``G`` a ``d x rank`` Ginibre matrix."""
    rank = d if rank is None else rank
    G = rng.normal(size=(d, rank)) + 1j * rng.normal(size=(d, rank))
    rho = G @ G.conj().T
    rho /= np.trace(rho).real
    return DensityMatrix(0.5 * (rho + rho.conj().T), split)


def random_product_state(d_s, d_r, rng) -> DensityMatrix:
    a = random_density_matrix(d_s, rng).matrix
    b = random_density_matrix(d_r, rng).matrix
    return DensityMatrix(np.kron(a, b), (d_s, d_r))


def random_observable(d, rng) -> Observable:
    """Nondegenerate observable with a Haar-random eigenbasis."""
    values = np.sort(rng.normal(size=d))[::-1]
    return Observable.from_eigenbasis(values, random_unitary(d, rng))


def fourier_matrix(d):
    j, k = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
    return np.exp(2j * np.pi * j * k / d) / np.sqrt(d)


def random_mub_pair(d, rng):
    """Two observables whose eigenbases are mutually unbiased."""
    U = random_unitary(d, rng)
    values = np.arange(d, 0, -1, dtype=float)
    return (
        Observable.from_eigenbasis(values, U),
        Observable.from_eigenbasis(values, U @ fourier_matrix(d)),
    )
