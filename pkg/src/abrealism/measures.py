r"""Dephasing maps and entropic realism measures.

For an observable :math:`O = \sum_j o_j \Pi_j` acting on the system
factor of :math:`H_S \otimes H_R`, the dephasing map is

.. math::

    \Phi_O(\rho) = \sum_j (\Pi_j \otimes 1)\, \rho\, (\Pi_j \otimes 1),

irrealism is :math:`S(\Phi_O(\rho)) - S(\rho)` and realism is
:math:`\log N - \mathfrak{I}_O(\rho)`, where both the logarithm base and the
normalisation dimension :math:`N` come from a :class:`MeasureContext`.
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .entropy import von_neumann_entropy
from .linalg import (
    DensityMatrix,
    as_density_matrix,
    check_hermitian,
    hermitian_eigendecompose,
    partial_trace,
)

DEGENERACY_TOL = 1e-9
MUB_TOL = 1e-8
PURITY_TOL = 1e-10
INVOLUTION_TOL = 1e-10


@dataclass(frozen=True)
class MeasureContext:
    """Logarithm base and the dimension ``N`` in ``log N - irrealism``."""

    base: float = 2.0
    normalization_dim: int = 2

    def __post_init__(self):
        if not self.base > 1:
            raise ValueError(f"logarithm base must exceed 1, got {self.base}")
        if int(self.normalization_dim) != self.normalization_dim or self.normalization_dim < 2:
            raise ValueError(
                f"normalization_dim must be an integer >= 2, got {self.normalization_dim}"
            )

    def log(self, x) -> float:
        return math.log(x) / math.log(self.base)

    @property
    def max_realism(self) -> float:
        return self.log(self.normalization_dim)


QUBIT = MeasureContext(2.0, 2)


@dataclass(frozen=True, eq=False)
class Observable:
    """Hermitian matrix together with its spectral projectors.

    ``projectors`` has shape ``(k, d, d)``; ``values[j]`` is the eigenvalue
    attached to ``projectors[j]``. Values may repeat: constructed
    observables are allowed to keep a finer, rank-1 resolution of a
    degenerate eigenspace, and dephasing then uses that resolution.
    """

    matrix: np.ndarray
    values: np.ndarray
    projectors: np.ndarray
    rank_one_vectors: Optional[np.ndarray] = None

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def spectrum(self):
        return list(zip(self.values.tolist(), self.projectors))

    @classmethod
    def from_matrix(cls, M, degeneracy_tol=DEGENERACY_TOL) -> "Observable":
        """Spectral decomposition with degenerate eigenvalues merged."""
        A = check_hermitian(M)
        w, V = hermitian_eigendecompose(A)
        groups = [[0]]
        for k in range(1, len(w)):
            if abs(w[k] - w[groups[-1][0]]) <= degeneracy_tol:
                groups[-1].append(k)
            else:
                groups.append([k])
        values = np.array([np.mean(w[g]) for g in groups])
        projectors = np.array([V[:, g] @ V[:, g].conj().T for g in groups])
        vectors = V if all(len(g) == 1 for g in groups) else None
        return cls(A, values, projectors, vectors)

    @classmethod
    def from_eigenbasis(cls, values: Sequence[float], vectors) -> "Observable":
        """Observable ``sum_j values[j] |v_j><v_j|`` from orthonormal columns.

        The projectors stay rank one even when values repeat.
        """
        V = np.asarray(vectors, dtype=complex)
        values = np.asarray(values, dtype=float)
        projectors = np.einsum("ik,jk->kij", V, V.conj())
        matrix = np.einsum("k,kij->ij", values, projectors)
        return cls(matrix, values, projectors, V)

    def check(self, tol=1e-10) -> None:
        """Raise ``ValueError`` if the projector invariants are violated."""
        d = self.dim
        P = self.projectors
        if np.abs(P.sum(axis=0) - np.eye(d)).max() > tol:
            raise ValueError("projectors do not sum to the identity")
        for j in range(len(P)):
            if np.abs(P[j] @ P[j] - P[j]).max() > tol:
                raise ValueError(f"projector {j} is not idempotent")
            for k in range(j + 1, len(P)):
                if np.abs(P[j] @ P[k]).max() > tol:
                    raise ValueError(f"projectors {j} and {k} are not orthogonal")
        recon = np.einsum("k,kij->ij", self.values, P)
        if np.abs(recon - self.matrix).max() > tol:
            raise ValueError("matrix differs from sum of eigenvalue * projector")


def observable(O) -> Observable:
    return O if isinstance(O, Observable) else Observable.from_matrix(O)


def _resolve_scope(rho: DensityMatrix, O: Observable, scope):
    if scope is None:
        if O.dim == rho.dim:
            return "whole"
        if rho.split is not None and O.dim == rho.split[0]:
            return "S"
        raise ValueError(
            f"observable of dimension {O.dim} does not act on a state of "
            f"dimension {rho.dim} with split {rho.split}"
        )
    if scope == "whole":
        if O.dim != rho.dim:
            raise ValueError(f"dimension mismatch: observable {O.dim}, state {rho.dim}")
    elif scope == "S":
        if rho.split is None:
            raise ValueError("scope 'S' needs a state with a bipartite split")
        if O.dim != rho.split[0]:
            raise ValueError(
                f"dimension mismatch: observable {O.dim}, subsystem S {rho.split[0]}"
            )
    else:
        raise ValueError(f"scope must be 'S', 'whole' or None, not {scope!r}")
    return scope


def dephase(rho, O, scope=None) -> DensityMatrix:
    """Apply the projective dephasing map of ``O`` to ``rho``.

    Args:
        rho: state (``DensityMatrix`` or array).
        O: ``Observable`` or Hermitian matrix.
        scope: ``"S"`` to act on the system factor only, ``"whole"`` to act
            on the full space, ``None`` to infer from dimensions.
    """
    rho = as_density_matrix(rho)
    O = observable(O)
    scope = _resolve_scope(rho, O, scope)
    if scope == "whole" and O.rank_one_vectors is not None:
        # sum_k |v_k><v_k| rho |v_k><v_k| = V diag(V^dag rho V) V^dag
        V = O.rank_one_vectors
        p = np.einsum("ak,ab,bk->k", V.conj(), rho.matrix, V)
        out = (V * p) @ V.conj().T
    else:
        P = O.projectors
        if scope == "S":
            eye = np.eye(rho.split[1])
            P = np.stack([np.kron(q, eye) for q in P])
        out = (P @ rho.matrix @ P).sum(axis=0)
    return DensityMatrix(0.5 * (out + out.conj().T), rho.split)


def irrealism(rho, O, scope=None, ctx: MeasureContext = QUBIT) -> float:
    rho = as_density_matrix(rho)
    dephased = dephase(rho, O, scope)
    value = von_neumann_entropy(dephased, ctx.base) - von_neumann_entropy(rho, ctx.base)
    return max(value, 0.0)


def realism(rho, O, scope=None, ctx: MeasureContext = QUBIT) -> float:
    """``log N - irrealism`` with base and ``N`` taken from ``ctx``."""
    return ctx.max_realism - irrealism(rho, O, scope, ctx)


def coherence(rho_s, O, ctx: MeasureContext = QUBIT) -> float:
    """Relative entropy of coherence of ``rho_s`` in the eigenbasis of ``O``."""
    rho_s = as_density_matrix(rho_s)
    return irrealism(DensityMatrix(rho_s.matrix), O, "whole", ctx)


def mutual_information(rho, ctx: MeasureContext = QUBIT) -> float:
    rho = as_density_matrix(rho)
    s = von_neumann_entropy(partial_trace(rho, "S"), ctx.base)
    r = von_neumann_entropy(partial_trace(rho, "R"), ctx.base)
    return s + r - von_neumann_entropy(rho, ctx.base)


def conditional_entropy(rho, ctx: MeasureContext = QUBIT) -> float:
    """``S(ρ) - S(ρ_R)``."""
    rho = as_density_matrix(rho)
    return von_neumann_entropy(rho, ctx.base) - von_neumann_entropy(
        partial_trace(rho, "R"), ctx.base
    )


def entanglement_entropy(rho, ctx: MeasureContext = QUBIT) -> float:
    rho = as_density_matrix(rho)
    if rho.split is None:
        raise ValueError("entanglement entropy needs a bipartite split")
    if not rho.is_pure(PURITY_TOL):
        raise ValueError(
            f"entanglement entropy is defined here for pure states only "
            f"(purity {rho.purity():.12f})"
        )
    return von_neumann_entropy(partial_trace(rho, "S"), ctx.base)


def discord_nonminimized(rho, O, ctx: MeasureContext = QUBIT) -> float:
    """Drop in mutual information caused by dephasing ``S`` along ``O``."""
    rho = as_density_matrix(rho)
    if rho.split is None:
        raise ValueError("discord needs a bipartite split")
    return mutual_information(rho, ctx) - mutual_information(dephase(rho, O, "S"), ctx)


def _rank_one_basis(O: Observable):
    if O.rank_one_vectors is not None:
        return O.rank_one_vectors
    ranks = np.real(np.einsum("kii->k", O.projectors))
    if np.all(np.abs(ranks - 1) < 1e-8):
        V = []
        for P in O.projectors:
            w, U = hermitian_eigendecompose(P)
            V.append(U[:, 0])
        return np.array(V).T
    return None


def max_overlap(O, O2) -> float:
    """``c = max_{j,k} ||Π_j Π'_k||²``, i.e. ``max |<o_j|o'_k>|²`` for rank-1 projectors."""
    O, O2 = observable(O), observable(O2)
    best = 0.0
    for P in O.projectors:
        for Q in O2.projectors:
            s = np.linalg.svd(P @ Q, compute_uv=False)
            best = max(best, float(s[0] ** 2))
    return best


def are_mutually_unbiased(O, O2, tol=MUB_TOL) -> bool:
    O, O2 = observable(O), observable(O2)
    d = O.dim
    if O2.dim != d:
        return False
    V, W = _rank_one_basis(O), _rank_one_basis(O2)
    if V is None or W is None or V.shape[1] != d or W.shape[1] != d:
        return False
    overlaps = np.abs(V.conj().T @ W) ** 2
    return bool(np.all(np.abs(overlaps - 1.0 / d) <= tol))


@dataclass(frozen=True)
class ComplementarityResult:
    lhs: float
    rhs_mub: Optional[float]
    rhs_general: float
    c: float

    @property
    def mub_holds(self) -> Optional[bool]:
        if self.rhs_mub is None:
            return None
        return self.lhs <= self.rhs_mub + 1e-9

    @property
    def general_holds(self) -> bool:
        return self.lhs <= self.rhs_general + 1e-9


def complementarity_check(rho, O, O2, ctx: MeasureContext = QUBIT) -> ComplementarityResult:
    """Both sides of the complementarity bounds for realism of ``O`` and ``O2``.

    With ``d`` the dimension of ``S`` and ``N`` the context's
    normalisation dimension,

    * MUB bound (only when ``O``, ``O2`` are mutually unbiased):
      ``2 log N - log d + S(ρ) - S(ρ_R)``, which for ``N = d`` equals
      ``log d + S(ρ_S) - I(S:R)``;
    * general bound: ``log(N² c) + S(ρ) + S(ρ_R)``.

    States without a split are treated as having a trivial ``R``.
    """
    rho = as_density_matrix(rho)
    O, O2 = observable(O), observable(O2)
    if rho.split is None:
        rho = rho.with_split((rho.dim, 1))
    d_s = rho.split[0]
    lhs = realism(rho, O, "S", ctx) + realism(rho, O2, "S", ctx)
    s_joint = von_neumann_entropy(rho, ctx.base)
    s_r = von_neumann_entropy(partial_trace(rho, "R"), ctx.base)
    c = max_overlap(O, O2)
    rhs_general = ctx.log(ctx.normalization_dim ** 2 * c) + s_joint + s_r
    rhs_mub = None
    if are_mutually_unbiased(O, O2):
        rhs_mub = 2 * ctx.max_realism - ctx.log(d_s) + s_joint - s_r
    return ComplementarityResult(lhs, rhs_mub, rhs_general, c)


def involutory_uncertainty(rho, O):
    """Expectation and uncertainty ``ΔO = sqrt(<O²> - <O>²)`` of an involution.

    ``O`` may act on the whole space or, for a bipartite ``rho``, on ``S``.

    Returns:
        ``(expectation, delta)``.

    Raises:
        ValueError: if ``O² != 1`` within ``1e-10``.
    """
    rho = as_density_matrix(rho)
    M = observable(O).matrix
    if np.abs(M @ M - np.eye(M.shape[0])).max() > INVOLUTION_TOL:
        raise ValueError("observable is not an involution (O @ O != identity)")
    if M.shape[0] != rho.dim:
        if rho.split is None or rho.split[0] != M.shape[0]:
            raise ValueError(f"dimension mismatch: observable {M.shape[0]}, state {rho.dim}")
        M = np.kron(M, np.eye(rho.split[1]))
    mean = float(np.real(np.trace(rho.matrix @ M)))
    second = float(np.real(np.trace(rho.matrix @ M @ M)))
    return mean, math.sqrt(max(second - mean**2, 0.0))
