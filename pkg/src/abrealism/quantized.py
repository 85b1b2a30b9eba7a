"""Aharonov-Bohm interferometer with a quantized flux source.

The solenoid is replaced by a rotating cylinder with angular momentum
eigenstates ``|m>``, ``m = -ell..ell``. Each branch ``m`` carries flux
proportional to ``m``, so the charge acquires the AB phase ``qK * m`` and
becomes entangled with the cylinder. The joint Hilbert space is ordered
charge ⊗ cylinder, dimension ``2 (2 ell + 1)``.
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .classical import (
    HALF_PI,
    ClassicalScenario,
    PhaseProfile,
    check_theta,
    heaviside_crossing,
    sigma_from_phase,
)
from .entropy import binary_entropy, shannon_entropy
from .linalg import DensityMatrix
from .measures import MeasureContext, Observable

GlobalPhases = Callable[[int, float], float]


@dataclass(frozen=True, eq=False)
class CylinderState:
    """Cylinder state ``sum_m c_m |m>``; ``coeffs[m + ell]`` holds ``c_m``."""

    ell: int
    coeffs: np.ndarray

    def __post_init__(self):
        if int(self.ell) != self.ell or self.ell < 0:
            raise ValueError(f"ell must be a non-negative integer, got {self.ell}")
        c = np.asarray(self.coeffs, dtype=complex).reshape(-1)
        if len(c) != 2 * self.ell + 1:
            raise ValueError(f"expected {2 * self.ell + 1} coefficients, got {len(c)}")
        norm2 = float(np.sum(np.abs(c) ** 2))
        if abs(norm2 - 1.0) > 1e-10:
            raise ValueError(f"cylinder coefficients have squared norm {norm2:.15g}, not 1")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "ell", int(self.ell))

    @classmethod
    def even_superposition(cls, ell: int, ms: Sequence[int]) -> "CylinderState":
        ms = sorted(set(int(m) for m in ms))
        if not ms or ms[0] < -ell or ms[-1] > ell:
            raise ValueError(f"indices {ms} do not fit the cutoff ell = {ell}")
        c = np.zeros(2 * ell + 1, dtype=complex)
        c[[m + ell for m in ms]] = 1.0 / math.sqrt(len(ms))
        return cls(ell, c)

    @classmethod
    def eigenstate(cls, ell: int, m: int) -> "CylinderState":
        return cls.even_superposition(ell, [m])

    @property
    def dim(self) -> int:
        return 2 * self.ell + 1

    @property
    def ms(self) -> np.ndarray:
        return np.arange(-self.ell, self.ell + 1)

    @property
    def populations(self) -> np.ndarray:
        return np.abs(self.coeffs) ** 2

    @property
    def mean_m(self) -> float:
        return float(np.dot(self.populations, self.ms))


@dataclass(frozen=True)
class QuantizedScenario:
    """Charge plus cylinder.

    ``qK`` is the AB phase per unit of ``m``. ``global_phases(m, theta)``
    are the branch phases ``g_m(theta)``; ``None`` means all zero.
    """

    cylinder: CylinderState
    qK: float
    f: PhaseProfile = field(default_factory=PhaseProfile.zero)
    global_phases: Optional[GlobalPhases] = None

    @property
    def ell(self) -> int:
        return self.cylinder.ell

    @property
    def dim(self) -> int:
        return 2 * self.cylinder.dim

    def classical_equivalent(self) -> ClassicalScenario:
        """Classical scenario with flux set by the mean angular momentum."""
        return ClassicalScenario(self.f, self.qK * self.cylinder.mean_m)


def joint_context(scenario: QuantizedScenario) -> MeasureContext:
    """Base ``4 ell + 2`` and normalisation ``4 ell + 2``: joint realism at most 1."""
    d = scenario.dim
    return MeasureContext(float(d), d)


def branch_phases(theta: float, scenario: QuantizedScenario) -> np.ndarray:
    """Relative charge phase ``f(theta) + qK m theta / pi`` for every ``m``."""
    theta = check_theta(theta)
    return scenario.f(theta) + scenario.qK * scenario.cylinder.ms * theta / math.pi


def _global_phase_factors(theta, scenario):
    if scenario.global_phases is None:
        return np.ones(scenario.cylinder.dim)
    return np.exp(1j * np.array([scenario.global_phases(int(m), theta) for m in scenario.cylinder.ms]))


def joint_ket(theta: float, scenario: QuantizedScenario) -> np.ndarray:
    c = scenario.cylinder.coeffs * _global_phase_factors(theta, scenario)
    upper = c / math.sqrt(2.0)
    lower = c * np.exp(1j * branch_phases(theta, scenario)) / math.sqrt(2.0)
    return np.concatenate([upper, lower])


def joint_state(theta: float, scenario: QuantizedScenario) -> DensityMatrix:
    return DensityMatrix.from_ket(joint_ket(theta, scenario), (2, scenario.cylinder.dim))


def _coherent_sum(theta, scenario):
    return complex(np.dot(scenario.cylinder.populations, np.exp(1j * branch_phases(theta, scenario))))


def reduced_charge_state(theta: float, scenario: QuantizedScenario) -> DensityMatrix:
    """Charge state with the cylinder traced out, built from the closed form."""
    z = _coherent_sum(theta, scenario)
    return DensityMatrix(0.5 * np.array([[1.0, np.conj(z)], [z, 1.0]]))


def lambda0(theta: float, scenario: QuantizedScenario) -> float:
    """Smaller eigenvalue of the reduced charge state."""
    return 0.5 * (1.0 - abs(_coherent_sum(theta, scenario)))


def realism_sigma_z_reduced(theta: float, scenario: QuantizedScenario) -> float:
    return binary_entropy(lambda0(theta, scenario))


def realism_sigma_x_reduced(theta: float, scenario: QuantizedScenario) -> float:
    """``1 + h(λ0) - h(λ)`` with ``λ = (1 - sum |c_m|² cos(phase_m)) / 2``."""
    z = _coherent_sum(theta, scenario)
    return 1.0 + binary_entropy(lambda0(theta, scenario)) - binary_entropy(0.5 * (1.0 - z.real))


def realism_sigma_y_reduced(theta: float, scenario: QuantizedScenario) -> float:
    """Sine analogue of :func:`realism_sigma_x_reduced`."""
    z = _coherent_sum(theta, scenario)
    return 1.0 + binary_entropy(lambda0(theta, scenario)) - binary_entropy(0.5 * (1.0 - z.imag))


def chord_phase_branch(theta: float, m: int, scenario: QuantizedScenario, side: Optional[str] = None) -> float:
    """Chord line integral for branch ``m``: ``qK m (pi Θ(theta - pi/2) - theta) / pi``."""
    theta = check_theta(theta)
    step = heaviside_crossing(theta, side)
    return scenario.qK * m * (math.pi * step - theta) / math.pi


def sigma_gA_branch(
    theta: float, m: int, scenario: QuantizedScenario, delta: float = 0.0, side: Optional[str] = None
) -> Observable:
    """Charge operator with the chord term of branch ``m``: phase ``f + delta - chord_m``."""
    theta = check_theta(theta)
    return sigma_from_phase(scenario.f(theta) + delta - chord_phase_branch(theta, m, scenario, side))


def sigma_xA_branch(theta, m, scenario, side=None) -> Observable:
    return sigma_gA_branch(theta, m, scenario, 0.0, side)


def sigma_yA_branch(theta, m, scenario, side=None) -> Observable:
    return sigma_gA_branch(theta, m, scenario, HALF_PI, side)


def _joint_sigma(theta, scenario, delta, side):
    theta = check_theta(theta)
    n = scenario.cylinder.dim
    dim = 2 * n
    vectors = np.zeros((dim, dim), dtype=complex)
    values = np.empty(dim)
    for k, m in enumerate(scenario.cylinder.ms):
        branch = sigma_gA_branch(theta, int(m), scenario, delta, side)
        for s in range(2):
            col = 2 * k + s
            # |x_m±> ⊗ |m> in charge-major ordering
            vectors[k, col] = branch.rank_one_vectors[0, s]
            vectors[n + k, col] = branch.rank_one_vectors[1, s]
            values[col] = branch.values[s]
    return Observable.from_eigenbasis(values, vectors)


def Sigma_x(theta: float, scenario: QuantizedScenario, side: Optional[str] = None) -> Observable:
    """``sum_m sigma_x^{A_m} ⊗ |m><m|`` with one rank-1 projector per branch and sign."""
    return _joint_sigma(theta, scenario, 0.0, side)


def Sigma_y(theta: float, scenario: QuantizedScenario, side: Optional[str] = None) -> Observable:
    return _joint_sigma(theta, scenario, HALF_PI, side)


def sigma_z_joint(scenario: QuantizedScenario) -> Observable:
    """``sigma_z ⊗ 1_R`` with its two rank-(2 ell + 1) eigenprojectors."""
    n = scenario.cylinder.dim
    P0 = np.kron(np.diag([1.0, 0.0]), np.eye(n)).astype(complex)
    P1 = np.kron(np.diag([0.0, 1.0]), np.eye(n)).astype(complex)
    return Observable(P0 - P1, np.array([1.0, -1.0]), np.array([P0, P1]))


def realism_Sigma_closed_form(
    theta: float, scenario: QuantizedScenario, which: str = "x", side: Optional[str] = None
) -> float:
    """Realism of ``Sigma_x`` or ``Sigma_y`` on the joint state, base ``4 ell + 2``.

    ``1 - H(C) - sum_m |c_m|² h_b(λ_m)`` where ``C = (|c_m|²)``, ``h_b`` is
    binary entropy in base ``b = 4 ell + 2``, and the branch parameter is
    ``λ_m = (1 + cos(qK m Θ - delta)) / 2`` with ``delta = 0`` for ``x`` and
    ``pi/2`` for ``y``. Before the crossing this gives ``1 - H(C)`` for ``x``
    and ``1 - log_b 2 - H(C)`` for ``y``.
    """
    theta = check_theta(theta)
    if which not in ("x", "y"):
        raise ValueError(f"which must be 'x' or 'y', not {which!r}")
    if side is None and theta == HALF_PI:
        raise ValueError("realism jumps at theta = pi/2; pass side='pre' or 'post'")
    b = float(scenario.dim)
    to_base = math.log(2.0) / math.log(b)
    delta = 0.0 if which == "x" else HALF_PI
    step = heaviside_crossing(theta, side)
    pops = scenario.cylinder.populations
    branch = sum(
        p * binary_entropy(0.5 * (1.0 + math.cos(scenario.qK * m * step - delta)))
        for p, m in zip(pops, scenario.cylinder.ms)
        if p > 0
    )
    return 1.0 - shannon_entropy(pops, b) - to_base * branch


def realism_sigma_z_joint(scenario: QuantizedScenario, ctx: MeasureContext) -> float:
    """``log N - log 2``: dephasing ``sigma_z`` on the pure joint state yields one bit."""
    return ctx.max_realism - ctx.log(2.0)


def weak_interaction_residual(theta: float, scenario: QuantizedScenario, side: Optional[str] = None) -> float:
    """Modulus of ``sum_m |c_m|² e^{i qK m u} - e^{i qK <m> u}``, ``u = (pi Θ - theta)/pi``.

    Zero for cylinder eigenstates; of order ``qK² Var(m)`` for weak coupling.
    """
    theta = check_theta(theta)
    u = (math.pi * heaviside_crossing(theta, side) - theta) / math.pi
    cyl = scenario.cylinder
    lhs = np.dot(cyl.populations, np.exp(1j * scenario.qK * cyl.ms * u))
    rhs = np.exp(1j * scenario.qK * cyl.mean_m * u)
    return float(abs(lhs - rhs))
