"""Two-arm interferometer with a classical (possibly zero) magnetic flux.

Geometry: a unit ring centred on the flux line. The wave packets enter at
angle ``-pi/2``; after each has travelled an angle ``theta`` they sit at
``alpha_0 = -pi/2 - theta`` (arm 0) and ``alpha_1 = -pi/2 + theta`` (arm 1)
and they recombine at ``theta = pi``. The chord joining the packets passes
over the flux line at ``theta = pi/2``.

All phases are in radians with the charge-over-hbar factor absorbed:
``phi_ab`` is the Aharonov-Bohm phase ``q Phi_B / hbar`` and gauge functions
are given directly as phases ``q chi / hbar``.
"""

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np

from .entropy import binary_entropy
from .linalg import DensityMatrix
from .measures import Observable

HALF_PI = 0.5 * math.pi
NUMERIC_EXCLUSION = 1e-6


@dataclass(frozen=True)
class PhaseProfile:
    """Relative phase ``f(theta)`` accumulated inside the interferometer.

    ``kind`` is ``"zero"``, ``"linear"`` (``f = slope * theta``) or
    ``"tabulated"`` (piecewise-linear through ``(grid, values)``).
    """

    kind: str = "zero"
    slope: float = 0.0
    grid: Tuple[float, ...] = ()
    values: Tuple[float, ...] = ()

    def __post_init__(self):
        if self.kind not in ("zero", "linear", "tabulated"):
            raise ValueError(f"unknown phase profile kind {self.kind!r}")
        if self.kind == "tabulated":
            grid = np.asarray(self.grid, dtype=float)
            values = np.asarray(self.values, dtype=float)
            if grid.ndim != 1 or grid.shape != values.shape or len(grid) < 2:
                raise ValueError("tabulated profile needs matching grid/values of length >= 2")
            if np.any(np.diff(grid) <= 0):
                raise ValueError("tabulated grid must be strictly increasing")
            if grid[0] != 0.0 or grid[-1] < math.pi:
                raise ValueError("tabulated grid must cover [0, pi] starting at 0")
            if values[0] != 0.0:
                raise ValueError("tabulated profile must satisfy f(0) = 0")
            object.__setattr__(self, "grid", tuple(grid.tolist()))
            object.__setattr__(self, "values", tuple(values.tolist()))

    @classmethod
    def zero(cls) -> "PhaseProfile":
        return cls("zero")

    @classmethod
    def linear(cls, slope: float) -> "PhaseProfile":
        return cls("linear", slope=float(slope))

    @classmethod
    def tabulated(cls, grid: Sequence[float], values: Sequence[float]) -> "PhaseProfile":
        return cls("tabulated", grid=tuple(grid), values=tuple(values))

    def __call__(self, theta: float) -> float:
        if self.kind == "zero":
            return 0.0
        if self.kind == "linear":
            return self.slope * theta
        return float(np.interp(theta, self.grid, self.values))


@dataclass(frozen=True)
class GaugeChoice:
    """Single-valued gauge phase on the ring,
    ``chi(alpha) = sum_n a_n cos(n alpha) + b_n sin(n alpha)`` for ``n = 1, 2, ...``.

    A constant term would cancel from every quantity, so the series starts
    at ``n = 1``.
    """

    fourier_cos: Tuple[float, ...] = ()
    fourier_sin: Tuple[float, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "fourier_cos", tuple(float(a) for a in self.fourier_cos))
        object.__setattr__(self, "fourier_sin", tuple(float(b) for b in self.fourier_sin))

    @classmethod
    def random(cls, rng: np.random.Generator, n_terms: int = 3, scale: float = 1.0) -> "GaugeChoice":
        return cls(
            tuple(rng.normal(0.0, scale, n_terms)), tuple(rng.normal(0.0, scale, n_terms))
        )

    def __call__(self, alpha: float) -> float:
        total = 0.0
        for n, a in enumerate(self.fourier_cos, start=1):
            total += a * math.cos(n * alpha)
        for n, b in enumerate(self.fourier_sin, start=1):
            total += b * math.sin(n * alpha)
        return total

    @property
    def is_zero(self) -> bool:
        return not any(self.fourier_cos) and not any(self.fourier_sin)


@dataclass(frozen=True)
class ClassicalScenario:
    """Interferometer configuration; ``phi_ab = 0`` is the standard interferometer."""

    f: PhaseProfile = field(default_factory=PhaseProfile.zero)
    phi_ab: float = 0.0
    gauge: GaugeChoice = field(default_factory=GaugeChoice)

    def with_gauge(self, gauge: GaugeChoice) -> "ClassicalScenario":
        return ClassicalScenario(self.f, self.phi_ab, gauge)


def check_theta(theta: float) -> float:
    theta = float(theta)
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta = {theta} outside [0, pi]")
    return theta


def heaviside_crossing(theta: float, side: Optional[str] = None) -> float:
    """Step ``Θ(theta - pi/2)`` with ``Θ(0) = 1``; ``side`` forces a one-sided value."""
    if side is None:
        return 1.0 if theta >= HALF_PI else 0.0
    if side == "pre":
        if theta > HALF_PI:
            raise ValueError(f"side 'pre' requested at theta = {theta} > pi/2")
        return 0.0
    if side == "post":
        if theta < HALF_PI:
            raise ValueError(f"side 'post' requested at theta = {theta} < pi/2")
        return 1.0
    raise ValueError(f"side must be 'pre', 'post' or None, not {side!r}")


def packet_angles(theta: float) -> Tuple[float, float]:
    """Ring angles ``(alpha_0, alpha_1)`` of the two packets."""
    return -HALF_PI - theta, -HALF_PI + theta


def gauge_endpoint_phase(theta: float, gauge: GaugeChoice) -> float:
    """``chi(alpha_1) - chi(alpha_0)``: the shift a gauge adds to ``w``."""
    a0, a1 = packet_angles(theta)
    return gauge(a1) - gauge(a0)


def arm_phase_w(theta: float, scenario: ClassicalScenario) -> float:
    """Difference of the line integrals along arm 1 and arm 0, as a phase."""
    theta = check_theta(theta)
    return scenario.phi_ab * theta / math.pi + gauge_endpoint_phase(theta, scenario.gauge)


def chord_line_integral(theta: float, scenario: ClassicalScenario, side: Optional[str] = None) -> float:
    """Phase from the straight chord running from packet 1 to packet 0.

    In the symmetric gauge this is ``phi_ab * (pi Θ(theta - pi/2) - theta) / pi``;
    a gauge adds ``chi(alpha_0) - chi(alpha_1)``.
    """
    theta = check_theta(theta)
    step = heaviside_crossing(theta, side)
    base = scenario.phi_ab * (math.pi * step - theta) / math.pi
    return base - gauge_endpoint_phase(theta, scenario.gauge)


def chord_line_integral_numeric(theta: float, scenario: ClassicalScenario, n_points: int = 100_000) -> float:
    """Quadrature oracle for :func:`chord_line_integral`.

    The symmetric-gauge potential ``A = Phi_B / (2 pi r) e_phi`` is sampled
    at ``n_points`` points of the chord and ``A . ds`` is integrated with the
    composite trapezoid rule. The gauge term is added as its exact endpoint
    difference (a pure gradient needs no quadrature).

    Raises:
        ValueError: within ``1e-6`` of ``theta = pi/2``, where the chord runs
            through the flux line and the integrand is singular.
    """
    theta = check_theta(theta)
    if abs(theta - HALF_PI) < NUMERIC_EXCLUSION:
        raise ValueError(
            f"theta = {theta} is within {NUMERIC_EXCLUSION:g} of pi/2: the chord "
            "passes through the flux line, where the vector potential is singular"
        )
    if n_points < 2:
        raise ValueError("n_points must be at least 2")
    a0, a1 = packet_angles(theta)
    start = np.array([math.cos(a1), math.sin(a1)])
    end = np.array([math.cos(a0), math.sin(a0)])
    t = np.linspace(0.0, 1.0, n_points)
    pts = start[None, :] + t[:, None] * (end - start)[None, :]
    tangent = end - start
    x, y = pts[:, 0], pts[:, 1]
    r2 = x * x + y * y
    # phi_ab / (2 pi) * (e_phi / r) . dr/dt, with e_phi / r = (-y, x) / r^2
    integrand = scenario.phi_ab / (2 * math.pi) * (-y * tangent[0] + x * tangent[1]) / r2
    value = float(np.trapezoid(integrand, t)) if hasattr(np, "trapezoid") else float(np.trapz(integrand, t))
    return value - gauge_endpoint_phase(theta, scenario.gauge)


def encircled_phase(theta: float, scenario: ClassicalScenario, side: Optional[str] = None) -> float:
    """``q Phi_enc / hbar`` for the loop ``tau + gamma_1 - gamma_0``: 0 or ``phi_ab``."""
    return arm_phase_w(theta, scenario) + chord_line_integral(theta, scenario, side)


def charge_ket(theta: float, scenario: ClassicalScenario) -> np.ndarray:
    phase = scenario.f(check_theta(theta)) + arm_phase_w(theta, scenario)
    return np.array([1.0, np.exp(1j * phase)]) / math.sqrt(2.0)


def charge_state(theta: float, scenario: ClassicalScenario) -> DensityMatrix:
    return DensityMatrix.from_ket(charge_ket(theta, scenario))


def sigma_from_phase(phase: float) -> Observable:
    """``e^{-i phase}|0><1| + e^{i phase}|1><0|`` with eigenvectors
    ``(|0> ± e^{i phase}|1>)/sqrt(2)`` for eigenvalues ``±1``."""
    e = np.exp(1j * phase)
    vectors = np.array([[1.0, 1.0], [e, -e]]) / math.sqrt(2.0)
    return Observable.from_eigenbasis([1.0, -1.0], vectors)


def sigma_z() -> Observable:
    return Observable.from_eigenbasis([1.0, -1.0], np.eye(2))


def sigma_g(theta: float, g: PhaseProfile, delta: float = 0.0) -> Observable:
    """Member of the ``sigma_g`` family with phase ``g(theta) + delta``."""
    theta = check_theta(theta)
    return sigma_from_phase(g(theta) + delta)


def sigma_x() -> Observable:
    return sigma_from_phase(0.0)


def sigma_y() -> Observable:
    return sigma_from_phase(HALF_PI)


def sigma_gA(
    theta: float,
    g: PhaseProfile,
    scenario: ClassicalScenario,
    delta: float = 0.0,
    side: Optional[str] = None,
) -> Observable:
    """``sigma_g`` with the chord line integral subtracted from its phase."""
    theta = check_theta(theta)
    return sigma_from_phase(g(theta) + delta - chord_line_integral(theta, scenario, side))


def realism_closed_form(
    theta: float,
    scenario: ClassicalScenario,
    g: PhaseProfile,
    delta: float = 0.0,
    *,
    chord: bool = True,
    side: Optional[str] = None,
) -> float:
    """Base-2 realism ``1 - h(λ)`` of ``sigma_gA`` (or of ``sigma_g`` when
    ``chord=False``) for the charge state.

    With the chord term ``λ = (1 + cos(f - g - delta + q Phi_enc/hbar)) / 2``,
    where the encircled flux is 0 before the crossing and ``Phi_B`` after,
    independently of the gauge. Without it, ``λ = (1 + cos(f + w - g - delta)) / 2``,
    which does depend on the gauge.

    At ``theta = pi/2`` exactly, ``side`` must select a one-sided value.
    """
    theta = check_theta(theta)
    if chord:
        if side is None and theta == HALF_PI:
            raise ValueError("realism jumps at theta = pi/2; pass side='pre' or 'post'")
        enc = scenario.phi_ab * heaviside_crossing(theta, side)
        arg = scenario.f(theta) - g(theta) - delta + enc
    else:
        arg = scenario.f(theta) + arm_phase_w(theta, scenario) - g(theta) - delta
    return 1.0 - binary_entropy(0.5 * (1.0 + math.cos(arg)))


def realism_jump(delta: float, phi_ab: float) -> float:
    """Post-crossing minus pre-crossing realism of ``sigma_{f+delta}^A``."""
    return binary_entropy(0.5 * (1.0 + math.cos(delta))) - binary_entropy(
        0.5 * (1.0 + math.cos(phi_ab - delta))
    )
