"""Entropic realism, coherence and discord for Aharonov-Bohm interferometers."""

from .classical import (
    ClassicalScenario,
    GaugeChoice,
    PhaseProfile,
    arm_phase_w,
    charge_state,
    chord_line_integral,
    chord_line_integral_numeric,
    encircled_phase,
    realism_closed_form,
    realism_jump,
    sigma_g,
    sigma_gA,
    sigma_x,
    sigma_y,
    sigma_z,
)
from .entropy import (
    binary_entropy,
    relative_entropy,
    shannon_entropy,
    von_neumann_entropy,
)
from .linalg import (
    ConvergenceError,
    DensityMatrix,
    NotHermitianError,
    hermitian_eigendecompose,
    partial_trace,
    tensor,
)
from .measures import (
    MeasureContext,
    Observable,
    coherence,
    complementarity_check,
    conditional_entropy,
    dephase,
    discord_nonminimized,
    entanglement_entropy,
    involutory_uncertainty,
    irrealism,
    mutual_information,
    realism,
)
from .quantized import (
    CylinderState,
    QuantizedScenario,
    Sigma_x,
    Sigma_y,
    joint_state,
    lambda0,
    realism_Sigma_closed_form,
    realism_sigma_x_reduced,
    realism_sigma_y_reduced,
    realism_sigma_z_joint,
    reduced_charge_state,
    sigma_xA_branch,
    weak_interaction_residual,
)

__all__ = [
    "arm_phase_w",
    "binary_entropy",
    "charge_state",
    "chord_line_integral",
    "chord_line_integral_numeric",
    "ClassicalScenario",
    "coherence",
    "complementarity_check",
    "conditional_entropy",
    "ConvergenceError",
    "CylinderState",
    "DensityMatrix",
    "dephase",
    "discord_nonminimized",
    "encircled_phase",
    "entanglement_entropy",
    "GaugeChoice",
    "hermitian_eigendecompose",
    "involutory_uncertainty",
    "irrealism",
    "joint_state",
    "lambda0",
    "MeasureContext",
    "mutual_information",
    "NotHermitianError",
    "Observable",
    "partial_trace",
    "PhaseProfile",
    "QuantizedScenario",
    "realism",
    "realism_closed_form",
    "realism_jump",
    "realism_Sigma_closed_form",
    "realism_sigma_x_reduced",
    "realism_sigma_y_reduced",
    "realism_sigma_z_joint",
    "reduced_charge_state",
    "relative_entropy",
    "shannon_entropy",
    "sigma_g",
    "sigma_gA",
    "sigma_x",
    "Sigma_x",
    "sigma_xA_branch",
    "sigma_y",
    "Sigma_y",
    "sigma_z",
    "tensor",
    "von_neumann_entropy",
    "weak_interaction_residual",
]

__version__ = "0.1.0"
