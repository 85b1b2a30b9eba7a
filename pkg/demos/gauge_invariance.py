"""
Gauge choice moves sigma_x, not sigma_x^A
=========================================

A random single-valued gauge function changes the phase each packet
accumulates, so the realism of the bare sigma_x moves with it. Adding the
chord line integral to the operator cancels the gauge exactly.
"""

import numpy as np

from abrealism import (
    ClassicalScenario,
    GaugeChoice,
    PhaseProfile,
    charge_state,
    realism,
)
from abrealism.classical import sigma_gA, sigma_x

rng = np.random.default_rng(7)
base = ClassicalScenario(PhaseProfile.linear(1 / 3), np.pi / 5)
theta = 2.2

print("  gauge   sigma_x   sigma_xA")
for k in range(6):
    sc = base if k == 0 else base.with_gauge(GaugeChoice.random(rng))
    rho = charge_state(theta, sc)
    print(f"{k:7d}   {realism(rho, sigma_x()):.6f}  {realism(rho, sigma_gA(theta, sc.f, sc)):.6f}")
