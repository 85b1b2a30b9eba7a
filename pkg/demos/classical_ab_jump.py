"""
The realism jump with a classical flux
======================================

With flux phi_ab = pi/5 in the ring, the gauge-invariant operator
sigma_{f+delta}^A loses realism suddenly once the chord between the two
packets crosses the solenoid (theta = pi/2). Nothing happens to the state
there; only the operator changes.
"""

import numpy as np

from abrealism import ClassicalScenario, PhaseProfile, charge_state, realism
from abrealism.classical import realism_jump, sigma_gA

f = PhaseProfile.linear(1 / 3)
phi = np.pi / 5
scenario = ClassicalScenario(f, phi)

half = np.pi / 2
rho = charge_state(half, scenario)
for name, delta in (("sigma_xA", 0.0), ("sigma_yA", half)):
    pre = realism(rho, sigma_gA(half, f, scenario, delta, side="pre"))
    post = realism(rho, sigma_gA(half, f, scenario, delta, side="post"))
    print(f"{name}: {pre:.4f} before the crossing, {post:.4f} after")

# jump as a function of the offset; it flips sign at delta = phi/2
for delta in np.linspace(0, half, 6):
    print(f"delta = {delta:.4f}  jump = {realism_jump(delta, phi):+.4f}")
print("zero crossing at", phi / 2, "->", realism_jump(phi / 2, phi))
