"""
Realism inside a plain two-arm interferometer
==============================================

The packets pick up a relative phase f(theta) = theta/3 as they travel
round the ring. sigma_z (which arm) is never real, and sigma_x drifts,
but the operator whose phase follows f stays fully real.
"""

import numpy as np

from abrealism import ClassicalScenario, PhaseProfile, charge_state, realism
from abrealism.classical import sigma_g, sigma_x, sigma_z

f = PhaseProfile.linear(1 / 3)
scenario = ClassicalScenario(f)

print(" theta   sigma_z  sigma_x  sigma_f")
for theta in np.linspace(0, np.pi, 7):
    rho = charge_state(theta, scenario)
    print(
        f"{theta:6.3f}  {realism(rho, sigma_z()):7.4f}  "
        f"{realism(rho, sigma_x()):7.4f}  {realism(rho, sigma_g(theta, f)):7.4f}"
    )

# a fixed offset delta from f costs realism, the same at every theta
rho = charge_state(1.0, scenario)
for delta in (0.0, np.pi / 8, np.pi / 4, np.pi / 2):
    print(f"delta = {delta:.3f}: {realism(rho, sigma_g(1.0, f, delta)):.4f}")
