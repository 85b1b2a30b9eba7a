"""
Flux produced by a quantum source
=================================

The solenoid is replaced by a cylinder whose angular momentum sets the
flux. The charge gets entangled with the cylinder, so even sigma_z on the
charge picks up realism, and that gain is exactly the entanglement.
"""

import numpy as np

from abrealism import partial_trace, realism
from abrealism.classical import sigma_z
from abrealism.entropy import binary_entropy
from abrealism.measures import entanglement_entropy
from abrealism.quantized import (
    CylinderState,
    QuantizedScenario,
    Sigma_x,
    joint_context,
    joint_state,
    lambda0,
    realism_Sigma_closed_form,
)

qK = 2 * np.pi / 25
for ms in [(2, 3), (1, 2, 3, 4), (0, 1, 2, 3, 4, 5)]:
    sc = QuantizedScenario(CylinderState.even_superposition(6, ms), qK)
    rho = joint_state(np.pi, sc)
    r_z = realism(partial_trace(rho, "S"), sigma_z())
    print(f"m in {ms}: R_z = {r_z:.5f}  h(lambda0) = {binary_entropy(lambda0(np.pi, sc)):.5f}"
          f"  E = {entanglement_entropy(rho):.5f}")

# joint operator Sigma_x in base 26, across the crossing
sc = QuantizedScenario(CylinderState.even_superposition(6, (2, 3)), qK)
ctx = joint_context(sc)
for theta in (0.5, 1.5, 1.7, 3.0):
    rho = joint_state(theta, sc)
    print(f"theta = {theta}: R(Sigma_x) = {realism(rho, Sigma_x(theta, sc), 'whole', ctx):.6f}"
          f"  closed form {realism_Sigma_closed_form(theta, sc, 'x'):.6f}")
