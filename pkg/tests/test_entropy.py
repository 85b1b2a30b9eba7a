import math
from decimal import Decimal, getcontext

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abrealism.classical import sigma_from_phase, sigma_z
from abrealism.entropy import (
    binary_entropy,
    relative_entropy,
    shannon_entropy,
    von_neumann_entropy,
)
from abrealism.linalg import DensityMatrix
from abrealism.measures import dephase
from abrealism.sampling import (
    random_density_matrix,
    random_observable,
    random_pure_state,
)

probs = st.floats(0.0, 1.0, allow_nan=False)


def h_decimal(p: str) -> float:
    """Binary entropy at 40 digits, as an oracle for the float version."""
    getcontext().prec = 40
    x = Decimal(p)
    y = 1 - x
    return float(-(x * x.ln() + y * y.ln()) / Decimal(2).ln())


def test_binary_entropy_endpoints():
    assert binary_entropy(0) == 0.0
    assert binary_entropy(1) == 0.0
    assert binary_entropy(0.5) == pytest.approx(1.0, abs=1e-15)


def test_binary_entropy_reference_value():
    assert binary_entropy(0.9045) == pytest.approx(0.4546, abs=1e-3)
    assert binary_entropy(0.9045) == pytest.approx(h_decimal("0.9045"), abs=1e-14)


def test_von_neumann_reference_value():
    rho = DensityMatrix(np.diag([0.9045, 0.0955]).astype(complex))
    assert von_neumann_entropy(rho, 2) == pytest.approx(0.4546, abs=1e-3)
    assert von_neumann_entropy(rho, 2) == pytest.approx(h_decimal("0.9045"), abs=1e-13)


def test_von_neumann_trivial_cases():
    assert von_neumann_entropy(DensityMatrix(np.diag([1.0, 0.0])), 2) == 0.0
    assert von_neumann_entropy(DensityMatrix.maximally_mixed(2), 2) == pytest.approx(1.0, abs=1e-14)
    assert von_neumann_entropy(DensityMatrix.maximally_mixed(13), 13) == pytest.approx(1.0, abs=1e-13)


@given(probs)
def test_binary_entropy_symmetric_and_bounded(lam):
    v = binary_entropy(lam)
    assert 0.0 <= v <= 1.0 + 1e-15
    assert v == pytest.approx(binary_entropy(1 - lam), abs=1e-12)


def test_probability_validation():
    with pytest.raises(ValueError):
        binary_entropy(1.1)
    with pytest.raises(ValueError):
        binary_entropy(-1e-6)
    assert binary_entropy(-1e-11) == 0.0
    with pytest.raises(ValueError):
        shannon_entropy([0.5, 0.6])
    with pytest.raises(ValueError):
        shannon_entropy([1.2, -0.2])
    with pytest.raises(ValueError, match="base"):
        von_neumann_entropy(DensityMatrix.maximally_mixed(2), base=1)


def test_shannon_matches_uniform():
    assert shannon_entropy(np.full(8, 1 / 8)) == pytest.approx(3.0, abs=1e-14)
    assert shannon_entropy([0.25, 0.75], base=math.e) == pytest.approx(
        -(0.25 * math.log(0.25) + 0.75 * math.log(0.75)), abs=1e-15
    )


@settings(max_examples=50, deadline=None)
@given(d=st.integers(1, 10), seed=st.integers(0, 2**32 - 1), base=st.floats(1.1, 50))
def test_entropy_bounds_and_base_change(d, seed, base):
    rho = random_density_matrix(d, np.random.default_rng(seed))
    s2 = von_neumann_entropy(rho, 2)
    assert -1e-12 <= s2 <= math.log2(d) + 1e-10
    assert von_neumann_entropy(rho, base) == pytest.approx(s2 / math.log2(base), abs=1e-10)


@settings(max_examples=30, deadline=None)
@given(d=st.integers(2, 8), seed=st.integers(0, 2**32 - 1))
def test_pure_states_have_zero_entropy(d, seed):
    assert von_neumann_entropy(random_pure_state(d, np.random.default_rng(seed))) <= 1e-10


def test_relative_entropy_trivial_cases():
    rho = random_density_matrix(3, np.random.default_rng(2))
    assert relative_entropy(rho, rho) == pytest.approx(0.0, abs=1e-12)
    zero = DensityMatrix(np.diag([1.0, 0.0]))
    one = DensityMatrix(np.diag([0.0, 1.0]))
    assert relative_entropy(zero, one) == math.inf
    assert relative_entropy(one, DensityMatrix.maximally_mixed(2)) == pytest.approx(1.0, abs=1e-14)
    with pytest.raises(ValueError):
        relative_entropy(DensityMatrix.maximally_mixed(2), DensityMatrix.maximally_mixed(3))


@settings(max_examples=50, deadline=None)
@given(d=st.integers(2, 6), seed=st.integers(0, 2**32 - 1), rank=st.integers(1, 6))
def test_relative_entropy_to_dephased_state(d, seed, rank):
    rng = np.random.default_rng(seed)
    rho = random_density_matrix(d, rng, rank=min(rank, d))
    O = random_observable(d, rng)
    phi = dephase(rho, O)
    gap = relative_entropy(rho, phi) - (von_neumann_entropy(phi) - von_neumann_entropy(rho))
    assert abs(gap) <= 1e-9


def test_relative_entropy_pure_to_dephased_qubit():
    plus = DensityMatrix.from_ket(np.array([1, 1]) / np.sqrt(2))
    assert relative_entropy(plus, dephase(plus, sigma_z())) == pytest.approx(1.0, abs=1e-12)
    assert relative_entropy(plus, dephase(plus, sigma_from_phase(0.0))) == pytest.approx(0.0, abs=1e-12)
