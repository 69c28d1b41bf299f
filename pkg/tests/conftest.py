import numpy as np
import pytest

from spinsep import DimVector, random_density


@pytest.fixture
def rng():
    return np.random.default_rng(20260808)


def random_matrix(n, rng):
    """Unconstrained complex test matrix."""
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def mixed_to_norm(dims: DimVector, target: float, rng):
    """Random density blended toward the maximally mixed state so its
    spin L1 norm equals ``target`` (or is already below it)."""
    from spinsep import check_density, spin_l1_norm, to_spin

    rho0 = random_density(dims, rng)
    norm0 = spin_l1_norm(to_spin(rho0))
    lam = min(1.0, target / norm0)
    n = dims.size
    m = lam * rho0.matrix + (1.0 - lam) * np.eye(n) / n
    return check_density(m, dims)
