import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240801)


def random_density_matrix(gen: np.random.Generator, dim: int = 4) -> np.ndarray:
    """Ginibre-induced random density matrix."""
    g = gen.standard_normal((dim, dim)) + 1j * gen.standard_normal((dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_global_unitary(gen: np.random.Generator, dim: int = 4) -> np.ndarray:
    """Haar-ish random unitary from the QR decomposition of a Ginibre matrix."""
    g = gen.standard_normal((dim, dim)) + 1j * gen.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))
