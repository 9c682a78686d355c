"""Squared-deviation information measures for one and two qubits.

The information carried by one observable is the normalised sum of squared
deviations of its outcome probabilities from uniform.  Summed over a
complete set of mutually complementary observables this becomes a function
of the purity alone, which is what the closed forms below evaluate:
``2 Tr(rho^2) - 1`` for a qubit and ``(2/3)(4 Tr(rho^2) - 1)`` for a qubit
pair.  The two-qubit total splits into the two individual (reduced-state)
informations plus a correlation term that vanishes exactly on product
states.  The correlation term equals (2/3) of the squared correlation-matrix
norm minus the product of squared Bloch norms, so for mixed states it can
dip below zero (never below -2/3); it is nonnegative on every state the
teleportation protocol produces.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matkernel import check_density_matrix, partial_trace, purity

#: |correlation| below this is clamped to zero (roundoff on product states).
CORRELATION_CLAMP = 1e-12


@dataclass
class InformationReport:
    """Two-qubit information split into individual and correlation parts.

    ``correlation == total - (2/3) (individual_a + individual_b
    + individual_a * individual_b)`` up to the clamp tolerance.
    """

    total: float
    individual_a: float
    individual_b: float
    correlation: float


def observable_information(probs, k: int) -> float:
    """Information (in bits, 0..k) carried by one measured observable.

    Parameters
    ----------
    probs : sequence of float
        Outcome probabilities; must be nonnegative, sum to 1 within 1e-10
        and have length ``2**k``.
    k : int
        Number of bits the system can carry.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    p = np.asarray(probs, dtype=float)
    n = 2**k
    if p.ndim != 1 or p.size != n:
        raise ValueError(f"expected {n} probabilities for k={k}, got shape {p.shape}")
    if np.any(p < 0) or abs(p.sum() - 1.0) > 1e-10:
        raise ValueError("probabilities must be nonnegative and sum to 1")
    norm = n * k / (n - 1)
    return float(norm * np.sum((p - 1.0 / n) ** 2))


def total_information(rho: np.ndarray) -> float:
    """Total information of a qubit (dim 2) or qubit pair (dim 4).

    Summed over a complete set of complementary observables this depends on
    the state only through its purity: ``2 Tr(rho^2) - 1`` for one qubit,
    ``(2/3)(4 Tr(rho^2) - 1)`` for two.
    """
    rho = np.asarray(rho)
    if rho.shape not in ((2, 2), (4, 4)):
        raise ValueError(f"expected a 2x2 or 4x4 density matrix, got {rho.shape}")
    rho = check_density_matrix(rho, dim=rho.shape[0])
    p = purity(rho)
    if rho.shape[0] == 2:
        return max(0.0, 2.0 * p - 1.0)
    return max(0.0, (2.0 / 3.0) * (4.0 * p - 1.0))


def information_decomposition(rho: np.ndarray) -> InformationReport:
    """Split the total two-qubit information into individual and correlation parts.

    The individual terms are the single-qubit informations of the reduced
    states; the correlation term is the total minus the information of the
    product of the reduced states.
    """
    rho = check_density_matrix(rho, dim=4)
    total = total_information(rho)
    ia = total_information(partial_trace(rho, keep=0))
    ib = total_information(partial_trace(rho, keep=1))
    correlation = total - (2.0 / 3.0) * (ia + ib + ia * ib)
    if abs(correlation) < CORRELATION_CLAMP:
        correlation = 0.0
    return InformationReport(
        total=total, individual_a=ia, individual_b=ib, correlation=correlation
    )
