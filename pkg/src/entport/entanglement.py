"""Entanglement quantifiers for two-qubit states.

The workhorse measure is the negativity: minus twice the sum of the
negative eigenvalues of the partial transpose, normalised to [0, 1].  For
two qubits it vanishes exactly on the separable states.  Pure states also
admit the entropy of entanglement (von Neumann entropy of either reduced
state); the two quantities do not coincide, but the entropy is a strictly
increasing function of the negativity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .matkernel import check_density_matrix, herm_eigvals, partial_trace, partial_transpose, purity
from .states import seed_state

#: Partial-transpose eigenvalues above this are treated as non-negative,
#: so roundoff on exactly separable states cannot fake entanglement.
NEGATIVE_EIG_THRESHOLD = -1e-10

#: Purity slack accepted when a pure state is required.
PURITY_ATOL = 1e-8


@dataclass
class EntanglementReport:
    """Negativity value together with the eigenvalues that produced it."""

    value: float
    negative_eigs: list[float] = field(default_factory=list)


def negativity(rho: np.ndarray) -> EntanglementReport:
    """Entanglement of a two-qubit density matrix via the partial transpose.

    Eigenvalues of the partial transpose below ``NEGATIVE_EIG_THRESHOLD``
    are collected; the measure is minus twice their sum, clamped to [0, 1].
    Zero if and only if the state is separable.
    """
    rho = check_density_matrix(rho, dim=4)
    eigs = herm_eigvals(partial_transpose(rho))
    negative = [float(w) for w in eigs if w < NEGATIVE_EIG_THRESHOLD]
    value = -2.0 * sum(negative)
    return EntanglementReport(value=float(min(1.0, max(0.0, value))), negative_eigs=negative)


def entropy_of_entanglement(rho: np.ndarray) -> float:
    """Von Neumann entropy (base 2) of either reduced state of a pure state.

    Only defined for pure inputs: Tr(rho^2) must equal 1 within
    ``PURITY_ATOL``.  Returns a value in [0, 1]; the two reduced states give
    the same result.
    """
    rho = check_density_matrix(rho, dim=4)
    if abs(purity(rho) - 1.0) > PURITY_ATOL:
        raise ValueError("entropy of entanglement is defined for pure states only")
    probs = herm_eigvals(partial_trace(rho, keep=0))
    probs = probs[probs > 1e-12]  # 0 log 0 := 0
    return float(max(0.0, -np.sum(probs * np.log2(probs))))


def entropy_vs_negativity_curve(points: int) -> list[tuple[float, float]]:
    """Sample the entropy of entanglement as a function of the negativity.

    The negativity ``e`` is sampled uniformly on [0, 1]; for each sample the
    entropy is evaluated on the canonical pure state with that negativity.
    The sequence runs from (0, 0) to (1, 1) and is strictly increasing.
    """
    if points < 2:
        raise ValueError(f"need at least 2 points, got {points}")
    curve = []
    for e in np.linspace(0.0, 1.0, points):
        curve.append((float(e), entropy_of_entanglement(seed_state(float(e)))))
    return curve
