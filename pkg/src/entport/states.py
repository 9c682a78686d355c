"""States and operators used by the teleportation protocol.

Two-qubit states are handled in two equivalent representations: the 4x4
density matrix itself, and its expansion over Pauli tensor products
(two Bloch vectors plus a 3x3 correlation matrix).  Pauli axes are indexed
``(x, y, z) -> (0, 1, 2)`` everywhere in this package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .matkernel import HERMITICITY_ATOL, adjoint, as_operator, tensor

ID2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

#: Pauli matrices in project-wide axis order (x, y, z).
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

#: Sign patterns of the four Bell projectors in the Pauli expansion.
#: Index 0 is the singlet; 1, 2, 3 are the remaining Bell states.
BELL_SIGN_MATRICES = (
    np.diag([-1.0, -1.0, -1.0]),
    np.diag([-1.0, 1.0, 1.0]),
    np.diag([1.0, -1.0, 1.0]),
    np.diag([1.0, 1.0, -1.0]),
)

#: Receiver-side correction unitary for each Bell outcome, chosen so the
#: induced Bloch rotation is the negative of the outcome's sign matrix.
BOB_CORRECTIONS = (ID2, SIGMA_X, SIGMA_Y, SIGMA_Z)

UNITARITY_ATOL = 1e-10


def _check_unitary(u, atol: float = UNITARITY_ATOL) -> np.ndarray:
    u = as_operator(u, dims=(2,))
    if np.max(np.abs(u @ adjoint(u) - ID2)) > atol:
        raise ValueError("matrix is not unitary within tolerance")
    return u


@dataclass(frozen=True)
class HilbertSchmidtForm:
    """Pauli-expansion coefficients of a two-qubit operator.

    Attributes
    ----------
    a : ndarray, shape (3,)
        Bloch vector of the first qubit.
    b : ndarray, shape (3,)
        Bloch vector of the second qubit.
    c : ndarray, shape (3, 3)
        Correlation matrix; ``c[n, m]`` multiplies ``sigma_n (x) sigma_m``.
    """

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float).reshape(3)
        b = np.asarray(self.b, dtype=float).reshape(3)
        c = np.asarray(self.c, dtype=float).reshape(3, 3)
        for arr in (a, b, c):
            if not np.all(np.isfinite(arr)):
                raise ValueError("Hilbert-Schmidt coefficients must be finite")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)


@dataclass(frozen=True)
class SeedParams:
    """Parameters of the canonical one-parameter pure state.

    ``c0`` in [-1, 1] sets the correlation amplitude; the polarisation is
    the derived ``a0 = +sqrt(1 - c0^2)``, so ``a0^2 + c0^2 = 1`` by
    construction.  The state's entanglement equals ``|c0|``.
    """

    c0: float

    def __post_init__(self):
        if not -1.0 <= self.c0 <= 1.0:
            raise ValueError(f"c0 must lie in [-1, 1], got {self.c0}")

    @property
    def a0(self) -> float:
        return math.sqrt(max(0.0, 1.0 - self.c0 * self.c0))

    @property
    def entanglement(self) -> float:
        return abs(self.c0)


@dataclass(frozen=True)
class WernerChannel:
    """Isotropic noisy channel state, parameterised by phi in [-1, 1].

    ``f = (2 phi + 1) / 3`` scales the (negative, isotropic) correlations;
    the channel entanglement is ``ew = max(0, phi)``.  The state is the
    singlet at phi = 1 and maximally mixed at phi = -1/2.
    """

    phi: float

    def __post_init__(self):
        if not -1.0 <= self.phi <= 1.0:
            raise ValueError(f"phi must lie in [-1, 1], got {self.phi}")

    @property
    def f(self) -> float:
        return (2.0 * self.phi + 1.0) / 3.0

    @property
    def ew(self) -> float:
        return max(0.0, self.phi)

    def state(self) -> np.ndarray:
        return werner_state(self.phi)


@dataclass(frozen=True)
class BellOutcome:
    """One Bell-measurement outcome with its correction unitary."""

    alpha: int
    p_matrix: np.ndarray
    correction: np.ndarray

    def __post_init__(self):
        if self.alpha not in (0, 1, 2, 3):
            raise ValueError(f"alpha must be in 0..3, got {self.alpha}")
        # Optimality condition: the correction's Bloch rotation must be the
        # negative of the outcome's sign matrix.
        rot = rotation_from_unitary(self.correction)
        if np.max(np.abs(rot + self.p_matrix)) > 1e-12:
            raise ValueError("correction does not rotate by -P_alpha")


def bell_outcome(alpha: int) -> BellOutcome:
    """The Bell outcome ``alpha`` with the standard optimal correction."""
    if alpha not in (0, 1, 2, 3):
        raise ValueError(f"alpha must be in 0..3, got {alpha}")
    return BellOutcome(
        alpha=alpha,
        p_matrix=BELL_SIGN_MATRICES[alpha].copy(),
        correction=BOB_CORRECTIONS[alpha].copy(),
    )


def hs_compose(form: HilbertSchmidtForm) -> np.ndarray:
    """Build the 4x4 matrix from Pauli-expansion coefficients.

    Returns ``(1/4) [1(x)1 + a.sigma (x) 1 + 1 (x) b.sigma
    + sum_nm c[n,m] sigma_n (x) sigma_m]``.
    """
    rho = np.eye(4, dtype=complex)
    for n in range(3):
        rho += form.a[n] * np.kron(PAULIS[n], ID2)
        rho += form.b[n] * np.kron(ID2, PAULIS[n])
        for m in range(3):
            if form.c[n, m] != 0.0:
                rho += form.c[n, m] * np.kron(PAULIS[n], PAULIS[m])
    return rho / 4.0


def hs_decompose(rho: np.ndarray) -> HilbertSchmidtForm:
    """Extract Pauli-expansion coefficients from a 4x4 matrix.

    The input must be Hermitian with unit trace; the coefficients are then
    ``a[n] = Tr[rho (sigma_n (x) 1)]`` and so on, all real.  Inverse of
    :func:`hs_compose` to machine precision.
    """
    rho = as_operator(rho, dims=(4,))
    if np.max(np.abs(rho - adjoint(rho))) > HERMITICITY_ATOL:
        raise ValueError("matrix must be Hermitian")
    if abs(np.trace(rho) - 1.0) > 1e-10:
        raise ValueError("matrix must have unit trace")
    a = np.array([np.trace(rho @ np.kron(p, ID2)).real for p in PAULIS])
    b = np.array([np.trace(rho @ np.kron(ID2, p)).real for p in PAULIS])
    c = np.array(
        [[np.trace(rho @ np.kron(PAULIS[n], PAULIS[m])).real for m in range(3)]
         for n in range(3)]
    )
    return HilbertSchmidtForm(a=a, b=b, c=c)


def seed_state(c0: float) -> np.ndarray:
    """Canonical pure state with entanglement ``|c0|``.

    Both Bloch vectors are ``(0, 0, a0)`` with ``a0 = sqrt(1 - c0^2)`` and
    the correlation matrix is ``diag(c0, -c0, 1)``.  Every two-qubit pure
    state is this state up to local unitaries.
    """
    params = SeedParams(c0)
    a = np.array([0.0, 0.0, params.a0])
    c = np.diag([params.c0, -params.c0, 1.0])
    return hs_compose(HilbertSchmidtForm(a=a, b=a, c=c))


def rotated_pure_state(c0: float, u1: np.ndarray, u2: np.ndarray) -> np.ndarray:
    """Seed state conjugated by the local unitary ``u1 (x) u2``.

    Purity and entanglement are those of ``seed_state(c0)``.
    """
    u1 = _check_unitary(u1)
    u2 = _check_unitary(u2)
    u = tensor(u1, u2)
    return u @ seed_state(c0) @ adjoint(u)


def random_local_unitary(rng) -> np.ndarray:
    """Haar-random SU(2) element, deterministic for a given seed.

    ``rng`` is either an integer seed or a ``numpy.random.Generator`` (which
    is advanced).  The first column is a normalised two-component complex
    Gaussian; the second is its orthogonal complement, which makes the
    result Haar-distributed with determinant exactly +1.
    """
    gen = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
    z = gen.standard_normal(2) + 1j * gen.standard_normal(2)
    z /= np.linalg.norm(z)
    return np.array([[z[0], -np.conj(z[1])], [z[1], np.conj(z[0])]])


def werner_state(phi: float) -> np.ndarray:
    """Werner state with parameter ``phi`` in [-1, 1].

    In the Pauli expansion both Bloch vectors vanish and the correlation
    matrix is ``-f I`` with ``f = (2 phi + 1) / 3``.  Eigenvalues are
    ``(1 - f) / 4`` (three-fold) and ``(1 + 3 f) / 4``.
    """
    channel = WernerChannel(phi)
    c = -channel.f * np.eye(3)
    return hs_compose(HilbertSchmidtForm(a=np.zeros(3), b=np.zeros(3), c=c))


def bell_projector(alpha: int) -> np.ndarray:
    """Rank-1 projector onto Bell state ``alpha`` (0 is the singlet)."""
    if alpha not in (0, 1, 2, 3):
        raise ValueError(f"alpha must be in 0..3, got {alpha}")
    zero = np.zeros(3)
    return hs_compose(HilbertSchmidtForm(a=zero, b=zero, c=BELL_SIGN_MATRICES[alpha]))


def rotation_from_unitary(u: np.ndarray) -> np.ndarray:
    """Bloch rotation induced by a qubit unitary.

    Returns the real 3x3 matrix ``O`` with
    ``u (a . sigma) u^dagger = (O^T a) . sigma`` for every real ``a``,
    i.e. ``O[k, n] = Re Tr[sigma_n u sigma_k u^dagger] / 2``.  ``O`` is
    orthogonal with determinant +1.
    """
    u = _check_unitary(u)
    o = np.empty((3, 3))
    for k in range(3):
        conjugated = u @ PAULIS[k] @ adjoint(u)
        for n in range(3):
            o[k, n] = np.trace(PAULIS[n] @ conjugated).real / 2.0
    return o


def random_product_state(rng) -> np.ndarray:
    """Random two-qubit product state ``rho_a (x) rho_b``.

    Each factor has a Bloch vector drawn uniformly from the unit ball.
    """
    gen = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
    return tensor(_random_qubit_state(gen), _random_qubit_state(gen))


def _random_qubit_state(gen: np.random.Generator) -> np.ndarray:
    r = gen.standard_normal(3)
    norm = np.linalg.norm(r)
    if norm > 0:
        r *= gen.random() ** (1.0 / 3.0) / norm
    return (ID2 + r[0] * SIGMA_X + r[1] * SIGMA_Y + r[2] * SIGMA_Z) / 2.0
