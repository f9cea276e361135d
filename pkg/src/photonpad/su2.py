"""Lifting qubit unitaries to photon-number sectors, and exact Haar averages.

A polarization rotation U in U(2) acts on the n-photon sector as the
restriction of U^(x n) to the symmetric subspace,

    L_n(U) = V_n^dag U^(x n) V_n,

the (n+1)-dimensional spin-n/2 representation. ``block_lift`` assembles the
direct sum over all sectors of K(N).

Haar averages over U(2) are computed two independent ways:

* closed form: averaging L(U) rho L(U)^dag over Haar-random U projects each
  sector onto its maximally mixed state and erases all cross-sector blocks
  (``haar_channel_apply``, ``haar_choi``);
* numerically exact quadrature: ``HaarQuadrature`` integrates any moment of
  degree <= order in U and in conj(U) with zero quadrature error, using the
  Hopf-coordinate form of the Haar measure (see below), so Haar moment
  operators come out at machine precision without sampling.

Quadrature construction: parameterize

    U = [[e^{i phi} cos(theta), e^{i psi} sin(theta)],
         [-e^{-i psi} sin(theta), e^{-i phi} cos(theta)]],

with phi, psi in [0, 2pi) and theta in [0, pi/2]; the normalized Haar
measure is sin(theta) cos(theta) dtheta dphi dpsi / (2 pi^2). Balanced
monomials of degree k in U entries and k in their conjugates are
trigonometric polynomials of degree <= 2k in phi and psi, handled exactly
by uniform (trapezoidal) grids with at least 2k+1 points, and after the
substitution u = cos(2 theta) the surviving theta dependence is a
polynomial of degree <= k in u, handled exactly by Gauss-Legendre nodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from .errors import (
    NotDensityOperatorError,
    NotUnitaryError,
    QuadratureOrderError,
    SpinRangeError,
)
from .fock import SectorStructure, symmetric_embedding
from .linalg import dagger, is_hermitian, is_unitary

__all__ = [
    "lift_symmetric",
    "block_lift",
    "multiplicity",
    "HaarQuadrature",
    "tensor_power",
    "haar_moment",
    "haar_channel_apply",
    "haar_choi",
    "check_density",
]


def _check_qubit_unitary(u: np.ndarray, tol: float) -> np.ndarray:
    u = np.asarray(u, dtype=np.complex128)
    if u.shape != (2, 2):
        raise NotUnitaryError(f"expected a 2x2 matrix, got shape {u.shape}")
    if not is_unitary(u, tol):
        raise NotUnitaryError("matrix is not unitary within tolerance")
    return u


def tensor_power(u: np.ndarray, k: int) -> np.ndarray:
    """k-fold Kronecker power; k = 0 gives the 1x1 identity."""
    out = np.eye(1, dtype=np.complex128)
    for _ in range(k):
        out = np.kron(out, u)
    return out


def lift_symmetric(u: np.ndarray, n: int, tol: float = 1e-10) -> np.ndarray:
    """Spin-n/2 lift of a qubit unitary: V_n^dag u^(x n) V_n.

    Shape (n+1, n+1) in the descending-k Fock basis of sector n; ``n = 0``
    returns the 1x1 identity. Satisfies L_n(uw) = L_n(u) L_n(w) and
    L_n(u)^dag = L_n(u^dag).
    """
    u = _check_qubit_unitary(u, tol)
    if n == 0:
        return np.eye(1, dtype=np.complex128)
    v = symmetric_embedding(n)
    return dagger(v) @ tensor_power(u, n) @ v


def block_lift(u: np.ndarray, structure: SectorStructure, tol: float = 1e-10) -> np.ndarray:
    """Direct sum of sector lifts: L(U) = L_0(U) (+) ... (+) L_N(U) on K(N)."""
    u = _check_qubit_unitary(u, tol)
    out = np.zeros((structure.total_dim, structure.total_dim), dtype=np.complex128)
    for n in range(structure.max_photons + 1):
        s = structure.sector_slice(n)
        out[s, s] = lift_symmetric(u, n, tol)
    return out


def multiplicity(k: int, s) -> int:
    """Multiplicity of the spin-s irreducible block inside (C^2)^(x k).

    ``s`` may be an int, Fraction, or float equal to a half-integer with the
    same parity as k (integer spins for even k, half-odd for odd k), with
    s <= k/2. Closed form: (2s+1)/(k/2+s+1) * C(k, k/2+s), always an integer.
    The multiplicities satisfy sum_s (2s+1) m_s = 2^k.
    """
    if not (isinstance(k, (int, np.integer)) and k >= 1):
        raise SpinRangeError(f"tensor order k must be a positive int, got {k!r}")
    two_s = Fraction(s).limit_denominator(2) * 2
    if two_s.denominator != 1 or Fraction(s) * 2 != two_s:
        raise SpinRangeError(f"spin {s!r} is not a half-integer")
    two_s = int(two_s)
    if two_s < 0 or two_s > k:
        raise SpinRangeError(f"spin {s!r} outside 0..{k}/2 for k={k}")
    if two_s % 2 != k % 2:
        raise SpinRangeError(f"spin {s!r} has wrong parity for k={k}")
    j = (k + two_s) // 2
    num = (two_s + 1) * math.comb(k, j)
    assert num % (j + 1) == 0
    return num // (j + 1)


@dataclass(frozen=True)
class HaarQuadrature:
    """Product quadrature rule exact for balanced Haar moments up to ``order``.

    ``angular_nodes`` uniform points in each of phi and psi (default 2*order+1,
    the minimum for exactness) and ``radial_nodes`` Gauss-Legendre points in
    u = cos(2 theta) (default order+1). Any integrand that is a polynomial of
    degree <= order in the entries of U and degree <= order in their
    conjugates is integrated with zero quadrature error.
    """

    order: int
    angular_nodes: int = 0
    radial_nodes: int = 0

    def __post_init__(self):
        if not (isinstance(self.order, (int, np.integer)) and self.order >= 1):
            raise QuadratureOrderError(f"order must be a positive int, got {self.order!r}")
        if self.angular_nodes == 0:
            object.__setattr__(self, "angular_nodes", 2 * self.order + 1)
        if self.radial_nodes == 0:
            object.__setattr__(self, "radial_nodes", self.order + 1)
        if self.angular_nodes < 2 * self.order + 1:
            raise QuadratureOrderError(
                f"{self.angular_nodes} angular nodes cannot integrate order {self.order} exactly"
            )
        if 2 * self.radial_nodes - 1 < self.order:
            raise QuadratureOrderError(
                f"{self.radial_nodes} radial nodes cannot integrate order {self.order} exactly"
            )

    @cached_property
    def _nodes(self) -> tuple[np.ndarray, np.ndarray]:
        m, g = self.angular_nodes, self.radial_nodes
        phi = 2.0 * np.pi * np.arange(m) / m
        u, w = np.polynomial.legendre.leggauss(g)
        cos_t = np.sqrt((1.0 + u) / 2.0)
        sin_t = np.sqrt((1.0 - u) / 2.0)
        count = m * m * g
        us = np.empty((count, 2, 2), dtype=np.complex128)
        ws = np.empty(count)
        idx = 0
        for a in range(m):
            ea = np.exp(1j * phi[a])
            for b in range(m):
                eb = np.exp(1j * phi[b])
                for c in range(g):
                    us[idx, 0, 0] = ea * cos_t[c]
                    us[idx, 0, 1] = eb * sin_t[c]
                    us[idx, 1, 0] = -np.conj(eb) * sin_t[c]
                    us[idx, 1, 1] = np.conj(ea) * cos_t[c]
                    ws[idx] = w[c] / (2.0 * m * m)
                    idx += 1
        return us, ws

    @property
    def unitaries(self) -> np.ndarray:
        """All quadrature nodes as an (n_nodes, 2, 2) array of SU(2) matrices."""
        return self._nodes[0]

    @property
    def weights(self) -> np.ndarray:
        """Quadrature weights; they are positive and sum to one."""
        return self._nodes[1]

    @property
    def node_count(self) -> int:
        return self.angular_nodes**2 * self.radial_nodes

    def average(self, f) -> np.ndarray:
        """Haar average of a matrix-valued function of U."""
        us, ws = self._nodes
        acc = None
        for u, w in zip(us, ws):
            term = w * np.asarray(f(u), dtype=np.complex128)
            acc = term if acc is None else acc + term
        return acc


@lru_cache(maxsize=None)
def default_quadrature(order: int) -> HaarQuadrature:
    return HaarQuadrature(order)


def haar_moment(k: int, quadrature: HaarQuadrature | None = None) -> np.ndarray:
    """Haar moment operator M_k = integral of U^(x k) (x) conj(U)^(x k) dU.

    A 4^k x 4^k Hermitian idempotent (the projector onto operators commuting
    with the diagonal k-fold action). Requires ``quadrature.order >= k``.
    """
    if not (isinstance(k, (int, np.integer)) and k >= 1):
        raise QuadratureOrderError(f"moment order k must be a positive int, got {k!r}")
    quad = quadrature if quadrature is not None else default_quadrature(k)
    if quad.order < k:
        raise QuadratureOrderError(f"quadrature order {quad.order} < moment order {k}")
    dim = 4**k
    out = np.zeros((dim, dim), dtype=np.complex128)
    for u, w in zip(quad.unitaries, quad.weights):
        uk = tensor_power(u, k)
        out += w * np.kron(uk, uk.conj())
    return out


def check_density(rho: np.ndarray, dim: int, tol: float = 1e-10) -> np.ndarray:
    """Validate a density operator of the given dimension and return it."""
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (dim, dim):
        raise NotDensityOperatorError(f"expected shape {(dim, dim)}, got {rho.shape}")
    if not np.all(np.isfinite(rho.view(np.float64))):
        raise NotDensityOperatorError("density operator contains non-finite entries")
    if not is_hermitian(rho, tol):
        raise NotDensityOperatorError("density operator is not Hermitian within tolerance")
    if abs(np.trace(rho) - 1.0) > tol:
        raise NotDensityOperatorError(f"trace {np.trace(rho)!r} is not 1 within tolerance")
    w = np.linalg.eigvalsh(rho)
    if w.min() < -tol:
        raise NotDensityOperatorError(f"negative eigenvalue {w.min():.3e}")
    return rho


def haar_channel_apply(rho: np.ndarray, structure: SectorStructure, tol: float = 1e-10) -> np.ndarray:
    """Closed-form Haar-averaged encryption of a state on K(N).

    Averaging L(U) rho L(U)^dag over Haar-random U gives

        rho' = sum_n tr[rho Pi_n] Pi_n / (n+1):

    every sector collapses to its maximally mixed state weighted by the
    sector population, and all coherence between different photon numbers
    is erased.
    """
    rho = check_density(rho, structure.total_dim, tol)
    out = np.zeros_like(rho)
    for n in range(structure.max_photons + 1):
        s = structure.sector_slice(n)
        population = np.trace(rho[s, s]).real
        out[s, s] = (population / (n + 1)) * np.eye(n + 1)
    return out


def haar_choi(structure: SectorStructure) -> np.ndarray:
    """Choi operator of the Haar-averaged channel on K(N).

    With the convention J = (E (x) I)(|Omega><Omega|), |Omega> = sum_i |ii>
    unnormalized, the Haar channel gives

        J = sum_n Pi_n (x) Pi_n / (n+1),

    which is positive semidefinite with tr_1 J = I.
    """
    d = structure.total_dim
    out = np.zeros((d * d, d * d), dtype=np.complex128)
    for n in range(structure.max_photons + 1):
        p = structure.projector(n)
        out += np.kron(p, p) / (n + 1)
    return out
