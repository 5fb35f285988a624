"""Exact two-dimensional dynamics of G = U_s(θ)·U_G(φ) in the (|m⟩, |n⟩) basis.

G has determinant e^{i(θ+φ)}, so G = e^{i(θ+φ)/2}·M with M in SU(2):

    M = cos w·I + i·sin w·[[cos 2x, e^{-iφ/2}·sin 2x], [e^{iφ/2}·sin 2x, -cos 2x]]

which gives eigenvalues λ± = e^{i(θ+φ)/2 ± iw} and Mᵗ in closed form. All probabilities below
are insensitive to the global factor e^{i(θ+φ)t/2}; `power_matrix` includes it so that
`power_matrix(ctx, 1)` equals `iteration_matrix(ctx)`.
"""

from __future__ import annotations

import logging
import math
from typing import Iterable

import numpy as np
import pandas as pd
from scipy.optimize import brentq

from ampamp.errors import DomainError, InputError

logger = logging.getLogger(__name__)

# l_m below this means the eigenvector normalization is degenerate
_DEGENERATE_NORMALIZER = 1e-24
# |sin(θ/2)| below this makes the diffusion the identity
_IDENTITY_DIFFUSION_SINE = 1e-12


class GroverAnalytic:
    """Derived quantities of the 2×2 Grover iteration for (N, N_m, φ, θ).

    Attributes:
        n_qubits (int): N.
        n_marked (int): N_m.
        beta (float): β with sin β = √(N_m / 2^N).
        phi (float): Oracle phase φ.
        theta (float): Diffusion angle θ.
        w (float): Eigenphase w ∈ [0, π], cos w = cos((φ-θ)/2) - 2·sin(φ/2)·sin(θ/2)·sin²β.
        x (float): Eigenvector angle from (sin x, cos x) via atan2.
        l_m (float): Normalizer of the (sin x, cos x) numerators.
        lambda_plus, lambda_minus (complex): Eigenvalues of G.
    """

    __slots__ = ("_n_qubits", "_n_marked", "_phi", "_theta", "_sin_beta", "_cos_beta", "_beta", "_cos_w", "_w", "_x", "_l_m")

    # region Init

    def __init__(self, n_qubits: int, n_marked: int, phi: float, theta: float):
        """Compute w, x and l_m.

        Raises:
            InputError: If not 1 <= $n_marked < 2^$n_qubits.
            DomainError: If sin($theta/2) ≈ 0 (the diffusion is the identity) or the eigenvector
                normalization degenerates (l_m → 0).
        """
        size = 1 << n_qubits
        # Check: both |m⟩ and |n⟩ must be non-empty
        if not 1 <= n_marked < size:
            raise InputError(f"Cannot call `GroverAnalytic.__init__` because $n_marked ({n_marked}) is not in [1, 2^{n_qubits})")

        self._n_qubits = n_qubits
        self._n_marked = n_marked
        self._phi = float(phi)
        self._theta = float(theta)
        # Check: the diffusion must act, otherwise |m⟩ never grows
        if abs(math.sin(self._theta / 2)) < _IDENTITY_DIFFUSION_SINE:
            raise DomainError(f"Cannot call `GroverAnalytic.__init__` because $theta ({self._theta!r}) has sin(θ/2) ≈ 0, so the diffusion is the identity")

        sin2_beta = n_marked / size
        self._sin_beta = math.sqrt(sin2_beta)
        self._cos_beta = math.sqrt((size - n_marked) / size)
        self._beta = math.atan2(self._sin_beta, self._cos_beta)

        half_phi, half_theta = self._phi / 2, self._theta / 2
        self._cos_w = math.cos(half_phi - half_theta) - 2 * math.sin(half_phi) * math.sin(half_theta) * sin2_beta

        # M_12 and Im(M_11) scaled by 1/i: sin w·sin 2x and sin w·cos 2x
        sin_x_numerator = math.sin(half_theta) * 2 * self._sin_beta * self._cos_beta
        cos_2x_part = math.sin(half_phi - half_theta) + 2 * math.cos(half_phi) * math.sin(half_theta) * sin2_beta
        sin_w = math.hypot(sin_x_numerator, cos_2x_part)
        self._w = math.atan2(sin_w, self._cos_w)

        cos_x_numerator = sin_w + cos_2x_part
        self._l_m = sin_x_numerator**2 + cos_x_numerator**2
        if self._l_m < _DEGENERATE_NORMALIZER:
            raise DomainError(f"Cannot call `GroverAnalytic.__init__` because the eigenvector normalization l_m ({self._l_m:.3e}) vanishes for φ={self._phi!r}, θ={self._theta!r}")
        self._x = math.atan2(sin_x_numerator, cos_x_numerator)

    # endregion

    # region Properties

    @property
    def n_qubits(self) -> int:
        return self._n_qubits

    @property
    def n_marked(self) -> int:
        return self._n_marked

    @property
    def phi(self) -> float:
        return self._phi

    @property
    def theta(self) -> float:
        return self._theta

    @property
    def beta(self) -> float:
        return self._beta

    @property
    def sin_beta(self) -> float:
        return self._sin_beta

    @property
    def cos_beta(self) -> float:
        return self._cos_beta

    @property
    def cos_w(self) -> float:
        return self._cos_w

    @property
    def w(self) -> float:
        return self._w

    @property
    def x(self) -> float:
        return self._x

    @property
    def l_m(self) -> float:
        return self._l_m

    @property
    def lambda_plus(self) -> complex:
        return complex(np.exp(1j * ((self._theta + self._phi) / 2 + self._w)))

    @property
    def lambda_minus(self) -> complex:
        return complex(np.exp(1j * ((self._theta + self._phi) / 2 - self._w)))

    # endregion

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(N={self._n_qubits}, N_m={self._n_marked}, φ={self._phi!r}, θ={self._theta!r}, w={self._w!r}, x={self._x!r})"


# region Amplitudes and matrices


def amplitude_m(t: int, ctx: GroverAnalytic) -> complex:
    """⟨m|Mᵗ|s⟩ = sin β·cos(wt) + i·(e^{-iφ/2}·cos β·sin 2x + sin β·cos 2x)·sin(wt).

    Equal to ⟨m|Gᵗ|s⟩ up to the global phase e^{i(θ+φ)t/2}.
    """
    # Check: iterations are counted from zero
    if t < 0:
        raise InputError(f"Cannot call `amplitude_m` because $t ({t}) is not >= 0")
    wt = ctx.w * t
    k = np.exp(-0.5j * ctx.phi) * ctx.cos_beta * math.sin(2 * ctx.x) + ctx.sin_beta * math.cos(2 * ctx.x)
    return complex(ctx.sin_beta * math.cos(wt) + 1j * k * math.sin(wt))


def p_m(t: int, ctx: GroverAnalytic) -> float:
    """Exact probability of |m⟩ after $t iterations."""
    return abs(amplitude_m(t, ctx)) ** 2


def p_m_approx(t: int, ctx: GroverAnalytic) -> float:
    """Large-2^N approximation sin²(2x)·sin²(wt)."""
    return math.sin(2 * ctx.x) ** 2 * math.sin(ctx.w * t) ** 2


def iteration_matrix(ctx: GroverAnalytic) -> np.ndarray:
    """G = U_s(θ)·U_G(φ) as a 2×2 matrix acting on (amp_m, amp_n)."""
    e_phi = np.exp(1j * ctx.phi)
    e_theta_m1 = np.exp(1j * ctx.theta) - 1
    s, c = ctx.sin_beta, ctx.cos_beta
    return np.array(
        [
            [e_phi * (1 + e_theta_m1 * s * s), e_theta_m1 * s * c],
            [e_phi * e_theta_m1 * s * c, 1 + e_theta_m1 * c * c],
        ],
        dtype=np.complex128,
    )


def power_matrix(ctx: GroverAnalytic, t: int) -> np.ndarray:
    """Gᵗ from the eigen-decomposition, including the global phase e^{i(θ+φ)t/2}."""
    wt = ctx.w * t
    sin_2x = math.sin(2 * ctx.x)
    off = 1j * math.sin(wt) * sin_2x
    m_t = np.array(
        [
            [np.exp(1j * wt) * math.cos(ctx.x) ** 2 + np.exp(-1j * wt) * math.sin(ctx.x) ** 2, np.exp(-0.5j * ctx.phi) * off],
            [np.exp(0.5j * ctx.phi) * off, np.exp(1j * wt) * math.sin(ctx.x) ** 2 + np.exp(-1j * wt) * math.cos(ctx.x) ** 2],
        ],
        dtype=np.complex128,
    )
    return np.exp(0.5j * (ctx.theta + ctx.phi) * t) * m_t


def initial_vector(ctx: GroverAnalytic) -> np.ndarray:
    """|s⟩ = (sin β, cos β) in the (|m⟩, |n⟩) basis."""
    return np.array([ctx.sin_beta, ctx.cos_beta], dtype=np.complex128)


def peak_iteration(ctx: GroverAnalytic, around: int | None = None) -> int:
    """Integer t maximizing the exact P_m(t) near π/(2w) (or near $around)."""
    center = around if around is not None else max(1, round(math.pi / (2 * ctx.w)))
    candidates = [t for t in (center - 1, center, center + 1) if t >= 1]
    return max(candidates, key=lambda t: (p_m(t, ctx), -abs(t - center)))


# endregion

# region Resonance


def p_max(phi: float, theta: float, n_qubits: int) -> float:
    """Peak achievable |m⟩ probability for one marked state (large-2^N approximation).

    θ = π uses 1 / (sin²(φ/2) + (2^N/4)·cos²(φ/2)); other θ use the general form.

    Raises:
        DomainError: If the denominator vanishes.
    """
    size = float(1 << n_qubits)
    if math.isclose(math.remainder(theta - math.pi, math.tau), 0.0, abs_tol=1e-15):
        denominator = math.sin(phi / 2) ** 2 + size / 4 * math.cos(phi / 2) ** 2
        numerator = 1.0
    else:
        half_diff = (theta - phi) / 2
        numerator = 4 * math.sin(theta / 2) ** 2
        denominator = size * math.sin(half_diff) ** 2 + 4 * math.sin(theta / 2) * math.sin(phi / 2) * math.cos(half_diff)

    if abs(denominator) < 1e-300:
        raise DomainError(f"Cannot call `p_max` because the denominator vanishes for φ={phi!r}, θ={theta!r}, N={n_qubits}")
    return numerator / denominator


def fwhm(n_qubits: int) -> float:
    """2·acos(2/√(2^N - 4)): the φ at which the θ = π resonance first reaches half its maximum.

    Raises:
        DomainError: If $n_qubits <= 2.
    """
    if n_qubits <= 2:
        raise DomainError(f"Cannot call `fwhm` because $n_qubits ({n_qubits}) is not > 2")
    return 2 * math.acos(min(1.0, 2 / math.sqrt((1 << n_qubits) - 4)))


def half_max_crossing(n_qubits: int) -> float:
    """Numerically locate the lower half-maximum φ of the θ = π resonance on [0, π]."""
    if n_qubits <= 2:
        raise DomainError(f"Cannot call `half_max_crossing` because $n_qubits ({n_qubits}) is not > 2")
    return float(brentq(lambda phi: p_max(phi, math.pi, n_qubits) - 0.5, 0.0, math.pi, xtol=1e-14, rtol=1e-14))


def resonance_full_width(n_qubits: int) -> float:
    """Width of the θ = π resonance peak around φ = π at half its maximum."""
    return 2 * math.pi - 2 * fwhm(n_qubits)


def resonance_curve(n_qubits: int, theta: float, phi_grid: Iterable[float]) -> pd.DataFrame:
    """Tabulate P_max over $phi_grid as a DataFrame with columns `phi`, `p_max`."""
    phis = [float(p) for p in phi_grid]
    # Check: at least one point
    if not phis:
        raise InputError("Cannot call `resonance_curve` because $phi_grid is empty")
    values = [p_max(phi, theta, n_qubits) for phi in phis]
    logger.debug(f"Resonance curve N={n_qubits}, θ={theta!r}: {len(phis)} point(s)")
    return pd.DataFrame({"phi": phis, "p_max": values})


# endregion
