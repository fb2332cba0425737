"""Surface-plasmon-polariton dispersion at a single metal/dielectric interface.

Bound-mode in-plane wavenumber

    k = (2 pi / lambda) * sqrt(eps_m eps_d / (eps_m + eps_d))

with branch Re k >= 0 (for passive media this also gives Im k >= 0), plus the
derived effective mode index, propagation and coherence lengths, the prism
coupling angle, and grating momentum folding. The dielectric side is the
medium the film exits into (vacuum for the reference stack); prism loading of
the mode is deliberately ignored.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .constants import C0
from .errors import NoPrismCouplingError, SppSingularityError
from .materials import Material, permittivity

Dispersion = Callable[[float], "SppMode"]


@dataclass(frozen=True)
class SppMode:
    """Complex SPP wavenumber at one frequency, with derived quantities."""

    omega: float
    k: complex
    lambda_vac: float

    @property
    def n_sp(self) -> complex:
        """Effective mode index c0 k / omega."""
        return self.k * C0 / self.omega

    @property
    def L_prop(self) -> float:
        """Intensity propagation length 1/(2 Im k); inf for a lossless mode."""
        return 1.0 / (2.0 * self.k.imag) if self.k.imag > 0.0 else math.inf


@dataclass(frozen=True)
class GratingSpec:
    """Periodic corrugation supplying in-plane momentum quanta k_a = 2 pi / a."""

    period_a: float
    order_n: int = 1

    def __post_init__(self):
        if not (self.period_a > 0.0 and math.isfinite(self.period_a)):
            raise ValueError(f"grating period must be positive and finite, got {self.period_a}")
        if int(self.order_n) != self.order_n:
            raise ValueError("grating order must be an integer")

    @property
    def k_a(self) -> float:
        return 2.0 * math.pi / self.period_a


def spp_mode(metal_eps: complex, dielectric_eps: complex, lambda_vac: float) -> SppMode:
    """Single-interface SPP mode from the two permittivities at lambda_vac (m).

    Raises SppSingularityError at the resonance pole eps_m + eps_d = 0 and
    warns (without failing) when the bound-mode condition
    Re eps_m < -Re eps_d does not hold.
    """
    metal_eps = complex(metal_eps)
    dielectric_eps = complex(dielectric_eps)
    total = metal_eps + dielectric_eps
    if total == 0.0:
        raise SppSingularityError(
            f"eps_m + eps_d = 0 at lambda = {lambda_vac:.4e} m (surface-resonance pole)"
        )
    if not (metal_eps.real < -dielectric_eps.real):
        warnings.warn(
            "Re eps_m < -Re eps_d does not hold; the interface mode is not bound",
            stacklevel=2,
        )
    k0 = 2.0 * math.pi / lambda_vac
    k = complex(np.sqrt(metal_eps * dielectric_eps / total)) * k0
    if k.real < 0.0 or (k.real == 0.0 and k.imag < 0.0):
        k = -k
    omega = k0 * C0
    return SppMode(omega=omega, k=k, lambda_vac=float(lambda_vac))


def spp_dispersion(metal: Material, dielectric: Material) -> Dispersion:
    """Referentially transparent omega -> SppMode for a material pair."""

    def dispersion(omega: float) -> SppMode:
        lam = 2.0 * math.pi * C0 / omega
        return spp_mode(permittivity(metal, lam), permittivity(dielectric, lam), lam)

    return dispersion


def coherence_length_damping(mode: SppMode) -> float:
    """Interaction length limited by mode damping: 1/(2 Im k); inf if lossless."""
    return 1.0 / (2.0 * mode.k.imag) if mode.k.imag > 0.0 else math.inf


def coherence_length_mismatch(k0_eff: complex, k1: complex, k2: complex) -> float:
    """Interaction length 1/|k0 - k1* - k2*|; inf for an exact balance."""
    mismatch = abs(complex(k0_eff) - complex(k1).conjugate() - complex(k2).conjugate())
    return 1.0 / mismatch if mismatch > 0.0 else math.inf


def kretschmann_angle(n_sp_real: float, n0: float) -> tuple[float, float]:
    """Prism coupling angle for a mode index, as (phi_from_plane, theta_from_normal).

    phi = arccos(n_sp/n0) is measured from the interface plane, theta = pi/2 -
    phi from the normal; the two sum to pi/2 exactly. Raises
    NoPrismCouplingError when the mode index exceeds the prism index.
    """
    if not (n_sp_real > 0.0):
        raise ValueError(f"mode index must be positive, got {n_sp_real}")
    if n_sp_real > n0:
        raise NoPrismCouplingError(
            f"mode index {n_sp_real:.6f} exceeds prism index {n0:.6f}; no coupling angle"
        )
    phi = math.acos(n_sp_real / n0)
    theta = 0.5 * math.pi - phi
    return phi, theta


def fold_wavevector(k: float, grating: GratingSpec, n_max: int) -> list[tuple[int, float]]:
    """Grating-folded wavenumbers k_n = k - n k_a for n in [-n_max, n_max]."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    k_a = grating.k_a
    return [(n, k - n * k_a) for n in range(-n_max, n_max + 1)]
