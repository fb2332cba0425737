"""Pair-generation bookkeeping: enhanced nonlinearity, transformation
coefficient, signal radiance, and yield.

Everything here is straight dimensional arithmetic on SI quantities:

    chi_eff        = chi2 * eta0 * eta1 * eta2                  [m/V]
    F              = 4 pi^2 c0^-2 w1 w2 (chi_eff E0)^2 l^2      [1]
    N1             = F (N2 + 1)                                 [1]
    kappa          = loss * alpha * eta0^2 eta1^2 eta2^2
                     * hbar w0^2 Z0 (l^2 / lam^4) chi2^2        [1]

with lam = 4 pi c0 / w0 the generated-pair wavelength. hbar w0^2 is a power,
hbar w0^2 Z0 / lam^2 a squared field, so kappa is dimensionless term by term.
The absolute scale of kappa follows this formula literally; the dimensionless
prefactor alpha (~1e-2 by default) absorbs mode-counting conventions, so only
ratios of kappa between scenarios are scale-free predictions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from .constants import C0, HBAR, Z0

DEFAULT_ACTIVE_COMPONENTS = ("yyz", "yzy")


@dataclass(frozen=True)
class NonlinearResponse:
    """Convolved second-order susceptibility magnitude and active tensor components.

    Components are index triples written as strings: excitation polarization
    first, then the two emitted polarizations ("yyz" = excitation y, emitted
    pair y,z).
    """

    chi2_magnitude: float
    active_components: tuple[str, ...] = DEFAULT_ACTIVE_COMPONENTS

    def __post_init__(self):
        if not (self.chi2_magnitude >= 0.0 and math.isfinite(self.chi2_magnitude)):
            raise ValueError(f"chi2 magnitude must be finite and >= 0, got {self.chi2_magnitude}")
        object.__setattr__(self, "active_components", tuple(self.active_components))


@dataclass(frozen=True)
class SpdcScenario:
    """Complete description of one pair-generation configuration.

    omega0 is the single source of truth for the spectral scale; lambda_pair
    is always derived from it. eta2 = None means a degenerate pair
    (eta2 = eta1).
    """

    omega0: float
    eta0: float
    eta1: float
    chi2: NonlinearResponse
    l_delta: float
    alpha: float = 1e-2
    eta2: float | None = None
    pump_field_e0: float | None = None
    n2: float = 0.0
    loss_factor: float = 1.0

    def __post_init__(self):
        if not (self.omega0 > 0.0):
            raise ValueError("omega0 must be positive")
        for label, value in (("eta0", self.eta0), ("eta1", self.eta1)):
            if not (value >= 0.0):
                raise ValueError(f"{label} must be >= 0, got {value}")
        if self.eta2 is not None and not (self.eta2 >= 0.0):
            raise ValueError(f"eta2 must be >= 0, got {self.eta2}")
        if not (self.l_delta >= 0.0):
            raise ValueError("l_delta must be >= 0")
        if not (self.n2 >= 0.0):
            raise ValueError("n2 must be >= 0")
        if not (0.0 < self.loss_factor <= 1.0):
            raise ValueError(f"loss_factor must lie in (0, 1], got {self.loss_factor}")

    @classmethod
    def from_pair_wavelength(cls, lambda_pair: float, **kwargs) -> "SpdcScenario":
        """Build from the generated-pair wavelength instead of omega0."""
        return cls(omega0=4.0 * math.pi * C0 / lambda_pair, **kwargs)

    @property
    def lambda_pair(self) -> float:
        """Wavelength of the generated photons, 4 pi c0 / omega0."""
        return 4.0 * math.pi * C0 / self.omega0

    @property
    def eta2_effective(self) -> float:
        return self.eta1 if self.eta2 is None else self.eta2


@dataclass(frozen=True)
class YieldReport:
    """Yield numbers plus the eta = 1 baseline they improve on."""

    F: float | None
    N1: float | None
    kappa: float
    kappa_baseline: float
    enhancement_gain: float
    scenario: SpdcScenario


def effective_chi2(chi2: float, eta0: float, eta1: float, eta2: float) -> float:
    """Interface-enhanced susceptibility chi2 * eta0 * eta1 * eta2 (m/V)."""
    return chi2 * eta0 * eta1 * eta2


def transformation_coefficient(
    omega1: float, omega2: float, chi2_eff: float, e0: float, l_delta: float
) -> float:
    """Dimensionless parametric transformation coefficient.

    4 pi^2 c0^-2 omega1 omega2 (chi2_eff * e0)^2 l_delta^2; (chi2*E) is
    dimensionless, as is omega^2 l^2 / c0^2.
    """
    return 4.0 * math.pi**2 / C0**2 * omega1 * omega2 * (chi2_eff * e0) ** 2 * l_delta**2


def signal_radiance(f_coefficient: float, n2: float = 0.0) -> float:
    """Signal photons per mode: F * (N2 + 1); the +1 is the vacuum seed."""
    return f_coefficient * (n2 + 1.0)


def pump_intensity(n0_photons: float, omega0: float) -> float:
    """Excitation power N0 * hbar * omega0^2 (W) for N0 photons per mode."""
    return n0_photons * HBAR * omega0 * omega0


def pump_field(intensity: float) -> float:
    """Pump field amplitude sqrt(Z0 * I0) (V/m)."""
    return math.sqrt(Z0 * intensity)


def yield_kappa(scenario: SpdcScenario) -> YieldReport:
    """Pairs per pump photon for a scenario, with its eta = 1 baseline.

    kappa = enhancement_gain * kappa_baseline exactly, where
    enhancement_gain = eta0^2 eta1^2 eta2^2 (eta1^4 gain quartic for
    degenerate pairs) and kappa_baseline carries everything else:
    loss * alpha * hbar omega0^2 Z0 (l^2/lambda^4) chi2^2.
    """
    lam = scenario.lambda_pair
    chi2 = scenario.chi2.chi2_magnitude
    kappa_baseline = (
        scenario.loss_factor
        * scenario.alpha
        * HBAR
        * scenario.omega0**2
        * Z0
        * scenario.l_delta**2
        / lam**4
        * chi2**2
    )
    eta2 = scenario.eta2_effective
    enhancement_gain = scenario.eta0**2 * scenario.eta1**2 * eta2**2
    kappa = kappa_baseline * enhancement_gain

    f_value = None
    n1_value = None
    if scenario.pump_field_e0 is not None:
        half = 0.5 * scenario.omega0
        chi_eff = effective_chi2(chi2, scenario.eta0, scenario.eta1, eta2)
        f_value = transformation_coefficient(
            half, half, chi_eff, scenario.pump_field_e0, scenario.l_delta
        )
        n1_value = signal_radiance(f_value, scenario.n2)
    return YieldReport(
        F=f_value,
        N1=n1_value,
        kappa=kappa,
        kappa_baseline=kappa_baseline,
        enhancement_gain=enhancement_gain,
        scenario=scenario,
    )
