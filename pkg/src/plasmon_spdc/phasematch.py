"""Pump-to-pair momentum matching along the interface.

The pump drives a polarization wave with in-plane wavenumber
(omega0/c0) n0 cos(phi), phi measured from the interface plane. Pair creation
requires k_par = k1 + k2 on the real parts of the surface-mode wavenumbers,
with omega2 = omega0 - omega1. At phi = phi0 = arccos(n_sp(omega0/2)/n0) the
balance closes degenerately (omega1 = omega2, k1 = k2); below phi0 a detuned
pair solves it; above phi0 the driven polarization outruns every mode pair and
no down-conversion happens.

Geometry is scalar and collinear along the interface; out-of-plane splitting
is not modeled. The matching uses Re k only; damping enters downstream through
the coherence length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .constants import C0
from .errors import (
    AngleRangeError,
    GratingDesignError,
    RegimeError,
    UnmatchableGeometryError,
    WavelengthRangeError,
)
from .numerics import bisect_root
from .spp import Dispersion, GratingSpec, kretschmann_angle


class Regime(str, Enum):
    DEGENERATE = "degenerate"
    NONDEGENERATE = "nondegenerate"
    SUPERLUMINAL = "superluminal-no-SPDC"


@dataclass(frozen=True)
class PumpGeometry:
    """Pump frequency, prism index, and excitation angle from the plane.

    The in-plane pump wavenumber is always recomputed from these three; it is
    never stored independently.
    """

    omega0: float
    n0: float
    phi_from_plane: float

    def __post_init__(self):
        if not (self.omega0 > 0.0 and self.n0 > 0.0):
            raise ValueError("omega0 and n0 must be positive")
        if not (0.0 <= self.phi_from_plane < math.pi / 2.0):
            raise AngleRangeError(
                f"phi must lie in [0, pi/2), got {self.phi_from_plane}"
            )

    @property
    def k_par_pump(self) -> float:
        return (self.omega0 / C0) * self.n0 * math.cos(self.phi_from_plane)


@dataclass(frozen=True)
class PhaseMatchSolution:
    """One matched pair: frequencies, real wavenumbers, balance residual."""

    omega1: float
    omega2: float
    k1: float
    k2: float
    residual: float
    regime: Regime


def classify_regime(phi: float, phi0: float) -> Regime:
    """Excitation regime from the angle relative to the degenerate angle."""
    for name, value in (("phi", phi), ("phi0", phi0)):
        if not (0.0 <= value < math.pi / 2.0):
            raise AngleRangeError(f"{name} must lie in [0, pi/2), got {value}")
    if phi > phi0:
        return Regime.SUPERLUMINAL
    if phi == phi0:
        return Regime.DEGENERATE
    return Regime.NONDEGENERATE


def degenerate_match(
    omega0: float, n0: float, dispersion: Dispersion
) -> tuple[float, PhaseMatchSolution]:
    """Degenerate solution omega1 = omega2 = omega0/2 and its angle phi0.

    Raises NoPrismCouplingError when the half-frequency mode index exceeds the
    prism index.
    """
    half = 0.5 * omega0
    mode = dispersion(half)
    n_sp = mode.n_sp.real
    phi0, _theta0 = kretschmann_angle(n_sp, n0)
    k_half = mode.k.real
    k_par = (omega0 / C0) * n0 * math.cos(phi0)
    residual = abs(k_par - 2.0 * k_half)
    return phi0, PhaseMatchSolution(
        omega1=half,
        omega2=half,
        k1=k_half,
        k2=k_half,
        residual=residual,
        regime=Regime.DEGENERATE,
    )


def _scan_for_bracket(f, grid):
    """Walk a descending omega1 grid until f changes sign.

    Returns ((lo, f_lo, hi, f_hi), monotone, last_valid) where the bracket may
    be None. Wavelength-range errors truncate the walk (the mode table ran
    out), they do not abort it.
    """
    hi, f_hi = grid[0], f(grid[0])
    monotone = True
    prev_f = f_hi
    last_valid = hi
    for w in grid[1:]:
        try:
            fw = f(w)
        except WavelengthRangeError:
            break
        if fw < prev_f:
            monotone = False
        if fw >= 0.0:
            return (w, fw, hi, f_hi), monotone, w
        hi, f_hi = w, fw
        prev_f = fw
        last_valid = w
    return None, monotone, last_valid


def nondegenerate_match(
    omega0: float,
    n0: float,
    phi: float,
    dispersion: Dispersion,
    rtol: float = 1e-10,
) -> PhaseMatchSolution:
    """Solve k1(omega1) + k2(omega0 - omega1) = k_par for phi below phi0.

    Returns the canonical branch omega1 <= omega0/2 (the partner solution is
    the frequency mirror). At phi = phi0 this reduces to the degenerate
    solution. phi beyond phi0 is a RegimeError: classify_regime first.
    """
    if not (0.0 < phi < math.pi / 2.0):
        raise AngleRangeError(f"phi must lie in (0, pi/2), got {phi}")
    phi0, degenerate = degenerate_match(omega0, n0, dispersion)
    if phi > phi0:
        raise RegimeError(
            f"phi = {phi:.6f} exceeds phi0 = {phi0:.6f}: no momentum-matched pair "
            "(superluminal drive); use classify_regime"
        )
    k_par = (omega0 / C0) * n0 * math.cos(phi)

    def balance(w1: float) -> float:
        return dispersion(w1).k.real + dispersion(omega0 - w1).k.real - k_par

    half = 0.5 * omega0
    f_half = balance(half)
    if f_half >= -1e-12 * k_par:
        # at (or numerically at) the degenerate point
        return degenerate

    coarse = np.linspace(half, 1e-3 * omega0, 65)
    bracket, monotone, last_valid = _scan_for_bracket(balance, coarse)
    if bracket is None and not monotone:
        dense = np.linspace(half, last_valid, 4097)
        bracket, _, _ = _scan_for_bracket(balance, dense)
    if bracket is None:
        raise UnmatchableGeometryError(
            f"no omega1 in ({last_valid:.4e}, {half:.4e}] rad/s balances "
            f"k_par = {k_par:.6e} 1/m over the evaluable dispersion range"
        )
    lo, f_lo, hi, f_hi = bracket
    w1 = float(bisect_root(balance, lo, hi, f_lo, f_hi, xtol=rtol * omega0))
    w2 = omega0 - w1
    k1 = dispersion(w1).k.real
    k2 = dispersion(w2).k.real
    return PhaseMatchSolution(
        omega1=min(w1, w2),
        omega2=max(w1, w2),
        k1=k1,
        k2=k2,
        residual=abs(k_par - k1 - k2),
        regime=Regime.NONDEGENERATE,
    )


def design_grating_period(
    omega0: float, k_par_pump: float, dispersion: Dispersion, order: int = 1
) -> GratingSpec:
    """Grating period supplying the pump's momentum deficit in `order` quanta.

    k_a = (Re k_mode(omega0) - k_par_pump) / order, period = 2 pi / k_a.
    Folding the mode wavenumber by +order quanta then recovers k_par_pump.
    """
    if order < 1:
        raise ValueError(f"grating order must be >= 1, got {order}")
    k_mode = dispersion(omega0).k.real
    deficit = k_mode - k_par_pump
    if deficit <= 0.0:
        raise GratingDesignError(
            f"momentum deficit {deficit:.4e} 1/m is not positive: the pump "
            "already reaches (or exceeds) the mode wavenumber, a grating is unnecessary"
        )
    k_a = deficit / order
    return GratingSpec(period_a=2.0 * math.pi / k_a, order_n=order)
