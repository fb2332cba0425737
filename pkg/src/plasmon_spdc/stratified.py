"""Transfer-matrix solver for planar layer stacks at oblique incidence.

Characteristic-matrix (Abeles) formulation with tilted admittances:

    s polarization: q = k_z / k0
    p polarization: q = eps * k0 / k_z

and the layer matrix [[cos d, -i sin d / q], [-i q sin d, cos d]], d = k_z * t
(fields carry exp(+i k_z z - i w t), so Im k_z >= 0 makes absorbing layers
decay). Under this convention the amplitude reflection at a single interface is
(q_in - q_out)/(q_in + q_out) for both polarizations, so at normal incidence
r = (n1 - n2)/(n1 + n2): going into a denser medium gives r < 0. Enhancement
factors and two-photon phases inherit this sign convention.

Angles are measured FROM THE NORMAL (theta). The companion excitation-angle
convention measured from the interface plane is phi = pi/2 - theta; the CLI
reports both.

Branch of the normal wavenumber k_z = sqrt(eps k0^2 - k_par^2): Im k_z >= 0
(fields decay away from each interface), tie-broken by Re k_z >= 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import AngleRangeError, NumericalError
from .materials import ConstantIndex, Material, permittivity
from .numerics import golden_section_max

Layer = tuple[Material, float]


@dataclass(frozen=True)
class LayerStack:
    """Semi-infinite entry medium, finite layers, semi-infinite exit medium.

    The entry medium must be a lossless ConstantIndex so the incidence angle
    is well defined. Layer thicknesses are finite and non-negative; a
    zero-thickness layer is legal and optically inert.
    """

    entry: ConstantIndex
    layers: tuple[Layer, ...]
    exit: Material

    def __post_init__(self):
        if not isinstance(self.entry, ConstantIndex):
            raise TypeError("entry medium must be a lossless ConstantIndex")
        layers = tuple((m, float(d)) for m, d in self.layers)
        for _, d in layers:
            if not (d >= 0.0 and math.isfinite(d)):
                raise ValueError(f"layer thickness must be finite and >= 0, got {d}")
        object.__setattr__(self, "layers", layers)


@dataclass(frozen=True)
class PlaneWaveContext:
    """Vacuum wavelength, polarization ('p' or 's'), angle from normal."""

    lambda_vac: float
    polarization: str
    angle_from_normal: float

    def __post_init__(self):
        if not (self.lambda_vac > 0.0 and math.isfinite(self.lambda_vac)):
            raise ValueError(f"wavelength must be positive, got {self.lambda_vac}")
        if self.polarization not in ("p", "s"):
            raise ValueError(f"polarization must be 'p' or 's', got {self.polarization!r}")
        if not (0.0 <= self.angle_from_normal < math.pi / 2.0):
            raise AngleRangeError(
                f"angle from normal must lie in [0, pi/2), got {self.angle_from_normal}"
            )


@dataclass(frozen=True)
class StackResponse:
    """Amplitude coefficients, power coefficients, and exit-side enhancement.

    eta is the field-magnitude ratio |E(exit side of last interface)| /
    |E_incident| for the stated polarization (amplitude, not intensity).
    """

    r: complex
    t: complex
    R: float
    T: float
    eta: float


def _kz(eps: complex, k0: float, k_par: float) -> complex:
    kz = complex(np.sqrt(complex(eps * k0 * k0 - k_par * k_par)))
    if kz.imag < 0.0:
        kz = -kz
    elif kz.imag == 0.0 and kz.real < 0.0:
        kz = -kz
    return kz


def _admittance(eps: complex, kz: complex, k0: float, polarization: str) -> complex:
    if polarization == "s":
        return kz / k0
    return eps * k0 / kz


def characteristic_matrix(layer: Layer, context: PlaneWaveContext, k_par: float) -> np.ndarray:
    """2x2 characteristic matrix of one layer at the given in-plane wavenumber.

    Unit determinant for any (possibly absorbing) layer; thickness 0 gives the
    identity.
    """
    material, thickness = layer
    k0 = 2.0 * math.pi / context.lambda_vac
    eps = permittivity(material, context.lambda_vac)
    kz = _kz(eps, k0, k_par)
    q = _admittance(eps, kz, k0, context.polarization)
    delta = kz * thickness
    cos_d = np.cos(delta)
    sin_d = np.sin(delta)
    return np.array(
        [[cos_d, -1j * sin_d / q], [-1j * q * sin_d, cos_d]], dtype=complex
    )


def stack_response(stack: LayerStack, context: PlaneWaveContext) -> StackResponse:
    """Reflection, transmission, and exit-interface field enhancement.

    r and t are tangential-field amplitude ratios. T is the Poynting-flux
    transmittance into the exit half-space (zero beyond total internal
    reflection into a lossless exit medium).
    """
    lam = context.lambda_vac
    k0 = 2.0 * math.pi / lam
    n_entry = stack.entry.index
    theta = context.angle_from_normal
    k_par = k0 * n_entry * math.sin(theta)

    eps_entry = permittivity(stack.entry, lam)
    eps_exit = permittivity(stack.exit, lam)
    kz_entry = _kz(eps_entry, k0, k_par)
    kz_exit = _kz(eps_exit, k0, k_par)
    q_entry = _admittance(eps_entry, kz_entry, k0, context.polarization)
    q_exit = _admittance(eps_exit, kz_exit, k0, context.polarization)

    m = np.eye(2, dtype=complex)
    for layer in stack.layers:
        m = m @ characteristic_matrix(layer, context, k_par)

    b = m[0, 0] + m[0, 1] * q_exit
    c = m[1, 0] + m[1, 1] * q_exit
    denom = q_entry * b + c
    if denom == 0.0:
        raise NumericalError("singular stack response (q_entry*B + C = 0)")
    r = (q_entry * b - c) / denom
    t = 2.0 * q_entry / denom

    big_r = float(abs(r) ** 2)
    big_t = float(4.0 * q_entry.real * q_exit.real / abs(denom) ** 2)

    if context.polarization == "s":
        eta = float(abs(t))
    else:
        # t is the tangential-E ratio; the transmitted wave also carries a
        # normal component E_z/E_x = -k_par/k_z, and the incident tangential
        # component is |E0| cos(theta).
        geometry = math.sqrt(1.0 + (k_par / abs(kz_exit)) ** 2) if k_par else 1.0
        eta = float(abs(t) * math.cos(theta) * geometry)
    return StackResponse(r=complex(r), t=complex(t), R=big_r, T=big_t, eta=eta)


def enhancement_spectrum(
    stack: LayerStack,
    polarization: str,
    angle_from_normal: float,
    lambda_grid: Sequence[float],
) -> list[tuple[float, float]]:
    """eta per wavelength at a fixed incidence angle."""
    out = []
    for lam in lambda_grid:
        ctx = PlaneWaveContext(lam, polarization, angle_from_normal)
        out.append((float(lam), stack_response(stack, ctx).eta))
    return out


def reflectance_dip(
    stack: LayerStack,
    lambda_vac: float,
    theta_lo: float,
    theta_hi: float,
    tol: float = 1e-9,
    coarse_steps: int = 400,
) -> tuple[float, float]:
    """Locate the p-polarization reflectance minimum over an angle window.

    Coarse scan followed by golden-section refinement; returns
    (theta_dip, R_min). Deterministic for identical inputs.
    """

    def neg_r(theta: float) -> float:
        ctx = PlaneWaveContext(lambda_vac, "p", theta)
        return -stack_response(stack, ctx).R

    thetas = np.linspace(theta_lo, theta_hi, coarse_steps)
    values = [neg_r(t) for t in thetas]
    i_best = int(np.argmax(values))
    lo = thetas[max(0, i_best - 1)]
    hi = thetas[min(len(thetas) - 1, i_best + 1)]
    theta_dip, neg_min = golden_section_max(neg_r, float(lo), float(hi), tol)
    return theta_dip, -neg_min


def _resonant_angle_for(
    stack: LayerStack, lambda_vac: float, theta_hint: float, half_window: float = math.radians(3.0)
) -> float:
    """Angle maximizing eta near a hint angle (p polarization)."""

    def eta_of(theta: float) -> float:
        ctx = PlaneWaveContext(lambda_vac, "p", theta)
        return stack_response(stack, ctx).eta

    lo = max(1e-6, theta_hint - half_window)
    hi = min(math.pi / 2.0 - 1e-6, theta_hint + half_window)
    theta_opt, _ = golden_section_max(eta_of, lo, hi, 1e-10)
    return theta_opt


def optimize_thickness(
    entry: ConstantIndex,
    film: Material,
    exit_medium: Material,
    polarization: str,
    lambda_vac: float,
    angle_rule: float | str,
    d_lo: float,
    d_hi: float,
    tol: float = 1e-12,
) -> tuple[float, float]:
    """Thickness maximizing the exit-interface enhancement over [d_lo, d_hi].

    angle_rule is either a fixed angle from normal (float, radians) or the
    string "resonant", which re-solves the enhancement-maximizing angle for
    every candidate thickness. Golden-section search; deterministic.
    """
    if not (0 < d_lo <= d_hi) or not (math.isfinite(d_lo) and math.isfinite(d_hi)):
        raise ValueError(f"invalid thickness range [{d_lo}, {d_hi}]")

    if isinstance(angle_rule, str):
        if angle_rule != "resonant":
            raise ValueError(f"angle rule must be an angle or 'resonant', got {angle_rule!r}")
        # hint once from the mid-thickness stack, then refine per thickness
        mid_stack = LayerStack(entry, ((film, 0.5 * (d_lo + d_hi)),), exit_medium)
        hint = reflectance_dip(
            mid_stack, lambda_vac, math.radians(5.0), math.radians(89.0), 1e-6, 300
        )[0]

        def eta_of_d(d: float) -> float:
            stk = LayerStack(entry, ((film, d),), exit_medium)
            theta = _resonant_angle_for(stk, lambda_vac, hint)
            ctx = PlaneWaveContext(lambda_vac, polarization, theta)
            return stack_response(stk, ctx).eta

    else:
        theta_fixed = float(angle_rule)

        def eta_of_d(d: float) -> float:
            stk = LayerStack(entry, ((film, d),), exit_medium)
            ctx = PlaneWaveContext(lambda_vac, polarization, theta_fixed)
            return stack_response(stk, ctx).eta

    return golden_section_max(eta_of_d, d_lo, d_hi, tol)
