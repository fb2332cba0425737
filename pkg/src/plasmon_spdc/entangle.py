"""Two-photon polarization state of the emitted pair and analyzer statistics.

The interface breaks mirror symmetry along the surface normal (z), so the
active nonlinear tensor components put one emitted photon in y and the other
in z. With the two detection channels labeling the photons, the default state
is (|yz> + |zy>)/sqrt(2) over the ordered basis (yy, yz, zy, zz); a two-term
superposition needs 1/sqrt(2), not 1/2, to normalize. The relative phase
between the two terms is a free parameter (the stack's reflection conventions
do not pin it).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .errors import DegenerateStateError
from .spdc import DEFAULT_ACTIVE_COMPONENTS

BASIS = ("yy", "yz", "zy", "zz")
_SLOT = {"yy": 0, "yz": 1, "zy": 2, "zz": 3}
_NORM_TOL = 1e-12


@dataclass(frozen=True)
class Analyzer:
    """Linear polarizer axis in the y-z plane, angle from y, reduced mod pi."""

    angle: float

    def __post_init__(self):
        object.__setattr__(self, "angle", float(self.angle) % math.pi)


@dataclass(frozen=True)
class TwoPhotonState:
    """Normalized 4-amplitude polarization state over (yy, yz, zy, zz)."""

    amplitudes: tuple[complex, complex, complex, complex]

    def __post_init__(self):
        amps = tuple(complex(a) for a in self.amplitudes)
        if len(amps) != 4:
            raise ValueError("a two-photon state needs exactly 4 amplitudes")
        norm_sq = sum(abs(a) ** 2 for a in amps)
        if abs(norm_sq - 1.0) > _NORM_TOL:
            raise ValueError(f"state not normalized: sum |a|^2 = {norm_sq!r}")
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, amplitudes) -> "TwoPhotonState":
        """Normalize an arbitrary 4-vector into a state; all-zero is rejected."""
        amps = np.asarray(amplitudes, dtype=complex)
        if amps.shape != (4,):
            raise ValueError("expected 4 amplitudes (yy, yz, zy, zz)")
        norm = float(np.linalg.norm(amps))
        if norm == 0.0:
            raise DegenerateStateError("all-zero amplitudes do not define a state")
        amps = amps / norm
        return cls(tuple(amps))

    def matrix(self) -> np.ndarray:
        """2x2 amplitude matrix, rows = signal polarization, cols = idler."""
        return np.array(self.amplitudes, dtype=complex).reshape(2, 2)


def emitted_state(
    active_components: tuple[str, ...] = DEFAULT_ACTIVE_COMPONENTS,
    relative_phase: float = 0.0,
) -> TwoPhotonState:
    """State generated by the given nonlinear tensor components.

    Each component contributes unit weight to the basis slot named by its two
    emitted-polarization indices; the second and later contributions pick up
    exp(i * relative_phase). The default pair gives (|yz> + |zy>)/sqrt(2).
    """
    if not active_components:
        raise DegenerateStateError("no active components")
    amps = np.zeros(4, dtype=complex)
    for i, comp in enumerate(active_components):
        emitted = comp[-2:]
        if emitted not in _SLOT:
            raise ValueError(f"unknown component {comp!r}; emitted indices must be y/z pairs")
        weight = np.exp(1j * relative_phase) if i > 0 else 1.0
        amps[_SLOT[emitted]] += weight
    return TwoPhotonState.from_amplitudes(amps)


def _angle_of(analyzer) -> float:
    return analyzer.angle if isinstance(analyzer, Analyzer) else float(analyzer)


def _pass_vector(theta: float) -> np.ndarray:
    return np.array([math.cos(theta), math.sin(theta)])


def coincidence_probability(state: TwoPhotonState, signal, idler) -> float:
    """Probability both photons pass their linear analyzers."""
    a_s = _pass_vector(_angle_of(signal))
    a_i = _pass_vector(_angle_of(idler))
    amp = a_s @ state.matrix() @ a_i
    return float(abs(amp) ** 2)


def pass_probability(state: TwoPhotonState, analyzer, channel: str = "signal") -> float:
    """Marginal probability that one photon alone passes its analyzer."""
    a = _pass_vector(_angle_of(analyzer))
    m = state.matrix()
    projected = a @ m if channel == "signal" else m @ a
    return float(np.sum(np.abs(projected) ** 2))


def correlation(state: TwoPhotonState, signal, idler) -> float:
    """Polarization correlation E in [-1, 1] from the four pass/block outcomes."""
    ts = _angle_of(signal)
    ti = _angle_of(idler)
    half_pi = 0.5 * math.pi
    p_pp = coincidence_probability(state, ts, ti)
    p_bb = coincidence_probability(state, ts + half_pi, ti + half_pi)
    p_pb = coincidence_probability(state, ts, ti + half_pi)
    p_bp = coincidence_probability(state, ts + half_pi, ti)
    return p_pp + p_bb - p_pb - p_bp


def is_separable(state: TwoPhotonState, tolerance: float = 1e-12) -> bool:
    """True iff the amplitude matrix is rank 1 (product state) within tolerance."""
    return bool(abs(np.linalg.det(state.matrix())) <= tolerance)


def chsh_value(state: TwoPhotonState, angles) -> float:
    """|E(a,b) - E(a,b') + E(a',b) + E(a',b')| at four analyzer angles."""
    a, a2, b, b2 = (_angle_of(x) for x in angles)
    return abs(
        correlation(state, a, b)
        - correlation(state, a, b2)
        + correlation(state, a2, b)
        + correlation(state, a2, b2)
    )


def _correlation_grid(state: TwoPhotonState, thetas: np.ndarray) -> np.ndarray:
    """E(theta_i, theta_j) for all grid pairs, vectorized."""
    m = state.matrix()
    passes = np.stack([np.cos(thetas), np.sin(thetas)], axis=1)
    blocks = np.stack([-np.sin(thetas), np.cos(thetas)], axis=1)

    def coincidences(u: np.ndarray, v: np.ndarray) -> np.ndarray:
        amps = u @ m @ v.T
        return np.abs(amps) ** 2

    return (
        coincidences(passes, passes)
        + coincidences(blocks, blocks)
        - coincidences(passes, blocks)
        - coincidences(blocks, passes)
    )


def chsh_optimum(
    state: TwoPhotonState, grid_points: int = 24
) -> tuple[float, tuple[float, float, float, float]]:
    """Best CHSH value over analyzer angles: coarse grid, then simplex refinement.

    Deterministic for identical inputs. Returns (S, (a, a', b, b')).
    """
    thetas = np.linspace(0.0, math.pi, grid_points, endpoint=False)
    e = _correlation_grid(state, thetas)
    s = (
        e[:, None, :, None]
        - e[:, None, None, :]
        + e[None, :, :, None]
        + e[None, :, None, :]
    )
    flat = int(np.argmax(np.abs(s)))
    ia, ia2, ib, ib2 = np.unravel_index(flat, s.shape)
    x0 = np.array([thetas[ia], thetas[ia2], thetas[ib], thetas[ib2]])

    result = minimize(
        lambda x: -chsh_value(state, x),
        x0,
        method="Nelder-Mead",
        options={"xatol": 1e-12, "fatol": 1e-14, "maxiter": 4000, "maxfev": 8000},
    )
    best = -float(result.fun)
    angles = tuple(float(t) % math.pi for t in result.x)
    return best, angles
