"""Plasmon-supported parametric down-conversion at a prism/metal/dielectric
interface: multilayer field enhancement, surface-mode dispersion, momentum
matching, pair yield, and the emitted polarization-entangled state."""

__version__ = "0.1.0"

from .materials import (
    ConstantIndex,
    FixedPermittivity,
    Material,
    OpticalConstantTable,
    TabulatedMaterial,
    builtin_table,
    load_optical_constants,
    permittivity,
    silver_johnson_christy,
)
from .stratified import (
    LayerStack,
    PlaneWaveContext,
    StackResponse,
    characteristic_matrix,
    enhancement_spectrum,
    optimize_thickness,
    reflectance_dip,
    stack_response,
)
from .spp import (
    GratingSpec,
    SppMode,
    coherence_length_damping,
    coherence_length_mismatch,
    fold_wavevector,
    kretschmann_angle,
    spp_dispersion,
    spp_mode,
)
from .phasematch import (
    PhaseMatchSolution,
    PumpGeometry,
    Regime,
    classify_regime,
    degenerate_match,
    design_grating_period,
    nondegenerate_match,
)
from .spdc import (
    NonlinearResponse,
    SpdcScenario,
    YieldReport,
    effective_chi2,
    pump_field,
    pump_intensity,
    signal_radiance,
    transformation_coefficient,
    yield_kappa,
)
from .entangle import (
    Analyzer,
    TwoPhotonState,
    chsh_optimum,
    chsh_value,
    coincidence_probability,
    correlation,
    emitted_state,
    is_separable,
    pass_probability,
)

__all__ = [
    "__version__",
    "ConstantIndex",
    "FixedPermittivity",
    "Material",
    "OpticalConstantTable",
    "TabulatedMaterial",
    "builtin_table",
    "load_optical_constants",
    "permittivity",
    "silver_johnson_christy",
    "LayerStack",
    "PlaneWaveContext",
    "StackResponse",
    "characteristic_matrix",
    "enhancement_spectrum",
    "optimize_thickness",
    "reflectance_dip",
    "stack_response",
    "GratingSpec",
    "SppMode",
    "coherence_length_damping",
    "coherence_length_mismatch",
    "fold_wavevector",
    "kretschmann_angle",
    "spp_dispersion",
    "spp_mode",
    "PhaseMatchSolution",
    "PumpGeometry",
    "Regime",
    "classify_regime",
    "degenerate_match",
    "design_grating_period",
    "nondegenerate_match",
    "NonlinearResponse",
    "SpdcScenario",
    "YieldReport",
    "effective_chi2",
    "pump_field",
    "pump_intensity",
    "signal_radiance",
    "transformation_coefficient",
    "yield_kappa",
    "Analyzer",
    "TwoPhotonState",
    "chsh_optimum",
    "chsh_value",
    "coincidence_probability",
    "correlation",
    "emitted_state",
    "is_separable",
    "pass_probability",
]
