"""Exception types shared across the package.

Three families matter to callers (and to the CLI exit codes): input/parse
problems, physics-domain problems (valid numbers, no physical solution), and
internal numerical failures.
"""


class PlasmonSpdcError(Exception):
    """Base class for all package errors."""


class ConfigError(PlasmonSpdcError):
    """Bad configuration file or flag combination."""


class TableFormatError(PlasmonSpdcError, ValueError):
    """Optical-constant table could not be parsed or validated."""


class MalformedRowError(TableFormatError):
    """A data row is not three finite, in-range numbers."""


class NonMonotonicWavelengthError(TableFormatError):
    """Duplicate wavelengths with conflicting values remain after sort/dedup."""


class InsufficientSamplesError(TableFormatError):
    """Fewer than two samples; interpolation is undefined."""


class DomainError(PlasmonSpdcError):
    """Physically meaningful inputs for which no answer exists."""


class WavelengthRangeError(DomainError):
    """Wavelength outside a tabulated material's range (no extrapolation)."""


class AngleRangeError(DomainError):
    """Angle outside its admissible interval."""


class NoPrismCouplingError(DomainError):
    """Surface-mode index exceeds the prism index; no coupling angle exists."""


class SppSingularityError(DomainError):
    """eps_metal + eps_dielectric = 0: surface-resonance pole."""


class UnmatchableGeometryError(DomainError):
    """No pair of mode frequencies satisfies the momentum balance."""


class GratingDesignError(DomainError):
    """Zero or negative momentum deficit; a grating cannot help."""


class RegimeError(DomainError):
    """Operation invalid in this excitation regime."""


class DegenerateStateError(DomainError):
    """All-zero amplitude vector cannot be normalized into a state."""


class NumericalError(PlasmonSpdcError):
    """A solver failed to converge or lost its bracket."""
