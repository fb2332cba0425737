"""Complex permittivity versus vacuum wavelength.

Two material kinds: lossless constant-index dielectrics (prisms, vacuum,
immersion media) and metals backed by tabulated (lambda, n, k) measurements.
Tabulated data is interpolated linearly in photon energy (proportional to
1/lambda), on n and k separately, and never extrapolated.

Wavelengths are meters everywhere inside the library; the CSV interchange
format and the CLI speak micrometers.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import IO, Union

import numpy as np

from .errors import (
    InsufficientSamplesError,
    MalformedRowError,
    NonMonotonicWavelengthError,
    TableFormatError,
    WavelengthRangeError,
)

CSV_HEADER = "lambda_um,n,k"


@dataclass(frozen=True)
class OpticalConstantTable:
    """Tabulated complex refractive index n + ik against vacuum wavelength.

    Samples are strictly increasing in wavelength (meters), with finite
    non-negative n and k. Immutable after construction.
    """

    name: str
    lambda_m: np.ndarray
    n: np.ndarray
    k: np.ndarray
    source: str = ""

    def __post_init__(self):
        lam = np.asarray(self.lambda_m, dtype=float)
        n = np.asarray(self.n, dtype=float)
        k = np.asarray(self.k, dtype=float)
        if lam.size < 2:
            raise InsufficientSamplesError(
                f"table {self.name!r}: insufficient samples ({lam.size} < 2)"
            )
        if not (lam.shape == n.shape == k.shape):
            raise TableFormatError(f"table {self.name!r}: column length mismatch")
        for label, col in (("lambda", lam), ("n", n), ("k", k)):
            if not np.all(np.isfinite(col)):
                raise TableFormatError(f"table {self.name!r}: non-finite {label} value")
        if np.any(lam <= 0.0):
            raise TableFormatError(f"table {self.name!r}: non-positive wavelength")
        if np.any(n < 0.0) or np.any(k < 0.0):
            raise TableFormatError(f"table {self.name!r}: negative n or k")
        if np.any(np.diff(lam) <= 0.0):
            raise NonMonotonicWavelengthError(
                f"table {self.name!r}: wavelengths not strictly increasing"
            )
        for arr in (lam, n, k):
            arr.setflags(write=False)
        object.__setattr__(self, "lambda_m", lam)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        # ascending photon-energy grid for interpolation (1/lambda, reversed)
        inv = (1.0 / lam)[::-1].copy()
        inv.setflags(write=False)
        object.__setattr__(self, "_inv_lambda", inv)

    @property
    def wavelength_range(self) -> tuple[float, float]:
        return float(self.lambda_m[0]), float(self.lambda_m[-1])

    def index_at(self, lambda_vac: float) -> complex:
        """Interpolated complex refractive index n + ik at lambda_vac (m)."""
        lo, hi = self.wavelength_range
        if not (lo <= lambda_vac <= hi):
            raise WavelengthRangeError(
                f"table {self.name!r}: {lambda_vac:.4e} m outside "
                f"[{lo:.4e}, {hi:.4e}] m (no extrapolation)"
            )
        x = 1.0 / lambda_vac
        n_i = float(np.interp(x, self._inv_lambda, self.n[::-1]))
        k_i = float(np.interp(x, self._inv_lambda, self.k[::-1]))
        return complex(n_i, k_i)

    def permittivity(self, lambda_vac: float) -> complex:
        nk = self.index_at(lambda_vac)
        return nk * nk


@dataclass(frozen=True)
class ConstantIndex:
    """Lossless dielectric with a wavelength-independent real index."""

    index: float
    name: str = ""

    def __post_init__(self):
        if not (self.index > 0.0 and np.isfinite(self.index)):
            raise ValueError(f"constant index must be a positive finite real, got {self.index}")

    def permittivity(self, lambda_vac: float) -> complex:
        return complex(self.index * self.index, 0.0)


@dataclass(frozen=True)
class TabulatedMaterial:
    """Material whose optical response comes from an OpticalConstantTable."""

    table: OpticalConstantTable

    @property
    def name(self) -> str:
        return self.table.name

    def permittivity(self, lambda_vac: float) -> complex:
        return self.table.permittivity(lambda_vac)


@dataclass(frozen=True)
class FixedPermittivity:
    """Wavelength-independent permittivity, possibly negative or complex.

    Model material for analytic checks (e.g. the lossless eps = -2 metal);
    unlike ConstantIndex it is allowed to be absorbing or metallic.
    """

    eps: complex
    name: str = ""

    def permittivity(self, lambda_vac: float) -> complex:
        return complex(self.eps)


Material = Union[ConstantIndex, TabulatedMaterial, FixedPermittivity]


def permittivity(material: Material, lambda_vac: float) -> complex:
    """Complex relative permittivity of a material at vacuum wavelength (m)."""
    return material.permittivity(lambda_vac)


def _read_text(source: Union[str, Path, bytes, IO]) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, (str, Path)):
        return Path(source).read_text(encoding="utf-8")
    data = source.read()
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data


def load_optical_constants(
    source: Union[str, Path, bytes, IO],
    fmt: str = "csv",
    name: str = "",
    citation: str = "",
) -> OpticalConstantTable:
    """Parse an optical-constant stream into a validated table.

    The only supported format is CSV with the exact header ``lambda_um,n,k``,
    decimal-point floats, and ``#`` comment lines. Wavelengths are converted
    from micrometers to meters. Rows are sorted by wavelength; exact duplicate
    rows collapse, conflicting duplicates are rejected.
    """
    if fmt != "csv":
        raise TableFormatError(f"unsupported format {fmt!r} (only 'csv')")
    text = _read_text(source)
    rows: list[tuple[float, float, float]] = []
    header_seen = False
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            if line.replace(" ", "") != CSV_HEADER:
                raise MalformedRowError(
                    f"line {lineno}: expected header {CSV_HEADER!r}, got {line!r}"
                )
            header_seen = True
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 3:
            raise MalformedRowError(f"line {lineno}: expected 3 columns, got {len(parts)}")
        try:
            lam_um, n_v, k_v = (float(p) for p in parts)
        except ValueError as exc:
            raise MalformedRowError(f"line {lineno}: {exc}") from exc
        if not all(np.isfinite(v) for v in (lam_um, n_v, k_v)):
            raise MalformedRowError(f"line {lineno}: non-finite value")
        if lam_um <= 0.0:
            raise MalformedRowError(f"line {lineno}: non-positive wavelength {lam_um}")
        if n_v < 0.0 or k_v < 0.0:
            raise MalformedRowError(f"line {lineno}: negative n or k")
        rows.append((lam_um * 1e-6, n_v, k_v))

    if len(rows) < 2:
        raise InsufficientSamplesError(
            f"insufficient samples: {len(rows)} row(s), need at least 2"
        )
    rows.sort(key=lambda r: r[0])
    deduped: list[tuple[float, float, float]] = [rows[0]]
    for row in rows[1:]:
        if row[0] == deduped[-1][0]:
            if row == deduped[-1]:
                continue
            raise NonMonotonicWavelengthError(
                f"conflicting duplicate wavelength {row[0]:.6e} m"
            )
        deduped.append(row)
    if len(deduped) < 2:
        raise InsufficientSamplesError(
            f"insufficient samples after dedup: {len(deduped)} row(s)"
        )
    arr = np.array(deduped, dtype=float)
    return OpticalConstantTable(
        name=name or "table",
        lambda_m=arr[:, 0],
        n=arr[:, 1],
        k=arr[:, 2],
        source=citation,
    )


_BUILTIN_SOURCES = {
    "silver_jc": "P. B. Johnson and R. W. Christy, Phys. Rev. B 6, 4370 (1972)",
}
_builtin_cache: dict[str, OpticalConstantTable] = {}


def builtin_table(name: str = "silver_jc") -> OpticalConstantTable:
    """Load a table bundled in the package data directory (cached)."""
    if name not in _BUILTIN_SOURCES:
        raise TableFormatError(
            f"unknown builtin table {name!r}; available: {sorted(_BUILTIN_SOURCES)}"
        )
    if name not in _builtin_cache:
        data = resources.files("plasmon_spdc").joinpath(f"data/{name}.csv").read_bytes()
        _builtin_cache[name] = load_optical_constants(
            data, name=name, citation=_BUILTIN_SOURCES[name]
        )
    return _builtin_cache[name]


def silver_johnson_christy() -> TabulatedMaterial:
    """Bundled silver, the default metal film material."""
    return TabulatedMaterial(builtin_table("silver_jc"))
