"""Command-line front end.

Subcommands:

    fig1      enhancement of the emitted (or pump) field versus pair wavelength
    fig2      effective surface-mode index versus wavelength
    evaluate  full scenario report (angles, enhancements, matching, yield, state)
    sweep     thickness / angle / prism-index scan with eta1 and kappa columns
    match     momentum matching at a given excitation angle
    grating   grating period supplying the pump's momentum deficit
    bell      emitted two-photon state and its analyzer statistics

All numeric output uses scientific notation with 9 significant digits so runs
are byte-identical for identical inputs. Excitation angles are exchanged in
degrees measured from the interface plane (phi); reports also print the
from-normal angle theta = 90 deg - phi.

Exit codes: 0 success, 2 configuration/parse error, 3 physics-domain error,
4 internal numerical failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .constants import C0
from .errors import (
    ConfigError,
    DomainError,
    NumericalError,
    PlasmonSpdcError,
    TableFormatError,
)
from .materials import (
    ConstantIndex,
    FixedPermittivity,
    Material,
    TabulatedMaterial,
    builtin_table,
    load_optical_constants,
    permittivity,
)
from .phasematch import (
    Regime,
    classify_regime,
    degenerate_match,
    design_grating_period,
    nondegenerate_match,
)
from .spdc import NonlinearResponse, SpdcScenario, yield_kappa
from .spp import (
    coherence_length_damping,
    fold_wavevector,
    kretschmann_angle,
    spp_dispersion,
    spp_mode,
)
from .stratified import (
    LayerStack,
    PlaneWaveContext,
    _resonant_angle_for,
    stack_response,
)
from . import entangle

_FLOAT_FMT = "{:.8e}"

# known order-of-magnitude yields quoted for the two benchmark regimes
# (ordinary bulk down-conversion vs the plasmon-assisted estimate); the
# computed gain is compared against their ratio, never substituted for it.
_REFERENCE_GAIN_ORDER = 1.0e8


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return _FLOAT_FMT.format(float(value))
    if isinstance(value, (list, tuple)):
        return ";".join(_fmt(v) for v in value)
    return str(value)


def _native(value):
    """numpy scalars -> Python scalars so json.dumps accepts them."""
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

@dataclass
class ScenarioConfig:
    """Flat scenario description; every key is also a CLI flag."""

    prism_index: float = 1.5
    film_material: str = "silver_jc"
    film_thickness_nm: float = 60.0
    exit_medium: str = "vacuum"
    lambda_pair_um: float = 1.0
    chi2_pm_per_v: float = 1.0
    alpha: float = 1e-2
    loss_factor: float = 1.0
    phi_deg: float | None = None
    l_delta_mm: float | None = None
    grating_order: int | None = None
    pump_e0_v_per_m: float | None = None
    n2_idler: float = 0.0
    relative_phase_deg: float = 0.0


_CONFIG_FIELDS = {f.name: f for f in dataclasses.fields(ScenarioConfig)}


def _coerce(field_name: str, raw: str):
    if raw.lower() in ("none", ""):
        return None
    if field_name == "grating_order":
        try:
            return int(raw)
        except ValueError as exc:
            raise ConfigError(f"{field_name}: expected integer, got {raw!r}") from exc
    if field_name in ("film_material", "exit_medium"):
        return raw
    try:
        return float(raw)
    except ValueError as exc:
        raise ConfigError(f"{field_name}: expected number, got {raw!r}") from exc


def parse_config_file(path: str | Path) -> dict:
    """Flat ``key = value`` file with ``#`` comments."""
    values = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _CONFIG_FIELDS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = _coerce(key, value.strip())
    return values


def build_config(args: argparse.Namespace) -> ScenarioConfig:
    """Config file first, then any flag explicitly given wins."""
    values: dict = {}
    if getattr(args, "config", None):
        values.update(parse_config_file(args.config))
    for name in _CONFIG_FIELDS:
        flag_value = getattr(args, name, None)
        if flag_value is not None:
            values[name] = flag_value
    try:
        return ScenarioConfig(**values)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc


def config_hash(cfg: ScenarioConfig) -> str:
    canonical = "\n".join(
        f"{name}={getattr(cfg, name)!r}" for name in sorted(_CONFIG_FIELDS)
    )
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:12]


def resolve_material(spec: str) -> Material:
    """Material from a config token.

    Accepts: 'vacuum'/'air', 'silver_jc' (bundled table), a bare number
    (constant real index), 'eps:<value>' (fixed complex permittivity), or a
    path to a ``lambda_um,n,k`` CSV.
    """
    token = spec.strip()
    lowered = token.lower()
    if lowered in ("vacuum", "air"):
        return ConstantIndex(1.0, lowered)
    if lowered == "silver_jc":
        return TabulatedMaterial(builtin_table("silver_jc"))
    if lowered.startswith("eps:"):
        try:
            eps = complex(token[4:])
        except ValueError as exc:
            raise ConfigError(f"bad permittivity literal {token!r}") from exc
        return FixedPermittivity(eps, token)
    try:
        return ConstantIndex(float(token), token)
    except ValueError:
        pass
    path = Path(token)
    if path.suffix == ".csv":
        if not path.exists():
            raise ConfigError(f"material file not found: {token}")
        return TabulatedMaterial(load_optical_constants(path, name=path.stem))
    raise ConfigError(f"cannot resolve material {token!r}")


def _material_source(material: Material) -> str:
    if isinstance(material, TabulatedMaterial):
        return f"{material.name} ({material.table.source})" if material.table.source else material.name
    return getattr(material, "name", "") or "constant"


def provenance_lines(cfg: ScenarioConfig) -> list[str]:
    film = resolve_material(cfg.film_material)
    return [
        f"# plasmon-spdc {__version__}",
        f"# config {config_hash(cfg)}",
        f"# data {_material_source(film)}",
    ]


# ---------------------------------------------------------------------------
# scenario evaluation (shared by evaluate and sweep)
# ---------------------------------------------------------------------------

def evaluate_scenario(cfg: ScenarioConfig) -> dict:
    """End-to-end report for one configuration; plain ordered dict.

    The excitation angle defaults to the degenerate matching angle phi0.
    Enhancements: eta1 (and eta2 when detuned) are taken at the emitted
    mode's own resonance angle at its wavelength; eta0 is the pump-field
    value at the excitation angle, half the pair wavelength.
    """
    prism = ConstantIndex(cfg.prism_index, "prism")
    film = resolve_material(cfg.film_material)
    exit_medium = resolve_material(cfg.exit_medium)
    n0 = cfg.prism_index

    lam1 = cfg.lambda_pair_um * 1e-6
    omega1_deg = 2.0 * math.pi * C0 / lam1
    omega0 = 2.0 * omega1_deg
    dispersion = spp_dispersion(film, exit_medium)

    mode1 = spp_mode(
        permittivity(film, lam1), permittivity(exit_medium, lam1), lam1
    )
    phi0, theta0 = kretschmann_angle(mode1.n_sp.real, n0)
    phi = math.radians(cfg.phi_deg) if cfg.phi_deg is not None else phi0
    theta = 0.5 * math.pi - phi
    regime = classify_regime(phi, phi0)
    k_par_pump = (omega0 / C0) * n0 * math.cos(phi)

    stack = LayerStack(prism, ((film, cfg.film_thickness_nm * 1e-9),), exit_medium)

    def resonant_eta(lam: float) -> float:
        m = spp_mode(permittivity(film, lam), permittivity(exit_medium, lam), lam)
        _, theta_hint = kretschmann_angle(m.n_sp.real, n0)
        theta_res = _resonant_angle_for(stack, lam, theta_hint)
        return stack_response(stack, PlaneWaveContext(lam, "p", theta_res)).eta

    solution = None
    if regime is Regime.DEGENERATE:
        _, solution = degenerate_match(omega0, n0, dispersion)
    elif regime is Regime.NONDEGENERATE:
        solution = nondegenerate_match(omega0, n0, phi, dispersion)

    if solution is not None:
        lam_signal = 2.0 * math.pi * C0 / solution.omega1
        lam_idler = 2.0 * math.pi * C0 / solution.omega2
        eta1 = resonant_eta(lam_signal)
        eta2 = eta1 if solution.omega1 == solution.omega2 else resonant_eta(lam_idler)
        mode_signal = dispersion(solution.omega1)
    else:
        lam_signal = lam1
        lam_idler = lam1
        eta1 = resonant_eta(lam1)
        eta2 = eta1
        mode_signal = mode1
    eta0 = stack_response(stack, PlaneWaveContext(0.5 * lam1, "p", theta)).eta

    if cfg.l_delta_mm is not None:
        l_delta = cfg.l_delta_mm * 1e-3
        l_delta_source = "override"
    else:
        l_delta = coherence_length_damping(mode_signal)
        l_delta_source = "damping"

    chi2 = NonlinearResponse(cfg.chi2_pm_per_v * 1e-12)
    yield_report = None
    if regime is not Regime.SUPERLUMINAL:
        scenario = SpdcScenario(
            omega0=omega0,
            eta0=eta0,
            eta1=eta1,
            eta2=eta2,
            chi2=chi2,
            l_delta=l_delta,
            alpha=cfg.alpha,
            pump_field_e0=cfg.pump_e0_v_per_m,
            n2=cfg.n2_idler,
            loss_factor=cfg.loss_factor,
        )
        yield_report = yield_kappa(scenario)
        reference = yield_kappa(
            SpdcScenario(
                omega0=omega0,
                eta0=1.0,
                eta1=1.0,
                chi2=chi2,
                l_delta=1e-3,
                alpha=cfg.alpha,
                loss_factor=cfg.loss_factor,
            )
        )
        gain_vs_unenhanced = yield_report.kappa / reference.kappa
        gain_gap_decades = abs(math.log10(gain_vs_unenhanced) - math.log10(_REFERENCE_GAIN_ORDER)) if gain_vs_unenhanced > 0 else None
    else:
        gain_vs_unenhanced = None
        gain_gap_decades = None

    grating_fields: dict = {
        "grating_order": None,
        "grating_period_um": None,
        "grating_k_a_per_m": None,
        "grating_roundtrip_rel": None,
    }
    if cfg.grating_order is not None:
        spec = design_grating_period(omega0, k_par_pump, dispersion, cfg.grating_order)
        k_mode = dispersion(omega0).k.real
        folded = dict(fold_wavevector(k_mode, spec, cfg.grating_order))
        roundtrip = abs(folded[cfg.grating_order] - k_par_pump) / k_par_pump
        grating_fields = {
            "grating_order": spec.order_n,
            "grating_period_um": spec.period_a * 1e6,
            "grating_k_a_per_m": spec.k_a,
            "grating_roundtrip_rel": roundtrip,
        }

    state = entangle.emitted_state(relative_phase=math.radians(cfg.relative_phase_deg))
    chsh_s, chsh_angles = entangle.chsh_optimum(state)

    report: dict = {
        "lambda_pair_um": lam1 * 1e6,
        "omega0_rad_per_s": omega0,
        "n_sp_re": mode1.n_sp.real,
        "n_sp_im": mode1.n_sp.imag,
        "phi0_deg": math.degrees(phi0),
        "theta0_deg": math.degrees(theta0),
        "phi_deg": math.degrees(phi),
        "theta_deg": math.degrees(theta),
        "regime": regime.value,
        "eta0": eta0,
        "eta1": eta1,
        "eta2": eta2,
        "l_delta_m": l_delta,
        "l_delta_source": l_delta_source,
        "k_par_pump_per_m": k_par_pump,
        "omega1_rad_per_s": solution.omega1 if solution else None,
        "omega2_rad_per_s": solution.omega2 if solution else None,
        "lambda1_um": lam_signal * 1e6 if solution else None,
        "lambda2_um": lam_idler * 1e6 if solution else None,
        "k1_per_m": solution.k1 if solution else None,
        "k2_per_m": solution.k2 if solution else None,
        "match_residual_per_m": solution.residual if solution else None,
        "F": yield_report.F if yield_report else None,
        "N1": yield_report.N1 if yield_report else None,
        "kappa": yield_report.kappa if yield_report else None,
        "kappa_baseline": yield_report.kappa_baseline if yield_report else None,
        "enhancement_gain": yield_report.enhancement_gain if yield_report else None,
        "gain_vs_unenhanced_1mm": gain_vs_unenhanced,
        "gain_reference_order": _REFERENCE_GAIN_ORDER if gain_vs_unenhanced is not None else None,
        "gain_gap_decades": gain_gap_decades,
        **grating_fields,
        "chsh_s": chsh_s,
        "chsh_a_deg": math.degrees(chsh_angles[0]),
        "chsh_a2_deg": math.degrees(chsh_angles[1]),
        "chsh_b_deg": math.degrees(chsh_angles[2]),
        "chsh_b2_deg": math.degrees(chsh_angles[3]),
    }
    return report


# ---------------------------------------------------------------------------
# output rendering
# ---------------------------------------------------------------------------

def _csv_lines(cfg, columns, rows, footers=()) -> list[str]:
    lines = provenance_lines(cfg)
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    lines.extend(footers)
    return lines


def _json_lines(cfg, columns, rows, footers=()) -> list[str]:
    payload = {
        "meta": {
            "tool": f"plasmon-spdc {__version__}",
            "config": config_hash(cfg),
            "data": _material_source(resolve_material(cfg.film_material)),
        },
        "rows": [dict(zip(columns, (_native(v) for v in row))) for row in rows],
    }
    if footers:
        payload["notes"] = [f.lstrip("# ") for f in footers]
    return json.dumps(payload, indent=2).splitlines()


def _table_output(cfg, args, columns, rows, footers=()) -> list[str]:
    if args.format == "json":
        return _json_lines(cfg, columns, rows, footers)
    return _csv_lines(cfg, columns, rows, footers)


def _lambda_grid(args) -> np.ndarray:
    if args.steps < 1:
        raise ConfigError("steps must be >= 1")
    if args.lambda_max_um < args.lambda_min_um:
        raise ConfigError("lambda-max-um must be >= lambda-min-um")
    if args.steps == 1:
        return np.array([args.lambda_min_um]) * 1e-6
    return np.linspace(args.lambda_min_um, args.lambda_max_um, args.steps) * 1e-6


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_fig1(cfg: ScenarioConfig, args) -> list[str]:
    """Enhancement versus pair wavelength, excitation re-tuned per row.

    Every row sets the excitation angle to the enhancement resonance for that
    pair wavelength; `--field emitted` evaluates the enhancement there,
    `--field pump` at half the wavelength (same angle).
    """
    prisms = (
        [p.strip() for p in args.prism_indices.split(",") if p.strip()]
        if args.prism_indices
        else [repr(cfg.prism_index) if cfg.prism_index != int(cfg.prism_index) else str(cfg.prism_index)]
    )
    if not prisms:
        raise ConfigError("no prism indices given")
    film = resolve_material(cfg.film_material)
    exit_medium = resolve_material(cfg.exit_medium)
    grid = _lambda_grid(args)

    stacks = {}
    for token in prisms:
        try:
            n0 = float(token)
        except ValueError as exc:
            raise ConfigError(f"bad prism index {token!r}") from exc
        stacks[token] = (
            n0,
            LayerStack(
                ConstantIndex(n0, "prism"),
                ((film, cfg.film_thickness_nm * 1e-9),),
                exit_medium,
            ),
        )

    rows = []
    for lam in grid:
        row = [lam * 1e6]
        for token in prisms:
            n0, stack = stacks[token]
            mode = spp_mode(
                permittivity(film, lam), permittivity(exit_medium, lam), lam
            )
            _, theta_hint = kretschmann_angle(mode.n_sp.real, n0)
            theta_res = _resonant_angle_for(stack, lam, theta_hint)
            lam_eval = lam if args.field == "emitted" else 0.5 * lam
            eta = stack_response(stack, PlaneWaveContext(lam_eval, "p", theta_res)).eta
            row.append(eta)
        rows.append(row)
    if len(prisms) == 1:
        columns = ["lambda_um", "eta"]
    else:
        columns = ["lambda_um"] + [f"eta_n0_{t}" for t in prisms]
    return _table_output(cfg, args, columns, rows)


def cmd_fig2(cfg: ScenarioConfig, args) -> list[str]:
    """Real and imaginary effective mode index over a wavelength grid."""
    metal = resolve_material(args.material or cfg.film_material)
    dielectric = resolve_material(args.dielectric or cfg.exit_medium)
    grid = _lambda_grid(args)
    rows = []
    for lam in grid:
        mode = spp_mode(
            permittivity(metal, lam), permittivity(dielectric, lam), lam
        )
        rows.append([lam * 1e6, mode.n_sp.real, mode.n_sp.imag])
    return _table_output(cfg, args, ["lambda_um", "re_nsp", "im_nsp"], rows)


def cmd_evaluate(cfg: ScenarioConfig, args) -> list[str]:
    report = evaluate_scenario(cfg)
    if args.format == "json":
        payload = {
            "meta": {
                "tool": f"plasmon-spdc {__version__}",
                "config": config_hash(cfg),
                "data": _material_source(resolve_material(cfg.film_material)),
            },
            "report": report,
        }
        return json.dumps(payload, indent=2).splitlines()
    lines = provenance_lines(cfg)
    if args.format == "csv":
        lines.append("key,value")
        lines.extend(f"{key},{_fmt(value)}" for key, value in report.items())
    else:
        width = max(len(k) for k in report)
        lines.extend(f"{key:<{width}} = {_fmt(value)}" for key, value in report.items())
    return lines


_SWEEP_FIELDS = {
    "thickness": ("thickness_nm", "film_thickness_nm"),
    "angle": ("phi_deg", "phi_deg"),
    "prism-index": ("prism_index", "prism_index"),
}


def cmd_sweep(cfg: ScenarioConfig, args) -> list[str]:
    """Scan one scenario parameter; rows carry eta1 and kappa per value."""
    if args.parameter not in _SWEEP_FIELDS:
        raise ConfigError(f"unknown sweep parameter {args.parameter!r}")
    column, field_name = _SWEEP_FIELDS[args.parameter]
    if args.steps < 1:
        raise ConfigError("steps must be >= 1")
    if args.steps == 1:
        values = np.array([args.min])
    else:
        values = np.linspace(args.min, args.max, args.steps)

    rows = []
    for value in values:
        row_cfg = dataclasses.replace(cfg, **{field_name: float(value)})
        report = evaluate_scenario(row_cfg)
        rows.append([float(value), report["eta1"], report["kappa"]])

    footers = []
    best_eta = max(rows, key=lambda r: r[1])
    footers.append(
        f"# argmax eta1: {column}={_fmt(best_eta[0])} eta1={_fmt(best_eta[1])}"
    )
    with_kappa = [r for r in rows if r[2] is not None]
    if with_kappa:
        best_kappa = max(with_kappa, key=lambda r: r[2])
        footers.append(
            f"# argmax kappa: {column}={_fmt(best_kappa[0])} kappa={_fmt(best_kappa[2])}"
        )
    return _table_output(cfg, args, [column, "eta1", "kappa"], rows, footers)


def cmd_match(cfg: ScenarioConfig, args) -> list[str]:
    """Momentum matching at the configured excitation angle."""
    film = resolve_material(cfg.film_material)
    exit_medium = resolve_material(cfg.exit_medium)
    dispersion = spp_dispersion(film, exit_medium)
    lam1 = cfg.lambda_pair_um * 1e-6
    omega0 = 4.0 * math.pi * C0 / lam1

    phi0, degenerate = degenerate_match(omega0, cfg.prism_index, dispersion)
    phi = math.radians(cfg.phi_deg) if cfg.phi_deg is not None else phi0
    regime = classify_regime(phi, phi0)
    k_par = (omega0 / C0) * cfg.prism_index * math.cos(phi)
    if regime is Regime.SUPERLUMINAL:
        solution = None
    elif regime is Regime.DEGENERATE:
        solution = degenerate
    else:
        solution = nondegenerate_match(omega0, cfg.prism_index, phi, dispersion)

    columns = [
        "regime",
        "phi_deg",
        "theta_deg",
        "phi0_deg",
        "theta0_deg",
        "k_par_pump_per_m",
        "omega1_rad_per_s",
        "omega2_rad_per_s",
        "lambda1_um",
        "lambda2_um",
        "k1_per_m",
        "k2_per_m",
        "residual_per_m",
    ]
    row = [
        regime.value,
        math.degrees(phi),
        math.degrees(0.5 * math.pi - phi),
        math.degrees(phi0),
        math.degrees(0.5 * math.pi - phi0),
        k_par,
        solution.omega1 if solution else None,
        solution.omega2 if solution else None,
        2.0 * math.pi * C0 / solution.omega1 * 1e6 if solution else None,
        2.0 * math.pi * C0 / solution.omega2 * 1e6 if solution else None,
        solution.k1 if solution else None,
        solution.k2 if solution else None,
        solution.residual if solution else None,
    ]
    return _table_output(cfg, args, columns, [row])


def cmd_grating(cfg: ScenarioConfig, args) -> list[str]:
    """Design the grating that closes the pump's momentum deficit."""
    order = args.order if args.order is not None else (cfg.grating_order or 1)
    film = resolve_material(cfg.film_material)
    exit_medium = resolve_material(cfg.exit_medium)
    dispersion = spp_dispersion(film, exit_medium)
    lam1 = cfg.lambda_pair_um * 1e-6
    omega0 = 4.0 * math.pi * C0 / lam1

    phi0, _ = degenerate_match(omega0, cfg.prism_index, dispersion)
    phi = math.radians(cfg.phi_deg) if cfg.phi_deg is not None else phi0
    k_par = (omega0 / C0) * cfg.prism_index * math.cos(phi)
    spec = design_grating_period(omega0, k_par, dispersion, order)
    k_mode = dispersion(omega0).k.real
    folded = dict(fold_wavevector(k_mode, spec, order))
    roundtrip = abs(folded[order] - k_par) / k_par
    columns = [
        "order",
        "lambda0_um",
        "k_mode_per_m",
        "k_par_pump_per_m",
        "deficit_per_m",
        "k_a_per_m",
        "period_um",
        "roundtrip_rel",
    ]
    row = [
        order,
        0.5 * lam1 * 1e6,
        k_mode,
        k_par,
        k_mode - k_par,
        spec.k_a,
        spec.period_a * 1e6,
        roundtrip,
    ]
    return _table_output(cfg, args, columns, [row])


def cmd_bell(cfg: ScenarioConfig, args) -> list[str]:
    """Emitted polarization state, separability, and CHSH optimum."""
    state = entangle.emitted_state(
        relative_phase=math.radians(cfg.relative_phase_deg)
    )
    det = abs(np.linalg.det(state.matrix()))
    chsh_s, angles = entangle.chsh_optimum(state)
    entries: list[tuple[str, object]] = []
    for label, amp in zip(entangle.BASIS, state.amplitudes):
        entries.append((f"amp_{label}_re", amp.real))
        entries.append((f"amp_{label}_im", amp.imag))
    entries.extend(
        [
            ("det_abs", det),
            ("separable", entangle.is_separable(state)),
            ("coincidence_parallel_y", entangle.coincidence_probability(state, 0.0, 0.0)),
            ("coincidence_y_z", entangle.coincidence_probability(state, 0.0, 0.5 * math.pi)),
            (
                "coincidence_45_45",
                entangle.coincidence_probability(state, 0.25 * math.pi, 0.25 * math.pi),
            ),
            ("chsh_s", chsh_s),
            ("chsh_a_deg", math.degrees(angles[0])),
            ("chsh_a2_deg", math.degrees(angles[1])),
            ("chsh_b_deg", math.degrees(angles[2])),
            ("chsh_b2_deg", math.degrees(angles[3])),
        ]
    )
    if args.theta_s_deg is not None and args.theta_i_deg is not None:
        entries.append(
            (
                "coincidence_custom",
                entangle.coincidence_probability(
                    state,
                    math.radians(args.theta_s_deg),
                    math.radians(args.theta_i_deg),
                ),
            )
        )
    return _table_output(cfg, args, ["key", "value"], [[k, v] for k, v in entries])


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------

def _add_common(parser: argparse.ArgumentParser, default_format: str) -> None:
    parser.add_argument("--config", help="flat key = value config file")
    parser.add_argument("--out", help="output path (default stdout)")
    parser.add_argument(
        "--format",
        choices=("csv", "json", "text"),
        default=default_format,
        help=f"output format (default {default_format})",
    )
    parser.add_argument("--prism-index", dest="prism_index", type=float)
    parser.add_argument("--film-material", dest="film_material")
    parser.add_argument("--film-thickness-nm", dest="film_thickness_nm", type=float)
    parser.add_argument("--exit-medium", dest="exit_medium")
    parser.add_argument("--lambda-pair-um", dest="lambda_pair_um", type=float)
    parser.add_argument("--chi2-pm-per-v", dest="chi2_pm_per_v", type=float)
    parser.add_argument("--alpha", dest="alpha", type=float)
    parser.add_argument("--loss-factor", dest="loss_factor", type=float)
    parser.add_argument(
        "--phi-deg",
        dest="phi_deg",
        type=float,
        help="excitation angle from the interface plane, degrees",
    )
    parser.add_argument("--l-delta-mm", dest="l_delta_mm", type=float)
    parser.add_argument("--grating-order", dest="grating_order", type=int)
    parser.add_argument("--pump-e0-v-per-m", dest="pump_e0_v_per_m", type=float)
    parser.add_argument("--n2-idler", dest="n2_idler", type=float)
    parser.add_argument("--relative-phase-deg", dest="relative_phase_deg", type=float)


def _add_grid(parser: argparse.ArgumentParser, lo: float, hi: float, steps: int) -> None:
    parser.add_argument("--lambda-min-um", dest="lambda_min_um", type=float, default=lo)
    parser.add_argument("--lambda-max-um", dest="lambda_max_um", type=float, default=hi)
    parser.add_argument("--steps", type=int, default=steps)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plasmon-spdc",
        description="Plasmon-supported parametric down-conversion toolkit",
    )
    parser.add_argument("--version", action="version", version=f"plasmon-spdc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fig1", help="enhancement vs pair wavelength")
    _add_common(p, "csv")
    _add_grid(p, 0.7, 1.6, 46)
    p.add_argument("--prism-indices", help="comma list, e.g. 1.5,2.0")
    p.add_argument("--field", choices=("emitted", "pump"), default="emitted")
    p.set_defaults(handler=cmd_fig1)

    p = sub.add_parser("fig2", help="effective mode index vs wavelength")
    _add_common(p, "csv")
    _add_grid(p, 0.4, 1.9, 76)
    p.add_argument("--material", help="metal material (default film material)")
    p.add_argument("--dielectric", help="dielectric side (default exit medium)")
    p.set_defaults(handler=cmd_fig2)

    p = sub.add_parser("evaluate", help="full scenario report")
    _add_common(p, "text")
    p.set_defaults(handler=cmd_evaluate)

    p = sub.add_parser("sweep", help="parameter scan")
    _add_common(p, "csv")
    p.add_argument("--parameter", required=True, choices=sorted(_SWEEP_FIELDS))
    p.add_argument("--min", type=float, required=True)
    p.add_argument("--max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("match", help="momentum matching at an excitation angle")
    _add_common(p, "csv")
    p.set_defaults(handler=cmd_match)

    p = sub.add_parser("grating", help="grating period for pump coupling")
    _add_common(p, "csv")
    p.add_argument("--order", type=int)
    p.set_defaults(handler=cmd_grating)

    p = sub.add_parser("bell", help="emitted two-photon state statistics")
    _add_common(p, "csv")
    p.add_argument("--theta-s-deg", dest="theta_s_deg", type=float)
    p.add_argument("--theta-i-deg", dest="theta_i_deg", type=float)
    p.set_defaults(handler=cmd_bell)
    return parser


def emit(lines: list[str], out: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
        lines = args.handler(cfg, args)
        emit(lines, args.out)
        return 0
    except (ConfigError, TableFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (NumericalError, PlasmonSpdcError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
