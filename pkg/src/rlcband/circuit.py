"""Series-RLC model: toleranced components to second-order parameters and
unit-step response, as point trajectories and guaranteed interval bands.

The circuit is driven by a unit voltage step from rest.  With effective
series resistance R (resistor plus inductor winding resistance), the
underdamped response of the capacitor voltage is

    v(t) = 1 - exp(-xi*w0*t) * (cos(wd*t) + xi/sqrt(1-xi^2) * sin(wd*t))

where xi = (R/2)*sqrt(C/L), w0 = 1/sqrt(L*C) and wd = w0*sqrt(1-xi^2).
Interval parameters propagate component tolerances and rounding through the
same closed form; the resulting band is a guaranteed enclosure of every
response the component box can produce.
"""

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .elementary import icos, iexp, isin, isqrt
from .errors import ConfigError, NotUnderdampedError
from .interval import Interval

_CONFIG_KEYS = {
    "r_ohms": "r_ohms",
    "r_tol_pct": "r_tol",
    "rl_ohms": "rl_ohms",
    "rl_tol_pct": "rl_tol",
    "l_henries": "l_henries",
    "l_tol_pct": "l_tol",
    "c_farads": "c_farads",
    "c_tol_pct": "c_tol",
}


@dataclass(frozen=True)
class CircuitSpec:
    """Nominal component values with tolerance fractions.

    ``rl_ohms`` is the inductor's series (winding) resistance; it adds to the
    resistor to form the effective series resistance, each with its own
    tolerance.
    """

    r_ohms: float
    r_tol: float
    rl_ohms: float
    rl_tol: float
    l_henries: float
    l_tol: float
    c_farads: float
    c_tol: float

    def __post_init__(self):
        for name in ("r_ohms", "rl_ohms", "l_henries", "c_farads"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be positive")
        for name in ("r_tol", "rl_tol", "l_tol", "c_tol"):
            tol = getattr(self, name)
            if not (0.0 <= tol < 1.0):
                raise ValueError(f"{name} must be a fraction in [0, 1)")

    @property
    def r_total_nominal(self) -> float:
        return self.r_ohms + self.rl_ohms

    def resistance_interval(self) -> Interval:
        """Effective series resistance: toleranced resistor plus winding."""
        return Interval.from_nominal_tolerance(
            self.r_ohms, self.r_tol
        ) + Interval.from_nominal_tolerance(self.rl_ohms, self.rl_tol)

    def inductance_interval(self) -> Interval:
        return Interval.from_nominal_tolerance(self.l_henries, self.l_tol)

    def capacitance_interval(self) -> Interval:
        return Interval.from_nominal_tolerance(self.c_farads, self.c_tol)


def load_circuit_spec(path) -> CircuitSpec:
    """Read a CircuitSpec from a JSON config.

    Expected keys: r_ohms, r_tol_pct, rl_ohms, rl_tol_pct, l_henries,
    l_tol_pct, c_farads, c_tol_pct.  Tolerances are percentages.
    """
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"config {path} must be a JSON object")
    unknown = set(raw) - set(_CONFIG_KEYS)
    if unknown:
        raise ConfigError(f"config {path}: unknown keys {sorted(unknown)}")
    missing = set(_CONFIG_KEYS) - set(raw)
    if missing:
        raise ConfigError(f"config {path}: missing keys {sorted(missing)}")
    kwargs = {}
    for key, field in _CONFIG_KEYS.items():
        value = raw[key]
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ConfigError(f"config {path}: {key} must be a number")
        kwargs[field] = value / 100.0 if key.endswith("_pct") else float(value)
    try:
        return CircuitSpec(**kwargs)
    except ValueError as exc:
        raise ConfigError(f"config {path}: {exc}") from exc


@dataclass(frozen=True)
class SecondOrderParams:
    """Damping ratio, natural and damped frequency, as intervals plus nominals.

    Admissible only for the underdamped regime: xi strictly inside (0, 1).
    """

    xi: Interval
    omega0: Interval
    omegad: Interval
    xi_nominal: float
    omega0_nominal: float
    omegad_nominal: float

    def __post_init__(self):
        if not (self.xi.lo > 0.0 and self.xi.hi < 1.0):
            raise NotUnderdampedError(
                f"damping ratio {self.xi.render(6)} not strictly inside (0, 1)"
            )
        if not self.omegad.lo > 0.0:
            raise NotUnderdampedError(
                f"damped frequency {self.omegad.render(6)} not strictly positive"
            )


def _param_intervals(r: Interval, l: Interval, c: Interval):
    one = Interval.point(1.0)
    xi = (r / 2.0) * isqrt(c / l)
    omega0 = one / isqrt(l * c)
    if not (xi.lo > 0.0 and xi.hi < 1.0):
        raise NotUnderdampedError(
            f"damping ratio {xi.render(6)} not strictly inside (0, 1)"
        )
    omegad = omega0 * isqrt(one - xi * xi)
    return xi, omega0, omegad


def derive_params(spec: CircuitSpec) -> SecondOrderParams:
    """Map a toleranced circuit to second-order parameters.

    Natural interval extension is tight here: each component appears once per
    formula and all formulas are monotone over positive boxes.  The nominal
    triple is computed through the same interval pipeline with degenerate
    inputs and taken at the midpoint.
    """
    xi, omega0, omegad = _param_intervals(
        spec.resistance_interval(),
        spec.inductance_interval(),
        spec.capacitance_interval(),
    )
    r_nom = Interval.point(spec.r_ohms) + Interval.point(spec.rl_ohms)
    xi_n, omega0_n, omegad_n = _param_intervals(
        r_nom, Interval.point(spec.l_henries), Interval.point(spec.c_farads)
    )
    return SecondOrderParams(
        xi=xi,
        omega0=omega0,
        omegad=omegad,
        xi_nominal=xi_n.midpoint(),
        omega0_nominal=omega0_n.midpoint(),
        omegad_nominal=omegad_n.midpoint(),
    )


def step_response_point(xi: float, omega0: float, omegad: float, t: float) -> float:
    """Closed-form unit-step response value at time t (point arithmetic)."""
    if t < 0.0:
        raise ValueError(f"time must be non-negative, got {t}")
    if not 0.0 < xi < 1.0:
        raise NotUnderdampedError(f"damping ratio {xi} not strictly inside (0, 1)")
    damp = xi / math.sqrt(1.0 - xi * xi)
    return 1.0 - math.exp(-xi * omega0 * t) * (
        math.cos(omegad * t) + damp * math.sin(omegad * t)
    )


def step_response_curve(xi, omega0, omegad, t):
    """Vectorized closed-form unit-step response (numpy broadcasting)."""
    xi = np.asarray(xi, dtype=np.float64)
    t = np.asarray(t, dtype=np.float64)
    damp = xi / np.sqrt(1.0 - xi * xi)
    return 1.0 - np.exp(-xi * omega0 * t) * (
        np.cos(omegad * t) + damp * np.sin(omegad * t)
    )


@dataclass
class ResponseBand:
    """Guaranteed response envelope on a time grid, plus the nominal curve.

    Invariants: the grid is strictly increasing and starts at 0, and
    lower <= nominal <= upper holds at every grid point.
    """

    t: np.ndarray
    lower: np.ndarray
    nominal: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        self.t = np.asarray(self.t, dtype=np.float64)
        self.lower = np.asarray(self.lower, dtype=np.float64)
        self.nominal = np.asarray(self.nominal, dtype=np.float64)
        self.upper = np.asarray(self.upper, dtype=np.float64)
        n = self.t.size
        if n < 2:
            raise ValueError("band grid needs at least 2 points")
        for name in ("lower", "nominal", "upper"):
            if getattr(self, name).shape != self.t.shape:
                raise ValueError(f"{name} shape does not match the grid")
        if self.t[0] != 0.0:
            raise ValueError("band grid must start at t = 0")
        if not np.all(np.diff(self.t) > 0.0):
            raise ValueError("band grid must be strictly increasing")
        if not (
            np.all(self.lower <= self.nominal) and np.all(self.nominal <= self.upper)
        ):
            raise ValueError("band must satisfy lower <= nominal <= upper")


def default_time_grid(
    params: SecondOrderParams, points: int = 2000, t_end_mult: float = 5.0
) -> np.ndarray:
    """Uniform grid over [0, t_end_mult * nominal settling time]."""
    if points < 2:
        raise ValueError("grid needs at least 2 points")
    if t_end_mult <= 0.0:
        raise ValueError("t_end_mult must be positive")
    t_settle = 4.0 / (params.xi_nominal * params.omega0_nominal)
    return np.linspace(0.0, t_end_mult * t_settle, points)


def step_response_band(params: SecondOrderParams, grid) -> ResponseBand:
    """Evaluate the closed form in full interval arithmetic on each grid time.

    Grid times are treated as exact (degenerate intervals).  Dependency
    widening from repeated parameter occurrences is expected and accepted;
    the band is an enclosure, not the exact reachable range.
    """
    grid = np.asarray(grid, dtype=np.float64)
    one = Interval.point(1.0)
    decay = params.xi * params.omega0
    damp = params.xi / isqrt(one - params.xi * params.xi)
    n = grid.size
    lower = np.empty(n)
    upper = np.empty(n)
    for i in range(n):
        tt = Interval.point(float(grid[i]))
        envelope = iexp(-(decay * tt))
        phase = params.omegad * tt
        v = one - envelope * (icos(phase) + damp * isin(phase))
        lower[i] = v.lo
        upper[i] = v.hi
    nominal = step_response_curve(
        params.xi_nominal, params.omega0_nominal, params.omegad_nominal, grid
    )
    return ResponseBand(t=grid, lower=lower, nominal=nominal, upper=upper)


def simulate_ode_point(spec: CircuitSpec, t_end: float, dt: float):
    """Fixed-step RK4 integration of the two-state circuit ODE from rest.

    Independent cross-check of the closed form: integrates
    dv/dt = i/C, di/dt = (1 - R*i - v)/L under a unit step.
    Returns (times, capacitor voltage) arrays.
    """
    if dt <= 0.0:
        raise ValueError("dt must be positive")
    if dt > t_end / 100.0:
        raise ValueError(f"dt = {dt} too coarse for t_end = {t_end} (need dt <= t_end/100)")
    omega0 = 1.0 / math.sqrt(spec.l_henries * spec.c_farads)
    if dt * omega0 > 0.1:
        raise ValueError(
            f"dt * omega0 = {dt * omega0:.3g} exceeds the accuracy guard of 0.1"
        )
    r = spec.r_total_nominal
    inv_c = 1.0 / spec.c_farads
    inv_l = 1.0 / spec.l_henries
    n = int(round(t_end / dt))
    out = np.empty(n + 1)
    out[0] = 0.0
    v = 0.0
    i = 0.0
    h = dt
    for k in range(n):
        k1v = i * inv_c
        k1i = (1.0 - r * i - v) * inv_l
        v2 = v + 0.5 * h * k1v
        i2 = i + 0.5 * h * k1i
        k2v = i2 * inv_c
        k2i = (1.0 - r * i2 - v2) * inv_l
        v3 = v + 0.5 * h * k2v
        i3 = i + 0.5 * h * k2i
        k3v = i3 * inv_c
        k3i = (1.0 - r * i3 - v3) * inv_l
        v4 = v + h * k3v
        i4 = i + h * k3i
        k4v = i4 * inv_c
        k4i = (1.0 - r * i4 - v4) * inv_l
        v += h * (k1v + 2.0 * (k2v + k3v) + k4v) / 6.0
        i += h * (k1i + 2.0 * (k2i + k3i) + k4i) / 6.0
        out[k + 1] = v
    times = np.arange(n + 1, dtype=np.float64) * dt
    return times, out


def write_band_csv(band: ResponseBand, path) -> None:
    """Write the band as CSV with header t,lower,nominal,upper (17 sig. digits)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "lower", "nominal", "upper"])
        for i in range(band.t.size):
            writer.writerow(
                [
                    f"{band.t[i]:.17g}",
                    f"{band.lower[i]:.17g}",
                    f"{band.nominal[i]:.17g}",
                    f"{band.upper[i]:.17g}",
                ]
            )
