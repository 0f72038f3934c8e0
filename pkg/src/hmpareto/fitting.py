"""Parameter estimation from measurements.

Three procedures:
  * fit_speedup - the big-over-LITTLE speedup as the median of measured
    time ratios at matched frequencies,
  * fit_power - the four chip power constants by derivative-free
    least-RMSE regression against whole-chip power readings,
  * fit_parallel_fraction - the one application-specific parameter, by
    bounded 1-D minimization of time-prediction RMSE.

All fits are deterministic: fixed initial points, fixed restart schedule,
no randomness.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np
from scipy import optimize

from .hwplatform import Configuration, PlatformSpec
from .models import PerfParams, PowerParams, predict_time

# Frequencies in Hz give alpha ~ 1e-28 and beta ~ 1e-10; the optimizer works
# on GHz-referred constants (alpha*1e27, beta*1e9) so all four are O(0.01-10).
_F_SCALE = 1e9

_RMSE_REL_TOL = 1e-10
_MAX_ITER = 10_000


class FittingError(ValueError):
    pass


@dataclass(frozen=True)
class MeasurementRecord:
    """One offline observation of a configuration.

    time_s is the median of repeated runs, power_w the mean chip power;
    either may be absent but not both.
    """

    config: Configuration
    time_s: Optional[float] = None
    power_w: Optional[float] = None
    app: str = ""
    repeats: int = 1

    def __post_init__(self):
        if self.time_s is None and self.power_w is None:
            raise FittingError("record needs time_s or power_w")
        if self.time_s is not None and self.time_s <= 0:
            raise FittingError("time_s must be > 0")
        if self.power_w is not None and self.power_w <= 0:
            raise FittingError("power_w must be > 0")


@dataclass(frozen=True)
class FitReport:
    params: Union[PerfParams, PowerParams]
    rmse: float
    n_points: int
    iterations: int
    converged: bool
    underdetermined: bool = False


def rmse(actual: Sequence[float], estimated: Sequence[float]) -> float:
    """Root mean square error between two equal-length vectors."""
    if len(actual) == 0 or len(actual) != len(estimated):
        raise FittingError("rmse needs two equal-length nonempty vectors")
    a = np.asarray(actual, dtype=float)
    e = np.asarray(estimated, dtype=float)
    return float(np.sqrt(np.mean((a - e) ** 2)))


def fit_speedup(pairs: Sequence[tuple[float, float, float]]) -> float:
    """Median of t_little/t_big over (frequency, t_little, t_big) pairs
    measured at matched big/LITTLE frequency."""
    if not pairs:
        raise FittingError("no speedup pairs")
    ratios = []
    for f_hz, t_little, t_big in pairs:
        if t_little <= 0 or t_big <= 0:
            raise FittingError(f"non-positive time at {f_hz} Hz")
        ratios.append(t_little / t_big)
    return float(statistics.median(ratios))


def _power_design_matrix(configs: Sequence[Configuration],
                         c_b: int, c_l: int) -> np.ndarray:
    """Rows map GHz-referred (alpha_b, beta_b, alpha_l, beta_l) to watts."""
    rows = []
    for c in configs:
        fb = c.fb_hz / _F_SCALE
        fl = c.fl_hz / _F_SCALE
        rows.append([c.b * fb**3, c_b * fb, c.little * fl**3, c_l * fl])
    return np.asarray(rows, dtype=float)


def fit_power(measurements: Sequence[MeasurementRecord],
              platform: PlatformSpec) -> FitReport:
    """Fit the four chip power constants from whole-chip power readings.

    The predictor is the all-active-cores power form, matching a fully
    parallel saturating calibration workload. Minimization is Nelder-Mead
    under non-negativity bounds, restarted from five fixed initial points
    (a linear least-squares solve plus four spread starts); the best RMSE
    wins. Deterministic for identical input.
    """
    recs = [m for m in measurements if m.power_w is not None]
    if len(recs) < 4:
        raise FittingError("power fit needs at least 4 records with power_w")
    for dim, getter in (("b", lambda c: c.b), ("L", lambda c: c.little),
                        ("F_b", lambda c: c.fb_hz), ("F_L", lambda c: c.fl_hz)):
        if len({getter(m.config) for m in recs}) < 2:
            raise FittingError(f"power fit under-determined: no variation in {dim}")

    design = _power_design_matrix([m.config for m in recs],
                                  platform.big.core_count,
                                  platform.little.core_count)
    y = np.array([m.power_w for m in recs], dtype=float)

    def objective(theta: np.ndarray) -> float:
        return float(np.sqrt(np.mean((design @ theta - y) ** 2)))

    lsq, *_ = np.linalg.lstsq(design, y, rcond=None)
    starts = [
        np.clip(lsq, 0.0, None),
        np.full(4, 0.01),
        np.full(4, 0.1),
        np.full(4, 1.0),
        np.array([1.0, 0.1, 0.1, 1.0]),
    ]

    best = None
    iterations = 0
    converged = False
    for x0 in starts:
        res = optimize.minimize(
            objective, x0, method="Nelder-Mead",
            bounds=[(0.0, None)] * 4,
            options={"maxiter": _MAX_ITER, "fatol": _RMSE_REL_TOL,
                     "xatol": 1e-12, "adaptive": True},
        )
        iterations += int(res.nit)
        if best is None or res.fun < best.fun:
            best = res
            converged = bool(res.success)

    theta = np.clip(best.x, 0.0, None)
    params = PowerParams(
        alpha_b=theta[0] / _F_SCALE**3,
        beta_b=theta[1] / _F_SCALE,
        alpha_l=theta[2] / _F_SCALE**3,
        beta_l=theta[3] / _F_SCALE,
        c_b=platform.big.core_count,
        c_l=platform.little.core_count,
    )
    return FitReport(params=params, rmse=objective(theta), n_points=len(recs),
                     iterations=iterations, converged=converged)


def fit_parallel_fraction(measurements: Sequence[MeasurementRecord],
                          perf: float, t_l_ref: float, f_ref: float) -> FitReport:
    """Fit the parallel fraction f in [0, 1] with perf, t_l_ref, f_ref fixed.

    Bounded scalar minimization of time RMSE. If the data cannot tell
    different f apart (flat objective), the report is flagged
    underdetermined and f defaults to the minimizer's pick.
    """
    recs = [m for m in measurements if m.time_s is not None]
    if not recs:
        raise FittingError("parallel-fraction fit needs records with time_s")
    if perf <= 0 or t_l_ref <= 0 or f_ref <= 0:
        raise FittingError("perf, t_l_ref and f_ref must be > 0")
    times = np.array([m.time_s for m in recs], dtype=float)
    configs = [m.config for m in recs]

    def objective(f: float) -> float:
        p = PerfParams(f=f, perf=perf, t_l_ref_s=t_l_ref, f_ref_hz=f_ref)
        pred = np.array([predict_time(p, c) for c in configs])
        return float(np.sqrt(np.mean((pred - times) ** 2)))

    res = optimize.minimize_scalar(
        objective, bounds=(0.0, 1.0), method="bounded",
        options={"xatol": 1e-12, "maxiter": _MAX_ITER},
    )
    f_hat = float(min(max(res.x, 0.0), 1.0))
    best_rmse = objective(f_hat)

    probe = [objective(f) for f in (0.0, 0.25, 0.5, 0.75, 1.0)]
    flat = max(probe) - min(probe) <= 1e-12 * max(1.0, max(probe))

    params = PerfParams(f=f_hat, perf=perf, t_l_ref_s=t_l_ref, f_ref_hz=f_ref)
    return FitReport(params=params, rmse=best_rmse, n_points=len(recs),
                     iterations=int(res.nfev), converged=bool(res.success),
                     underdetermined=flat)
