"""Analytical performance, power, and energy models.

Execution time splits into a sequential part (runs on one core, a big one
when available) and a parallel part (spread over every active core, big
cores weighted by their speedup over a LITTLE core). Cluster power is the
classic cubic-dynamic-plus-linear-static form P = alpha*F^3 + beta*F, with
the dynamic term charged per active core and the static term charged for
the whole cluster regardless of activity (cores cannot be hot-unplugged).
Energy is time x power, accumulated separately for the two phases.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hwplatform import Configuration, PlatformSpec, enumerate_configurations


class ModelError(ValueError):
    pass


@dataclass(frozen=True)
class PerfParams:
    """Application performance parameters.

    f: parallel fraction in [0, 1], the only application-specific knob.
    perf: speedup of one big core over one LITTLE core at equal frequency.
    t_l_ref_s: measured time on a single LITTLE core at f_ref_hz; f_ref_hz
    need not be a frequency the LITTLE ladder offers at prediction time.
    """

    f: float
    perf: float
    t_l_ref_s: float
    f_ref_hz: float

    def __post_init__(self):
        if not 0.0 <= self.f <= 1.0:
            raise ModelError("parallel fraction f must be in [0, 1]")
        if self.perf <= 0 or self.t_l_ref_s <= 0 or self.f_ref_hz <= 0:
            raise ModelError("perf, t_l_ref_s and f_ref_hz must be > 0")


@dataclass(frozen=True)
class PowerParams:
    """Per-cluster power constants (W/Hz^3 and W/Hz) plus total core counts."""

    alpha_b: float
    beta_b: float
    alpha_l: float
    beta_l: float
    c_b: int
    c_l: int

    def __post_init__(self):
        if min(self.alpha_b, self.beta_b, self.alpha_l, self.beta_l) < 0:
            raise ModelError("power constants must be >= 0")
        if self.c_b < 1 or self.c_l < 1:
            raise ModelError("cluster core counts must be >= 1")


@dataclass(frozen=True)
class Estimate:
    config: Configuration
    time_s: float
    energy_j: float
    power_seq_w: float
    power_par_w: float


def _check_active(c: Configuration):
    if c.b == 0 and c.little == 0:
        raise ModelError("configuration has no active core")


def phase_times(p: PerfParams, c: Configuration) -> tuple[float, float]:
    """(sequential, parallel) execution time in seconds."""
    _check_active(c)
    if c.b > 0:
        t_seq = p.t_l_ref_s * (1.0 - p.f) * p.f_ref_hz / (p.perf * c.fb_hz)
        t_par = p.t_l_ref_s * p.f * p.f_ref_hz / (
            c.b * p.perf * c.fb_hz + c.little * c.fl_hz
        )
    else:
        t_seq = p.t_l_ref_s * (1.0 - p.f) * p.f_ref_hz / c.fl_hz
        t_par = p.t_l_ref_s * p.f * p.f_ref_hz / (c.little * c.fl_hz)
    return t_seq, t_par


def predict_time(p: PerfParams, c: Configuration) -> float:
    """Total execution time in seconds for configuration c."""
    t_seq, t_par = phase_times(p, c)
    return t_seq + t_par


def power_parallel(q: PowerParams, c: Configuration) -> float:
    """Chip power in watts with all active cores busy."""
    return (
        c.b * q.alpha_b * c.fb_hz**3
        + q.c_b * q.beta_b * c.fb_hz
        + c.little * q.alpha_l * c.fl_hz**3
        + q.c_l * q.beta_l * c.fl_hz
    )


def power_sequential(q: PowerParams, c: Configuration) -> float:
    """Chip power in watts during the single-core phase.

    One big core is dynamically active when any big core is configured;
    otherwise one LITTLE core. Static power of both clusters is always paid.
    """
    static = q.c_b * q.beta_b * c.fb_hz + q.c_l * q.beta_l * c.fl_hz
    if c.b > 0:
        return q.alpha_b * c.fb_hz**3 + static
    return q.alpha_l * c.fl_hz**3 + static


def predict_energy(p: PerfParams, q: PowerParams, c: Configuration) -> float:
    """Total energy in joules: sequential and parallel phase contributions."""
    _check_active(c)
    scale = p.t_l_ref_s * p.f_ref_hz
    dyn_b = q.alpha_b * c.fb_hz**3
    stat_b = q.c_b * q.beta_b * c.fb_hz
    dyn_l = q.alpha_l * c.fl_hz**3
    stat_l = q.c_l * q.beta_l * c.fl_hz
    if c.b > 0:
        e_seq = (1.0 - p.f) * (stat_l + dyn_b + stat_b) / (p.perf * c.fb_hz)
        e_par = p.f * (c.little * dyn_l + stat_l + c.b * dyn_b + stat_b) / (
            c.b * p.perf * c.fb_hz + c.little * c.fl_hz
        )
    else:
        e_seq = (1.0 - p.f) * (stat_b + dyn_l + stat_l) / c.fl_hz
        e_par = p.f * (c.little * dyn_l + stat_l + stat_b) / (c.little * c.fl_hz)
    return scale * (e_seq + e_par)


def estimate(p: PerfParams, q: PowerParams, c: Configuration) -> Estimate:
    return Estimate(
        config=c,
        time_s=predict_time(p, c),
        energy_j=predict_energy(p, q, c),
        power_seq_w=power_sequential(q, c),
        power_par_w=power_parallel(q, c),
    )


def predict_all(p: PerfParams, q: PowerParams, platform: PlatformSpec) -> list[Estimate]:
    """One Estimate per configuration, in enumeration order."""
    return [estimate(p, q, c) for c in enumerate_configurations(platform)]
