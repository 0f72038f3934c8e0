"""Measurement plumbing: synthetic campaigns, CSV ingestion, trace energy.

Real campaigns run on hardware; the synthetic generator stands in for the
board at desk scale, drawing noisy observations from known ground-truth
parameters so fits can be checked for recovery. File formats:

  measurement CSV   app,b,l,fb_hz,fl_hz,time_s,power_w,repeat
                    (time_s / power_w may be blank, not both)
  power-trace CSV   t_s,power_w
  speedup-pair CSV  f_hz,t_little_s,t_big_s
  estimate CSV      b,L,fb_hz,fl_hz,time_s,energy_j,p_seq_w,p_par_w
"""

from __future__ import annotations

import csv
import io
import statistics
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Sequence, Union

import numpy as np

from .fitting import FittingError, MeasurementRecord
from .hwplatform import Configuration, PlatformSpec, validate_configuration
from .models import (Estimate, PerfParams, PowerParams, power_parallel,
                     predict_time)

MEASUREMENT_HEADER = ["app", "b", "l", "fb_hz", "fl_hz", "time_s", "power_w", "repeat"]
ESTIMATE_HEADER = ["b", "L", "fb_hz", "fl_hz", "time_s", "energy_j", "p_seq_w", "p_par_w"]
TRACE_HEADER = ["t_s", "power_w"]
PAIRS_HEADER = ["f_hz", "t_little_s", "t_big_s"]

_POWER_FLOOR_W = 1e-9


class HarnessError(ValueError):
    pass


@dataclass(frozen=True)
class SyntheticGroundTruth:
    """Known model parameters plus noise levels for simulated measurements.

    Time noise is relative (Gaussian factor), power noise absolute in watts;
    the defaults mirror chip-sensor scatter observed on real two-cluster
    boards (~1% timing, ~0.15 W power).
    """

    perf_params: PerfParams
    power_params: PowerParams
    noise_time_sigma: float = 0.01
    noise_power_sigma: float = 0.15
    seed: int = 0

    def __post_init__(self):
        if self.noise_time_sigma < 0 or self.noise_power_sigma < 0:
            raise HarnessError("noise sigmas must be >= 0")


@dataclass(frozen=True)
class Campaign:
    platform: PlatformSpec
    configurations: tuple[Configuration, ...]
    repeats: int = 5
    app: str = "synthetic"

    def __post_init__(self):
        object.__setattr__(self, "configurations", tuple(self.configurations))
        if self.repeats < 1:
            raise HarnessError("repeats must be >= 1")
        if len(set(self.configurations)) != len(self.configurations):
            raise HarnessError("campaign configurations must be distinct")
        for c in self.configurations:
            if not validate_configuration(self.platform, c):
                raise HarnessError(f"invalid configuration {c}")


def simulate_measurements(gt: SyntheticGroundTruth,
                          campaign: Campaign) -> list[MeasurementRecord]:
    """Noisy draws from the ground-truth models, one record per configuration.

    time_s is the median of `repeats` relative-Gaussian draws around the
    model time; power_w the mean of `repeats` absolute-Gaussian draws around
    the all-cores-busy model power, floored at a small positive epsilon.
    Deterministic for a fixed seed.
    """
    rng = np.random.default_rng(gt.seed)
    records = []
    for c in campaign.configurations:
        t_true = predict_time(gt.perf_params, c)
        p_true = power_parallel(gt.power_params, c)
        t_draws = t_true * (1.0 + rng.normal(0.0, gt.noise_time_sigma,
                                             campaign.repeats))
        p_draws = p_true + rng.normal(0.0, gt.noise_power_sigma, campaign.repeats)
        time_s = max(float(np.median(t_draws)), _POWER_FLOOR_W)
        power_w = max(float(np.mean(p_draws)), _POWER_FLOOR_W)
        records.append(MeasurementRecord(config=c, time_s=time_s,
                                         power_w=power_w, app=campaign.app,
                                         repeats=campaign.repeats))
    return records


def _open(source: Union[str, Path, IO[str]]):
    if hasattr(source, "read"):
        return source, False
    return open(source, newline=""), True


def ingest_measurements(source: Union[str, Path, IO[str]],
                        platform: PlatformSpec) -> list[MeasurementRecord]:
    """Parse and validate a measurement CSV.

    Rows repeating the same (app, configuration) are aggregated: median of
    times, mean of powers, repeats counted. Errors name the offending row.
    """
    stream, close = _open(source)
    try:
        reader = csv.DictReader(stream)
        if reader.fieldnames != MEASUREMENT_HEADER:
            raise HarnessError(
                f"bad measurement header {reader.fieldnames}, "
                f"expected {MEASUREMENT_HEADER}")
        groups: dict[tuple, dict] = {}
        n_rows = 0
        for row_no, row in enumerate(reader, start=2):
            n_rows += 1
            try:
                cfg = Configuration(int(row["b"]), int(row["l"]),
                                    float(row["fb_hz"]), float(row["fl_hz"]))
                time_s = float(row["time_s"]) if row["time_s"] else None
                power_w = float(row["power_w"]) if row["power_w"] else None
            except (TypeError, ValueError) as exc:
                raise HarnessError(f"row {row_no}: {exc}") from exc
            if time_s is None and power_w is None:
                raise HarnessError(f"row {row_no}: time_s and power_w both empty")
            if (time_s is not None and time_s <= 0) or \
               (power_w is not None and power_w <= 0):
                raise HarnessError(f"row {row_no}: non-positive measurement")
            if not validate_configuration(platform, cfg):
                raise HarnessError(f"row {row_no}: configuration invalid for platform")
            key = (row["app"], cfg)
            grp = groups.setdefault(key, {"times": [], "powers": [], "n": 0})
            if time_s is not None:
                grp["times"].append(time_s)
            if power_w is not None:
                grp["powers"].append(power_w)
            grp["n"] += 1
        if n_rows == 0:
            raise HarnessError("empty measurement file")
    finally:
        if close:
            stream.close()

    records = []
    for (app, cfg), grp in groups.items():
        records.append(MeasurementRecord(
            config=cfg,
            time_s=statistics.median(grp["times"]) if grp["times"] else None,
            power_w=statistics.fmean(grp["powers"]) if grp["powers"] else None,
            app=app,
            repeats=grp["n"],
        ))
    return records


def write_measurements(records: Sequence[MeasurementRecord],
                       sink: Union[str, Path, IO[str]]) -> None:
    stream, close = (sink, False) if hasattr(sink, "write") else \
        (open(sink, "w", newline=""), True)
    try:
        writer = csv.writer(stream)
        writer.writerow(MEASUREMENT_HEADER)
        for m in records:
            writer.writerow([
                m.app, m.config.b, m.config.little,
                _fmt_hz(m.config.fb_hz), _fmt_hz(m.config.fl_hz),
                repr(m.time_s) if m.time_s is not None else "",
                repr(m.power_w) if m.power_w is not None else "",
                m.repeats,
            ])
    finally:
        if close:
            stream.close()


def write_configuration_template(configs: Sequence[Configuration],
                                 sink: Union[str, Path, IO[str]],
                                 app: str = "") -> None:
    """Measurement CSV skeleton with blank time/power columns, to be filled
    by an external campaign."""
    stream, close = (sink, False) if hasattr(sink, "write") else \
        (open(sink, "w", newline=""), True)
    try:
        writer = csv.writer(stream)
        writer.writerow(MEASUREMENT_HEADER)
        for c in configs:
            writer.writerow([app, c.b, c.little, _fmt_hz(c.fb_hz),
                             _fmt_hz(c.fl_hz), "", "", ""])
    finally:
        if close:
            stream.close()


def read_configuration_template(source: Union[str, Path, IO[str]],
                                platform: PlatformSpec) -> list[Configuration]:
    """Distinct configurations from a measurement-shaped CSV, in row order;
    any time/power values present are ignored."""
    stream, close = _open(source)
    try:
        reader = csv.DictReader(stream)
        if reader.fieldnames != MEASUREMENT_HEADER:
            raise HarnessError(
                f"bad measurement header {reader.fieldnames}, "
                f"expected {MEASUREMENT_HEADER}")
        out: list[Configuration] = []
        seen = set()
        for row_no, row in enumerate(reader, start=2):
            try:
                cfg = Configuration(int(row["b"]), int(row["l"]),
                                    float(row["fb_hz"]), float(row["fl_hz"]))
            except (TypeError, ValueError) as exc:
                raise HarnessError(f"row {row_no}: {exc}") from exc
            if not validate_configuration(platform, cfg):
                raise HarnessError(f"row {row_no}: configuration invalid for platform")
            if cfg not in seen:
                seen.add(cfg)
                out.append(cfg)
        if not out:
            raise HarnessError("empty configuration file")
        return out
    finally:
        if close:
            stream.close()


def _fmt_hz(value: float) -> str:
    return f"{value:.0f}" if value == int(value) else repr(value)


def write_estimates(estimates: Sequence[Estimate],
                    sink: Union[str, Path, IO[str]],
                    extra_columns: dict[str, Sequence] | None = None) -> None:
    header = list(ESTIMATE_HEADER) + (list(extra_columns) if extra_columns else [])
    stream, close = (sink, False) if hasattr(sink, "write") else \
        (open(sink, "w", newline=""), True)
    try:
        writer = csv.writer(stream)
        writer.writerow(header)
        for i, e in enumerate(estimates):
            row = [e.config.b, e.config.little, _fmt_hz(e.config.fb_hz),
                   _fmt_hz(e.config.fl_hz), repr(e.time_s), repr(e.energy_j),
                   repr(e.power_seq_w), repr(e.power_par_w)]
            if extra_columns:
                row.extend(extra_columns[name][i] for name in extra_columns)
            writer.writerow(row)
    finally:
        if close:
            stream.close()


def read_estimates(source: Union[str, Path, IO[str]]) -> list[Estimate]:
    stream, close = _open(source)
    try:
        reader = csv.DictReader(stream)
        if reader.fieldnames is None or \
                reader.fieldnames[:len(ESTIMATE_HEADER)] != ESTIMATE_HEADER:
            raise HarnessError(
                f"bad estimate header {reader.fieldnames}, expected {ESTIMATE_HEADER}")
        out = []
        for row_no, row in enumerate(reader, start=2):
            try:
                cfg = Configuration(int(row["b"]), int(row["L"]),
                                    float(row["fb_hz"]), float(row["fl_hz"]))
                out.append(Estimate(
                    config=cfg,
                    time_s=float(row["time_s"]),
                    energy_j=float(row["energy_j"]),
                    power_seq_w=float(row["p_seq_w"]),
                    power_par_w=float(row["p_par_w"]),
                ))
            except (TypeError, ValueError) as exc:
                raise HarnessError(f"row {row_no}: {exc}") from exc
        if not out:
            raise HarnessError("empty estimate file")
        return out
    finally:
        if close:
            stream.close()


def read_speedup_pairs(source: Union[str, Path, IO[str]]
                       ) -> list[tuple[float, float, float]]:
    stream, close = _open(source)
    try:
        reader = csv.DictReader(stream)
        if reader.fieldnames != PAIRS_HEADER:
            raise HarnessError(
                f"bad pairs header {reader.fieldnames}, expected {PAIRS_HEADER}")
        pairs = []
        for row_no, row in enumerate(reader, start=2):
            try:
                pairs.append((float(row["f_hz"]), float(row["t_little_s"]),
                              float(row["t_big_s"])))
            except (TypeError, ValueError) as exc:
                raise HarnessError(f"row {row_no}: {exc}") from exc
        if not pairs:
            raise HarnessError("empty pairs file")
        return pairs
    finally:
        if close:
            stream.close()


def read_power_trace(source: Union[str, Path, IO[str]]
                     ) -> list[tuple[float, float]]:
    stream, close = _open(source)
    try:
        reader = csv.DictReader(stream)
        if reader.fieldnames != TRACE_HEADER:
            raise HarnessError(
                f"bad trace header {reader.fieldnames}, expected {TRACE_HEADER}")
        samples = []
        for row_no, row in enumerate(reader, start=2):
            try:
                samples.append((float(row["t_s"]), float(row["power_w"])))
            except (TypeError, ValueError) as exc:
                raise HarnessError(f"row {row_no}: {exc}") from exc
        return samples
    finally:
        if close:
            stream.close()


def energy_from_power_trace(samples: Sequence[tuple[float, float]]
                            ) -> tuple[float, float]:
    """Trapezoidal energy of a timestamped power trace.

    Returns (energy in joules, average power = energy / duration).
    """
    if len(samples) < 2:
        raise HarnessError("trace needs at least 2 samples")
    t = np.array([s[0] for s in samples], dtype=float)
    p = np.array([s[1] for s in samples], dtype=float)
    if np.any(np.diff(t) <= 0):
        raise HarnessError("trace timestamps must be strictly increasing")
    energy = float(np.trapezoid(p, t))
    return energy, energy / float(t[-1] - t[0])
