"""Command-line pipeline: sample, (simulate | measure externally), fit,
predict, select the frontier, compare against reference runs.

Every file-producing command also writes `<out>.manifest.json` recording the
command, inputs, outputs, and seed, so a run can be reproduced exactly.
Outputs are written atomically: a failing command leaves no partial files.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
import tempfile
import time
from pathlib import Path

from . import __version__
from .fitting import (FitReport, fit_parallel_fraction, fit_power,
                      fit_speedup)
from .harness import (ingest_measurements, read_configuration_template,
                      read_estimates, read_speedup_pairs,
                      simulate_measurements, write_configuration_template,
                      write_estimates, write_measurements, Campaign,
                      SyntheticGroundTruth)
from .hwplatform import (Configuration, enumerate_configurations,
                         load_platform, validate_configuration)
from .models import PerfParams, PowerParams, estimate, predict_all
from .pareto import compare_to_reference, pareto_frontier
from .sampling import SamplePlan, sample_configurations


class CliError(ValueError):
    pass


def _write_atomic(path: Path, content: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(content)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _write_manifest(command: str, args: argparse.Namespace,
                    inputs: list[str], outputs: list[Path]) -> None:
    manifest = {
        "command": command,
        "platform_ref": getattr(args, "platform", None),
        "inputs": inputs,
        "outputs": [str(o) for o in outputs],
        "seed": getattr(args, "seed", None),
        "tool_version": __version__,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
    }
    for out in outputs:
        _write_atomic(Path(str(out) + ".manifest.json"),
                      json.dumps(manifest, indent=2) + "\n")


def _emit(args: argparse.Namespace, command: str, content: str,
          inputs: list[str], extra_outputs: list[Path] | None = None) -> None:
    if args.out:
        out = Path(args.out)
        _write_atomic(out, content)
        _write_manifest(command, args, inputs, [out] + (extra_outputs or []))
    else:
        sys.stdout.write(content)


def _load_perf_params(path: str) -> PerfParams:
    doc = json.loads(Path(path).read_text())
    return PerfParams(f=doc["f"], perf=doc["perf"],
                      t_l_ref_s=doc["tl_ref_s"], f_ref_hz=doc["f_ref_hz"])


def _load_power_params(path: str, c_b: int, c_l: int) -> PowerParams:
    doc = json.loads(Path(path).read_text())
    return PowerParams(alpha_b=doc["alpha_b"], beta_b=doc["beta_b"],
                       alpha_l=doc["alpha_l"], beta_l=doc["beta_l"],
                       c_b=c_b, c_l=c_l)


def _parse_config(text: str) -> Configuration:
    parts = text.split(",")
    if len(parts) != 4:
        raise CliError('--config expects "b,L,fb_hz,fl_hz"')
    return Configuration(int(parts[0]), int(parts[1]),
                         float(parts[2]), float(parts[3]))


def _report_json(report: FitReport, param_doc: dict) -> str:
    doc = dict(param_doc)
    doc.update({
        "rmse": report.rmse,
        "n_points": report.n_points,
        "iterations": report.iterations,
        "converged": report.converged,
        "underdetermined": report.underdetermined,
    })
    return json.dumps(doc, indent=2) + "\n"


def _cmd_enumerate(args) -> None:
    platform = load_platform(args.platform)
    if args.count_only:
        content = f"{len(enumerate_configurations(platform))}\n"
        _emit(args, "enumerate", content, [])
        return
    buf = io.StringIO()
    write_configuration_template(enumerate_configurations(platform), buf)
    _emit(args, "enumerate", buf.getvalue(), [])


def _cmd_sample(args) -> None:
    platform = load_platform(args.platform)
    if args.count is None:
        raise CliError("sample requires --count")
    plan = SamplePlan(count=args.count, start_index=args.start_index)
    configs = sample_configurations(platform, plan)
    buf = io.StringIO()
    write_configuration_template(configs, buf)
    _emit(args, "sample", buf.getvalue(), [])


def _cmd_simulate(args) -> None:
    platform = load_platform(args.platform)
    perf_params = _load_perf_params(args.perf_params)
    power_params = _load_power_params(args.power_params,
                                      platform.big.core_count,
                                      platform.little.core_count)
    if args.measurements:
        configs = read_configuration_template(args.measurements, platform)
    elif args.count is not None:
        plan = SamplePlan(count=args.count, start_index=args.start_index)
        configs = sample_configurations(platform, plan)
    else:
        raise CliError("simulate requires --measurements or --count")
    gt = SyntheticGroundTruth(perf_params=perf_params,
                              power_params=power_params,
                              noise_time_sigma=args.noise_time,
                              noise_power_sigma=args.noise_power,
                              seed=args.seed)
    records = simulate_measurements(gt, Campaign(platform, tuple(configs)))
    buf = io.StringIO()
    write_measurements(records, buf)
    _emit(args, "simulate", buf.getvalue(),
          [args.perf_params, args.power_params, args.measurements or ""])


def _cmd_fit_speedup(args) -> None:
    pairs = read_speedup_pairs(args.pairs)
    content = json.dumps({"perf": fit_speedup(pairs)}) + "\n"
    _emit(args, "fit-speedup", content, [args.pairs])


def _cmd_fit_power(args) -> None:
    platform = load_platform(args.platform)
    records = ingest_measurements(args.measurements, platform)
    report = fit_power(records, platform)
    q = report.params
    content = _report_json(report, {
        "alpha_b": q.alpha_b, "beta_b": q.beta_b,
        "alpha_l": q.alpha_l, "beta_l": q.beta_l,
    })
    _emit(args, "fit-power", content, [args.measurements])


def _cmd_fit_perf(args) -> None:
    platform = load_platform(args.platform)
    records = ingest_measurements(args.measurements, platform)
    report = fit_parallel_fraction(records, perf=args.perf,
                                   t_l_ref=args.tl_ref, f_ref=args.f_ref)
    p = report.params
    content = _report_json(report, {
        "f": p.f, "perf": p.perf, "tl_ref_s": p.t_l_ref_s,
        "f_ref_hz": p.f_ref_hz,
    })
    _emit(args, "fit-perf", content, [args.measurements])


def _cmd_predict(args) -> None:
    platform = load_platform(args.platform)
    perf_params = _load_perf_params(args.perf_params)
    power_params = _load_power_params(args.power_params,
                                      platform.big.core_count,
                                      platform.little.core_count)
    if args.config:
        cfg = _parse_config(args.config)
        if not validate_configuration(platform, cfg):
            raise CliError(f"configuration {args.config!r} invalid for platform")
        estimates = [estimate(perf_params, power_params, cfg)]
    else:
        estimates = predict_all(perf_params, power_params, platform)
    buf = io.StringIO()
    write_estimates(estimates, buf)
    _emit(args, "predict", buf.getvalue(),
          [args.perf_params, args.power_params])


def _cmd_pareto(args) -> None:
    estimates = read_estimates(args.estimates)
    frontier = pareto_frontier(estimates)
    buf = io.StringIO()
    write_estimates(frontier, buf,
                    extra_columns={"rank": list(range(1, len(frontier) + 1))})
    out = Path(args.out) if args.out else Path("frontier.csv")
    _write_atomic(out, buf.getvalue())
    extra = []
    if args.gnuplot:
        dat = out.with_suffix(".dat")
        lines = [f"{p.time_s!r} {p.energy_j!r}" for p in frontier]
        _write_atomic(dat, "\n".join(lines) + "\n")
        extra.append(dat)
    if args.plot:
        from .report import render_frontier_figure
        render_frontier_figure(estimates, frontier, args.plot)
        extra.append(Path(args.plot))
    _write_manifest("pareto", args, [args.estimates], [out] + extra)


def _cmd_compare(args) -> None:
    platform = load_platform(args.platform)
    frontier = read_estimates(args.estimates)
    references = ingest_measurements(args.measurements, platform)
    lines = ["label,energy_saving_pct,speedup_pct"]
    for ref in references:
        if ref.time_s is None or ref.power_w is None:
            raise CliError(f"reference {ref.app!r} needs both time_s and power_w")
        energy_j = ref.time_s * ref.power_w
        cmp = compare_to_reference(frontier, ref.app, ref.time_s, energy_j)
        fmt = lambda v: f"{100.0 * v:.4f}" if v is not None else ""
        lines.append(f"{cmp.label},{fmt(cmp.energy_saving)},{fmt(cmp.speedup)}")
    _emit(args, "compare", "\n".join(lines) + "\n",
          [args.estimates, args.measurements])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hmpareto",
        description="Performance-energy trade-off explorer for two-cluster "
                    "heterogeneous multiprocessors.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **flags):
        p = sub.add_parser(name)
        if flags.get("platform"):
            p.add_argument("--platform", required=True,
                           help="platform JSON path or preset name (odroid-xu3)")
        if flags.get("count"):
            p.add_argument("--count", type=int, default=None)
            p.add_argument("--start-index", type=int, default=1)
        if flags.get("seed"):
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--noise-time", type=float, default=0.01,
                           help="relative timing noise sigma")
            p.add_argument("--noise-power", type=float, default=0.15,
                           help="absolute power noise sigma [W]")
        if flags.get("measurements"):
            p.add_argument("--measurements",
                           required=flags["measurements"] == "required")
        if flags.get("estimates"):
            p.add_argument("--estimates", required=True)
        if flags.get("params"):
            p.add_argument("--perf-params", required=True)
            p.add_argument("--power-params", required=True)
        if flags.get("perf_scalars"):
            p.add_argument("--perf", type=float, required=True)
            p.add_argument("--tl-ref", type=float, required=True)
            p.add_argument("--f-ref", type=float, required=True)
        if flags.get("pairs"):
            p.add_argument("--pairs", required=True)
        if flags.get("config"):
            p.add_argument("--config", default=None,
                           help='single configuration "b,L,fb_hz,fl_hz"')
        if flags.get("count_only"):
            p.add_argument("--count-only", action="store_true")
        if flags.get("gnuplot"):
            p.add_argument("--gnuplot", action="store_true",
                           help="also write a two-column time/energy .dat file")
            p.add_argument("--plot", default=None,
                           help="render a frontier figure to this image path")
        p.add_argument("--out", default=None)
        p.set_defaults(func=func)
        return p

    add("enumerate", _cmd_enumerate, platform=True, count_only=True)
    add("sample", _cmd_sample, platform=True, count=True)
    add("simulate", _cmd_simulate, platform=True, count=True, seed=True,
        measurements="optional", params=True)
    add("fit-speedup", _cmd_fit_speedup, pairs=True)
    add("fit-power", _cmd_fit_power, platform=True, measurements="required")
    add("fit-perf", _cmd_fit_perf, platform=True, measurements="required",
        perf_scalars=True)
    add("predict", _cmd_predict, platform=True, params=True, config=True)
    add("pareto", _cmd_pareto, estimates=True, gnuplot=True)
    add("compare", _cmd_compare, platform=True, estimates=True,
        measurements="required")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
        return 0
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
