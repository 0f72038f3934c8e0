"""Performance-energy trade-off explorer for two-cluster heterogeneous
multiprocessors: analytical time/power/energy models fitted from sparse
Halton-sampled measurements, full configuration-space evaluation, and
Pareto-frontier selection.
"""

__version__ = "0.1.0"

from .fitting import (FitReport, FittingError, MeasurementRecord,
                      fit_parallel_fraction, fit_power, fit_speedup, rmse)
from .harness import (Campaign, HarnessError, SyntheticGroundTruth,
                      energy_from_power_trace, ingest_measurements,
                      simulate_measurements)
from .hwplatform import (ClusterSpec, Configuration, PlatformError,
                         PlatformSpec, enumerate_configurations,
                         load_platform, odroid_xu3, validate_configuration)
from .models import (Estimate, ModelError, PerfParams, PowerParams, estimate,
                     phase_times, power_parallel, power_sequential,
                     predict_all, predict_energy, predict_time)
from .pareto import (ParetoError, ParetoPoint, ReferenceComparison,
                     compare_to_reference, dominance_counts,
                     frontier_variation, mape, pareto_frontier)
from .sampling import (SamplePlan, SamplingError, halton_value,
                       sample_configurations)

__all__ = [
    "__version__",
    "ClusterSpec", "PlatformSpec", "Configuration", "PlatformError",
    "odroid_xu3", "load_platform", "enumerate_configurations",
    "validate_configuration",
    "SamplePlan", "SamplingError", "halton_value", "sample_configurations",
    "PerfParams", "PowerParams", "Estimate", "ModelError", "predict_time",
    "phase_times", "power_parallel", "power_sequential", "predict_energy",
    "estimate", "predict_all",
    "MeasurementRecord", "FitReport", "FittingError", "rmse", "fit_speedup",
    "fit_power", "fit_parallel_fraction",
    "ParetoPoint", "ParetoError", "ReferenceComparison", "pareto_frontier",
    "dominance_counts", "mape", "frontier_variation", "compare_to_reference",
    "SyntheticGroundTruth", "Campaign", "HarnessError",
    "simulate_measurements", "ingest_measurements", "energy_from_power_trace",
]
