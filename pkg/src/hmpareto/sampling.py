"""Halton low-discrepancy sampling of the configuration space.

Measurement campaigns only cover a small subset of the space; the samples
should be spread out so that nearby configurations do not waste runs. Each
dimension (b, L, F_b index, F_L index) gets its own radical-inverse sequence
in a distinct prime base.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .hwplatform import Configuration, PlatformSpec, validate_configuration


class SamplingError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % k for k in range(2, int(math.isqrt(n)) + 1))


def halton_value(index: int, base: int) -> float:
    """Radical inverse of `index` in `base`: mirror the base-`base` digits
    of the index across the radix point. Result is in [0, 1)."""
    if index < 1:
        raise SamplingError("index must be >= 1")
    if base < 2:
        raise SamplingError("base must be >= 2")
    value = 0.0
    scale = 1.0 / base
    while index > 0:
        index, digit = divmod(index, base)
        value += digit * scale
        scale /= base
    return value


@dataclass(frozen=True)
class SamplePlan:
    """Deterministic sampling recipe.

    Dimension order is fixed: [b, L, F_b index, F_L index]. Core counts are
    drawn over the whole valid range including 0, so idle-cluster points are
    represented in fitting data.
    """

    count: int
    bases: tuple[int, int, int, int] = (2, 3, 5, 7)
    start_index: int = 1

    def __post_init__(self):
        if self.count < 1:
            raise SamplingError("count must be >= 1")
        if self.start_index < 1:
            raise SamplingError("start_index must be >= 1")
        if len(self.bases) != 4 or len(set(self.bases)) != 4:
            raise SamplingError("bases must be 4 distinct primes")
        if not all(_is_prime(b) for b in self.bases):
            raise SamplingError("bases must be prime")


def sample_configurations(platform: PlatformSpec, plan: SamplePlan) -> list[Configuration]:
    """Draw `plan.count` distinct valid configurations.

    Each Halton point u in [0,1)^4 maps to a lattice cell by floor(u * range
    size) per dimension. Points that collide with an earlier draw or hit the
    excluded b = L = 0 cell are skipped by advancing the Halton index, which
    keeps the sequence deterministic.
    """
    if plan.count > platform.space_size:
        raise SamplingError(
            f"requested {plan.count} samples but the space has only "
            f"{platform.space_size} distinct valid configurations"
        )
    nb = platform.big.core_count + 1
    nl = platform.little.core_count + 1
    big_f = platform.big.frequencies_hz
    lit_f = platform.little.frequencies_hz

    out: list[Configuration] = []
    seen: set[tuple[int, int, int, int]] = set()
    index = plan.start_index
    # Halton is equidistributed, so every cell is eventually hit; the cap
    # only guards against pathological tiny-count platforms.
    max_index = plan.start_index + 1_000_000 + 1000 * plan.count
    while len(out) < plan.count:
        if index > max_index:
            raise SamplingError("sampling did not reach the requested count")
        u = [halton_value(index, base) for base in plan.bases]
        index += 1
        cell = (
            int(u[0] * nb),
            int(u[1] * nl),
            int(u[2] * len(big_f)),
            int(u[3] * len(lit_f)),
        )
        if cell[0] + cell[1] < 1 or cell in seen:
            continue
        seen.add(cell)
        cfg = Configuration(cell[0], cell[1], big_f[cell[2]], lit_f[cell[3]])
        assert validate_configuration(platform, cfg)
        out.append(cfg)
    return out
