"""Two-cluster hardware description and configuration-space enumeration.

A platform is a big cluster plus a LITTLE cluster, each with a fixed core
count and a discrete frequency ladder. A configuration picks how many cores
of each cluster are active and one frequency per cluster. Idle clusters keep
a frequency because their static power still depends on it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path


class PlatformError(ValueError):
    """Invalid platform description or configuration."""


@dataclass(frozen=True)
class ClusterSpec:
    name: str
    core_count: int
    frequencies_hz: tuple[float, ...]

    def __post_init__(self):
        if self.core_count < 1:
            raise PlatformError(f"cluster {self.name!r}: core_count must be >= 1")
        if not self.frequencies_hz:
            raise PlatformError(f"cluster {self.name!r}: empty frequency ladder")
        freqs = tuple(float(f) for f in self.frequencies_hz)
        object.__setattr__(self, "frequencies_hz", freqs)
        if any(f <= 0 for f in freqs):
            raise PlatformError(f"cluster {self.name!r}: frequencies must be > 0")
        if any(a >= b for a, b in zip(freqs, freqs[1:])):
            raise PlatformError(
                f"cluster {self.name!r}: frequencies must be strictly ascending"
            )


@dataclass(frozen=True)
class PlatformSpec:
    big: ClusterSpec
    little: ClusterSpec

    def __post_init__(self):
        if self.big is self.little:
            raise PlatformError("big and little must be distinct clusters")

    @property
    def space_size(self) -> int:
        nb = (self.big.core_count + 1) * len(self.big.frequencies_hz)
        nl = (self.little.core_count + 1) * len(self.little.frequencies_hz)
        return nb * nl - len(self.big.frequencies_hz) * len(self.little.frequencies_hz)

    def to_json(self) -> str:
        doc = {
            "big": {
                "core_count": self.big.core_count,
                "frequencies_hz": list(self.big.frequencies_hz),
            },
            "little": {
                "core_count": self.little.core_count,
                "frequencies_hz": list(self.little.frequencies_hz),
            },
        }
        return json.dumps(doc, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "PlatformSpec":
        try:
            doc = json.loads(text)
            big = doc["big"]
            little = doc["little"]
            return cls(
                big=ClusterSpec("big", int(big["core_count"]),
                                tuple(big["frequencies_hz"])),
                little=ClusterSpec("little", int(little["core_count"]),
                                   tuple(little["frequencies_hz"])),
            )
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise PlatformError(f"malformed platform JSON: {exc}") from exc


@dataclass(frozen=True)
class Configuration:
    """One point (b, L, F_b, F_L) of the configuration space.

    Both frequencies are always carried, even for an idle cluster, because
    the idle cluster's static power depends on its frequency.
    """

    b: int
    little: int
    fb_hz: float
    fl_hz: float

    @property
    def l(self) -> int:  # noqa: E743 - domain name
        return self.little


def odroid_xu3() -> PlatformSpec:
    """Built-in preset: Exynos5422 big.LITTLE.

    big: 19 levels, 200 MHz to 2 GHz in 100 MHz steps.
    LITTLE: 14 levels, 200 MHz to 1.5 GHz in 100 MHz steps.
    """
    big = ClusterSpec("big", 4, tuple((200 + 100 * i) * 1e6 for i in range(19)))
    little = ClusterSpec("little", 4, tuple((200 + 100 * i) * 1e6 for i in range(14)))
    return PlatformSpec(big=big, little=little)


PRESETS = {"odroid-xu3": odroid_xu3}


def load_platform(ref: str | Path) -> PlatformSpec:
    """Resolve a preset name or a JSON file path to a PlatformSpec."""
    key = str(ref)
    if key in PRESETS:
        return PRESETS[key]()
    path = Path(ref)
    if not path.exists():
        raise PlatformError(f"unknown platform {key!r} (not a preset, file not found)")
    return PlatformSpec.from_json(path.read_text())


def validate_configuration(platform: PlatformSpec, c: Configuration) -> bool:
    """True iff c is a point of the platform's discrete configuration space."""
    if not (0 <= c.b <= platform.big.core_count):
        return False
    if not (0 <= c.little <= platform.little.core_count):
        return False
    if c.b + c.little < 1:
        return False
    if c.fb_hz not in platform.big.frequencies_hz:
        return False
    if c.fl_hz not in platform.little.frequencies_hz:
        return False
    return True


def enumerate_configurations(platform: PlatformSpec) -> list[Configuration]:
    """Every valid configuration, in (b, L, F_b index, F_L index) lexicographic
    order. The all-idle combination b = L = 0 is excluded."""
    out = []
    for b in range(platform.big.core_count + 1):
        for little in range(platform.little.core_count + 1):
            if b + little < 1:
                continue
            for fb in platform.big.frequencies_hz:
                for fl in platform.little.frequencies_hz:
                    out.append(Configuration(b, little, fb, fl))
    return out
