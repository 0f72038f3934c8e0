"""Figure rendering for the frontier report path.

Renders a time/energy scatter of the full evaluated space with the selected
frontier as a staircase, to a file next to the delimited output.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence, Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .models import Estimate  # noqa: E402


def render_frontier_figure(all_points: Sequence[Estimate] | None,
                           frontier: Sequence[Estimate],
                           out_path: Union[str, Path],
                           title: str = "Performance-energy trade-off") -> Path:
    """Write a frontier figure (format from the file suffix, e.g. .png)."""
    out_path = Path(out_path)
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    if all_points:
        ax.scatter([p.time_s for p in all_points],
                   [p.energy_j for p in all_points],
                   s=6, c="0.75", linewidths=0, label="all configurations")
    fx = [p.time_s for p in frontier]
    fy = [p.energy_j for p in frontier]
    ax.plot(fx, fy, drawstyle="steps-post", color="black", lw=1.0, zorder=3)
    ax.scatter(fx, fy, s=18, facecolors="none", edgecolors="black",
               zorder=4, label="Pareto frontier")
    ax.set_xlabel("execution time [s]")
    ax.set_ylabel("energy [J]")
    ax.set_title(title)
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return out_path
