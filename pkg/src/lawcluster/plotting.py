"""Static SVG charts of simulation reports (needs matplotlib)."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from .simulate import ExperimentReport


def plot_reports(reports: Sequence[ExperimentReport], path, metric: str = "proportion_correct") -> None:
    """One panel per model: ``metric`` against N, one line per sigma.

    The SVG is written without dates and with a fixed hash salt so equal
    reports give equal files.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    with matplotlib.rc_context({"svg.hashsalt": "lawcluster", "svg.fonttype": "none"}):
        fig, axes = plt.subplots(1, len(reports), figsize=(5 * len(reports), 4), squeeze=False)
        for ax, rep in zip(axes[0], reports):
            for sigma in sorted({c.sigma for c in rep.cells}):
                cells = sorted((c for c in rep.cells if c.sigma == sigma), key=lambda c: c.N)
                ax.plot([c.N for c in cells], [getattr(c, metric) for c in cells], marker="o", label=f"sigma={sigma}")
            ax.set_title(rep.model.upper())
            ax.set_xlabel("N")
            ax.set_ylabel(metric.replace("_", " "))
            ax.set_ylim(-0.02, 1.02)
            ax.legend()
        fig.tight_layout()
        fig.savefig(Path(path), format="svg", metadata={"Date": None})
        plt.close(fig)
