"""Render experiment histograms as bar-chart figures next to the data files."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .experiment import ExperimentResult


def render_histogram_figures(result: ExperimentResult, out_dir) -> list[Path]:
    """One PNG per analyzed ring: fraction of generators per dimension sequence.

    Files are named ``hilbert_q{q}_a{a}.png``; skipped rings produce nothing.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for ring in result.rings:
        if ring.skipped_reason is not None or not ring.histogram:
            continue
        labels = list(ring.histogram)
        fractions = [float(frac) for _, frac in ring.histogram.values()]
        width = max(6.0, 0.45 * len(labels))
        fig, ax = plt.subplots(figsize=(width, 4.5))
        ax.bar(range(len(labels)), fractions, color="#336699")
        ax.set_xticks(range(len(labels)))
        ax.set_xticklabels(labels, rotation=60, ha="right", fontsize=8)
        ax.set_ylabel("fraction of generators")
        ax.set_xlabel("dimension sequence")
        mode = ring.mode if ring.mode != "explicit" else f"a={ring.a}"
        ax.set_title(
            f"Dimension sequences, q={ring.q}, n={ring.n}, {mode} "
            f"({ring.analyzed_count} generators)"
        )
        fig.tight_layout()
        path = out / f"hilbert_q{ring.q}_a{ring.a}.png"
        fig.savefig(path, dpi=150)
        plt.close(fig)
        paths.append(path)
    return paths
