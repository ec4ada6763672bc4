"""Matplotlib figures for bench reports and reduction instances (files only, Agg backend)."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "font.family": "serif",
    "font.size": 10,
    "axes.titlesize": 11,
    "axes.labelsize": 10,
    "legend.fontsize": 8,
    "axes.linewidth": 0.8,
    "figure.dpi": 110,
    "savefig.bbox": "tight",
}
PALETTE = ["#0C5DA5", "#00A08A", "#F2AD00", "#B40F20", "#5BBCD6"]
LABEL_COLORS = {"P": "#B40F20", "A": "#0C5DA5", "S": "#00A08A"}


def use_style() -> None:
    plt.rcParams.update(STYLE)


def finalize_axes(ax) -> None:
    for spine in ("top", "right"):
        ax.spines[spine].set_visible(False)
    ax.grid(alpha=0.25, linewidth=0.5, linestyle="--")


def save_figure(fig, path: str | Path) -> Path:
    path = Path(path)
    fig.savefig(path, dpi=200, metadata={"Software": None})
    plt.close(fig)
    return path


def plot_sizes(records: list[dict], path: str | Path):
    """Grouped bars of solution size per instance and algorithm."""
    use_style()
    by_inst: dict[str, dict[str, int]] = defaultdict(dict)
    algos: list[str] = []
    for r in records:
        by_inst[r["instance"]][r["algorithm"]] = r["size"]
        if r["algorithm"] not in algos:
            algos.append(r["algorithm"])
    names = list(by_inst)
    width = 0.8 / max(1, len(algos))
    fig, ax = plt.subplots(figsize=(max(4.0, 0.6 * len(names) + 2), 3.2))
    for k, algo in enumerate(algos):
        xs = [i + k * width for i, name in enumerate(names) if algo in by_inst[name]]
        ys = [by_inst[name][algo] for name in names if algo in by_inst[name]]
        ax.bar(xs, ys, width=width, label=algo, color=PALETTE[k % len(PALETTE)])
    ax.set_xticks([i + 0.4 - width / 2 for i in range(len(names))])
    ax.set_xticklabels(names, rotation=45, ha="right")
    ax.set_ylabel("solution size")
    ax.legend(frameon=False)
    finalize_axes(ax)
    return save_figure(fig, path)


def plot_ratios(records: list[dict], epsilon: float, path: str | Path):
    """Heuristic and scheme sizes against the exact optimum, with the 1+eps line."""
    use_style()
    opt = {r["instance"]: r["size"] for r in records if r["algorithm"] == "oracle"}
    fig, ax = plt.subplots(figsize=(4.2, 3.4))
    top = 1
    for k, algo in enumerate(a for a in dict.fromkeys(r["algorithm"] for r in records) if a != "oracle"):
        pts = [(opt[r["instance"]], r["size"]) for r in records if r["algorithm"] == algo and r["instance"] in opt]
        if pts:
            xs, ys = zip(*pts)
            top = max(top, *xs, *ys)
            ax.scatter(xs, ys, s=14, alpha=0.7, label=algo, color=PALETTE[k % len(PALETTE)])
    ax.plot([0, top], [0, top], color="0.4", linewidth=0.8, label="optimum")
    ax.plot([0, top], [0, (1 + epsilon) * top], color="0.4", linestyle="--", linewidth=0.8, label=f"(1+{epsilon:g}) x optimum")
    ax.set_xlabel("exact minimum")
    ax.set_ylabel("solution size")
    ax.legend(frameon=False)
    finalize_axes(ax)
    return save_figure(fig, path)


def plot_instance(points, edges, labels, path: str | Path, highlight=()):
    """Scatter of a point set with its unit disk edges; ``labels`` colour P/A/S partitions."""
    use_style()
    fig, ax = plt.subplots(figsize=(6, 6))
    for u, v in edges:
        ax.plot([points[u][0], points[v][0]], [points[u][1], points[v][1]], color="0.75", linewidth=0.5, zorder=1)
    for lab in dict.fromkeys(labels):
        idx = [i for i, x in enumerate(labels) if x == lab]
        ax.scatter([points[i][0] for i in idx], [points[i][1] for i in idx], s=10, zorder=2,
                   color=LABEL_COLORS.get(lab, PALETTE[0]), label=lab)
    if highlight:
        hs = list(highlight)
        ax.scatter([points[i][0] for i in hs], [points[i][1] for i in hs], s=40, facecolors="none",
                   edgecolors="black", linewidths=0.8, zorder=3, label="selected")
    ax.set_aspect("equal")
    ax.legend(frameon=False, loc="upper right")
    finalize_axes(ax)
    return save_figure(fig, path)
