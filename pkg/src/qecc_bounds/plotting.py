"""Figures written next to the tabular reports."""

from __future__ import annotations

import math
from collections import Counter, defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .scan import Category, ScanReport  # noqa: E402
from .threshold import TableRow  # noqa: E402

_COLORS = {
    Category.SATISFIES_HAMMING: "#4c72b0",
    Category.IMPOSSIBLE_MDS_NONDEGENERATE: "#8172b2",
    Category.IMPOSSIBLE_THM1: "#55a868",
    Category.IMPOSSIBLE_CSS_Q5: "#ccb974",
    Category.IMPOSSIBLE_CSS_STRUCTURAL: "#64b5cd",
    Category.OPEN_DEGENERATE_CANDIDATE: "#c44e52",
}


def plot_table1(rows: list[TableRow], path, dpi: int = 150) -> None:
    qs = [r.q for r in rows]
    fine = [3 + i / 20 for i in range(0, 20 * (max(qs) - 3) + 1)]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(fine, [2 * math.e / x**2 for x in fine], color="0.6", lw=1, label=r"$2e/q^2$")
    ax.plot(qs, [float(r.delta) for r in rows], "o", label=r"$\delta$ (rounded up)")
    ax.plot(qs, [float(r.one_minus_delta) for r in rows], "s", label=r"$1-\delta$")
    ax.set_xlabel("alphabet size q")
    ax.set_ylabel("fraction of n")
    ax.set_xticks(qs)
    ax.set_ylim(0, 1)
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)


def _counts_by_q(report: ScanReport) -> dict[int, dict[int, Counter]]:
    out: dict[int, dict[int, Counter]] = defaultdict(dict)
    for key, c in report.by_length.items():
        q, n = map(int, key.split(","))
        out[q][n] = Counter(c)
    return out


def plot_scan(report: ScanReport, path, dpi: int = 150) -> None:
    """Stacked category counts per length, one panel per alphabet size."""
    counts = _counts_by_q(report)
    qs = list(report.q_list)
    fig, axes = plt.subplots(len(qs), 1, figsize=(7, 2.6 * len(qs)), squeeze=False, sharex=True)
    for ax, q in zip(axes[:, 0], qs):
        ns = sorted(counts[q])
        bottom = [0] * len(ns)
        for cat in Category:
            vals = [counts[q][n][cat.value] for n in ns]
            if any(vals):
                ax.bar(ns, vals, bottom=bottom, color=_COLORS[cat], label=cat.value, width=0.8)
                bottom = [b + v for b, v in zip(bottom, vals)]
        ax.set_ylabel(f"q = {q}")
    axes[-1, 0].set_xlabel("length n")
    handles, labels = [], []
    for ax in axes[:, 0]:
        for h, lab in zip(*ax.get_legend_handles_labels()):
            if lab not in labels:
                handles.append(h)
                labels.append(lab)
    fig.legend(handles, labels, loc="upper center", ncol=2, fontsize=7, frameon=False)
    fig.tight_layout(rect=(0, 0, 1, 0.9))
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
