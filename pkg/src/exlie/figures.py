"""Report figures: the signed octonion table and a per-check status chart.

Rendered only on request (--figures DIR); deterministic content so the PNGs
are stable for a fixed report.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .octonions import TABLE


def render_table_figure(path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(6.5, 6.5))
    ax.set_title("octonion products $e_i e_j$")
    ax.set_xticks(range(7), [f"$e_{j}$" for j in range(1, 8)])
    ax.set_yticks(range(7), [f"$e_{i}$" for i in range(1, 8)])
    ax.set_xlim(-0.5, 6.5)
    ax.set_ylim(6.5, -0.5)
    for i in range(1, 8):
        for j in range(1, 8):
            s, k = TABLE.product(i, j)
            if k == 0:
                label = "-1" if s < 0 else "1"
                color = "#777777"
            else:
                label = f"{'-' if s < 0 else ''}$e_{k}$"
                color = "#b03030" if s < 0 else "#204f8f"
            ax.text(j - 1, i - 1, label, ha="center", va="center", color=color, fontsize=11)
    for t in range(8):
        ax.axhline(t - 0.5, color="#cccccc", lw=0.6)
        ax.axvline(t - 0.5, color="#cccccc", lw=0.6)
    ax.tick_params(length=0)
    for spine in ax.spines.values():
        spine.set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_summary_figure(report, path: Path) -> Path:
    checks = report.checks
    n = max(len(checks), 1)
    fig, ax = plt.subplots(figsize=(9, 0.32 * n + 1.2))
    labels = [c.id for c in checks][::-1]
    times = [max(c.millis, 1) for c in checks][::-1]
    colors = ["#2e8b57" if c.status == "pass" else
              "#c0392b" if c.status == "fail" else "#999999" for c in checks][::-1]
    ax.barh(range(n), times, color=colors)
    ax.set_yticks(range(n), labels, fontsize=7)
    ax.set_xscale("log")
    ax.set_xlabel("milliseconds (log scale)")
    t = report.totals()
    ax.set_title(f"suite {report.suite}: {t['pass']} pass / {t['fail']} fail / {t['skip']} skip")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_figures(report, outdir) -> list:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written = [
        render_table_figure(out / "octonion_table.png"),
        render_summary_figure(report, out / f"summary_{report.suite}.png"),
    ]
    return written
