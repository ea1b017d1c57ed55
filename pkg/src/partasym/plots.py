"""Figure rendering for comparison runs.

Exact counts are drawn as solid lines, smooth asymptotic estimates as dashed
lines in the same color, one color per cap, on a log-scale y axis.  Zero
counts (non-representable n) are masked out of the log plot.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .harness import ComparisonRow
from .multiplicity import cap_label

__all__ = ["render_rows"]


def render_rows(rows: "list[ComparisonRow]", path: str, title: str = "") -> None:
    """Render comparison rows to an image file (format from the extension)."""
    by_cap = {}
    for row in rows:
        by_cap.setdefault(cap_label(row.k), []).append(row)

    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    for label, series in by_cap.items():
        series.sort(key=lambda r: r.n)
        xs = [r.n for r in series if r.exact > 0]
        ys = [r.exact for r in series if r.exact > 0]
        (line,) = ax.plot(xs, ys, "-", lw=1.2, label=f"exact, k={label}")
        ax.plot(
            [r.n for r in series],
            [r.estimate for r in series],
            "--",
            lw=1.2,
            color=line.get_color(),
            label=f"asymptotic, k={label}",
        )
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("count / density")
    if title:
        ax.set_title(title)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
