"""Weight diagrams of explored crystals, written to image files."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_weight_diagram(tally, out, title=None, annotate=True):
    """Scatter the explored weights in fundamental-weight coordinates.

    Marker area grows with multiplicity; counts above one are written next to
    the marker.
    """
    fig, ax = plt.subplots(figsize=(6, 6))
    xs = [w.m1 for w in tally]
    ys = [w.m2 for w in tally]
    counts = list(tally.values())
    sc = ax.scatter(xs, ys, s=[30 * c for c in counts], c=counts, cmap="viridis",
                    edgecolors="k", linewidths=0.5, zorder=3)
    if annotate:
        for x, y, c in zip(xs, ys, counts):
            if c > 1:
                ax.annotate(str(c), (x, y), textcoords="offset points", xytext=(4, 4), fontsize=8)
    ax.axhline(0, color="0.7", lw=0.8, zorder=1)
    ax.axvline(0, color="0.7", lw=0.8, zorder=1)
    ax.set_xlabel(r"coefficient of $\Lambda_1$")
    ax.set_ylabel(r"coefficient of $\Lambda_2$")
    if title:
        ax.set_title(title)
    fig.colorbar(sc, ax=ax, label="multiplicity", shrink=0.8)
    fig.tight_layout()
    fig.savefig(out, dpi=120)
    plt.close(fig)
    return out
