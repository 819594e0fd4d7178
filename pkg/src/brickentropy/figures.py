"""Optional figure rendering for report sections.

When a figure directory is requested the report's per-level arrays are
drawn as small line plots, one PNG per section that has something to
plot.  Figures are a side channel: the delimited report text never
depends on whether they were rendered.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

__all__ = ["render_figures"]

# report keys that pair x-values with curves worth seeing
_CURVE_KEYS = (
    "radius_values",
    "absolute_values",
    "pattern_level_norms",
    "pattern_window_norms",
    "strong2_partials",
    "norms",
    "values",
    "window_maxima",
    "partial_sums",
    "tail_sups",
)


def _numeric_list(value) -> list[float] | None:
    if not isinstance(value, (list, tuple)) or not value:
        return None
    try:
        out = [float(v) for v in value]
    except (TypeError, ValueError):
        return None
    return out


def render_figures(sections: dict[str, dict], outdir: str, prefix: str) -> list[str]:
    """Render one PNG per section containing plottable curves.

    Returns the list of written paths (relative to ``outdir``), in report
    order, so callers can mention them without re-scanning the directory.
    """
    os.makedirs(outdir, exist_ok=True)
    written: list[str] = []
    for name, section in sections.items():
        curves = []
        for key in _CURVE_KEYS:
            ys = _numeric_list(section.get(key))
            if ys is not None:
                curves.append((key, ys))
        if not curves:
            continue
        fig, ax = plt.subplots(figsize=(5.0, 3.2))
        for key, ys in curves:
            ax.plot(range(1, len(ys) + 1), ys, marker="o", markersize=3, label=key)
        ax.set_xlabel("schedule step")
        ax.set_title(name.replace("_", " "))
        ax.grid(True, alpha=0.3)
        if len(curves) > 1:
            ax.legend(fontsize=7)
        fname = f"{prefix}_{name}.png"
        fig.savefig(os.path.join(outdir, fname), dpi=110, bbox_inches="tight")
        plt.close(fig)
        written.append(fname)
    return written
