"""Figures for bound reports and tightness surveys.

Figures are drawn on a bare ``Figure`` with the Agg canvas, so nothing here
touches pyplot's global state.
"""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

import matplotlib as mpl
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .bounds import BoundRecord, SurveyRow

RC = {
    "font.family": "serif",
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
}

COLORS = {"tight": "#2b8a3e", "holds": "#74b816", "na": "#adb5bd",
          "unavailable": "#ced4da", "violated": "#e03131"}


def _save(fig: Figure, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    FigureCanvasAgg(fig)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    return path


def plot_bound_records(records: Sequence[BoundRecord], path: str | Path,
                       title: str | None = None) -> Path:
    """Bound value against exact value for every evaluated record."""
    rows = [r for r in records if r.hypothesis_met and r.evaluable
            and r.bound_value is not None and r.exact_value is not None]
    with mpl.rc_context(RC):
        fig = Figure(figsize=(6.0, 0.28 * max(len(rows), 4) + 1.0))
        ax = fig.add_subplot()
        for i, r in enumerate(rows):
            color = COLORS["violated"] if r.violated else (
                COLORS["tight"] if r.tight else COLORS["holds"])
            ax.plot([r.bound_value, r.exact_value], [i, i], color=color, lw=1.2)
            ax.plot(r.bound_value, i, marker="<" if r.sense == "upper" else ">",
                    color=color, ms=6, ls="none")
            ax.plot(r.exact_value, i, marker="o", color="black", ms=3.5, ls="none")
        ax.set_yticks(range(len(rows)), [r.id for r in rows])
        ax.invert_yaxis()
        ax.set_xlabel("value (marker: bound, dot: exact)")
        if title:
            ax.set_title(title)
        fig.tight_layout()
        return _save(fig, path)


def plot_survey(rows: Sequence[SurveyRow], path: str | Path,
                title: str | None = None) -> Path:
    """Stacked per-bound outcome counts from a tightness survey."""
    with mpl.rc_context(RC):
        fig = Figure(figsize=(max(6.0, 0.32 * len(rows) + 1.5), 3.2))
        ax = fig.add_subplot()
        xs = range(len(rows))
        bottom = [0] * len(rows)
        layers = [
            ("tight", [r.tight for r in rows]),
            ("holds", [r.holds - r.tight for r in rows]),
            ("violated", [r.violated for r in rows]),
            ("na", [r.not_applicable for r in rows]),
            ("unavailable", [r.not_evaluable for r in rows]),
        ]
        for key, heights in layers:
            if any(heights):
                ax.bar(xs, heights, bottom=bottom, color=COLORS[key], label=key, width=0.75)
                bottom = [b + h for b, h in zip(bottom, heights)]
        ax.set_xticks(list(xs), [r.id for r in rows], rotation=70)
        ax.set_ylabel("graphs")
        ax.legend(loc="center left", bbox_to_anchor=(1.0, 0.5), frameon=False)
        if title:
            ax.set_title(title)
        fig.tight_layout()
        return _save(fig, path)
