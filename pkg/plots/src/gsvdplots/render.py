"""Render the 4-panel accuracy figure from a harness accuracy.csv.

Panels: (a) chordal distances of the computed values, (b) sin angles of
the right vectors x, (c) left vectors u, (d) left vectors v. Each panel
carries the hat and tilde series over the component index (descending
sigma), on a log y-axis. Exact zeros are clamped to machine epsilon
before log scaling, matching the aggregation convention of the runs.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import matplotlib
import numpy as np

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

__all__ = ["FigureSpec", "SchemaError", "load_accuracy_csv", "render"]

REQUIRED_COLUMNS = ["index", "sigma_exact", "chordal_hat", "chordal_tilde",
                    "sin_x_hat", "sin_x_tilde", "sin_u_hat", "sin_u_tilde",
                    "sin_v_hat", "sin_v_tilde"]

EPS_CLAMP = np.finfo(float).eps

PANELS = [
    ("(a) values", "chordal distance", "chordal_hat", "chordal_tilde"),
    ("(b) right vectors x", "sin angle", "sin_x_hat", "sin_x_tilde"),
    ("(c) left vectors u", "sin angle", "sin_u_hat", "sin_u_tilde"),
    ("(d) left vectors v", "sin angle", "sin_v_hat", "sin_v_tilde"),
]


class SchemaError(ValueError):
    """The input CSV does not carry the harness accuracy schema."""


@dataclass
class FigureSpec:
    csv_path: str
    out_path: str
    title: str = ""
    log_y: bool = True


def load_accuracy_csv(path: str) -> dict[str, np.ndarray]:
    """Parse an accuracy.csv into column arrays, validating the schema."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in REQUIRED_COLUMNS if c not in header]
        if missing:
            raise SchemaError("missing required columns: " + ", ".join(missing))
        rows = list(reader)
    if not rows:
        raise SchemaError("no data rows")
    out = {}
    for col in REQUIRED_COLUMNS:
        out[col] = np.array([float(r[col]) for r in rows])
    return out


def render(spec: FigureSpec) -> str:
    """Write the 2x2 panel figure; returns the output path."""
    data = load_accuracy_csv(spec.csv_path)
    idx = data["index"]
    fig, axes = plt.subplots(2, 2, figsize=(9.0, 7.0), sharex=True)
    for ax, (label, ylabel, hat_col, tilde_col) in zip(axes.ravel(), PANELS):
        hat = np.maximum(data[hat_col], EPS_CLAMP)
        tilde = np.maximum(data[tilde_col], EPS_CLAMP)
        ax.plot(idx, hat, "o-", markersize=3, linewidth=0.8, label="hat")
        ax.plot(idx, tilde, "s--", markersize=3, linewidth=0.8, label="tilde")
        if spec.log_y:
            ax.set_yscale("log")
        ax.set_title(label, fontsize=10)
        ax.set_ylabel(ylabel)
        ax.legend(fontsize=8)
    for ax in axes[1]:
        ax.set_xlabel("component index (descending sigma)")
    if spec.title:
        fig.suptitle(spec.title)
    fig.tight_layout()
    fig.savefig(spec.out_path, dpi=150, metadata={"Software": None})
    plt.close(fig)
    return spec.out_path
