"""Accuracy functionals: chordal distance, vector angles, pct/acc aggregates."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["chordal", "sin_angle", "aggregate", "AccuracyReport", "EPS_CLAMP"]

EPS_CLAMP = np.finfo(float).eps   # errors of exactly 0 are clamped before log10


def chordal(a: float, b: float) -> float:
    """|a - b| / (sqrt(1 + a^2) sqrt(1 + b^2)), in [0, 1)."""
    return abs(a - b) / (np.hypot(1.0, a) * np.hypot(1.0, b))


def sin_angle(v1: np.ndarray, v2: np.ndarray) -> float:
    """Sine of the acute angle between two nonzero vectors, in [0, 1]."""
    v1 = np.asarray(v1, dtype=float).ravel()
    v2 = np.asarray(v2, dtype=float).ravel()
    n1 = np.linalg.norm(v1)
    n2 = np.linalg.norm(v2)
    if n1 == 0.0 or n2 == 0.0:
        raise ValueError("sin_angle is undefined for zero vectors")
    a = v1 / n1
    b = v2 / n2
    proj = a - b * np.dot(b, a)
    return min(1.0, float(np.linalg.norm(proj)))


def aggregate(hat_err: np.ndarray, tilde_err: np.ndarray) -> tuple[float, float]:
    """(pct, acc) comparing two error series for the same components.

    pct: percentage of components where the hat error is strictly
    smaller. acc: mean of log10(tilde) - log10(hat); positive means the
    hat form is more accurate on geometric average. Exact zeros are
    clamped to machine epsilon before the logarithm.
    """
    hat_err = np.asarray(hat_err, dtype=float)
    tilde_err = np.asarray(tilde_err, dtype=float)
    if hat_err.size == 0 or hat_err.shape != tilde_err.shape:
        raise ValueError("need two equal-length nonempty error series")
    pct = 100.0 * np.count_nonzero(hat_err < tilde_err) / hat_err.size
    h = np.maximum(hat_err, EPS_CLAMP)
    t = np.maximum(tilde_err, EPS_CLAMP)
    acc = float(np.mean(np.log10(t) - np.log10(h)))
    return float(pct), acc


@dataclass
class AccuracyReport:
    """Per-component accuracy of both formulations against the oracle."""

    sigma_exact: np.ndarray
    chordal_hat: np.ndarray
    chordal_tilde: np.ndarray
    sin_x_hat: np.ndarray
    sin_x_tilde: np.ndarray
    sin_u_hat: np.ndarray
    sin_u_tilde: np.ndarray
    sin_v_hat: np.ndarray
    sin_v_tilde: np.ndarray

    def aggregates(self) -> dict[str, float]:
        out = {}
        for name, hat, tilde in [
            ("sigma", self.chordal_hat, self.chordal_tilde),
            ("x", self.sin_x_hat, self.sin_x_tilde),
            ("u", self.sin_u_hat, self.sin_u_tilde),
            ("v", self.sin_v_hat, self.sin_v_tilde),
        ]:
            if np.all(np.isnan(hat)) or np.all(np.isnan(tilde)):
                out[f"pct_{name}"] = None
                out[f"acc_{name}"] = None
            else:
                pct, acc = aggregate(hat, tilde)
                out[f"pct_{name}"] = pct
                out[f"acc_{name}"] = acc
        return out

    def __len__(self) -> int:
        return self.sigma_exact.size
