"""Perturbation and recovery-accuracy bounds for the two formulations.

All bound evaluators return guaranteed upper bounds on observed errors
when fed exact reference quantities; the unobservable first-order
factors (1 + O(eps)) of the value bounds are replaced by a fixed slack
multiplier of 1.1, valid for injected perturbation levels eps <= 1e-8.
"""

from __future__ import annotations

import math

import numpy as np

from .augmented import Form
from .oracle import GsvdFactors

__all__ = ["FIRST_ORDER_SLACK", "bound_sigma", "bound_eigvec", "gamma_pair",
           "bound_recovered", "scaled_x_lower_bounds", "rho_factor",
           "separation_term"]

FIRST_ORDER_SLACK = 1.1


def bound_sigma(form: Form, x_norm: float, alpha: float, beta: float,
                eps_e: float, eps_f: float) -> float:
    """Chordal-distance bound for a computed generalized singular value.

    Hat:   (||x||^2 + beta^2) / (2 beta)  * sqrt(eps_e^2 + eps_f^2)
    Tilde: (||x||^2 + alpha^2) / (2 alpha) * sqrt(eps_e^2 + eps_f^2)
    times the fixed first-order slack. eps_e and eps_f are the 2-norms
    of the perturbations to the A-derived and B-derived augmented
    matrices, respectively.
    """
    pert = math.hypot(eps_e, eps_f)
    if form == Form.HAT:
        factor = (x_norm**2 + beta**2) / (2.0 * beta)
    else:
        factor = (x_norm**2 + alpha**2) / (2.0 * alpha)
    return FIRST_ORDER_SLACK * factor * pert


def separation_term(form: Form, sigma: float, others: np.ndarray) -> float:
    """Relative-separation denominator of the eigenvector bounds.

    Hat:   min over others of { |1 - sigma_i / sigma|, 1 }
    Tilde: min over others of { |1 - sigma / sigma_i|, 1 }
    evaluated at the computed sigma. Empty `others` counts as 1.
    """
    others = np.asarray(others, dtype=float)
    if others.size == 0:
        return 1.0
    if form == Form.HAT:
        rel = np.abs(1.0 - others / sigma)
    else:
        rel = np.abs(1.0 - sigma / others)
    return float(min(1.0, rel.min()))


def bound_eigvec(form: Form, sigma: float, others: np.ndarray, cond_term: float,
                 eps_e: float, eps_f: float) -> float:
    """Angle bound for a computed eigenvector of either pencil.

    Hat:   cond_term / (sigma * sep) * sqrt(eps_e^2 + sigma^2 eps_f^2)
           with cond_term = max{1, ||B^+||^2},
    Tilde: cond_term / sep * sqrt(eps_e^2 + sigma^2 eps_f^2)
           with cond_term = max{1, ||A^+||^2},
    where sigma is the computed value and sep the separation term.
    Duplicate sigma (zero separation) yields +inf.
    """
    sep = separation_term(form, sigma, others)
    if sep == 0.0:
        return math.inf
    pert = math.hypot(eps_e, sigma * eps_f)
    if form == Form.HAT:
        return cond_term * pert / (sigma * sep)
    return cond_term * pert / sep


def gamma_pair(sigma: float, others: np.ndarray) -> tuple[float, float]:
    """(gamma1, gamma2) relative separations with f(t)=min(|1-t|,1) and
    g(t)=min(|1-1/t|,1); their ratio always lies in [1/2, 2]."""
    others = np.asarray(others, dtype=float)
    if others.size == 0:
        return 1.0, 1.0
    t = others / sigma
    gamma1 = float(np.minimum(np.abs(1.0 - t), 1.0).min())
    gamma2 = float(np.minimum(np.abs(1.0 - 1.0 / t), 1.0).min())
    return gamma1, gamma2


def rho_factor(a_norm: float, b_norm: float) -> float:
    """sqrt(1 + max(||a||^2/||b||^2, ||b||^2/||a||^2)) for stacked-angle splitting."""
    if a_norm <= 0 or b_norm <= 0:
        raise ValueError("norms must be positive")
    r = (a_norm / b_norm) ** 2
    return math.sqrt(1.0 + max(r, 1.0 / r))


def bound_recovered(form: Form, which: str, x_scaled_norm: float,
                    matrix_norm: float, eigvec_bound: float) -> float:
    """Bound for a recovered generalized singular vector.

    Multiplies the eigenvector bound by sqrt(1 + 1/||x_s||^2) for the
    right vector, sqrt(1 + ||x_s||^2) for the left vector stacked in the
    eigenvector, and matrix_norm * sqrt(1 + ||x_s||^2) for the left
    vector obtained by mapping (v = Bx/||Bx|| in Hat, u = Ax/||Ax|| in
    Tilde). x_scaled_norm is ||x/beta|| (Hat) or ||x/alpha|| (Tilde).
    """
    if x_scaled_norm <= 0:
        raise ValueError("x_scaled_norm must be positive")
    stacked_left = "u" if form == Form.HAT else "v"
    mapped_left = "v" if form == Form.HAT else "u"
    if which == "x":
        factor = math.sqrt(1.0 + 1.0 / x_scaled_norm**2)
    elif which == stacked_left:
        factor = math.sqrt(1.0 + x_scaled_norm**2)
    elif which == mapped_left:
        factor = matrix_norm * math.sqrt(1.0 + x_scaled_norm**2)
    else:
        raise ValueError(f"which must be one of 'x', 'u', 'v', got {which!r}")
    return factor * eigvec_bound


def scaled_x_lower_bounds(factors: GsvdFactors, a_norm: float, b_norm: float,
                          slack: float = 1e-10) -> dict[str, np.ndarray]:
    """Per-component checks of the scaled-x lower bounds and the ratio bracket.

    Returns boolean arrays: ||x/beta|| >= 1/||B||, ||x/alpha|| >= 1/||A||,
    and 1/(1+||A||^2+||B||^2) < (||x||^2+beta^2)/(||x||^2+alpha^2)
    < 1+||A||^2+||B||^2.
    """
    col = np.linalg.norm(factors.X, axis=0)
    relax = 1.0 + slack
    xbeta_ok = col / factors.beta >= 1.0 / (b_norm * relax)
    xalpha_ok = col / factors.alpha >= 1.0 / (a_norm * relax)
    bracket = (1.0 + a_norm**2 + b_norm**2) * relax
    ratio = (col**2 + factors.beta**2) / (col**2 + factors.alpha**2)
    ratio_ok = (ratio > 1.0 / bracket) & (ratio < bracket)
    return {"xbeta": xbeta_ok, "xalpha": xalpha_ok, "ratio": ratio_ok}
