"""Recovery of approximate GSVD components from computed eigenpairs.

Hat form: an eigenpair (sigma, w) with w = [w_u; w_x] gives
u = w_u/||w_u||, x = beta * w_x/||w_u||, v = B x/||B x||.
Tilde form: (1/sigma, w) with w = [w_v; w_x] gives v = w_v/||w_v||,
x = alpha * w_x/||w_v||, u = A x/||A x||.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .augmented import Form, build_hat, build_tilde
from .eigensolve import GenEigenpair, solve_pencil
from .errors import DegenerateVectorError, SpectrumAnomalyError
from .problems import MatrixPair

__all__ = ["RecoveredComponent", "sigma_to_alphabeta", "recover_from_hat",
           "recover_from_tilde", "recover_all", "recover_all_from_pencil"]


@dataclass
class RecoveredComponent:
    form: Form
    alpha: float
    beta: float
    sigma: float
    u: np.ndarray   # unit m-vector
    v: np.ndarray   # unit p-vector
    x: np.ndarray   # n-vector


def sigma_to_alphabeta(sigma: float) -> tuple[float, float]:
    """(alpha, beta) with alpha/beta = sigma and alpha^2 + beta^2 = 1."""
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    beta = 1.0 / np.hypot(1.0, sigma)
    return sigma * beta, beta


def recover_from_hat(pair: MatrixPair, eig: GenEigenpair) -> RecoveredComponent:
    if eig.value <= 0:
        raise ValueError("hat recovery needs a positive eigenvalue")
    m, p, n = pair.dims
    w_u, w_x = eig.vector[:m], eig.vector[m:]
    nu = np.linalg.norm(w_u)
    if nu == 0.0:
        raise DegenerateVectorError("upper block of the eigenvector vanished")
    sigma = eig.value
    alpha, beta = sigma_to_alphabeta(sigma)
    u = w_u / nu
    x = (beta / nu) * w_x
    bx = pair.B @ x
    nbx = np.linalg.norm(bx)
    if nbx == 0.0:
        raise DegenerateVectorError("B x vanished during recovery")
    return RecoveredComponent(form=Form.HAT, alpha=alpha, beta=beta,
                              sigma=sigma, u=u, v=bx / nbx, x=x)


def recover_from_tilde(pair: MatrixPair, eig: GenEigenpair) -> RecoveredComponent:
    if eig.value <= 0:
        raise ValueError("tilde recovery needs a positive eigenvalue")
    m, p, n = pair.dims
    w_v, w_x = eig.vector[:p], eig.vector[p:]
    nv = np.linalg.norm(w_v)
    if nv == 0.0:
        raise DegenerateVectorError("upper block of the eigenvector vanished")
    sigma = 1.0 / eig.value
    alpha, beta = sigma_to_alphabeta(sigma)
    v = w_v / nv
    x = (alpha / nv) * w_x
    ax = pair.A @ x
    nax = np.linalg.norm(ax)
    if nax == 0.0:
        raise DegenerateVectorError("A x vanished during recovery")
    return RecoveredComponent(form=Form.TILDE, alpha=alpha, beta=beta,
                              sigma=sigma, u=ax / nax, v=v, x=x)


def recover_all(pair: MatrixPair, form: Form) -> list[RecoveredComponent]:
    """Build the pencil, solve it, and recover all n components, sigma descending."""
    m, p, n = pair.dims
    pencil = build_hat(pair) if form == Form.HAT else build_tilde(pair)
    return recover_all_from_pencil(pair, pencil)


def recover_all_from_pencil(pair: MatrixPair, pencil) -> list[RecoveredComponent]:
    """Recovery from an already-built (possibly perturbed) pencil."""
    m, p, n = pair.dims
    eigs = solve_pencil(pencil)
    top = eigs[:n]   # values are sorted descending
    bad = [e.value for e in top if e.value <= 0]
    if bad:
        raise SpectrumAnomalyError(
            f"expected {n} positive eigenvalues; the smallest of the top n is "
            f"{min(bad):.3e} (form={pencil.form.value}, dims={(m, p, n)})")
    recover = recover_from_hat if pencil.form == Form.HAT else recover_from_tilde
    comps = [recover(pair, e) for e in top]
    comps.sort(key=lambda c: -c.sigma)
    return comps
