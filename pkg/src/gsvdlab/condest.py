"""Condition-number estimators and the formulation-choice strategy.

Three estimators for kappa(M) of a full-column-rank M:
  * LanczosInv: k-step symmetric Lanczos on (M^T M)^{-1} through a
    Cholesky factorization, full reorthogonalization. Lower bound on kappa.
  * RandomizedLSQR: solve a consistent least-squares problem with a
    random exact solution by LSQR; the error direction e estimates
    sigma_min(M) ~ ||M e|| / ||e||. Since that ratio never drops below
    sigma_min, every iterate yields a lower bound on kappa, and the
    tightest one over the whole iteration is returned.
  * Bidiag: Golub-Kahan bidiagonalization with full
    reorthogonalization, thick-restarted at subspace dimension k by
    keeping the extreme Ritz vectors; ratio of extreme singular values
    of the k x k projected matrix. Lower bound on kappa.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.sparse.linalg

from .augmented import Form
from .errors import RankDeficiencyError

__all__ = ["Method", "CondEstimate", "estimate_lanczos_inv", "estimate_lsqr",
           "estimate_bidiag", "choose_formulation", "Choice"]


class Method(str, enum.Enum):
    LANCZOS_INV = "lanczos-inv"
    RANDOMIZED_LSQR = "lsqr"
    BIDIAG = "bidiag"


class Choice(str, enum.Enum):
    HAT = "hat"
    TILDE = "tilde"
    EITHER = "either"


@dataclass
class CondEstimate:
    value: float
    method: Method
    steps: int
    converged: bool


def _spectral_norm(M: np.ndarray) -> float:
    return float(np.linalg.norm(M, 2))


def estimate_lanczos_inv(M: np.ndarray, k: int = 20, seed: int = 0) -> CondEstimate:
    """kappa estimate from k Lanczos steps on (M^T M)^{-1}.

    Each step applies the inverse via two triangular solves with the
    Cholesky factor of M^T M. The estimate sqrt(max Ritz value) * ||M||
    is a lower bound on kappa(M) up to rounding.
    """
    M = np.asarray(M, dtype=float)
    n = M.shape[1]
    gram = M.T @ M
    gram = 0.5 * (gram + gram.T)
    try:
        L = scipy.linalg.cholesky(gram, lower=True)
    except scipy.linalg.LinAlgError as exc:
        raise RankDeficiencyError("M^T M failed Cholesky: M is rank deficient") from exc

    def apply_inv(v):
        y = scipy.linalg.solve_triangular(L, v, lower=True)
        return scipy.linalg.solve_triangular(L, y, lower=True, trans="T")

    rng = np.random.default_rng(seed)
    k = min(k, n)
    q = rng.standard_normal(n)
    q /= np.linalg.norm(q)
    Q = np.zeros((n, k))
    alphas, betas = [], []
    beta = 0.0
    q_prev = np.zeros(n)
    steps = 0
    for j in range(k):
        Q[:, j] = q
        w = apply_inv(q)
        a = float(q @ w)
        alphas.append(a)
        w -= a * q + beta * q_prev
        # full reorthogonalization, twice for safety
        w -= Q[:, : j + 1] @ (Q[:, : j + 1].T @ w)
        w -= Q[:, : j + 1] @ (Q[:, : j + 1].T @ w)
        beta = float(np.linalg.norm(w))
        steps = j + 1
        if beta <= 1e-14 * abs(a):
            break
        betas.append(beta)
        q_prev = q
        q = w / beta
    T = np.diag(alphas) + np.diag(betas[: len(alphas) - 1], 1) + \
        np.diag(betas[: len(alphas) - 1], -1)
    evals, evecs = scipy.linalg.eigh(T)
    # Evaluate sigma_min on the Ritz vector directly: ||M y|| / ||y|| can
    # never drop below sigma_min, so this stays a lower bound on kappa even
    # though the tridiagonal eigenvalue carries the Cholesky-solve rounding.
    y = Q[:, :steps] @ evecs[:, -1]
    sigma_min_est = float(np.linalg.norm(M @ y) / np.linalg.norm(y))
    value = max(1.0, _spectral_norm(M) / sigma_min_est)
    return CondEstimate(value=value, method=Method.LANCZOS_INV,
                        steps=steps, converged=steps < k)


def estimate_lsqr(M: np.ndarray, seed: int = 0, max_iter: int | None = None,
                  tol: float = 1e-10) -> CondEstimate:
    """kappa estimate from the error of an LSQR solve with a known solution.

    The consistent system M x = M x_star is solved by the standard LSQR
    recurrence. At each iterate, e = x_k - x_star satisfies
    ||M e|| / ||e|| >= sigma_min(M), so ||M|| * ||e|| / ||M e|| is a
    lower bound on kappa(M); the largest such bound over the iteration
    is returned. A single terminal snapshot is unreliable: the bound is
    only tight in the window where the error has collapsed onto the
    smallest singular direction, before rounding noise takes over.
    """
    M = np.asarray(M, dtype=float)
    n = M.shape[1]
    if max_iter is None:
        max_iter = 4 * n
    rng = np.random.default_rng(seed)
    x_star = rng.standard_normal(n)
    b = M @ x_star
    norm_m = _spectral_norm(M)
    noise_floor = 100.0 * np.finfo(float).eps * np.linalg.norm(x_star)

    # LSQR (Paige & Saunders): Golub-Kahan recurrence + Givens updates
    beta = float(np.linalg.norm(b))
    if beta == 0.0:
        return CondEstimate(value=1.0, method=Method.RANDOMIZED_LSQR,
                            steps=0, converged=False)
    u = b / beta
    v = M.T @ u
    alpha = float(np.linalg.norm(v))
    v /= alpha
    w = v.copy()
    x = np.zeros(n)
    phibar, rhobar = beta, alpha
    best = 1.0
    measured = False
    steps = 0
    for it in range(1, max_iter + 1):
        u = M @ v - alpha * u
        beta = float(np.linalg.norm(u))
        if beta > 0.0:
            u /= beta
            v = M.T @ u - beta * v
            alpha = float(np.linalg.norm(v))
            if alpha > 0.0:
                v /= alpha
        rho = np.hypot(rhobar, beta)
        c, s = rhobar / rho, beta / rho
        theta = s * alpha
        rhobar = -c * alpha
        phi = c * phibar
        phibar = s * phibar
        x += (phi / rho) * w
        w = v - (theta / rho) * w
        steps = it
        e = x - x_star
        ne = float(np.linalg.norm(e))
        if ne < noise_floor:
            break
        best = max(best, norm_m * ne / float(np.linalg.norm(M @ e)))
        measured = True
        if phibar <= tol * float(np.linalg.norm(b)):
            break
    return CondEstimate(value=best, method=Method.RANDOMIZED_LSQR,
                        steps=steps, converged=measured)


def estimate_bidiag(M: np.ndarray, k: int = 20, seed: int = 0,
                    max_restarts: int = 400, rtol: float = 1e-8) -> CondEstimate:
    """kappa estimate from thick-restarted Golub-Kahan bidiagonalization.

    A k-dimensional right subspace is grown by the bidiagonalization
    recurrence with full reorthogonalization; the singular values of the
    projected matrix M V lie inside [sigma_min(M), sigma_max(M)], so
    their extreme ratio is a lower bound on kappa(M). A single k-step
    sweep cannot resolve an isolated tiny sigma_min (the Krylov
    polynomial degree is too low), so the sweep is restarted, keeping
    the extreme Ritz vectors, until the ratio stabilizes to rtol.
    """
    M = np.asarray(M, dtype=float)
    n = M.shape[1]
    k = min(k, n)
    keep = min(6, k - 1) if k > 1 else 0
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(n)
    v /= np.linalg.norm(v)
    V = np.zeros((n, k))
    V[:, 0] = v
    nv = 1
    prev = 0.0
    value = 1.0
    restarts = 0
    converged = False
    for _ in range(max_restarts):
        restarts += 1
        while nv < k:
            w = M.T @ (M @ V[:, nv - 1])
            w -= V[:, :nv] @ (V[:, :nv].T @ w)
            w -= V[:, :nv] @ (V[:, :nv].T @ w)
            nw = float(np.linalg.norm(w))
            if nw <= 1e-14:
                break
            V[:, nv] = w / nw
            nv += 1
        svals = np.linalg.svd(M @ V[:, :nv], compute_uv=False)
        # every sweep yields a valid lower bound; keep the tightest
        value = max(value, float(svals[0] / svals[-1]))
        if abs(value - prev) <= rtol * value:
            converged = True
            break
        prev = value
        if keep == 0 or nv <= keep:
            converged = nv < k  # exact invariant subspace exhausted
            break
        _, _, vt = np.linalg.svd(M @ V[:, :nv], full_matrices=False)
        sel = list(range(keep // 2)) + list(range(nv - (keep - keep // 2), nv))
        kept, _ = np.linalg.qr(V[:, :nv] @ vt[sel].T)
        nv = kept.shape[1]
        V[:, :nv] = kept
    return CondEstimate(value=value, method=Method.BIDIAG,
                        steps=k, converged=converged)


def choose_formulation(kappa_a: float, kappa_b: float) -> Choice:
    """Pick the pencil whose SPD block comes from the better-conditioned matrix.

    Either when the condition numbers are within a factor of 2; Hat when
    A is worse conditioned; Tilde when B is worse conditioned.
    """
    if kappa_a < 1.0 or kappa_b < 1.0:
        raise ValueError("condition numbers must be >= 1")
    if 0.5 * kappa_b <= kappa_a <= 2.0 * kappa_b:
        return Choice.EITHER
    if kappa_a > 2.0 * kappa_b:
        return Choice.HAT
    return Choice.TILDE
