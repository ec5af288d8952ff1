"""High-accuracy GSVD reference via stacked QR plus a CS decomposition.

Provides the "exact" components every accuracy measurement is taken
against: A = U diag(alpha) X^{-1}, B = V diag(beta) X^{-1} with
alpha_i^2 + beta_i^2 = 1 and sigma_i = alpha_i / beta_i descending.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import ContractError, RankDeficiencyError
from .problems import MatrixPair

__all__ = ["GsvdFactors", "gsvd_reference", "x_matrix_norms"]

_SQRT2_INV = 1.0 / np.sqrt(2.0)


@dataclass
class GsvdFactors:
    """Full GSVD of a pair, components sorted by sigma descending."""

    U: np.ndarray       # m x n, orthonormal columns
    V: np.ndarray       # p x n, orthonormal columns
    X: np.ndarray       # n x n, nonsingular
    alpha: np.ndarray   # n, in (0, 1)
    beta: np.ndarray    # n, in (0, 1)

    @property
    def sigma(self) -> np.ndarray:
        return self.alpha / self.beta

    def validate(self, tol: float = 1e-8) -> None:
        if np.max(np.abs(self.alpha**2 + self.beta**2 - 1.0)) > tol:
            raise ContractError("alpha^2 + beta^2 deviates from 1 beyond tolerance")
        if np.any(np.diff(self.sigma) > 0):
            raise ContractError("sigma is not sorted descending")


def _cs_decomposition(q1: np.ndarray, q2: np.ndarray):
    """CS decomposition of a stacked matrix [q1; q2] with orthonormal columns.

    q1 is m x n, q2 is p x n (m, p >= n) with q1^T q1 + q2^T q2 = I.
    Returns (u, v, z, alpha, beta) with q1 = u diag(alpha) z^T and
    q2 = v diag(beta) z^T up to working accuracy; u, v, z have
    orthonormal columns and alpha is ascending.

    Two-sided construction (Van Loan): components with beta >= 1/sqrt(2)
    are read off a QR of q2 z directly; the complementary block, where
    beta is small and would lose accuracy to cancellation, is
    rediagonalized through an SVD of the trailing part of q2 z, applying
    the same right rotation to z and to the alpha block.
    """
    m, n = q1.shape
    p = q2.shape[0]

    u, c, zt = np.linalg.svd(q1, full_matrices=False)
    # ascending alpha: large-beta components first
    u = np.ascontiguousarray(u[:, ::-1])
    alpha = c[::-1].copy()
    z = np.ascontiguousarray(zt.T[:, ::-1])

    t = q2 @ z
    k = int(np.searchsorted(alpha, _SQRT2_INV, side="right"))

    v, _ = np.linalg.qr(t[:, :k], mode="complete")  # p x p, identity when k == 0
    s = v.T @ t
    beta = np.zeros(n)
    beta[:k] = np.diag(s[:k, :k]).copy()

    if k < n:
        rows = slice(k, p)
        cols = slice(k, n)
        ut, st, vtt = np.linalg.svd(s[rows, cols])
        v[:, rows] = v[:, rows] @ ut
        z[:, cols] = z[:, cols] @ vtt.T
        beta[k:] = st[: n - k]
        # the alpha block picks up the same right rotation; restore
        # diagonality by a QR (rc is diagonal to working accuracy
        # because rotations only mix components with equal alpha)
        qc, rc = np.linalg.qr(np.diag(alpha[k:]) @ vtt.T)
        u[:, cols] = u[:, cols] @ qc
        alpha[k:] = np.diag(rc)

    # sign conventions: alpha, beta nonnegative
    neg = alpha < 0
    u[:, neg] *= -1.0
    alpha = np.abs(alpha)
    v = v[:, :n]
    neg = beta < 0
    v[:, neg] *= -1.0
    beta = np.abs(beta)

    return u, v, z, alpha, beta


def gsvd_reference(pair: MatrixPair) -> GsvdFactors:
    """Reference GSVD through thin QR of the stacked matrix and a CSD.

    X is obtained from the triangular solve R X = Z, never by explicit
    inversion of R.
    """
    A, B = pair.A, pair.B
    m, n = A.shape
    q, r = np.linalg.qr(np.vstack([A, B]))
    rdiag = np.abs(np.diag(r))
    if rdiag.min() <= np.finfo(float).eps * (A.shape[0] + B.shape[0]) * rdiag.max():
        raise RankDeficiencyError("stacked matrix [A; B] is numerically singular")
    u, v, z, alpha, beta = _cs_decomposition(q[:m], q[m:])

    # descending sigma (alpha came out ascending)
    order = np.argsort(-(alpha / beta), kind="stable")
    u, v, z = u[:, order], v[:, order], z[:, order]
    alpha, beta = alpha[order], beta[order]

    x = scipy.linalg.solve_triangular(r, z)
    return GsvdFactors(U=u, V=v, X=x, alpha=alpha, beta=beta)


def x_matrix_norms(factors: GsvdFactors) -> tuple[float, float, np.ndarray]:
    """(||X||, ||X^{-1}||, per-column norms ||x_i||), norms via SVD of X."""
    svals = np.linalg.svd(factors.X, compute_uv=False)
    col_norms = np.linalg.norm(factors.X, axis=0)
    return float(svals[0]), float(1.0 / svals[-1]), col_norms
