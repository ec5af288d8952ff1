"""The two augmented symmetric-definite pencils and their exact eigenstructure.

Hat form:   M = [[0, A], [A^T, 0]],  N = blockdiag(I_m, B^T B), order m+n.
Tilde form: M = [[0, B], [B^T, 0]],  N = blockdiag(I_p, A^T A), order p+n.
Nonzero eigenvalues are +/- sigma_i (Hat) and +/- 1/sigma_i (Tilde).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import ContractError, RankDeficiencyError
from .oracle import GsvdFactors
from .problems import MatrixPair

__all__ = ["Form", "AugmentedPencil", "ExactEigenStructure",
           "build_hat", "build_tilde", "exact_structure_from_gsvd"]


class Form(str, enum.Enum):
    HAT = "hat"
    TILDE = "tilde"


@dataclass
class AugmentedPencil:
    M: np.ndarray            # symmetric, order d
    N: np.ndarray            # SPD, order d
    form: Form
    dims: tuple[int, int, int]   # (m, p, n)

    @property
    def order(self) -> int:
        return self.M.shape[0]


@dataclass
class ExactEigenStructure:
    """Exact generalized eigendecomposition assembled from oracle GSVD factors."""

    values: np.ndarray    # signed eigenvalues incl. zeros
    vectors: np.ndarray   # N-orthonormal eigenvector matrix


def _gram(G: np.ndarray) -> np.ndarray:
    gram = G.T @ G
    return 0.5 * (gram + gram.T)


def _check_spd(gram: np.ndarray, what: str) -> None:
    try:
        scipy.linalg.cholesky(gram, lower=True)
    except scipy.linalg.LinAlgError as exc:
        raise RankDeficiencyError(f"{what} is not positive definite: "
                                  "the corresponding matrix is rank deficient") from exc


def build_hat(pair: MatrixPair) -> AugmentedPencil:
    m, p, n = pair.dims
    d = m + n
    M = np.zeros((d, d))
    M[:m, m:] = pair.A
    M[m:, :m] = pair.A.T
    N = np.eye(d)
    gram = _gram(pair.B)
    _check_spd(gram, "B^T B")
    N[m:, m:] = gram
    return AugmentedPencil(M=M, N=N, form=Form.HAT, dims=(m, p, n))


def build_tilde(pair: MatrixPair) -> AugmentedPencil:
    m, p, n = pair.dims
    d = p + n
    M = np.zeros((d, d))
    M[:p, p:] = pair.B
    M[p:, :p] = pair.B.T
    N = np.eye(d)
    gram = _gram(pair.A)
    _check_spd(gram, "A^T A")
    N[p:, p:] = gram
    return AugmentedPencil(M=M, N=N, form=Form.TILDE, dims=(m, p, n))


def _orthonormal_complement(Q: np.ndarray) -> np.ndarray:
    """Trailing columns of a full QR of Q: an orthonormal basis of range(Q)^perp."""
    rows, cols = Q.shape
    full, _ = np.linalg.qr(Q, mode="complete")
    return full[:, cols:]


def exact_structure_from_gsvd(factors: GsvdFactors, form: Form) -> ExactEigenStructure:
    """Assemble the exact eigendecomposition of a pencil from oracle factors.

    Hat:   values = (sigma, -sigma, 0^{m-n}),
           vectors = [[U/sqrt2, U/sqrt2, Uperp], [W/sqrt2, -W/sqrt2, 0]]
           with W = X S^{-1}; Tilde analogous with W' = X C^{-1} and
           values (1/sigma, -1/sigma, 0^{p-n}).
    """
    if np.max(np.abs(factors.alpha**2 + factors.beta**2 - 1.0)) > 1e-8:
        raise ContractError("inconsistent factors: alpha^2 + beta^2 != 1")
    sigma = factors.sigma
    if form == Form.HAT:
        left, w = factors.U, factors.X / factors.beta
        lam = sigma
    else:
        left, w = factors.V, factors.X / factors.alpha
        lam = 1.0 / sigma
    rows, n = left.shape
    perp = _orthonormal_complement(left)
    s2 = 1.0 / np.sqrt(2.0)
    vectors = np.block([
        [s2 * left, s2 * left, perp],
        [s2 * w, -s2 * w, np.zeros((n, rows - n))],
    ])
    values = np.concatenate([lam, -lam, np.zeros(rows - n)])
    return ExactEigenStructure(values=values, vectors=vectors)
