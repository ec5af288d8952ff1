"""Test-problem construction and ingestion.

Random pairs with prescribed condition numbers, the one-dimensional
first-difference operator, 2-norm normalization, and Matrix Market I/O.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np
import scipy.io
import scipy.sparse

from .errors import (
    ArgumentError,
    MatrixMarketFieldError,
    MatrixMarketFileMissing,
    MatrixMarketHeaderError,
    RankDeficiencyError,
)

__all__ = [
    "MatrixPair",
    "gen_random_pair",
    "first_difference_matrix",
    "normalize",
    "load_matrix_market",
    "save_matrix_market",
]


@dataclass
class MatrixPair:
    """A pair (A, B) of dense real matrices with a common column count.

    A is m x n, B is p x n with m >= n, p >= n, and both have full
    column rank.
    """

    A: np.ndarray
    B: np.ndarray
    label: str = ""

    def __post_init__(self):
        self.A = np.ascontiguousarray(self.A, dtype=float)
        self.B = np.ascontiguousarray(self.B, dtype=float)
        m, n = self.A.shape
        p, nb = self.B.shape
        if nb != n:
            raise ArgumentError(f"column mismatch: A has {n} columns, B has {nb}")
        if m < n or p < n:
            raise ArgumentError(f"need m >= n and p >= n, got m={m}, p={p}, n={n}")
        if np.linalg.svd(self.A, compute_uv=False)[-1] <= 0.0:
            raise RankDeficiencyError("A is numerically rank deficient")
        if np.linalg.svd(self.B, compute_uv=False)[-1] <= 0.0:
            raise RankDeficiencyError("B is numerically rank deficient")

    @property
    def dims(self) -> tuple[int, int, int]:
        return self.A.shape[0], self.B.shape[0], self.A.shape[1]


def _haar_orthonormal(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    """Orthonormal rows x cols factor, Haar-distributed (QR of a Gaussian)."""
    g = rng.standard_normal((rows, cols))
    q, r = np.linalg.qr(g)
    # Fix signs so the distribution is Haar and independent of LAPACK conventions.
    return q * np.sign(np.diag(r))


def _matrix_with_spectrum(m: int, n: int, cond: float, rng: np.random.Generator) -> np.ndarray:
    if n == 1:
        grid = np.ones(1)
    else:
        grid = np.linspace(1.0 / cond, 1.0, n)
    left = _haar_orthonormal(m, n, rng)
    right = _haar_orthonormal(n, n, rng)
    return (left * grid) @ right.T


def gen_random_pair(m: int, n: int, p: int, cond_a: float, cond_b: float,
                    seed: int) -> MatrixPair:
    """Random dense pair with exactly prescribed singular-value grids.

    A has singular values linearly spaced from 1/cond_a to 1, so that
    ||A|| = 1 and kappa(A) = cond_a; B analogously with cond_b.
    Deterministic per seed.
    """
    if m < n or p < n or n < 1:
        raise ArgumentError(f"invalid dimensions m={m}, n={n}, p={p}")
    if cond_a < 1.0 or cond_b < 1.0:
        raise ArgumentError("condition numbers must be >= 1")
    rng = np.random.default_rng(seed)
    A = _matrix_with_spectrum(m, n, cond_a, rng)
    B = _matrix_with_spectrum(p, n, cond_b, rng)
    label = f"rand(m={m},n={n},p={p},cA={cond_a:g},cB={cond_b:g},seed={seed})"
    return MatrixPair(A, B, label=label)


def first_difference_matrix(n: int) -> np.ndarray:
    """The (n+1) x n first-order difference operator in one dimension:
    +1 on the diagonal and -1 on the subdiagonal."""
    if n < 1:
        raise ArgumentError("n must be >= 1")
    d = np.zeros((n + 1, n))
    idx = np.arange(n)
    d[idx, idx] = 1.0
    d[idx + 1, idx] = -1.0
    return d


def normalize(M: np.ndarray) -> np.ndarray:
    """M divided by its 2-norm (computed by dense SVD)."""
    M = np.asarray(M, dtype=float)
    nrm = np.linalg.norm(M, 2)
    if nrm == 0.0:
        raise ArgumentError("cannot normalize the zero matrix")
    return M / nrm


def load_matrix_market(path: str | os.PathLike) -> np.ndarray:
    """Dense real matrix from a Matrix Market file.

    Supports coordinate and array formats with the `real` (or `integer`)
    field and `general` or `symmetric` storage; symmetric storage is
    expanded. Complex files are rejected.
    """
    if not os.path.exists(path):
        raise MatrixMarketFileMissing(f"no such file: {path}")
    try:
        with open(path, "rb") as fh:
            header = fh.readline().decode("latin1").strip()
    except OSError as exc:
        raise MatrixMarketFileMissing(str(exc)) from exc
    if not header.startswith("%%MatrixMarket"):
        raise MatrixMarketHeaderError(f"not a Matrix Market file: {header!r}")
    tokens = header.lower().split()
    if "complex" in tokens:
        raise MatrixMarketFieldError("complex-valued Matrix Market files are not supported")
    try:
        mat = scipy.io.mmread(os.fspath(path))
    except ValueError as exc:
        raise MatrixMarketHeaderError(f"malformed Matrix Market file {path}: {exc}") from exc
    if scipy.sparse.issparse(mat):
        mat = mat.toarray()
    return np.asarray(mat, dtype=float)


def save_matrix_market(path: str | os.PathLike, M: np.ndarray, comment: str = "") -> None:
    """Write a dense real matrix in array format (round-trip partner of the reader)."""
    scipy.io.mmwrite(os.fspath(path), np.asarray(M, dtype=float),
                     comment=comment, precision=17)
