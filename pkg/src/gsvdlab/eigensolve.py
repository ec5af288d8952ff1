"""Dense symmetric-definite generalized eigensolver and perturbation injection.

The solver reduces (M, N) with N SPD through the Cholesky factor of N to
a standard dense symmetric eigenproblem (LAPACK *sygvd via
scipy.linalg.eigh), which is backward stable; eigenvectors come out
N-orthonormal. Perturbations are random symmetric matrices rescaled to
an exact 2-norm, so ||E|| = ||M|| eps and ||F|| = ||N|| eps hold exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .augmented import AugmentedPencil
from .errors import NotSpdError, PerturbationTooLargeError, SelectionError

__all__ = ["GenEigenpair", "PerturbationSpec", "solve_pencil",
           "perturb_pencil", "select_eigenpairs"]


@dataclass
class GenEigenpair:
    value: float
    vector: np.ndarray    # N-normalized: w^T N w = 1
    residual: float       # ||M w - value N w|| / ((||M|| + |value| ||N||) ||w||)


@dataclass
class PerturbationSpec:
    epsilon: float
    seed: int = 0

    def __post_init__(self):
        if self.epsilon < 0:
            raise ValueError("epsilon must be nonnegative")


def solve_pencil(pencil: AugmentedPencil) -> list[GenEigenpair]:
    """All generalized eigenpairs of (M, N), values descending."""
    M, N = pencil.M, pencil.N
    try:
        values, vectors = scipy.linalg.eigh(M, N)
    except scipy.linalg.LinAlgError as exc:
        raise NotSpdError(f"N is not positive definite: {exc}") from exc
    # descending order
    values = values[::-1]
    vectors = vectors[:, ::-1]

    norm_m = np.linalg.norm(M, 2)
    norm_n = np.linalg.norm(N, 2)
    res_mat = M @ vectors - N @ vectors * values
    res_norms = np.linalg.norm(res_mat, axis=0)
    vec_norms = np.linalg.norm(vectors, axis=0)
    pairs = []
    for i, lam in enumerate(values):
        denom = (norm_m + abs(lam) * norm_n) * vec_norms[i]
        res = float(res_norms[i] / denom) if denom > 0.0 else 0.0
        pairs.append(GenEigenpair(value=float(lam),
                                  vector=vectors[:, i].copy(),
                                  residual=res))
    return pairs


def _random_symmetric_with_norm(d: int, target: float,
                                rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((d, d))
    e = 0.5 * (g + g.T)
    nrm = np.linalg.norm(e, 2)
    if nrm == 0.0:
        return e
    return e * (target / nrm)


def perturb_pencil(pencil: AugmentedPencil, spec: PerturbationSpec) -> AugmentedPencil:
    """Return (M + E, N + F) with ||E|| = ||M|| eps, ||F|| = ||N|| eps exactly.

    E and F are random symmetric; N + F is verified SPD by Cholesky.
    """
    if spec.epsilon == 0.0:
        return pencil
    rng = np.random.default_rng(spec.seed)
    d = pencil.order
    norm_m = np.linalg.norm(pencil.M, 2)
    norm_n = np.linalg.norm(pencil.N, 2)
    E = _random_symmetric_with_norm(d, norm_m * spec.epsilon, rng)
    F = _random_symmetric_with_norm(d, norm_n * spec.epsilon, rng)
    Np = pencil.N + F
    try:
        scipy.linalg.cholesky(Np, lower=True)
    except scipy.linalg.LinAlgError as exc:
        raise PerturbationTooLargeError(
            f"epsilon={spec.epsilon:g} destroyed positive definiteness of N") from exc
    return AugmentedPencil(M=pencil.M + E, N=Np, form=pencil.form, dims=pencil.dims)


def select_eigenpairs(pairs: list[GenEigenpair], target: float,
                      count: int) -> list[GenEigenpair]:
    """The `count` positive-eigenvalue pairs closest to `target`.

    target = +inf selects the largest. Ties go to the larger eigenvalue,
    then to earlier input order.
    """
    positive = [(i, p) for i, p in enumerate(pairs) if p.value > 0]
    if len(positive) < count:
        raise SelectionError(f"requested {count} positive eigenvalues, "
                             f"only {len(positive)} available")
    if math.isinf(target):
        key = lambda ip: (-ip[1].value, ip[0])
    else:
        key = lambda ip: (abs(ip[1].value - target), -ip[1].value, ip[0])
    positive.sort(key=key)
    return [p for _, p in positive[:count]]
