import numpy as np
import pytest

from gsvdlab import gen_random_pair, gsvd_reference, x_matrix_norms
from gsvdlab.problems import MatrixPair


def reconstruction_errors(pair, f):
    Xinv = np.linalg.inv(f.X)
    ra = np.linalg.norm(pair.A - f.U @ np.diag(f.alpha) @ Xinv, 2) / np.linalg.norm(pair.A, 2)
    rb = np.linalg.norm(pair.B - f.V @ np.diag(f.beta) @ Xinv, 2) / np.linalg.norm(pair.B, 2)
    return ra, rb


@pytest.mark.parametrize("seed", range(5))
def test_reference_gsvd_reconstructs_pair(seed):
    rng = np.random.default_rng(seed)
    m, n, p = rng.integers(20, 40), 15, rng.integers(16, 35)
    pair = gen_random_pair(int(m), n, int(p), 10.0 ** rng.uniform(0, 3),
                           10.0 ** rng.uniform(0, 3), seed=seed)
    f = gsvd_reference(pair)
    ra, rb = reconstruction_errors(pair, f)
    assert ra < 1e-12 and rb < 1e-12
    assert np.linalg.norm(f.U.T @ f.U - np.eye(n), 2) < 1e-12
    assert np.linalg.norm(f.V.T @ f.V - np.eye(n), 2) < 1e-12
    assert np.max(np.abs(f.alpha**2 + f.beta**2 - 1.0)) < 1e-13
    assert np.all(np.diff(f.sigma) <= 0)


def test_reference_gsvd_identity_pair():
    s = 1.0 / np.sqrt(2.0)
    pair = MatrixPair(s * np.eye(2), s * np.eye(2))
    f = gsvd_reference(pair)
    assert np.allclose(f.alpha, s) and np.allclose(f.beta, s)
    assert np.allclose(f.sigma, 1.0)


def test_reference_gsvd_diagonal_pair():
    # with B = I the generalized singular values are the singular values of A
    pair = MatrixPair(np.diag([1.0, 0.5]), np.eye(2))
    f = gsvd_reference(pair)
    assert np.allclose(np.sort(f.sigma), [0.5, 1.0], atol=1e-14)
    assert abs(f.alpha[0] - 1.0 / np.sqrt(2.0)) < 1e-14
    assert abs(f.alpha[1] - 0.5 / np.sqrt(1.25)) < 1e-14


def test_reference_gsvd_survives_ill_conditioned_a():
    pair = gen_random_pair(60, 40, 50, 1e7, 1e2, seed=9)
    f = gsvd_reference(pair)
    ra, rb = reconstruction_errors(pair, f)
    assert ra < 1e-10 and rb < 1e-10
    assert np.linalg.norm(f.U.T @ f.U - np.eye(40), 2) < 1e-12
    assert np.linalg.norm(f.V.T @ f.V - np.eye(40), 2) < 1e-12


def test_x_matrix_norms_against_pseudoinverses():
    pair = gen_random_pair(35, 25, 30, 1e3, 1e2, seed=2)
    f = gsvd_reference(pair)
    norm_x, norm_xinv, cols = x_matrix_norms(f)
    a_dag = 1.0 / np.linalg.svd(pair.A, compute_uv=False)[-1]
    b_dag = 1.0 / np.linalg.svd(pair.B, compute_uv=False)[-1]
    assert norm_x <= min(a_dag, b_dag) * (1.0 + 1e-10)
    stacked = np.hypot(np.linalg.norm(pair.A, 2), np.linalg.norm(pair.B, 2))
    assert norm_xinv <= stacked * (1.0 + 1e-10)
    assert np.allclose(cols, np.linalg.norm(f.X, axis=0))


def test_x_matrix_norms_identity():
    pair = MatrixPair(np.eye(3) / np.sqrt(2.0), np.eye(3) / np.sqrt(2.0))
    f = gsvd_reference(pair)
    norm_x, norm_xinv, cols = x_matrix_norms(f)
    assert abs(norm_x * norm_xinv - 1.0) < 1e-12
    assert np.allclose(cols, cols[0])
