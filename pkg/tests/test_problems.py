import numpy as np
import pytest

from gsvdlab import (ArgumentError, MatrixPair, first_difference_matrix,
                     gen_random_pair, load_matrix_market, normalize,
                     save_matrix_market)


def test_gen_random_pair_prescribed_conditioning():
    pair = gen_random_pair(50, 30, 40, 1e5, 10.0, seed=7)
    sa = np.linalg.svd(pair.A, compute_uv=False)
    sb = np.linalg.svd(pair.B, compute_uv=False)
    assert 0.999e5 <= sa[0] / sa[-1] <= 1.001e5
    assert abs(sb[0] / sb[-1] - 10.0) < 1e-8
    assert abs(sa[0] - 1.0) < 1e-12
    assert abs(sb[0] - 1.0) < 1e-12


def test_gen_random_pair_exact_singular_value_grid():
    n, c = 25, 1e3
    pair = gen_random_pair(30, n, 35, c, 1.0, seed=3)
    sa = np.sort(np.linalg.svd(pair.A, compute_uv=False))
    grid = np.linspace(1.0 / c, 1.0, n)
    assert np.max(np.abs(sa - grid)) < 1e-12


def test_gen_random_pair_cond_one_is_orthogonal():
    pair = gen_random_pair(2, 2, 2, 1.0, 1.0, seed=0)
    assert np.linalg.norm(pair.A.T @ pair.A - np.eye(2)) < 1e-12
    assert np.linalg.norm(pair.B.T @ pair.B - np.eye(2)) < 1e-12


def test_gen_random_pair_deterministic():
    a = gen_random_pair(12, 8, 10, 50.0, 5.0, seed=42)
    b = gen_random_pair(12, 8, 10, 50.0, 5.0, seed=42)
    assert np.array_equal(a.A, b.A)
    assert np.array_equal(a.B, b.B)


@pytest.mark.parametrize("m,n,p,ca,cb", [
    (5, 6, 7, 10.0, 10.0),   # m < n
    (7, 6, 5, 10.0, 10.0),   # p < n
    (7, 6, 7, 0.5, 10.0),    # cond < 1
])
def test_gen_random_pair_rejects_bad_arguments(m, n, p, ca, cb):
    with pytest.raises(ArgumentError):
        gen_random_pair(m, n, p, ca, cb, seed=0)


def test_matrix_pair_rejects_rank_deficiency():
    from gsvdlab.errors import RankDeficiencyError
    A = np.zeros((4, 3))
    A[0, 0] = 1.0
    with pytest.raises(RankDeficiencyError):
        MatrixPair(A, np.eye(3))


def test_first_difference_matrix_small_cases():
    assert np.array_equal(first_difference_matrix(1), np.array([[1.0], [-1.0]]))
    expected = np.array([[1.0, 0.0], [-1.0, 1.0], [0.0, -1.0]])
    assert np.array_equal(first_difference_matrix(2), expected)
    with pytest.raises(ArgumentError):
        first_difference_matrix(0)


def test_first_difference_matrix_column_structure():
    D = first_difference_matrix(6)
    assert D.shape == (7, 6)
    assert np.allclose(D.sum(axis=0), 0.0)
    assert np.all(np.count_nonzero(D, axis=0) == 2)


def test_normalize():
    assert np.allclose(normalize(2.0 * np.eye(3)), np.eye(3))
    assert np.allclose(normalize(np.diag([3.0, 1.0])), np.diag([1.0, 1.0 / 3.0]))
    rng = np.random.default_rng(1)
    M = 5.3 * rng.standard_normal((20, 10))
    assert abs(np.linalg.norm(normalize(M), 2) - 1.0) < 1e-12
    with pytest.raises(ArgumentError):
        normalize(np.zeros((3, 2)))


def test_matrix_market_round_trip(tmp_path):
    rng = np.random.default_rng(5)
    M = rng.standard_normal((10, 7))
    path = str(tmp_path / "m.mtx")
    save_matrix_market(path, M)
    back = load_matrix_market(path)
    assert np.max(np.abs(back - M)) < 1e-15 * np.max(np.abs(M))


def test_matrix_market_rejects_garbage(tmp_path):
    from gsvdlab.errors import MatrixMarketError
    path = tmp_path / "bad.mtx"
    path.write_text("this is not a matrix market file\n1 2 3\n")
    with pytest.raises(MatrixMarketError):
        load_matrix_market(str(path))
    with pytest.raises(MatrixMarketError):
        load_matrix_market(str(tmp_path / "missing.mtx"))
