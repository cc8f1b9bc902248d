import numpy as np
import pytest

from lrpkit import ffmat
from lrpkit.ffmat import FieldSpec, FpMatrix

from .oracles import rank_mod_p


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_rank_matches_oracle(p):
    rng = np.random.default_rng(p)
    for _ in range(30):
        r, c = rng.integers(1, 9, size=2)
        a = rng.integers(0, p, size=(r, c))
        if rng.random() < 0.3:
            a[-1] = (a[0] * 2 + a[-1] * 0) % p
        assert ffmat.rank(a, p) == rank_mod_p(a, p)


def test_rref_shape_and_pivots():
    a = np.array([[0, 2, 4], [1, 1, 1], [1, 0, 2]])
    R, piv, rk = ffmat.rref(a, 5)
    assert rk == ffmat.rank(a, 5)
    for i, c in enumerate(piv):
        assert R[i, c] == 1
        assert not R[:, c][np.arange(R.shape[0]) != i].any()


def test_kernel_and_solve():
    p = 3
    rng = np.random.default_rng(0)
    a = rng.integers(0, p, size=(4, 7))
    K = ffmat.kernel_basis(a, p)
    assert K.shape[1] == 7 - ffmat.rank(a, p)
    assert not ffmat.mul(a, K, p).any()
    x = rng.integers(0, p, size=(7, 2))
    b = ffmat.mul(a, x, p)
    y = ffmat.solve(a, b, p)
    assert np.array_equal(ffmat.mul(a, y, p), b)


def test_solve_inconsistent_returns_none():
    a = np.array([[1, 0], [1, 0]])
    assert ffmat.solve(a, np.array([[1], [0]]), 2) is None


def test_inverse_and_singular():
    p = 5
    a = np.array([[2, 1], [1, 1]])
    assert np.array_equal(ffmat.mul(a, ffmat.inverse(a, p), p), np.eye(2, dtype=int))
    assert not ffmat.is_invertible(np.array([[1, 2], [2, 4]]), p)
    with pytest.raises(ValueError):
        ffmat.inverse(np.array([[1, 2], [2, 4]]), p)


def test_quotient_maps():
    p = 3
    w = np.array([[1, 0], [2, 1], [0, 1], [1, 1]])
    proj, sec = ffmat.quotient_maps(w, 4, p)
    assert proj.shape == (2, 4)
    assert np.array_equal(ffmat.mul(proj, sec, p), np.eye(2, dtype=int))
    assert not ffmat.mul(proj, w, p).any()


def test_restrict_to_invariant_subspace():
    p = 2
    N = np.array([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    k = np.array([[1, 0], [0, 1], [0, 0]])
    (r,) = ffmat.restrict_to_subspace([N], k, p)
    assert np.array_equal(r, [[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        ffmat.restrict_to_subspace([N], np.array([[0], [1], [0]]), p)


def test_batch_nonsingular_agrees_with_rank():
    p = 3
    rng = np.random.default_rng(4)
    mats = rng.integers(0, p, size=(200, 3, 3))
    mask = ffmat.batch_nonsingular(mats, p)
    assert list(mask) == [rank_mod_p(m, p) == 3 for m in mats]


def test_field_spec_rejects_composite():
    with pytest.raises(ValueError):
        FieldSpec(4)
    assert FieldSpec(7).inv(3) == 5


def test_fpmatrix_json_round_trip_and_ops():
    m = FpMatrix.from_entries(5, 2, 2, [1, 2, 3, 4])
    assert FpMatrix.from_json(m.to_json()) == m
    assert (m @ m.inverse()) == FpMatrix.identity(5, 2)
    assert m.kron(FpMatrix.identity(5, 1)) == m
    assert (m - m).rank == 0
    assert hash(m) == hash(FpMatrix.from_json(m.to_json()))
    with pytest.raises(ValueError):
        FpMatrix.from_entries(5, 2, 2, [1, 2, 3])


def test_kron_apply_matches_explicit_kron():
    p = 3
    rng = np.random.default_rng(7)
    a, b = rng.integers(0, p, (2, 3)), rng.integers(0, p, (4, 2))
    S = rng.integers(0, p, (6, 5))
    full = ffmat.kronecker(a, b, p)
    assert np.array_equal(ffmat.kron_apply(a, b, S, p), ffmat.mul(full, S, p))
    Ia, Ib = np.eye(3, dtype=int), np.eye(2, dtype=int)
    assert np.array_equal(ffmat.kron_apply(None, b, S, p), ffmat.mul(ffmat.kronecker(Ia, b, p), S, p))
    assert np.array_equal(ffmat.kron_apply(a, None, S, p), ffmat.mul(ffmat.kronecker(a, Ib, p), S, p))
    M = rng.integers(0, p, (5, 8))
    assert np.array_equal(ffmat.apply_kron(M, a, b, p), ffmat.mul(M, full, p))
    assert np.array_equal(ffmat.apply_kron(M, None, b, p),
                          ffmat.mul(M, ffmat.kronecker(np.eye(2, dtype=int), b, p), p))
    assert np.array_equal(ffmat.kron(a, b), np.kron(a, b))
