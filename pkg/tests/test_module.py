import numpy as np
import pytest

from lrpkit import ffmat
from lrpkit.algebra import elementary_abelian, truncated_polynomial_algebra
from lrpkit.module import (Module, ModuleMap, cosyzygy, direct_sum, field_dual, find_isomorphism,
                           free_module, free_rank, hom_dim, hom_space, is_isomorphic, is_projective,
                           jordan_module, projective_cover, random_module, regular_module,
                           strip_projective_summands, syzygy, syzygy_power, tensor_over_field,
                           trivial_module, zero_module)

from . import oracles


def test_rejects_non_representation():
    A = truncated_polynomial_algebra(2, [2])
    with pytest.raises(ValueError):
        Module(A, 1, (np.array([[1]]),))  # w acting by 1 violates w^2 = 0


def test_hom_dim_matches_oracle():
    A = elementary_abelian(2, 2)
    rng = np.random.default_rng(1)
    mods = [random_module(A, int(rng.integers(1, 6)), rng) for _ in range(6)] + [trivial_module(A)]
    for M in mods:
        for N in mods[:3]:
            assert hom_dim(M, N) == oracles.hom_dim(M.actions, N.actions, 2)
            for h in hom_space(M, N):
                assert ModuleMap(M, N, h).is_homomorphism()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_jordan_blocks_over_cyclic(p):
    A = elementary_abelian(p, 1)
    for s in range(1, p + 1):
        J = jordan_module(A, s)
        assert J.top_dim == 1
        assert is_projective(J) == (s == p)
        if s < p:
            # Omega J_s = J_{p-s} over k[w]/(w^p)
            assert is_isomorphic(syzygy(J), jordan_module(A, p - s))
            assert is_isomorphic(cosyzygy(syzygy(J)), J)
            assert is_isomorphic(syzygy_power(J, 2), J)


def test_projective_cover_map():
    A = elementary_abelian(3, 2)
    rng = np.random.default_rng(2)
    M = random_module(A, 5, rng)
    C = projective_cover(M)
    assert C.rank == M.top_dim
    assert C.map.is_homomorphism()
    assert ffmat.rank(C.map.matrix, 3) == M.dim
    assert C.syzygy.dim == C.rank * A.dim - M.dim


def test_free_rank_and_strip():
    A = elementary_abelian(2, 2)
    M = direct_sum(free_module(A, 2), trivial_module(A), jordan_module(A, 2))
    assert free_rank(M) == 2
    S = strip_projective_summands(M)
    assert S.dim == 3 and free_rank(S) == 0
    assert is_isomorphic(S, direct_sum(trivial_module(A), jordan_module(A, 2)))


def test_isomorphism_is_three_valued_and_detects_non_iso():
    A = elementary_abelian(2, 2)
    k = trivial_module(A)
    J = jordan_module(A, 2, 0)
    J2 = jordan_module(A, 2, 1)
    assert is_isomorphic(direct_sum(k, k), direct_sum(k, k)) is True
    assert is_isomorphic(J, J2) is False
    assert is_isomorphic(regular_module(A), free_module(A, 1)) is True
    assert is_isomorphic(zero_module(A), zero_module(A)) is True
    assert is_isomorphic(k, J) is False


def test_conjugate_is_isomorphic_with_explicit_map():
    A = elementary_abelian(3, 1)
    rng = np.random.default_rng(3)
    M = random_module(A, 4, rng, conjugate=False)
    P = np.array([[1, 2, 0, 0], [0, 1, 0, 0], [0, 0, 2, 1], [0, 0, 0, 1]])
    N = M.conjugate(P)
    assert is_isomorphic(M, N)
    F = find_isomorphism(M, N)
    assert F is not None and ModuleMap(M, N, F).is_homomorphism() and ffmat.is_invertible(F, 3)


def test_tensor_and_dual_over_group_algebra():
    A = elementary_abelian(2, 2)
    J = jordan_module(A, 2)
    k = trivial_module(A)
    assert is_isomorphic(tensor_over_field(J, k), J)
    assert is_isomorphic(field_dual(field_dual(J)), J)
    T = tensor_over_field(regular_module(A), J)
    assert is_projective(T) and free_rank(T) == 2


def test_module_json_round_trip_is_byte_identical():
    from lrpkit.io import dumps, module_from_json
    A = elementary_abelian(3, 2)
    M = random_module(A, 4, np.random.default_rng(5))
    s = dumps(M.to_json())
    M2 = module_from_json(M.to_json())
    assert M2.same_as(M) and dumps(M2.to_json()) == s
