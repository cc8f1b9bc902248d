import json
from pathlib import Path

import numpy as np
import pytest

from lrpkit import ffmat
from lrpkit.algebra import (Automorphism, automorphism_from_linear, elementary_abelian, enveloping,
                            scalar_automorphism, truncated_polynomial_algebra)
from lrpkit.bimodule import (associator, associator_inverse, bimodule_map_ok, conjugate_bimodule,
                             direct_sum_bimodules, forget_left, forget_right, free_bimodule,
                             hom_tensor_iso_check, is_lrp, left_dual, left_unitor, left_unitor_inverse,
                             regular_bimodule, right_dual, right_unitor, tensor_maps, tensor_over_algebra,
                             tensor_quotient, trivial_bimodule, twisted_bimodule, verify_zigzag,
                             zigzag_composites)
from lrpkit.corpus import random_automorphism, random_lrp_bimodule
from lrpkit.module import is_isomorphic, is_projective

from .oracles import rank_mod_p

GOLDENS = json.loads((Path(__file__).parent / "data" / "goldens.json").read_text())


def test_regular_and_free_are_lrp_trivial_is_not():
    A = elementary_abelian(3, 1)
    assert is_lrp(regular_bimodule(A)) and is_lrp(free_bimodule(A, 2))
    assert not is_lrp(trivial_bimodule(A))
    assert is_projective(free_bimodule(A).inner) and not is_projective(regular_bimodule(A).inner)


@pytest.mark.parametrize("p,exps", [(2, [2]), (3, [3]), (2, [2, 2])])
def test_tensor_dims_match_goldens(p, exps):
    A = truncated_polynomial_algebra(p, exps)
    F, R = free_bimodule(A), regular_bimodule(A)
    assert tensor_over_algebra(F, F).dim == GOLDENS["tensor_dim"][f"env(x)env p={p} exps={exps}"]
    assert tensor_over_algebra(R, R).dim == GOLDENS["tensor_dim"][f"A(x)A p={p} exps={exps}"]
    assert tensor_over_algebra(F, F).dim == A.dim ** 3


def test_fast_tensor_path_agrees_with_rref():
    A = elementary_abelian(2, 2)
    rng = np.random.default_rng(11)
    for _ in range(4):
        X, Y = random_lrp_bimodule(A, rng), random_lrp_bimodule(A, rng)
        fast, slow = tensor_quotient(X, Y), tensor_quotient(X, Y, method="rref")
        assert fast.bimodule.dim == slow.bimodule.dim
        assert np.array_equal(ffmat.mul(fast.proj, fast.sec, 2), np.eye(fast.bimodule.dim, dtype=int))
        I = ffmat.identity
        rel = np.hstack([(np.kron(V, I(Y.dim)) - np.kron(I(X.dim), U)) % 2
                         for V, U in zip(X.right_actions, Y.left_actions)])
        assert not ffmat.mul(fast.proj, rel, 2).any()
        assert is_isomorphic(fast.bimodule.inner, slow.bimodule.inner)


def test_tensor_dim_oracle_on_random_pair():
    A = elementary_abelian(3, 1)
    rng = np.random.default_rng(2)
    X, Y = random_lrp_bimodule(A, rng), random_lrp_bimodule(A, rng)
    rows = np.hstack([(np.kron(V, np.eye(Y.dim, dtype=int)) - np.kron(np.eye(X.dim, dtype=int), U)) % 3
                      for V, U in zip(X.right_actions, Y.left_actions)])
    assert tensor_over_algebra(X, Y).dim == X.dim * Y.dim - rank_mod_p(rows.T, 3)


def test_unitors_and_associator_are_mutually_inverse():
    A = elementary_abelian(3, 1)
    rng = np.random.default_rng(4)
    X, Y, Z = (random_lrp_bimodule(A, rng) for _ in range(3))
    R = regular_bimodule(A)
    t = tensor_quotient(R, X)
    lu, lui = left_unitor(t), left_unitor_inverse(t)
    assert np.array_equal(ffmat.mul(lu, lui, 3), np.eye(X.dim, dtype=int))
    assert bimodule_map_ok(lu, t.bimodule, X)
    assert right_unitor(tensor_quotient(X, R)).shape == (X.dim, X.dim)
    xy, yz = tensor_quotient(X, Y), tensor_quotient(Y, Z)
    xy_z, x_yz = tensor_quotient(xy.bimodule, Z), tensor_quotient(X, yz.bimodule)
    a = associator(xy, xy_z, yz, x_yz)
    ai = associator_inverse(xy, xy_z, yz, x_yz)
    assert np.array_equal(ffmat.mul(ai, a, 3), np.eye(a.shape[1], dtype=int))
    assert bimodule_map_ok(a, xy_z.bimodule, x_yz.bimodule)


def test_tensor_maps_functorial():
    A = elementary_abelian(2, 1)
    rng = np.random.default_rng(8)
    X, Y = random_lrp_bimodule(A, rng), random_lrp_bimodule(A, rng)
    t = tensor_quotient(X, Y)
    idt = tensor_maps(np.eye(X.dim, dtype=int), np.eye(Y.dim, dtype=int), t, t)
    assert np.array_equal(idt, np.eye(t.bimodule.dim, dtype=int))


@pytest.mark.parametrize("p", [2, 3])
def test_duals_and_zigzags(p):
    A = elementary_abelian(p, 1)
    rng = np.random.default_rng(p)
    objs = [regular_bimodule(A), free_bimodule(A),
            twisted_bimodule(random_automorphism(A, rng), Automorphism.identity(A))]
    objs += [random_lrp_bimodule(A, rng) for _ in range(3)]
    for B in objs:
        res = verify_zigzag(B)
        assert res.ok, res.failing
        assert set(zigzag_composites(B)) and len(zigzag_composites(B)) == 4
        assert is_isomorphic(right_dual(left_dual(B)).inner, B.inner)
        assert is_lrp(left_dual(B)) and is_lrp(right_dual(B))


def test_dual_of_twisted_is_inverse_twist():
    A = elementary_abelian(5, 1)
    I = Automorphism.identity(A)
    a = scalar_automorphism(A, 2)
    D = left_dual(twisted_bimodule(I, a))
    assert is_isomorphic(D.inner, twisted_bimodule(I, a.inverse()).inner)


def test_dual_rejects_non_lrp():
    A = elementary_abelian(2, 1)
    with pytest.raises(ValueError):
        left_dual(trivial_bimodule(A))


def test_hom_tensor_iso():
    A = elementary_abelian(3, 1)
    rng = np.random.default_rng(6)
    B, C = random_lrp_bimodule(A, rng), random_lrp_bimodule(A, rng)
    assert hom_tensor_iso_check(B, C)
    assert hom_tensor_iso_check(regular_bimodule(A), C)


def test_twists_and_forgetful_views():
    A = elementary_abelian(2, 2)
    phi = automorphism_from_linear(A, [[0, 1], [1, 0]])
    I = Automorphism.identity(A)
    B = twisted_bimodule(phi, I)
    assert is_projective(forget_left(B)) and is_projective(forget_right(B))
    assert is_isomorphic(twisted_bimodule(phi, phi).inner, regular_bimodule(A).inner)
    assert not is_isomorphic(B.inner, regular_bimodule(A).inner)
    S = direct_sum_bimodules(B, regular_bimodule(A))
    assert S.dim == 8 and is_lrp(S)
    P = np.eye(4, dtype=int)[::-1]
    assert is_isomorphic(conjugate_bimodule(B, P).inner, B.inner)


def test_bimodule_json_round_trip():
    from lrpkit.io import bimodule_from_json, dumps
    A = elementary_abelian(3, 1)
    B = random_lrp_bimodule(A, np.random.default_rng(0))
    s = dumps(B.to_json())
    B2 = bimodule_from_json(json.loads(s))
    assert dumps(B2.to_json()) == s
    assert B2.base == A and B2.inner.same_as(B.inner)


def test_base_mismatch_raises():
    with pytest.raises(ValueError):
        tensor_over_algebra(regular_bimodule(elementary_abelian(2, 1)), regular_bimodule(elementary_abelian(3, 1)))


def test_env_is_enveloping():
    A = elementary_abelian(2, 1)
    assert regular_bimodule(A).env == enveloping(A)
