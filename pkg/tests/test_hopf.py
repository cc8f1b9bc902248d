import numpy as np
import pytest

from lrpkit.algebra import Automorphism, elementary_abelian, hopf_structure
from lrpkit.bimodule import free_bimodule, is_lrp, regular_bimodule, twisted_bimodule
from lrpkit.corpus import random_automorphism, random_lrp_bimodule
from lrpkit.hopf import (G, check_F_monoidal, check_GF_identity, delta_embedding, delta_embedding_w,
                         functor_F, functor_F_literal, gf_counit, sincerity_witness)
from lrpkit.module import (free_module, is_isomorphic, is_projective, jordan_module, random_module,
                           regular_module, trivial_module)


@pytest.mark.parametrize("p,n", [(2, 1), (3, 1), (2, 2)])
def test_delta_is_algebra_map(p, n):
    H = hopf_structure(elementary_abelian(p, n))
    assert delta_embedding(H).shape == (H.dim ** 2, H.dim)
    assert delta_embedding_w(H).shape == (H.dim ** 2, H.dim)


def test_F_of_trivial_is_regular_bimodule():
    A = elementary_abelian(3, 1)
    assert is_isomorphic(functor_F(trivial_module(A)).inner, regular_bimodule(A).inner)


def test_F_of_regular_is_free_bimodule():
    A = elementary_abelian(2, 1)
    assert is_isomorphic(functor_F(regular_module(A)).inner, free_bimodule(A).inner)


@pytest.mark.parametrize("p", [2, 3])
def test_F_matches_literal_induction_and_G_inverts(p):
    A = elementary_abelian(p, 1)
    for s in range(1, p + 1):
        M = jordan_module(A, s)
        F = functor_F(M)
        assert is_lrp(F)
        assert is_isomorphic(F.inner, functor_F_literal(M).inner)
        r = check_GF_identity(M)
        assert r.isomorphic and r.comparison_ok
        assert gf_counit(M).shape == (M.dim, M.dim)


def test_F_monoidal_over_klein_four():
    A = elementary_abelian(2, 2)
    rng = np.random.default_rng(0)
    M, N = random_module(A, 2, rng), random_module(A, 3, rng)
    assert check_F_monoidal(M, N)
    assert check_F_monoidal(trivial_module(A), N)


def test_G_of_twisted_is_trivial_and_G_of_free_is_free():
    A = elementary_abelian(3, 1)
    rng = np.random.default_rng(1)
    a = random_automorphism(A, rng)
    assert G(twisted_bimodule(a, Automorphism.identity(A))).dim == 1
    Gf = G(free_bimodule(A, 2))
    assert is_isomorphic(Gf, free_module(A, 2))


def test_sincerity_on_random_and_standard():
    A = elementary_abelian(2, 2)
    rng = np.random.default_rng(2)
    for B in [random_lrp_bimodule(A, rng) for _ in range(4)] + [free_bimodule(A), regular_bimodule(A)]:
        assert sincerity_witness(B)
        assert is_projective(B.inner) == is_projective(G(B))
