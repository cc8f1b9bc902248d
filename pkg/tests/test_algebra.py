import itertools

import numpy as np
import pytest

from lrpkit import ffmat
from lrpkit.algebra import (Automorphism, automorphism_from_images, automorphism_from_linear,
                            elementary_abelian, enveloping, group_algebra_abelian, hopf_structure,
                            is_unipotent, monomial_index, opposite, scalar_automorphism,
                            table_algebra, truncated_polynomial_algebra)


@pytest.mark.parametrize("p,exps", [(2, [2]), (3, [3]), (2, [2, 2]), (2, [4]), (3, [3, 3]), (5, [5])])
def test_truncated_basics(p, exps):
    A = truncated_polynomial_algebra(p, exps)
    assert A.dim == int(np.prod(exps))
    assert A.is_local and A.is_commutative and A.is_selfinjective
    assert is_unipotent(A)
    # associativity on the full structure constants
    lhs = np.einsum("ijk,klm->ijlm", A.mult, A.mult) % p
    rhs = np.einsum("jlk,ikm->ijlm", A.mult, A.mult) % p
    assert np.array_equal(lhs, rhs)
    u = A.unit()
    for i in range(A.dim):
        e = A.basis_vector(i)
        assert np.array_equal(A.product(u, e), e) and np.array_equal(A.product(e, u), e)
    assert A.socle.shape[1] == 1


def test_monomial_product():
    A = truncated_polynomial_algebra(3, [3, 3])
    x, y = monomial_index(A, (1, 0)), monomial_index(A, (0, 1))
    xy = A.product(A.basis_vector(x), A.basis_vector(y))
    assert np.array_equal(xy, A.basis_vector(monomial_index(A, (1, 1))))
    x2 = A.product(A.basis_vector(x), A.basis_vector(x))
    assert not A.product(x2, A.basis_vector(x)).any()


def test_radical_filtration():
    A = truncated_polynomial_algebra(2, [2, 2])
    assert A.ideal_power_dims() == [3, 1, 0]


@pytest.mark.parametrize("p,n", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_group_algebra_hopf_axioms(p, n):
    H = hopf_structure(elementary_abelian(p, n))
    assert H.verify()
    assert H.dim == p ** n


def test_group_algebra_noncyclic_factors():
    H = group_algebra_abelian(2, [4, 2])
    assert H.verify() and H.dim == 8


def test_enveloping_and_opposite():
    A = truncated_polynomial_algebra(2, [2, 2])
    E = enveloping(A)
    assert E.dim == 16 and is_unipotent(E)
    assert opposite(A).dim == A.dim
    assert E == enveloping(truncated_polynomial_algebra(2, [2, 2]))


def test_noncommutative_table_algebra_env_unipotent():
    # k<x,y>/(x^2, y^2, yx) : basis 1, x, y, xy
    p = 2
    d = 4
    m = np.zeros((d, d, d), dtype=int)
    prod = {(0, j): j for j in range(d)}
    prod.update({(j, 0): j for j in range(d)})
    prod[(1, 2)] = 3
    for (i, j), k in prod.items():
        m[i, j, k] = 1
    A = table_algebra(p, m, 0, [1, 2], [1, 0, 0, 0], labels=["1", "x", "y", "xy"])
    assert not A.is_commutative
    assert is_unipotent(A) and is_unipotent(enveloping(A))


def test_idempotent_breaks_unipotence():
    # basis 1, e with e^2 = e and augmentation killing e
    m = np.zeros((2, 2, 2), dtype=int)
    m[0, 0, 0] = m[0, 1, 1] = m[1, 0, 1] = m[1, 1, 1] = 1
    A = table_algebra(3, m, 0, [1], [1, 0], labels=["1", "e"])
    assert not is_unipotent(A)
    assert not A.is_local


@pytest.mark.parametrize("p", [3, 5])
def test_scalar_automorphisms_compose(p):
    A = elementary_abelian(p, 1)
    for a, b in itertools.product(range(1, p), repeat=2):
        lhs = scalar_automorphism(A, a) @ scalar_automorphism(A, b)
        assert lhs == scalar_automorphism(A, a * b % p)
    assert scalar_automorphism(A, 1).is_identity


def test_automorphism_inverse_and_rejects_bad_maps():
    A = elementary_abelian(2, 2)
    phi = automorphism_from_linear(A, [[1, 1], [0, 1]])
    assert (phi @ phi.inverse()).is_identity
    with pytest.raises(ValueError):
        automorphism_from_linear(A, [[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        automorphism_from_images(A, [A.unit(), A.basis_vector(A.generators[1])])


def test_nonlinear_automorphism():
    A = truncated_polynomial_algebra(3, [3])
    w = A.basis_vector(A.generators[0])
    w2 = A.product(w, w)
    phi = automorphism_from_images(A, [(2 * w + w2) % 3])
    phi.validate()
    assert ffmat.is_invertible(phi.matrix, 3)
    assert Automorphism.identity(A) @ phi == phi


def test_json_is_deterministic():
    from lrpkit.io import algebra_from_json, dumps
    for A in (elementary_abelian(3, 2), enveloping(elementary_abelian(2, 1)),
              truncated_polynomial_algebra(2, [4, 2])):
        s = dumps(A.to_json())
        B = algebra_from_json(A.to_json())
        assert B == A and dumps(B.to_json()) == s


def test_invalid_inputs():
    with pytest.raises(ValueError):
        truncated_polynomial_algebra(4, [2])
    with pytest.raises(ValueError):
        truncated_polynomial_algebra(2, [0])
