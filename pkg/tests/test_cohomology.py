import json
from math import comb
from pathlib import Path

import numpy as np
import pytest

from lrpkit import ffmat
from lrpkit.algebra import (automorphism_from_linear, elementary_abelian, scalar_automorphism,
                            truncated_polynomial_algebra)
from lrpkit.bimodule import regular_bimodule
from lrpkit.cohomology import (GradedDims, aut_action_on_cohomology, chain_lift, ext_dims,
                               ext_dims_oracle, hochschild_dims, holm_check, minimal_resolution,
                               padded_resolution, standard_complex, standard_labels)
from lrpkit.module import jordan_module, regular_module, trivial_module

GOLDENS = json.loads((Path(__file__).parent / "data" / "goldens.json").read_text())

EXT_CASES = [(2, [2], 6), (3, [3], 6), (2, [2, 2], 4), (3, [3, 3], 3), (2, [4], 4)]


@pytest.mark.parametrize("p,exps,d", EXT_CASES)
def test_ext_k_k_matches_goldens(p, exps, d):
    A = truncated_polynomial_algebra(p, exps)
    k = trivial_module(A)
    assert list(ext_dims(k, k, d)) == GOLDENS["ext_k_k"][f"p={p} exps={exps}"]


@pytest.mark.parametrize("p,exps,d", [(2, [2], 6), (3, [3], 4), (2, [2, 2], 3)])
def test_hochschild_matches_goldens(p, exps, d):
    A = truncated_polynomial_algebra(p, exps)
    assert list(hochschild_dims(A, d)) == GOLDENS["hochschild"][f"p={p} exps={exps}"]


def test_env_resolution_of_k():
    E = regular_bimodule(elementary_abelian(2, 1)).env
    k = trivial_module(E)
    R = minimal_resolution(k, 3)
    assert list(R.ranks) == GOLDENS["ext_k_k"]["env p=2 exps=[2]"]


@pytest.mark.parametrize("p,n", [(2, 1), (3, 2), (5, 1), (2, 2)])
def test_resolutions_exact_minimal_and_padded(p, n):
    A = elementary_abelian(p, n)
    k = trivial_module(A)
    R = minimal_resolution(k, 4)
    P = padded_resolution(k, 4, extra=2, seed=3)
    S = standard_complex(A, 4)
    assert R.is_exact() and R.is_minimal() and R.is_module_map()
    assert P.is_exact() and not P.is_minimal()
    assert S.is_exact() and S.is_minimal() and S.ranks == R.ranks
    assert list(R.ranks) == [comb(i + n - 1, n - 1) for i in range(5)]
    assert ext_dims(k, k, 3) == ext_dims_oracle(k, k, 3, seed=5)


def test_ext_of_jordan_blocks():
    A = elementary_abelian(3, 1)
    J = jordan_module(A, 2)
    k = trivial_module(A)
    assert list(ext_dims(J, k, 4)) == [1] * 5
    assert list(ext_dims(regular_module(A), k, 3)) == [1, 0, 0, 0]
    assert list(ext_dims(J, J, 3)) == list(ext_dims_oracle(J, J, 3))


def test_holm():
    assert holm_check(elementary_abelian(2, 1), 6)
    assert holm_check(elementary_abelian(3, 1), 4)
    assert holm_check(elementary_abelian(2, 2), 3)
    with pytest.raises(ValueError):
        holm_check(truncated_polynomial_algebra(2, [2, 4]), 2)


def test_standard_labels_order():
    assert standard_labels(2, 2) == [(2, 0), (1, 1), (0, 2)]


def test_swap_transposes_degree_one():
    A = elementary_abelian(2, 2)
    T = aut_action_on_cohomology(automorphism_from_linear(A, [[0, 1], [1, 0]]), 1)
    assert np.array_equal(T, [[0, 1], [1, 0]])


@pytest.mark.parametrize("c", [2])
def test_diagonal_scalar(c):
    p = 3
    A = elementary_abelian(p, 2)
    T = aut_action_on_cohomology(automorphism_from_linear(A, [[c, 0], [0, 1]]), 1)
    assert int(T[0, 0]) in (c, pow(c, -1, p)) and T[0, 0] != 1
    assert T[1, 1] == 1 and T[0, 1] == 0 and T[1, 0] == 0


def test_scalar_action_by_degree_cyclic():
    p = 5
    A = elementary_abelian(p, 1)
    for c in range(2, p):
        ci = pow(c, -1, p)
        got = [int(aut_action_on_cohomology(scalar_automorphism(A, c), d)[0, 0]) for d in range(1, 5)]
        assert got == [ci, ci, ci * ci % p, ci * ci % p]


def test_action_is_multiplicative():
    p = 3
    A = elementary_abelian(p, 2)
    a = automorphism_from_linear(A, [[1, 1], [0, 1]])
    b = automorphism_from_linear(A, [[2, 0], [1, 1]])
    for d in (1, 2, 3):
        lhs = aut_action_on_cohomology(a @ b, d)
        rhs = ffmat.mul(aut_action_on_cohomology(a, d), aut_action_on_cohomology(b, d), p)
        assert np.array_equal(lhs, rhs)


def test_chain_lift_is_chain_map():
    A = elementary_abelian(2, 2)
    psi = automorphism_from_linear(A, [[1, 1], [0, 1]])
    R = standard_complex(A, 3)
    assert len(chain_lift(psi, R, 3)) == 4


def test_graded_dims_guard_and_json():
    assert GradedDims((1, 2)).to_json() == {"dims": [1, 2]}
    with pytest.raises(ValueError):
        GradedDims((1, -1))
