import json
from pathlib import Path

import numpy as np
import pytest

from lrpkit.algebra import Automorphism, automorphism_from_linear, elementary_abelian, scalar_automorphism
from lrpkit.bimodule import regular_bimodule, twisted_bimodule
from lrpkit.corpus import point_module, random_group_module, random_lrp_bimodule
from lrpkit.module import (direct_sum, is_projective, jordan_module, regular_module, syzygy,
                           trivial_module)
from lrpkit.varieties import (ProjectivePoint, RankVariety, cyclic_twist_point, graph_variety,
                              is_free_restriction, lrp_consistency_check, projective_points,
                              rank_variety, shifted_unit_action, tensor_product_property_check)

from . import oracles

GOLDENS = json.loads((Path(__file__).parent / "data" / "goldens.json").read_text())["variety"]


def _pts(V):
    return [list(pt.coords) for pt in V.points]


@pytest.mark.parametrize("m,p", [(1, 2), (1, 5), (3, 2), (2, 3)])
def test_projective_point_count(m, p):
    pts = projective_points(m, p)
    assert len(pts) == (p ** (m + 1) - 1) // (p - 1)
    assert [pt.coords for pt in pts] == oracles.normalized_points(m, p)


def test_point_normalisation():
    pt = ProjectivePoint.make([0, 2, 4], 5)
    assert pt.coords == (0, 1, 2) and str(pt) == "[0:1:2]"
    with pytest.raises(ValueError):
        ProjectivePoint.make([0, 0], 3)


@pytest.mark.parametrize("p", [3, 5])
def test_cyclic_twists_match_goldens(p):
    A = elementary_abelian(p, 1)
    I = Automorphism.identity(A)
    for g in range(1, p):
        V = rank_variety(twisted_bimodule(scalar_automorphism(A, g), I))
        assert _pts(V) == GOLDENS[f"cyclic p={p} gamma={g}"]
        assert V.points == (cyclic_twist_point(g, p),)


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("name,phi", [("identity", [[1, 0], [0, 1]]), ("swap", [[0, 1], [1, 0]]),
                                      ("upper", [[1, 1], [0, 1]])])
def test_elementary_twists_match_goldens(p, name, phi):
    A = elementary_abelian(p, 2)
    V = rank_variety(twisted_bimodule(automorphism_from_linear(A, phi), Automorphism.identity(A)))
    assert _pts(V) == GOLDENS[f"elementary p={p} {name}"]
    assert V == graph_variety(np.array(phi), p, sign=-1)


def test_regular_bimodule_variety_is_antidiagonal():
    # identity twist: the graph of a -> -a
    A = elementary_abelian(3, 1)
    assert _pts(rank_variety(regular_bimodule(A))) == [[1, 2]]


@pytest.mark.parametrize("p", [2, 3])
def test_module_varieties_match_oracle(p):
    A = elementary_abelian(p, 2)
    rng = np.random.default_rng(p)
    for _ in range(6):
        M = random_group_module(A, rng)
        assert _pts(rank_variety(M)) == [list(x) for x in oracles.variety(M.actions, p)]


def test_basic_varieties():
    A = elementary_abelian(2, 2)
    assert rank_variety(regular_module(A)).is_empty
    assert len(rank_variety(trivial_module(A))) == 3
    V = rank_variety(point_module(A, [1, 1]))
    assert V.points == (ProjectivePoint.make([1, 1], 2),)
    J = jordan_module(A, 2, 0)
    assert rank_variety(J).points == (ProjectivePoint.make([0, 1], 2),)


def test_variety_invariants():
    A = elementary_abelian(3, 2)
    rng = np.random.default_rng(9)
    mods = [random_group_module(A, rng) for _ in range(4)]
    for M, N in zip(mods, mods[1:]):
        assert rank_variety(direct_sum(M, N)) == rank_variety(M) | rank_variety(N)
        assert tensor_product_property_check(M, N)
    for M in mods:
        assert rank_variety(M).is_empty == is_projective(M)
        assert rank_variety(syzygy(M)) == rank_variety(M)


def test_lrp_consistency():
    A = elementary_abelian(2, 2)
    rng = np.random.default_rng(3)
    for _ in range(3):
        assert lrp_consistency_check(random_lrp_bimodule(A, rng))


def test_free_restriction_and_nilpotence_guard():
    assert is_free_restriction(np.array([[0, 0], [1, 0]]), 2)
    assert not is_free_restriction(np.zeros((2, 2), dtype=int), 2)
    A = elementary_abelian(2, 1)
    with pytest.raises(ValueError):
        shifted_unit_action(trivial_module(A), [1, 0])


def test_variety_json_and_set_ops():
    V = RankVariety(2, 1, (ProjectivePoint.make([1, 1], 2), ProjectivePoint.make([0, 1], 2)))
    W = RankVariety.from_json(json.loads(json.dumps(V.to_json())))
    assert W == V and W.to_json() == V.to_json()
    assert len(V & RankVariety(2, 1, (ProjectivePoint.make([1, 1], 2),))) == 1


def test_non_elementary_abelian_rejected():
    from lrpkit.algebra import truncated_polynomial_algebra
    A = truncated_polynomial_algebra(2, [4])
    with pytest.raises(ValueError):
        rank_variety(trivial_module(A))
