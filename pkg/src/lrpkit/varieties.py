"""Rank varieties over k(Z/p)^n at F_p-rational points.

A point [a_1 : ... : a_m] acts on a module through X = sum a_i w_i, where w_i
are the generators (g_i - 1 for modules, then u_1..u_n, v_1..v_n for
bimodules).  The point lies in the variety when the module is not free over
k[X]/(X^p).  Only points with coordinates in F_p are enumerated, so this is
the rational-point shadow of the variety over the algebraic closure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import ffmat
from .algebra import Algebra
from .bimodule import Bimodule, is_lrp
from .module import Module, tensor_over_field


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    """Point of P^m(F_p), normalised so the first nonzero coordinate is 1."""

    coords: tuple[int, ...]
    p: int = 0

    @classmethod
    def make(cls, coords, p: int) -> "ProjectivePoint":
        c = [int(x) % p for x in coords]
        nz = [x for x in c if x]
        if not nz:
            raise ValueError("the zero vector is not a projective point")
        inv = pow(nz[0], -1, p)
        return cls(tuple((x * inv) % p for x in c), p)

    def __len__(self):
        return len(self.coords)

    def __str__(self):
        return "[" + ":".join(str(x) for x in self.coords) + "]"


def projective_points(m: int, p: int) -> list[ProjectivePoint]:
    """All points of P^m(F_p) in lexicographic order."""
    out = []
    for lead in range(m + 1):
        for tail in itertools.product(range(p), repeat=m - lead):
            out.append(ProjectivePoint((0,) * lead + (1,) + tail, p))
    return sorted(out)


@dataclass(frozen=True)
class RankVariety:
    p: int
    ambient_dim: int
    points: tuple[ProjectivePoint, ...]

    def __post_init__(self):
        pts = tuple(sorted(set(self.points)))
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def __contains__(self, pt) -> bool:
        return pt in self.points

    @property
    def is_empty(self) -> bool:
        return not self.points

    def __and__(self, other: "RankVariety") -> "RankVariety":
        return RankVariety(self.p, self.ambient_dim, tuple(set(self.points) & set(other.points)))

    def __or__(self, other: "RankVariety") -> "RankVariety":
        return RankVariety(self.p, self.ambient_dim, tuple(set(self.points) | set(other.points)))

    def to_json(self) -> dict:
        return {"p": self.p, "ambient": self.ambient_dim,
                "points": [list(pt.coords) for pt in self.points]}

    @classmethod
    def from_json(cls, d: dict) -> "RankVariety":
        p = int(d["p"])
        return cls(p, int(d["ambient"]), tuple(ProjectivePoint.make(c, p) for c in d["points"]))


def _check_elementary_abelian(A: Algebra) -> None:
    if not A.is_elementary_abelian:
        raise ValueError("rank varieties need an elementary abelian group algebra k(Z/p)^n "
                         "or its enveloping algebra")


def _as_module(M) -> Module:
    return M.inner if isinstance(M, Bimodule) else M


def shifted_unit_action(M, pt) -> np.ndarray:
    """X = sum pt_i * action(gen_i); X^p = 0 is asserted."""
    M = _as_module(M)
    return _combine(M.actions, pt, M.dim, M.p)


def _combine(actions, pt, dim: int, p: int) -> np.ndarray:
    coords = pt.coords if isinstance(pt, ProjectivePoint) else tuple(pt)
    if len(coords) != len(actions):
        raise ValueError(f"point has {len(coords)} coordinates, module has {len(actions)} generators")
    X = ffmat.zeros(dim, dim)
    for c, a in zip(coords, actions):
        X = X + int(c) * a
    X %= p
    if dim and ffmat.matpow(X, p, p).any():
        raise AssertionError("shifted unit action is not p-nilpotent")
    return X


def is_free_restriction(X: np.ndarray, p: int) -> bool:
    """All Jordan blocks of the nilpotent X have size p."""
    n = X.shape[0]
    if n == 0:
        return True
    if n % p or ffmat.matpow(X, p, p).any():
        return False
    return ffmat.rank(ffmat.matpow(X, p - 1, p), p) == n // p


def rank_variety(M) -> RankVariety:
    """Rational points of the rank variety of a module or bimodule."""
    M = _as_module(M)
    A = M.algebra
    _check_elementary_abelian(A)
    return variety_from_actions(M.actions, A.p)


def variety_from_actions(actions, p: int) -> RankVariety:
    """Rank variety from generator matrices alone (commuting, p-nilpotent, w-generators of
    an elementary abelian group algebra, possibly doubled for a bimodule).

    This skips building the algebra, which matters for enveloping algebras of
    dimension in the hundreds.
    """
    actions = [np.asarray(a, dtype=np.int64) % p for a in actions]
    dim = actions[0].shape[0] if actions else 0
    m = len(actions) - 1
    pts = [pt for pt in projective_points(m, p)
           if not is_free_restriction(_combine(actions, pt, dim, p), p)]
    return RankVariety(p, m, tuple(pts))


def graph_variety(phi: np.ndarray, p: int, sign: int = -1) -> RankVariety:
    """{[a : b] : phi(a) = sign * b} inside P^{2n-1}(F_p)."""
    phi = np.asarray(phi, dtype=np.int64) % p
    n = phi.shape[0]
    pts = []
    for pt in projective_points(2 * n - 1, p):
        a = np.array(pt.coords[:n])
        b = np.array(pt.coords[n:])
        if np.array_equal((phi @ a) % p, (sign * b) % p):
            pts.append(pt)
    return RankVariety(p, 2 * n - 1, tuple(pts))


def cyclic_twist_point(gamma: int, p: int) -> ProjectivePoint:
    """The single point [-1/gamma : 1] of the variety of the gamma-twisted bimodule."""
    return ProjectivePoint.make([(-pow(gamma, -1, p)) % p, 1], p)


def lrp_consistency_check(B: Bimodule) -> bool:
    """For lrp B, no variety point has a vanishing left block or a vanishing right block."""
    _check_elementary_abelian(B.env)
    if not is_lrp(B):
        return True
    n = len(B.base.generators)
    for pt in rank_variety(B).points:
        if not any(pt.coords[:n]) or not any(pt.coords[n:]):
            return False
    return True


def tensor_product_property_check(M: Module, N: Module) -> bool:
    """V(M (x)_k N) = V(M) & V(N) at rational points."""
    return rank_variety(tensor_over_field(M, N)) == (rank_variety(M) & rank_variety(N))


__all__ = ["ProjectivePoint", "RankVariety", "projective_points", "shifted_unit_action",
           "is_free_restriction", "rank_variety", "variety_from_actions", "graph_variety", "cyclic_twist_point",
           "lrp_consistency_check", "tensor_product_property_check"]
