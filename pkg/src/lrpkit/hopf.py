"""The induction functor F from A-modules to A-bimodules and its left inverse G,
for A the group algebra of a finite abelian p-group (w-presentation).

F(M) lives on M (x) A with
    a . (m (x) b) = sum a1 m (x) a2 b,        (m (x) b) . a = m (x) b a,
and G(B) = B (x)_A k is B modulo the right action of the augmentation ideal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import ffmat
from .algebra import Algebra, HopfAlgebra, enveloping, hopf_structure
from .bimodule import Bimodule, is_lrp, tensor_over_algebra
from .ffmat import mul
from .module import Module, is_isomorphic, is_projective, quotient_module, tensor_over_field


def delta_embedding(H: HopfAlgebra) -> np.ndarray:
    """delta(g) = g (x) g^-1 on the group basis, as a (d^2, d) matrix into env(group algebra).

    Raises ValueError when the result is not an algebra map.
    """
    d = H.dim
    p = H.p
    S = H.antipode
    delta = np.zeros((d * d, d), dtype=np.int64)
    for i in range(d):
        j = int(np.flatnonzero(S[:, i])[0])
        delta[i * d + j, i] = 1
    _check_algebra_map(delta, H.algebra, enveloping(H.algebra), p)
    return delta


def delta_embedding_w(H: HopfAlgebra) -> np.ndarray:
    """The same map in w-coordinates on both sides: delta = (1 (x) S) o Delta."""
    p = H.p
    C = H.to_w
    out = mul(mul(ffmat.kronecker(C, C, p), delta_embedding(H), p), H.from_w, p)
    _check_algebra_map(out, H.truncated, enveloping(H.truncated), p)
    return out


def _check_algebra_map(f: np.ndarray, src: Algebra, dst: Algebra, p: int) -> None:
    if not np.array_equal(f[:, src.unit_index], dst.unit()):
        raise ValueError("delta does not preserve the unit")
    d = src.dim
    for i in range(d):
        for j in range(d):
            lhs = mul(f, src.mult[i, j].reshape(-1, 1), p).reshape(-1)
            rhs = dst.product(f[:, i], f[:, j])
            if not np.array_equal(lhs, rhs):
                raise ValueError("delta is not multiplicative")


def functor_F(M: Module) -> Bimodule:
    """F(M) on M (x) A (index m * dimA + b) via the coproduct formula."""
    A = M.algebra
    H = hopf_structure(A)
    p, d = A.p, A.dim
    D = H.comultiplication_w
    I_M = ffmat.identity(M.dim)
    left = []
    for g in A.generators:
        coeffs = D[:, g].reshape(d, d)
        X = ffmat.zeros(M.dim * d, M.dim * d)
        for j, k in zip(*np.nonzero(coeffs)):
            X = X + coeffs[j, k] * ffmat.kron(M.basis_actions[j], A.left_regular[k])
        left.append(X % p)
    right = [ffmat.kron(I_M, A.right_regular[g]) % p for g in A.generators]
    return Bimodule.from_actions(A, left, right, check=False)


def functor_F_literal(M: Module) -> Bimodule:
    """A^env (x)_{delta(A)} M, built as a quotient of A^env (x)_k M."""
    A = M.algebra
    H = hopf_structure(A)
    E = enveloping(A)
    p = A.p
    e = E.dim
    delta = delta_embedding_w(H)
    I_M = ffmat.identity(M.dim)
    I_E = ffmat.identity(e)
    # x . delta(g) (x) m - x (x) g m
    rels = [(ffmat.kron(E.right_mult(delta[:, g]), I_M) - ffmat.kron(I_E, M.basis_actions[g])) % p
            for g in A.generators]
    W = np.hstack(rels)
    Q, proj, sec = quotient_module(Module(E, e * M.dim, tuple(ffmat.kron(E.left_regular[g], I_M) % p
                                                              for g in E.generators), check=False), W)
    return Bimodule(A, Q)


def functor_G(B: Bimodule) -> tuple[Module, np.ndarray, np.ndarray]:
    """G(B) = B / (B . rad A), with its projection and section."""
    A = B.base
    n = B.dim
    W = np.hstack(B.right_actions) if B.right_actions else ffmat.zeros(n, 0)
    left = Module(A, n, B.left_actions, check=False)
    return quotient_module(left, W)


def G(B: Bimodule) -> Module:
    return functor_G(B)[0]


def gf_counit(M: Module) -> np.ndarray:
    """The comparison G(F(M)) -> M induced by m (x) b -> eps(b) m."""
    A = M.algebra
    p = A.p
    _, proj, sec = functor_G(functor_F(M))
    full = ffmat.kron(ffmat.identity(M.dim), A.augmentation.reshape(1, -1)) % p
    return mul(full, sec, p)


@dataclass(frozen=True)
class GFReport:
    isomorphic: bool | None
    comparison_ok: bool

    def __bool__(self):
        return bool(self.isomorphic) and self.comparison_ok


def check_GF_identity(M: Module, seed: int = 0) -> GFReport:
    """G(F(M)) is isomorphic to M through the explicit counit map."""
    GF = G(functor_F(M))
    c = gf_counit(M)
    p = M.p
    ok = ffmat.is_invertible(c, p) and all(
        np.array_equal(mul(c, a, p), mul(b, c, p)) for a, b in zip(GF.actions, M.actions))
    return GFReport(is_isomorphic(GF, M, seed=seed), ok)


def check_F_monoidal(M: Module, N: Module, seed: int = 0) -> bool | None:
    """F(M (x)_k N) versus F(M) (x)_A F(N)."""
    lhs = functor_F(tensor_over_field(M, N))
    rhs = tensor_over_algebra(functor_F(M), functor_F(N))
    return is_isomorphic(lhs.inner, rhs.inner, seed=seed)


def sincerity_witness(B: Bimodule) -> bool:
    """env-projectivity of B agrees with projectivity of G(B)."""
    if not is_lrp(B):
        raise ValueError("bimodule is not left-right projective")
    return is_projective(B.inner) == is_projective(G(B))


__all__ = ["delta_embedding", "delta_embedding_w", "functor_F", "functor_F_literal",
           "functor_G", "G", "gf_counit", "check_GF_identity", "check_F_monoidal",
           "sincerity_witness"]
