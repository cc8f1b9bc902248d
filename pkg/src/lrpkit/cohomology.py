"""Ext and Hochschild cohomology dimensions over local algebras.

Resolutions are stored as free modules A^{r_i} (vector index i * dimA + b for
b . e_i) with full differential matrices.  Two constructions exist: iterated
minimal covers, and covers padded with random extra generators, which serve
as an independent cross-check since cohomology does not see the choice.

For truncated polynomial algebras the tensor product of the periodic
resolutions of k gives the standard complex with basis e_J, J = (j_1..j_n);
the automorphism action on Ext^*(k, k) is read off from a semilinear chain
lift along it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import ffmat
from .algebra import Algebra, Automorphism, is_unipotent
from .bimodule import regular_bimodule
from .ffmat import mul
from .module import (Module, free_module, module_from_basis_actions, projective_cover,
                     submodule, trivial_module)

DEFAULT_DEGREE = 6


@dataclass(frozen=True)
class GradedDims:
    dims: tuple[int, ...]

    def __post_init__(self):
        if any(d < 0 for d in self.dims):
            raise ValueError("negative dimension")

    def __getitem__(self, i):
        return self.dims[i]

    def __len__(self):
        return len(self.dims)

    def __iter__(self):
        return iter(self.dims)

    def to_json(self) -> dict:
        return {"dims": list(self.dims)}


@dataclass(frozen=True, eq=False)
class Resolution:
    """... -> P_1 -> P_0 -> M with P_i = A^{ranks[i]}.

    ``differentials[i]`` is the matrix of P_i -> P_{i-1} for i >= 1 and
    ``differentials[0]`` is the augmentation P_0 -> M.
    """

    module: Module
    ranks: tuple[int, ...]
    differentials: tuple[np.ndarray, ...]
    labels: tuple[tuple, ...] = field(default=())

    @property
    def algebra(self) -> Algebra:
        return self.module.algebra

    @property
    def length(self) -> int:
        return len(self.ranks) - 1

    @property
    def terms(self) -> list[Module]:
        return [free_module(self.algebra, r) for r in self.ranks]

    def is_exact(self) -> bool:
        """Augmentation onto M, image = kernel in every interior degree."""
        p = self.algebra.p
        d0 = self.differentials[0]
        if ffmat.rank(d0, p) != self.module.dim:
            return False
        for i in range(1, len(self.differentials)):
            D, prev = self.differentials[i], self.differentials[i - 1]
            if D.size and mul(prev, D, p).any():
                return False
            kernel_dim = prev.shape[1] - ffmat.rank(prev, p)
            if ffmat.rank(D, p) != kernel_dim:
                return False
        return True

    def is_module_map(self) -> bool:
        A = self.algebra
        p = A.p
        terms = self.terms
        targets = [self.module] + terms[:-1]
        for D, src, tgt in zip(self.differentials, terms, targets):
            for a, b in zip(src.actions, tgt.actions):
                if not np.array_equal(mul(D, a, p), mul(b, D, p)):
                    return False
        return True

    def is_minimal(self) -> bool:
        """Every differential P_i -> P_{i-1} (i >= 1) lands in the radical."""
        A = self.algebra
        p = A.p
        for i in range(1, len(self.differentials)):
            D = self.differentials[i]
            if D.size == 0:
                continue
            gens = _generator_columns(A, self.ranks[i])
            blocks = D[:, gens].reshape(self.ranks[i - 1], A.dim, -1)
            if mul(A.augmentation.reshape(1, -1), blocks.transpose(1, 0, 2).reshape(A.dim, -1), p).any():
                return False
        return True


def _generator_columns(A: Algebra, r: int) -> list[int]:
    return [j * A.dim + A.unit_index for j in range(r)]


def _require_local(A: Algebra) -> None:
    if not A.is_local:
        raise ValueError("resolutions are implemented for local algebras only")


def minimal_resolution(M: Module, d: int = DEFAULT_DEGREE) -> Resolution:
    """Iterated projective covers, terms P_0..P_d."""
    return _resolve(M, d, extra=0, rng=None)


def padded_resolution(M: Module, d: int = DEFAULT_DEGREE, extra: int = 1, seed: int = 0) -> Resolution:
    """A non-minimal resolution: each cover carries ``extra`` surplus random generators."""
    return _resolve(M, d, extra=extra, rng=np.random.default_rng(seed))


def _resolve(M: Module, d: int, extra: int, rng) -> Resolution:
    A = M.algebra
    _require_local(A)
    p, dA = A.p, A.dim
    ranks, diffs = [], []
    current = M
    embed = ffmat.identity(M.dim)  # columns: current module inside the previous term
    for _ in range(d + 1):
        cov = projective_cover(current)
        cols = cov.matrix
        r = cov.rank
        if extra and current.dim:
            vecs = rng.integers(0, p, size=(current.dim, extra))
            more = np.einsum("jab,bi->aij", current.basis_actions, vecs).reshape(current.dim, extra * dA) % p
            cols = np.hstack([cols, more])
            r += extra
        if current.dim == 0:
            cols = ffmat.zeros(0, 0)
            r = 0
        ranks.append(r)
        diffs.append(mul(embed, cols, p) if cols.size else ffmat.zeros(embed.shape[0], r * dA))
        K = ffmat.kernel_basis(cols, p) if r else ffmat.zeros(0, 0)
        current = submodule(free_module(A, r), K) if r else current
        embed = K
    return Resolution(M, tuple(ranks), tuple(diffs))


def cochain_differentials(R: Resolution, N: Module) -> list[np.ndarray]:
    """Matrices of Hom(P_{i-1}, N) -> Hom(P_i, N), i = 1..length.

    Hom(A^r, N) is identified with N^r via the images of the generators.
    """
    A = R.algebra
    p, dA = A.p, A.dim
    NB = N.basis_actions
    out = []
    for i in range(1, len(R.ranks)):
        r, rprev = R.ranks[i], R.ranks[i - 1]
        D = R.differentials[i]
        if r == 0 or rprev == 0:
            out.append(ffmat.zeros(r * N.dim, rprev * N.dim))
            continue
        C = D[:, _generator_columns(A, r)].reshape(rprev, dA, r)
        blocks = np.einsum("kbj,bxy->jxky", C, NB) % p
        out.append(blocks.reshape(r * N.dim, rprev * N.dim))
    return out


def cohomology_dims(R: Resolution, N: Module, d: int) -> GradedDims:
    """dim H^i(Hom(P_., N)) for i = 0..d; needs a resolution of length >= d + 1."""
    if R.length < d + 1 and R.ranks[-1] != 0:
        raise ValueError("resolution too short")
    p = N.p
    delta = cochain_differentials(R, N)
    ranks = [ffmat.rank(D, p) for D in delta]
    dims = []
    for i in range(d + 1):
        cochains = R.ranks[i] * N.dim if i < len(R.ranks) else 0
        out_rank = ranks[i] if i < len(ranks) else 0
        in_rank = ranks[i - 1] if 0 < i <= len(ranks) else 0
        dims.append(cochains - out_rank - in_rank)
    return GradedDims(tuple(dims))


def ext_dims(M: Module, N: Module, d: int = DEFAULT_DEGREE) -> GradedDims:
    """dim Ext^i(M, N), i = 0..d, from the minimal resolution of M."""
    if M.algebra != N.algebra:
        raise ValueError("algebra mismatch")
    return cohomology_dims(minimal_resolution(M, d + 1), N, d)


def ext_dims_oracle(M: Module, N: Module, d: int = DEFAULT_DEGREE, extra: int = 1,
                    seed: int = 0) -> GradedDims:
    """Same dimensions from a padded (non-minimal) resolution."""
    return cohomology_dims(padded_resolution(M, d + 1, extra=extra, seed=seed), N, d)


def hochschild_dims(A: Algebra, d: int = DEFAULT_DEGREE) -> GradedDims:
    """dim HH^i(A) = dim Ext^i_{A^env}(A, A)."""
    if not is_unipotent(A):
        raise ValueError("Hochschild dimensions are implemented for unipotent algebras")
    R = regular_bimodule(A).inner
    return ext_dims(R, R, d)


def holm_check(A: Algebra, d: int = 4) -> bool:
    """dim HH^i(A) = dim A * dim H^i(A, k) for i <= d."""
    if not A.is_elementary_abelian or A.kind != "truncated":
        raise ValueError("holm_check needs k(Z/p)^n")
    hh = hochschild_dims(A, d)
    k = trivial_module(A)
    h = ext_dims(k, k, d)
    return all(x == A.dim * y for x, y in zip(hh, h))


# -- standard complex and automorphism action ------------------------------------------


def standard_labels(n: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent tuples J with |J| = degree in degree-lex order (largest j_1 first)."""
    out = [J for J in itertools.product(range(degree + 1), repeat=n) if sum(J) == degree]
    return sorted(out, key=lambda J: tuple(-x for x in J))


def standard_complex(A: Algebra, d: int = DEFAULT_DEGREE) -> Resolution:
    """Tensor product of the periodic resolutions of k over each k[x_i]/(x_i^{m_i})."""
    if A.kind != "truncated":
        raise ValueError("standard complex needs a truncated polynomial algebra")
    from .algebra import monomial_index

    p, dA = A.p, A.dim
    exps = A.params[0]
    n = len(exps)
    labels = [standard_labels(n, i) for i in range(d + 1)]
    index = [{J: k for k, J in enumerate(L)} for L in labels]

    def theta(i: int, j: int) -> np.ndarray:
        e = [0] * n
        e[i] = 1 if j % 2 else exps[i] - 1
        return A.basis_vector(monomial_index(A, e))

    diffs = [A.augmentation.reshape(1, -1) % p]
    for deg in range(1, d + 1):
        r, rprev = len(labels[deg]), len(labels[deg - 1])
        D = ffmat.zeros(rprev * dA, r * dA)
        for col, J in enumerate(labels[deg]):
            gen = ffmat.zeros(rprev * dA, 1)
            sign = 1
            for i in range(n):
                if J[i]:
                    K = list(J)
                    K[i] -= 1
                    k = index[deg - 1][tuple(K)]
                    gen[k * dA:(k + 1) * dA, 0] += sign * theta(i, J[i])
                sign *= (-1) ** J[i]
            gen %= p
            # extend to b . e_J by left multiplication blockwise
            for b in range(dA):
                L = A.left_regular[b]
                D[:, col * dA + b] = np.concatenate(
                    [mul(L, gen[k * dA:(k + 1) * dA], p).reshape(-1) for k in range(rprev)])
        diffs.append(D % p)
    k = trivial_module(A)
    return Resolution(k, tuple(len(L) for L in labels), tuple(diffs), tuple(tuple(L) for L in labels))


def _semilinear_full(A: Algebra, psi: Automorphism, images: np.ndarray, r: int) -> np.ndarray:
    """Full matrix of the psi-semilinear map A^r -> A^s sending e_j to images[:, j]."""
    p, dA = A.p, A.dim
    s = images.shape[0] // dA if images.size else 0
    out = ffmat.zeros(s * dA, r * dA)
    for j in range(r):
        y = images[:, j].reshape(s, dA)
        for b in range(dA):
            L = A.left_mult(psi.matrix[:, b])
            out[:, j * dA + b] = mul(y, L.T, p).reshape(-1)
    return out


def chain_lift(psi: Automorphism, R: Resolution, d: int) -> list[np.ndarray]:
    """psi-semilinear chain endomorphisms Phi_0..Phi_d of a resolution of k lifting id_k."""
    A = psi.source
    p, dA = A.p, A.dim
    if R.algebra != A:
        raise ValueError("resolution over a different algebra")
    if R.module.dim != 1:
        raise ValueError("chain lifts are implemented for resolutions of k")
    gens0 = ffmat.zeros(R.ranks[0] * dA, R.ranks[0])
    d0 = R.differentials[0]
    # Phi_0: lift of id_k; pick preimages of the generator images under the augmentation
    for j, col in enumerate(_generator_columns(A, R.ranks[0])):
        gens0[:, j] = _solve_or_raise(d0, d0[:, [col]], p).reshape(-1)
    phis = [_semilinear_full(A, psi, gens0, R.ranks[0])]
    for i in range(1, d + 1):
        D = R.differentials[i]
        target = mul(phis[-1], D[:, _generator_columns(A, R.ranks[i])], p)
        imgs = _solve_or_raise(D, target, p)
        phis.append(_semilinear_full(A, psi, imgs, R.ranks[i]))
        if not np.array_equal(mul(D, phis[-1], p), mul(phis[-2], D, p)):
            raise RuntimeError("chain lift is not a chain map")
    return phis


def _solve_or_raise(D, b, p):
    x = ffmat.solve(D, b, p)
    if x is None:
        raise RuntimeError("lift failed: target not in the image of the differential")
    return x


def aut_action_on_cohomology(psi: Automorphism, d: int, R: Resolution | None = None) -> np.ndarray:
    """Matrix of psi acting on Ext^d(k, k) in the basis dual to the generators e_J.

    The action is pullback along the chain lift of psi^{-1}, which makes
    psi -> action multiplicative: action(psi o psi') = action(psi) @ action(psi').
    """
    A = psi.source
    p = A.p
    if R is None:
        R = standard_complex(A, d + 1)
    if not R.is_minimal():
        raise ValueError("the action is read off a minimal resolution")
    phi = chain_lift(psi.inverse(), R, d)[d]
    r = R.ranks[d]
    gens = _generator_columns(A, r)
    # T[K, J] = eps(component J of Phi(e_K))
    blocks = phi[:, gens].reshape(r, A.dim, r)
    T = np.einsum("b,jbk->kj", A.augmentation, blocks) % p
    return T
