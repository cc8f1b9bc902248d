"""Left modules as matrix representations, and their homological toolkit.

A :class:`Module` is a dimension plus one action matrix per generator of its
algebra (acting on column vectors).  Over local algebras Hom spaces are solved
through a projective presentation, which keeps the linear systems small.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from . import ffmat
from .algebra import Algebra, hopf_structure
from .ffmat import mul

log = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 10**6
RANDOM_TRIALS = 1000


@dataclass(frozen=True, eq=False)
class Module:
    """Left module over ``algebra``: ``actions[i]`` is the matrix of generator i."""

    algebra: Algebra
    dim: int
    actions: tuple[np.ndarray, ...]
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        p = self.algebra.p
        acts = []
        for a in self.actions:
            a = np.array(a, dtype=np.int64).reshape(self.dim, self.dim) % p
            a.setflags(write=False)
            acts.append(a)
        if len(acts) != len(self.algebra.generators):
            raise ValueError("need one action matrix per algebra generator")
        object.__setattr__(self, "actions", tuple(acts))
        if self.check and not self.algebra.is_representation(self.basis_actions):
            raise ValueError("actions do not satisfy the algebra relations")

    def __repr__(self):
        return f"Module(dim={self.dim}, algebra={self.algebra!r})"

    @property
    def p(self) -> int:
        return self.algebra.p

    @cached_property
    def basis_actions(self) -> np.ndarray:
        """Action matrices of every basis element of the algebra, shape (dimA, n, n)."""
        return self.algebra.represent(list(self.actions), self.dim)

    def act(self, x) -> np.ndarray:
        """Matrix of an arbitrary algebra element given by coordinates."""
        x = np.asarray(x, dtype=np.int64).reshape(-1)
        flat = self.basis_actions.reshape(self.algebra.dim, -1)
        return mul(x.reshape(1, -1), flat, self.p).reshape(self.dim, self.dim)

    @cached_property
    def rad_span(self) -> np.ndarray:
        """Basis (columns) of rad.M, the span of images of ker(augmentation)."""
        K = self.algebra.aug_kernel
        if self.dim == 0 or K.shape[1] == 0:
            return ffmat.zeros(self.dim, 0)
        flat = self.basis_actions.reshape(self.algebra.dim, -1)
        mats = mul(K.T, flat, self.p).reshape(-1, self.dim, self.dim)
        return ffmat.column_space(np.hstack(list(mats)), self.p)

    @property
    def top_dim(self) -> int:
        return self.dim - self.rad_span.shape[1]

    @cached_property
    def top_vectors(self) -> np.ndarray:
        """Standard basis vectors completing rad.M to a basis (columns)."""
        if self.rad_span.shape[1] == 0:
            return ffmat.identity(self.dim)
        _, pivots, _ = ffmat.rref(self.rad_span.T, self.p)
        keep = [c for c in range(self.dim) if c not in set(pivots)]
        return ffmat.identity(self.dim)[:, keep]

    @cached_property
    def socle_span(self) -> np.ndarray:
        """Vectors killed by every generator."""
        if not self.actions:
            return ffmat.identity(self.dim)
        return ffmat.kernel_basis(np.vstack(self.actions), self.p)

    def conjugate(self, P: np.ndarray) -> "Module":
        """The isomorphic module with actions ``P^-1 a P``."""
        Pinv = ffmat.inverse(P, self.p)
        return Module(self.algebra, self.dim,
                      tuple(mul(mul(Pinv, a, self.p), P, self.p) for a in self.actions),
                      check=False)

    def same_as(self, other: "Module") -> bool:
        return (self.algebra == other.algebra and self.dim == other.dim
                and all(np.array_equal(a, b) for a, b in zip(self.actions, other.actions)))

    def to_json(self) -> dict:
        labels = self.algebra.generator_labels
        if self.algebra.kind == "env":
            u, v = _env_names(self.algebra)
            labels = u + v
        return {"algebra": self.algebra.to_json(), "dim": self.dim,
                "actions": {name: ffmat.FpMatrix(self.p, a).to_json()
                            for name, a in zip(labels, self.actions)}}


def _env_names(E: Algebra) -> tuple[list[str], list[str]]:
    n = len(E.generators) // 2
    return [f"u{i + 1}" for i in range(n)], [f"v{i + 1}" for i in range(n)]


@dataclass(frozen=True, eq=False)
class ModuleMap:
    source: Module
    target: Module
    matrix: np.ndarray

    def is_homomorphism(self) -> bool:
        p = self.source.p
        F = np.asarray(self.matrix) % p
        if F.shape != (self.target.dim, self.source.dim):
            return False
        return all(np.array_equal(mul(F, a, p), mul(b, F, p))
                   for a, b in zip(self.source.actions, self.target.actions))

    @property
    def rank(self) -> int:
        return ffmat.rank(self.matrix, self.source.p)


# -- constructors -----------------------------------------------------------------


def module_from_basis_actions(A: Algebra, mats: np.ndarray, check: bool = False) -> Module:
    """Module whose basis-element actions are already known."""
    n = mats.shape[1]
    M = Module(A, n, tuple(mats[g] for g in A.generators), check=check)
    B = mats % A.p
    B.setflags(write=False)  # shared by cached constructors
    M.__dict__["basis_actions"] = B
    return M


def regular_module(A: Algebra) -> Module:
    return module_from_basis_actions(A, A.left_regular)


@lru_cache(maxsize=256)
def free_module(A: Algebra, r: int) -> Module:
    if r == 0:
        return zero_module(A)
    I = ffmat.identity(r)
    mats = np.stack([ffmat.kron(I, L) for L in A.left_regular])
    return module_from_basis_actions(A, mats)


def zero_module(A: Algebra) -> Module:
    return Module(A, 0, tuple(ffmat.zeros(0, 0) for _ in A.generators), check=False)


def trivial_module(A: Algebra) -> Module:
    """The field k with A acting through the augmentation."""
    return Module(A, 1, tuple(np.array([[A.augmentation[g]]]) for g in A.generators))


def jordan_module(A: Algebra, size: int, generator: int = 0) -> Module:
    """Jordan block of the given size for one generator; the others act by zero."""
    J = np.zeros((size, size), dtype=np.int64)
    for i in range(size - 1):
        J[i + 1, i] = 1
    acts = [J if i == generator else ffmat.zeros(size, size) for i in range(len(A.generators))]
    return Module(A, size, tuple(acts))


def direct_sum(*mods: Module) -> Module:
    if not mods:
        raise ValueError("direct_sum needs at least one module")
    A = mods[0].algebra
    if any(M.algebra != A for M in mods):
        raise ValueError("algebra mismatch")
    n = sum(M.dim for M in mods)
    acts = []
    for gi in range(len(A.generators)):
        X = ffmat.zeros(n, n)
        off = 0
        for M in mods:
            X[off:off + M.dim, off:off + M.dim] = M.actions[gi]
            off += M.dim
        acts.append(X)
    return Module(A, n, tuple(acts), check=False)


def submodule(M: Module, K: np.ndarray) -> Module:
    """Submodule spanned by the (independent, invariant) columns of K."""
    if K.shape[1] == 0:
        return zero_module(M.algebra)
    acts = ffmat.restrict_to_subspace(M.actions, K, M.p)
    return Module(M.algebra, K.shape[1], tuple(acts), check=False)


def quotient_module(M: Module, W: np.ndarray) -> tuple[Module, np.ndarray, np.ndarray]:
    """M / colspan(W) with its projection and a linear section."""
    p = M.p
    proj, sec = ffmat.quotient_maps(W, M.dim, p)
    acts = tuple(mul(mul(proj, a, p), sec, p) for a in M.actions)
    return Module(M.algebra, proj.shape[0], acts, check=False), proj, sec


def generated_submodule(M: Module, vecs: np.ndarray) -> np.ndarray:
    """Basis of the submodule generated by the columns of ``vecs``."""
    p = M.p
    span = ffmat.column_space(ffmat.asmat(vecs, p), p)
    while True:
        imgs = [span] + [mul(a, span, p) for a in M.actions]
        new = ffmat.column_space(np.hstack(imgs), p)
        if new.shape[1] == span.shape[1]:
            return new
        span = new


def restrict_along(f: np.ndarray, M: Module, source: Algebra) -> Module:
    """Pull M back along an algebra map ``source -> M.algebra`` (matrix on bases)."""
    p = M.p
    flat = M.basis_actions.reshape(M.algebra.dim, -1)
    acts = [mul(np.asarray(f)[:, g].reshape(1, -1), flat, p).reshape(M.dim, M.dim)
            for g in source.generators]
    return Module(source, M.dim, tuple(acts))


def tensor_over_field(M: Module, N: Module) -> Module:
    """M (x)_k N over a group algebra, with A acting through the coproduct."""
    if M.algebra != N.algebra:
        raise ValueError("algebra mismatch")
    A = M.algebra
    H = hopf_structure(A)
    D = H.comultiplication_w
    p = A.p
    d = A.dim
    acts = []
    for g in A.generators:
        coeffs = D[:, g].reshape(d, d)
        X = ffmat.zeros(M.dim * N.dim, M.dim * N.dim)
        for j, k in zip(*np.nonzero(coeffs)):
            X = X + coeffs[j, k] * ffmat.kron(M.basis_actions[j], N.basis_actions[k])
        acts.append(X % p)
    return Module(A, M.dim * N.dim, tuple(acts), check=False)


def field_dual(M: Module) -> Module:
    """Hom_k(M, k) as a left module over the opposite algebra."""
    A = M.algebra
    return Module(A.opposite, M.dim, tuple(a.T for a in M.actions), check=False)


# -- Hom spaces ----------------------------------------------------------------------


def _basis_matrix_space(F: np.ndarray, dn: int, dm: int) -> list[np.ndarray]:
    return [F[:, i].reshape(dn, dm) for i in range(F.shape[1])]


def hom_space_direct(M: Module, N: Module) -> list[np.ndarray]:
    """Hom_A(M, N) by solving ``X a_M = a_N X`` for all generators at once."""
    if M.algebra != N.algebra:
        raise ValueError("algebra mismatch")
    p = M.p
    dm, dn = M.dim, N.dim
    if dm == 0 or dn == 0:
        return []
    rows = []
    for a, b in zip(M.actions, N.actions):
        # vec(X a) - vec(b X) with row-major vec
        rows.append((ffmat.kron(ffmat.identity(dn), a.T) - ffmat.kron(b, ffmat.identity(dm))) % p)
    if not rows:
        return [ffmat.identity(dn * dm)[:, i].reshape(dn, dm) for i in range(dn * dm)]
    K = ffmat.kernel_basis(np.vstack(rows), p)
    return _basis_matrix_space(K, dn, dm)


def hom_space(M: Module, N: Module) -> list[np.ndarray]:
    """Basis of Hom_A(M, N) as a list of ``N.dim x M.dim`` matrices."""
    if M.algebra != N.algebra:
        raise ValueError("algebra mismatch")
    if M.dim == 0 or N.dim == 0:
        return []
    A = M.algebra
    if not A.is_local:
        return hom_space_direct(M, N)
    p, dA = A.p, A.dim
    cov = projective_cover(M)
    r = cov.rank
    # relations: generators of the kernel of the cover, in A^r coordinates
    rel = cov.kernel_generators
    k = rel.shape[1]
    dn = N.dim
    NB = N.basis_actions  # (dA, dn, dn)
    if k == 0:
        sol = ffmat.identity(r * dn)
    else:
        Kr = rel.reshape(r, dA, k)
        eq = np.einsum("ijl,jab->laib", Kr, NB).reshape(k * dn, r * dn) % p
        sol = ffmat.kernel_basis(eq, p)
    if sol.shape[1] == 0:
        return []
    # image of b_j e_i is N(b_j) n_i; compose with a section of the cover
    S = cov.section  # (r dA, dm)
    s = sol.shape[1]
    # Ft[c, a, (i, j)] = sum_b N(b_j)[a, b] n_c[i, b], done as one product
    n_all = sol.T.reshape(s * r, dn)
    prod = mul(n_all, NB.transpose(2, 0, 1).reshape(dn, dA * dn), p)  # [(c, i), (j, a)]
    Ft = prod.reshape(s, r, dA, dn).transpose(0, 3, 1, 2).reshape(s, dn, r * dA)
    out = mul(Ft.reshape(s * dn, r * dA), S, p).reshape(s, dn, M.dim)
    return list(out)


def hom_dim(M: Module, N: Module) -> int:
    return len(hom_space(M, N))


# -- projectivity and covers ---------------------------------------------------------


def _require_local(A: Algebra) -> None:
    if not A.is_local:
        raise ValueError("operation needs a local (unipotent) algebra")


def is_projective(M: Module) -> bool:
    """Over a local algebra: dim M = dim(M / rad M) * dim A."""
    _require_local(M.algebra)
    return M.dim == M.top_dim * M.algebra.dim


@dataclass(frozen=True, eq=False)
class Cover:
    """Minimal projective cover ``A^r -> M``; column (i, j) of ``matrix`` is b_j m_i."""

    module: Module
    free: Module
    matrix: np.ndarray
    tops: np.ndarray

    @property
    def rank(self) -> int:
        return self.tops.shape[1]

    @cached_property
    def kernel(self) -> np.ndarray:
        return ffmat.kernel_basis(self.matrix, self.module.p)

    @cached_property
    def syzygy(self) -> Module:
        return submodule(self.free, self.kernel)

    @cached_property
    def kernel_generators(self) -> np.ndarray:
        """Columns of ``kernel`` that generate it as a module."""
        K = self.kernel
        if K.shape[1] == 0:
            return K
        return ffmat.mul(K, self.syzygy.top_vectors, self.module.p)

    @cached_property
    def section(self) -> np.ndarray:
        S = ffmat.solve(self.matrix, ffmat.identity(self.module.dim), self.module.p)
        if S is None:
            raise RuntimeError("projective cover is not surjective")
        return S

    @property
    def map(self) -> ModuleMap:
        return ModuleMap(self.free, self.module, self.matrix)


def projective_cover(M: Module) -> Cover:
    A = M.algebra
    _require_local(A)
    p, dA = A.p, A.dim
    T = M.top_vectors
    r = T.shape[1]
    if M.dim == 0:
        return Cover(M, zero_module(A), ffmat.zeros(0, 0), ffmat.zeros(0, 0))
    cols = np.einsum("jab,bi->aij", M.basis_actions, T).reshape(M.dim, r * dA) % p
    return Cover(M, free_module(A, r), cols, T)


def syzygy(M: Module) -> Module:
    """Kernel of the minimal projective cover (no projective summands when A is selfinjective)."""
    return projective_cover(M).syzygy


def cosyzygy(M: Module) -> Module:
    """Cokernel of the injective hull, computed as D(Omega(D M)) over the opposite algebra."""
    A = M.algebra
    if not A.is_selfinjective:
        raise ValueError("cosyzygy needs a local selfinjective algebra")
    DM = field_dual(M)
    W = syzygy(DM)
    return Module(A, W.dim, tuple(a.T for a in W.actions), check=False)


def syzygy_power(M: Module, k: int) -> Module:
    for _ in range(abs(k)):
        M = syzygy(M) if k > 0 else cosyzygy(M)
    return M


def free_rank(M: Module) -> int:
    """Number of free summands of M over a local selfinjective algebra."""
    A = M.algebra
    if not A.is_selfinjective:
        raise ValueError("free_rank needs a local selfinjective algebra")
    s = A.socle[:, 0]
    return ffmat.rank(M.act(s), M.p)


def strip_projective_summands(M: Module) -> Module:
    """Largest summand of M without free summands (local selfinjective algebras).

    A free summand is generated by vectors m with s.m != 0 for the socle
    element s; the free submodule they generate is injective, hence a summand,
    and M is the direct sum of it and the quotient by it.
    """
    A = M.algebra
    if not A.is_selfinjective:
        raise ValueError("needs a local selfinjective algebra")
    p = M.p
    s_act = M.act(A.socle[:, 0])
    f = ffmat.rank(s_act, p)
    if f == 0:
        return M
    # vectors whose images under s span im(s)
    _, pivots, _ = ffmat.rref(s_act, p)
    gens = ffmat.identity(M.dim)[:, pivots]
    F = generated_submodule(M, gens)
    if F.shape[1] != f * A.dim:
        raise RuntimeError("free part has unexpected dimension")
    Q, _, _ = quotient_module(M, F)
    return Q


# -- isomorphism testing -------------------------------------------------------------


def _span_basis(mats: list[np.ndarray], p: int) -> list[np.ndarray]:
    if not mats:
        return []
    shape = mats[0].shape
    F = np.stack([m.reshape(-1) for m in mats], axis=1)
    B = ffmat.column_space(F, p)
    return [B[:, i].reshape(shape) for i in range(B.shape[1])]


def _search_invertible(mats: list[np.ndarray], n: int, p: int, seed: int,
                       exhaustive_limit: int, trials: int) -> bool | None:
    """Does the span of ``mats`` (all n x n) contain an invertible matrix?  None = undecided."""
    if n == 0:
        return True
    d = len(mats)
    if d == 0:
        return False
    stack = np.stack(mats)  # (d, n, n)
    rng = np.random.default_rng(seed)
    done = 0
    while done < trials:
        batch = min(256, trials - done)
        c = rng.integers(0, p, size=(batch, d))
        cand = np.einsum("bd,dij->bij", c, stack) % p
        if ffmat.batch_nonsingular(cand, p).any():
            return True
        done += batch
    if p ** d > exhaustive_limit:
        return None
    total = p ** d
    chunk = 50_000
    powers = p ** np.arange(d, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        c = (idx[:, None] // powers[None, :]) % p
        cand = np.einsum("bd,dij->bij", c, stack) % p
        if ffmat.batch_nonsingular(cand, p).any():
            return True
    return False


def is_isomorphic(M: Module, N: Module, seed: int = 0,
                  exhaustive_limit: int = EXHAUSTIVE_LIMIT,
                  trials: int = RANDOM_TRIALS) -> bool | None:
    """Three-valued isomorphism test: True, False, or None when undecided.

    Over a local algebra a map is an isomorphism iff it is one on tops, so the
    search runs over the span of the induced top maps.  That span is searched
    by ``trials`` seeded random combinations, then exhaustively when it has at
    most ``exhaustive_limit`` elements; otherwise the answer is None.
    """
    if M.algebra != N.algebra:
        raise ValueError("algebra mismatch")
    if M.dim != N.dim:
        return False
    if M.dim == 0:
        return True
    p = M.p
    homs = hom_space(M, N)
    if len(homs) != len(hom_space(N, M)):
        return False
    if not homs:
        return False
    if M.algebra.is_local:
        if M.top_dim != N.top_dim:
            return False
        projM, secM = ffmat.quotient_maps(M.rad_span, M.dim, p)
        projN, _ = ffmat.quotient_maps(N.rad_span, N.dim, p)
        H = np.stack(homs)  # (s, dn, dm)
        ns, dn, dm = H.shape
        left = mul(projN, H.transpose(1, 0, 2).reshape(dn, ns * dm), p)
        tn = left.shape[0]
        left = left.reshape(tn, ns, dm).transpose(1, 0, 2).reshape(ns * tn, dm)
        mats = list(mul(left, secM, p).reshape(ns, tn, -1))
        n = M.top_dim
    else:
        mats = homs
        n = M.dim
    basis = _span_basis(mats, p)
    return _search_invertible(basis, n, p, seed, exhaustive_limit, trials)


def find_isomorphism(M: Module, N: Module, seed: int = 0, trials: int = 4096) -> np.ndarray | None:
    """Random search for an explicit isomorphism matrix (None if none found)."""
    homs = hom_space(M, N)
    if M.dim != N.dim or not homs:
        return np.zeros((0, 0), dtype=np.int64) if M.dim == N.dim == 0 else None
    p = M.p
    stack = np.stack(homs)
    rng = np.random.default_rng(seed)
    for _ in range(0, trials, 128):
        c = rng.integers(0, p, size=(128, len(homs)))
        cand = np.einsum("bd,dij->bij", c, stack) % p
        ok = ffmat.batch_nonsingular(cand, p)
        if ok.any():
            return cand[int(np.argmax(ok))]
    return None


# -- random modules -------------------------------------------------------------------


def random_module(A: Algebra, dim: int, rng: np.random.Generator, conjugate: bool = True) -> Module:
    """A random module of the given dimension over a local algebra.

    Starts from a free module and quotients by random socle vectors one at a
    time, so every intermediate step stays a genuine module.
    """
    _require_local(A)
    p = A.p
    r = max(1, -(-dim // A.dim))
    r += int(rng.integers(0, 2))
    M = free_module(A, r)
    while M.dim > dim:
        soc = M.socle_span
        coeffs = rng.integers(0, p, size=soc.shape[1])
        if not coeffs.any():
            coeffs[int(rng.integers(0, soc.shape[1]))] = 1
        v = mul(soc, coeffs.reshape(-1, 1), p)
        M, _, _ = quotient_module(M, v)
    if conjugate and M.dim:
        while True:
            P = rng.integers(0, p, size=(M.dim, M.dim))
            if ffmat.is_invertible(P, p):
                break
        M = M.conjugate(P)
    return M
