"""Finite-dimensional augmented algebras over F_p given by structure constants.

An algebra stores ``mult[i, j, :]``, the coordinate vector of ``b_i * b_j``.
Constructors cover truncated polynomial algebras, abelian p-group algebras
(as Hopf algebras), opposites and enveloping algebras; arbitrary tables are
accepted too.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import comb

import numpy as np

from . import ffmat
from .ffmat import FieldSpec, mul

EXHAUSTIVE_CHECK_DIM = 64


def _monomials(exponents: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Exponent tuples ordered by total degree, then with w1 before w2."""
    mons = list(itertools.product(*[range(m) for m in exponents]))
    mons.sort(key=lambda e: (sum(e), tuple(-x for x in e)))
    return mons


def _monomial_label(e: tuple[int, ...], var: str = "w") -> str:
    if not any(e):
        return "1"
    n = len(e)
    parts = []
    for i, k in enumerate(e):
        if k == 0:
            continue
        name = var if n == 1 else f"{var}{i + 1}"
        parts.append(name if k == 1 else f"{name}^{k}")
    return "*".join(parts)


@dataclass(frozen=True, eq=False)
class Algebra:
    """Associative unital algebra with augmentation, over F_p.

    ``generators`` are basis indices of a generating set; modules are given
    by one action matrix per generator.  ``kind``/``params`` record how the
    algebra was built and drive equality and serialization.
    """

    p: int
    mult: np.ndarray
    labels: tuple[str, ...]
    unit_index: int
    generators: tuple[int, ...]
    augmentation: np.ndarray
    kind: str = "table"
    params: tuple = ()
    base: "Algebra | None" = None
    relations: tuple[str, ...] = ()
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        FieldSpec(self.p)
        m = np.asarray(self.mult, dtype=np.int64) % self.p
        d = m.shape[0]
        if m.shape != (d, d, d):
            raise ValueError("mult must have shape (dim, dim, dim)")
        eps = np.asarray(self.augmentation, dtype=np.int64).reshape(-1) % self.p
        if eps.shape != (d,):
            raise ValueError("augmentation must have length dim")
        if len(self.labels) != d:
            raise ValueError("need one label per basis element")
        m.setflags(write=False)
        eps.setflags(write=False)
        object.__setattr__(self, "mult", m)
        object.__setattr__(self, "augmentation", eps)
        object.__setattr__(self, "generators", tuple(int(g) for g in self.generators))
        if self.check:
            self.validate()

    # -- identity -------------------------------------------------------
    @cached_property
    def key(self) -> tuple:
        if self.kind == "table":
            return ("table", self.p, self.mult.tobytes(), self.unit_index,
                    self.generators, self.augmentation.tobytes())
        if self.base is not None:
            return (self.kind, self.base.key)
        return (self.kind, self.p) + tuple(self.params)

    def __eq__(self, other):
        return isinstance(other, Algebra) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Algebra(kind={self.kind!r}, p={self.p}, dim={self.dim})"

    # -- basic data ---------------------------------------------------------
    @property
    def dim(self) -> int:
        return self.mult.shape[0]

    @property
    def field(self) -> FieldSpec:
        return FieldSpec(self.p)

    @property
    def generator_labels(self) -> list[str]:
        return [self.labels[g] for g in self.generators]

    def unit(self) -> np.ndarray:
        e = np.zeros(self.dim, dtype=np.int64)
        e[self.unit_index] = 1
        return e

    def basis_vector(self, i: int) -> np.ndarray:
        e = np.zeros(self.dim, dtype=np.int64)
        e[i] = 1
        return e

    def product(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        return np.einsum("i,j,ijk->k", x, y, self.mult) % self.p

    def left_mult(self, x) -> np.ndarray:
        """Matrix of ``y -> x y`` (columns indexed by basis)."""
        return np.einsum("i,ijk->kj", np.asarray(x, dtype=np.int64), self.mult) % self.p

    def right_mult(self, x) -> np.ndarray:
        """Matrix of ``y -> y x``."""
        return np.einsum("i,jik->kj", np.asarray(x, dtype=np.int64), self.mult) % self.p

    @cached_property
    def left_regular(self) -> np.ndarray:
        """Stack of left multiplication matrices by basis elements."""
        return np.einsum("ijk->ikj", self.mult) % self.p

    @cached_property
    def right_regular(self) -> np.ndarray:
        return np.einsum("jik->ikj", self.mult) % self.p

    @cached_property
    def aug_kernel(self) -> np.ndarray:
        """Columns spanning ker(augmentation)."""
        return ffmat.kernel_basis(self.augmentation.reshape(1, -1), self.p)

    # -- validation ---------------------------------------------------------
    def validate(self, samples: int = 400, seed: int = 0) -> None:
        p, d, m = self.p, self.dim, self.mult
        one = self.unit()
        L1 = self.left_mult(one)
        R1 = self.right_mult(one)
        if not (np.array_equal(L1, ffmat.identity(d)) and np.array_equal(R1, ffmat.identity(d))):
            raise ValueError("unit_index is not a two-sided unit")
        if d <= EXHAUSTIVE_CHECK_DIM:
            # (b_i b_j) b_k versus b_i (b_j b_k), both as (d^2, d^2) arrays
            flat = m.reshape(d * d, d)
            lhs = mul(flat, m.reshape(d, d * d), p)
            rhs = mul(flat, m.transpose(1, 0, 2).reshape(d, d * d), p)
            rhs = rhs.reshape(d, d, d, d).transpose(2, 0, 1, 3).reshape(d * d, d * d)
            if not np.array_equal(lhs, rhs):
                raise ValueError("multiplication is not associative")
            eps_prod = np.einsum("ijk,k->ij", m, self.augmentation) % p
            if not np.array_equal(eps_prod, np.outer(self.augmentation, self.augmentation) % p):
                raise ValueError("augmentation is not multiplicative")
        else:
            rng = np.random.default_rng(seed)
            for _ in range(samples):
                i, j, k = (int(t) for t in rng.integers(0, d, 3))
                a = self.product(self.product(self.basis_vector(i), self.basis_vector(j)),
                                 self.basis_vector(k))
                b = self.product(self.basis_vector(i),
                                 self.product(self.basis_vector(j), self.basis_vector(k)))
                if not np.array_equal(a, b):
                    raise ValueError("multiplication is not associative")
                if int(self.augmentation @ m[i, j]) % p != \
                        int(self.augmentation[i] * self.augmentation[j]) % p:
                    raise ValueError("augmentation is not multiplicative")
        if int(self.augmentation[self.unit_index]) != 1:
            raise ValueError("augmentation must send 1 to 1")
        self.word_basis  # raises if the generators do not generate

    # -- words in the generators ------------------------------------------------
    @cached_property
    def word_basis(self) -> tuple[list[tuple[int, ...]], np.ndarray]:
        """Words in the generators whose products form a basis.

        Returns ``(words, coeffs)`` where ``coeffs[k, j]`` expresses basis
        element ``j`` as ``sum_k coeffs[k, j] * prod(words[k])``.  A word
        ``(g1, ..., gr)`` stands for the product ``g1 g2 ... gr`` (generator
        positions, not basis indices).
        """
        p, d = self.p, self.dim
        words = [()]
        vecs = [self.unit()]
        span = ffmat.asmat(self.unit(), p)
        frontier = [((), self.unit())]
        gen_L = [self.left_mult(self.basis_vector(g)) for g in self.generators]
        while frontier and len(words) < d:
            nxt = []
            for w, v in frontier:
                for gi, L in enumerate(gen_L):
                    nv = (L @ v) % p
                    cand = np.hstack([span, nv.reshape(-1, 1)])
                    if ffmat.rank(cand, p) > span.shape[1]:
                        span = cand
                        words.append((gi,) + w)
                        vecs.append(nv)
                        nxt.append(((gi,) + w, nv))
                        if len(words) == d:
                            break
                if len(words) == d:
                    break
            frontier = nxt
        if len(words) < d:
            raise ValueError("generators do not generate the algebra")
        T = np.stack(vecs, axis=1)
        return words, ffmat.inverse(T, p)

    def represent(self, gen_mats: list[np.ndarray], n: int) -> np.ndarray:
        """Images of all basis elements under the map determined by generator matrices.

        Returns an array of shape (dim, n, n).  Relations are not checked here.
        """
        p = self.p
        words, coeffs = self.word_basis
        cache = {(): np.eye(n, dtype=np.int64)}
        word_mats = []
        for w in words:
            if w not in cache:
                cache[w] = mul(gen_mats[w[0]], cache[w[1:]], p)
            word_mats.append(cache[w])
        W = np.stack(word_mats)
        flat = W.reshape(len(words), -1).astype(np.float64)
        out = np.rint(coeffs.T.astype(np.float64) @ flat).astype(np.int64) % p
        return out.reshape(self.dim, n, n)

    def is_representation(self, basis_mats: np.ndarray) -> bool:
        """Check that generator matrices extend to an algebra map ``A -> End``."""
        p = self.p
        d = self.dim
        if basis_mats.shape[0] != d:
            return False
        n = basis_mats.shape[1]
        if not np.array_equal(basis_mats[self.unit_index], np.eye(n, dtype=np.int64)):
            return False
        flat = basis_mats.reshape(d, -1).astype(np.float64)
        for g in self.generators:
            G = basis_mats[g]
            lhs = np.einsum("ab,jbc->jac", G, basis_mats) % p
            # rho(g b_j) = sum_k mult[g, j, k] rho(b_k)
            rhs = (np.rint(self.mult[g].astype(np.float64) @ flat).astype(np.int64) % p).reshape(d, n, n)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    # -- structure ---------------------------------------------------------------
    def ideal_power_dims(self, limit: int | None = None) -> list[int]:
        """Dimensions of I, I^2, ... for I = ker(augmentation), until zero or stable."""
        p = self.p
        I = self.aug_kernel
        dims = [I.shape[1]]
        cur = I
        limit = limit or self.dim + 1
        while cur.shape[1] and len(dims) <= limit:
            prods = [mul(self.left_mult(cur[:, i]), I, p) for i in range(cur.shape[1])]
            nxt = ffmat.column_space(np.hstack(prods), p)
            dims.append(nxt.shape[1])
            if nxt.shape[1] == cur.shape[1]:
                break
            cur = nxt
        return dims

    @cached_property
    def is_local(self) -> bool:
        """True iff ker(augmentation) is nilpotent (so A/rad = k)."""
        return self.ideal_power_dims()[-1] == 0

    @cached_property
    def socle(self) -> np.ndarray:
        """Columns spanning the left socle {x : rad x = 0} (local algebras)."""
        I = self.aug_kernel
        if I.shape[1] == 0:
            return ffmat.identity(self.dim)
        rows = [self.left_mult(I[:, i]) for i in range(I.shape[1])]
        return ffmat.kernel_basis(np.vstack(rows), self.p)

    @cached_property
    def right_socle(self) -> np.ndarray:
        I = self.aug_kernel
        if I.shape[1] == 0:
            return ffmat.identity(self.dim)
        rows = [self.right_mult(I[:, i]) for i in range(I.shape[1])]
        return ffmat.kernel_basis(np.vstack(rows), self.p)

    @cached_property
    def is_selfinjective(self) -> bool:
        """Local algebras only: selfinjective iff both socles are simple."""
        return self.is_local and self.socle.shape[1] == 1 and self.right_socle.shape[1] == 1

    @cached_property
    def is_commutative(self) -> bool:
        return np.array_equal(self.mult, self.mult.transpose(1, 0, 2))

    @property
    def is_elementary_abelian(self) -> bool:
        """Truncated k[w1..wn]/(wi^p), or the enveloping algebra of one."""
        if self.kind == "truncated":
            return all(m == self.p for m in self.params[0])
        if self.kind == "env" and self.base is not None:
            return self.base.is_elementary_abelian
        return False

    @property
    def truncation_exponents(self) -> tuple[int, ...] | None:
        if self.kind == "truncated":
            return tuple(self.params[0])
        return None

    @cached_property
    def opposite(self) -> "Algebra":
        return opposite(self)

    @cached_property
    def env(self) -> "Algebra":
        return enveloping(self)

    def to_json(self) -> dict:
        if self.kind == "truncated":
            return {"kind": "truncated", "p": self.p, "exponents": list(self.params[0])}
        if self.kind == "env":
            return {"kind": "env", "base": self.base.to_json()}
        if self.kind == "opposite":
            return {"kind": "opposite", "base": self.base.to_json()}
        if self.kind == "group":
            return {"kind": "group", "p": self.p, "orders": list(self.params[0])}
        return {"kind": "table", "p": self.p, "dim": self.dim, "labels": list(self.labels),
                "unit": self.unit_index, "generators": list(self.generators),
                "augmentation": [int(x) for x in self.augmentation],
                "mult": self.mult.reshape(-1).tolist()}


def is_unipotent(A: Algebra) -> bool:
    """Augmentation ideal nilpotent, i.e. A local with A/rad = k."""
    return A.is_local


def table_algebra(p: int, mult, unit_index: int, generators, augmentation,
                  labels=None, relations=()) -> Algebra:
    mult = np.asarray(mult, dtype=np.int64)
    d = mult.shape[0]
    labels = tuple(labels) if labels is not None else tuple(f"b{i}" for i in range(d))
    return Algebra(p, mult, labels, unit_index, tuple(generators), np.asarray(augmentation),
                   kind="table", relations=tuple(relations))


@lru_cache(maxsize=None)
def _truncated(p: int, exponents: tuple[int, ...]) -> Algebra:
    mons = _monomials(exponents)
    index = {e: i for i, e in enumerate(mons)}
    d = len(mons)
    mult = np.zeros((d, d, d), dtype=np.int64)
    for i, a in enumerate(mons):
        for j, b in enumerate(mons):
            c = tuple(x + y for x, y in zip(a, b))
            if all(ci < mi for ci, mi in zip(c, exponents)):
                mult[i, j, index[c]] = 1
    n = len(exponents)
    gens = []
    for i in range(n):
        e = tuple(1 if k == i else 0 for k in range(n))
        gens.append(index[e])
    eps = np.zeros(d, dtype=np.int64)
    eps[index[(0,) * n]] = 1
    labels = tuple(_monomial_label(e) for e in mons)
    rels = tuple(f"{_monomial_label(tuple(1 if k == i else 0 for k in range(n)))}^{m}=0"
                 for i, m in enumerate(exponents))
    return Algebra(p, mult, labels, index[(0,) * n], tuple(gens), eps,
                   kind="truncated", params=(exponents,), relations=rels)


def truncated_polynomial_algebra(p: int, exponents) -> Algebra:
    """k[w1, ..., wn] / (wi^mi) with degree-lex monomial basis."""
    exponents = tuple(int(m) for m in exponents)
    if any(m < 2 for m in exponents):
        raise ValueError("every truncation exponent must be at least 2")
    return _truncated(p, exponents)


def monomial_index(A: Algebra, exps) -> int:
    """Basis index of the monomial with the given exponents in a truncated algebra."""
    return _monomials(A.params[0]).index(tuple(exps))


def monomials(A: Algebra) -> list[tuple[int, ...]]:
    return _monomials(A.params[0])


@lru_cache(maxsize=None)
def opposite(A: Algebra) -> Algebra:
    if A.kind == "opposite":
        return A.base
    return Algebra(A.p, A.mult.transpose(1, 0, 2), A.labels, A.unit_index, A.generators,
                   A.augmentation, kind="opposite", base=A, check=False)


@lru_cache(maxsize=None)
def enveloping(A: Algebra) -> Algebra:
    """A (x) A^op on the pair basis (b_i, b_j) -> index i * dim + j.

    ``(a (x) b)(a' (x) b') = a a' (x) b' b``.  Generators are u_g = g (x) 1
    followed by v_g = 1 (x) g.
    """
    d, p = A.dim, A.p
    m = A.mult
    E = np.einsum("ikm,ljn->ijklmn", m, m).reshape(d * d, d * d, d * d) % p
    one = A.unit_index
    u = [g * d + one for g in A.generators]
    v = [one * d + g for g in A.generators]
    labels = tuple(f"{a}|{b}" for a in A.labels for b in A.labels)
    eps = ffmat.kron(A.augmentation, A.augmentation) % p
    env = Algebra(p, E, labels, one * d + one, tuple(u + v), eps,
                  kind="env", base=A, check=d * d <= EXHAUSTIVE_CHECK_DIM)
    return env


def env_generator_names(A: Algebra) -> tuple[list[str], list[str]]:
    n = len(A.generators)
    return [f"u{i + 1}" for i in range(n)], [f"v{i + 1}" for i in range(n)]


# -- Hopf structure ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HopfAlgebra:
    """Group algebra of a finite abelian p-group.

    ``algebra`` has the group-element basis; ``truncated`` is the isomorphic
    presentation k[w1..wn]/(wi^{q_i}) with wi = gi - 1, and ``to_w`` converts
    group-basis coordinates into w-basis coordinates.
    """

    algebra: Algebra
    truncated: Algebra
    comultiplication: np.ndarray  # group basis, shape (dim^2, dim)
    antipode: np.ndarray
    counit: np.ndarray
    to_w: np.ndarray
    elements: tuple[tuple[int, ...], ...]

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @cached_property
    def from_w(self) -> np.ndarray:
        return ffmat.inverse(self.to_w, self.p)

    @cached_property
    def comultiplication_w(self) -> np.ndarray:
        p = self.p
        C = self.to_w
        return mul(mul(ffmat.kronecker(C, C, p), self.comultiplication, p), self.from_w, p)

    @cached_property
    def antipode_w(self) -> np.ndarray:
        return mul(mul(self.to_w, self.antipode, self.p), self.from_w, self.p)

    @cached_property
    def counit_w(self) -> np.ndarray:
        return mul(self.counit.reshape(1, -1), self.from_w, self.p).reshape(-1)

    def verify(self) -> bool:
        """Hopf axioms checked on every basis element of the group basis."""
        p, d = self.p, self.dim
        A = self.algebra
        D, S, eps = self.comultiplication, self.antipode, self.counit
        I = ffmat.identity(d)
        coassoc = np.array_equal(mul(ffmat.kronecker(D, I, p), D, p),
                                 mul(ffmat.kronecker(I, D, p), D, p))
        # (eps (x) 1) D = id = (1 (x) eps) D
        counit_ok = (np.array_equal(mul(ffmat.kronecker(eps.reshape(1, -1), I, p), D, p), I)
                     and np.array_equal(mul(ffmat.kronecker(I, eps.reshape(1, -1), p), D, p), I))
        # m (S (x) 1) D = eta eps = m (1 (x) S) D
        m_flat = A.mult.reshape(d * d, d).T  # (d, d^2)
        eta_eps = np.outer(A.unit(), eps) % p
        antipode_ok = (np.array_equal(mul(mul(m_flat, ffmat.kronecker(S, I, p), p), D, p), eta_eps)
                       and np.array_equal(mul(mul(m_flat, ffmat.kronecker(I, S, p), p), D, p), eta_eps))
        # D multiplicative: D(b_i b_j) = D(b_i) D(b_j) in A (x) A
        Dt = D.reshape(d, d, d)  # [a, b, i]: coefficient of b_a (x) b_b in D(b_i)
        lhs = mul(m_flat.T, D.T, p).reshape(d, d, d, d)  # [i, j, e, f]
        X = mul(Dt.transpose(2, 1, 0).reshape(d * d, d), A.mult.reshape(d, d * d), p)  # [i,b | c,e]
        X = X.reshape(d, d, d, d).transpose(0, 1, 3, 2).reshape(d ** 3, d)  # [i,b,e | c]
        Y = mul(X, Dt.reshape(d, d * d), p).reshape(d, d, d, d, d)  # [i,b,e,d',j]
        Y = Y.transpose(0, 4, 2, 1, 3).reshape(d ** 3, d * d)  # [i,j,e | b,d']
        rhs = mul(Y, A.mult.reshape(d * d, d), p).reshape(d, d, d, d)  # [i,j,e,f]
        ok_mult = np.array_equal(lhs, rhs)
        return coassoc and counit_ok and antipode_ok and ok_mult


def _is_power_of(q: int, p: int) -> bool:
    if q < p:
        return False
    while q % p == 0:
        q //= p
    return q == 1


@lru_cache(maxsize=None)
def _group_algebra(p: int, orders: tuple[int, ...]) -> HopfAlgebra:
    elements = sorted(itertools.product(*[range(q) for q in orders]),
                      key=lambda e: (sum(e), tuple(-x for x in e)))
    index = {e: i for i, e in enumerate(elements)}
    d = len(elements)
    n = len(orders)
    mult = np.zeros((d, d, d), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            c = tuple((x + y) % q for x, y, q in zip(a, b, orders))
            mult[i, j, index[c]] = 1
    gens = [index[tuple(1 if k == i else 0 for k in range(n))] for i in range(n)]
    labels = tuple(_monomial_label(e, "g") for e in elements)
    eps = np.ones(d, dtype=np.int64)
    G = Algebra(p, mult, labels, index[(0,) * n], tuple(gens), eps,
                kind="group", params=(orders,))
    D = np.zeros((d * d, d), dtype=np.int64)
    S = np.zeros((d, d), dtype=np.int64)
    for i, a in enumerate(elements):
        D[i * d + i, i] = 1
        S[index[tuple((-x) % q for x, q in zip(a, orders))], i] = 1
    T = truncated_polynomial_algebra(p, orders)
    mons = _monomials(orders)
    mindex = {e: i for i, e in enumerate(mons)}
    C = np.zeros((d, d), dtype=np.int64)
    for i, a in enumerate(elements):
        # g^a = prod (1 + w_k)^{a_k}
        for b in itertools.product(*[range(x + 1) for x in a]):
            coef = 1
            for ak, bk in zip(a, b):
                coef *= comb(ak, bk)
            C[mindex[b], i] = (C[mindex[b], i] + coef) % p
    return HopfAlgebra(G, T, D, S, eps, C, tuple(elements))


def group_algebra_abelian(p: int, invariant_factors) -> HopfAlgebra:
    """Group algebra of Z/q1 x ... x Z/qn with each qi a power of p."""
    orders = tuple(int(q) for q in invariant_factors)
    FieldSpec(p)
    for q in orders:
        if not _is_power_of(q, p):
            raise ValueError(f"order {q} is not a power of {p}")
    return _group_algebra(p, orders)


def hopf_structure(A: Algebra) -> HopfAlgebra:
    """Group-algebra Hopf structure on a truncated algebra with p-power exponents."""
    exps = A.truncation_exponents
    if exps is None:
        raise ValueError("Hopf structure is only available on truncated p-group presentations")
    return group_algebra_abelian(A.p, exps)


def elementary_abelian(p: int, n: int) -> Algebra:
    """k(Z/p)^n in its w-presentation."""
    return truncated_polynomial_algebra(p, [p] * n)


# -- automorphisms -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Automorphism:
    """Algebra automorphism; column j of ``matrix`` is the image of basis element j."""

    source: Algebra
    matrix: np.ndarray
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.int64) % self.source.p
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        if self.check:
            self.validate()

    def validate(self) -> None:
        A = self.source
        p, d = A.p, A.dim
        M = self.matrix
        if M.shape != (d, d) or not ffmat.is_invertible(M, p):
            raise ValueError("automorphism matrix must be invertible")
        if not np.array_equal(M[:, A.unit_index], A.unit()):
            raise ValueError("automorphism must fix the unit")
        lhs = np.einsum("ijk,lk->ijl", A.mult, M) % p
        rhs = np.einsum("ai,bj,abl->ijl", M, M, A.mult) % p
        if not np.array_equal(lhs, rhs):
            raise ValueError("matrix does not respect the multiplication")

    def __call__(self, x) -> np.ndarray:
        return mul(self.matrix, np.asarray(x, dtype=np.int64).reshape(-1, 1),
                   self.source.p).reshape(-1)

    def __matmul__(self, other: "Automorphism") -> "Automorphism":
        """Composition: (self @ other)(x) = self(other(x))."""
        return Automorphism(self.source, mul(self.matrix, other.matrix, self.source.p), check=False)

    def inverse(self) -> "Automorphism":
        return Automorphism(self.source, ffmat.inverse(self.matrix, self.source.p), check=False)

    def __eq__(self, other):
        return (isinstance(other, Automorphism) and self.source == other.source
                and np.array_equal(self.matrix, other.matrix))

    def __hash__(self):
        return hash((self.source.key, self.matrix.tobytes()))

    @property
    def is_identity(self) -> bool:
        return np.array_equal(self.matrix, ffmat.identity(self.source.dim))

    @classmethod
    def identity(cls, A: Algebra) -> "Automorphism":
        return cls(A, ffmat.identity(A.dim), check=False)


def automorphism_from_images(A: Algebra, images) -> Automorphism:
    """Extend w_i -> images[i] (coordinate vectors) multiplicatively on a truncated algebra."""
    if A.kind != "truncated":
        raise ValueError("automorphisms by generator images need a truncated polynomial algebra")
    p, d = A.p, A.dim
    images = [np.asarray(x, dtype=np.int64).reshape(-1) % p for x in images]
    if len(images) != len(A.generators) or any(x.shape != (d,) for x in images):
        raise ValueError("need one image vector per generator")
    M = np.zeros((d, d), dtype=np.int64)
    for col, e in enumerate(_monomials(A.params[0])):
        v = A.unit()
        for i, k in enumerate(e):
            for _ in range(k):
                v = A.product(v, images[i])
        M[:, col] = v
    try:
        return Automorphism(A, M)
    except ValueError as exc:
        raise ValueError(f"images do not define an automorphism: {exc}") from None


def automorphism_from_linear(A: Algebra, phi) -> Automorphism:
    """Extend an invertible linear map on span{w1..wn} multiplicatively.

    Column i of ``phi`` holds the coordinates of phi(w_i) in w1..wn.
    """
    if A.kind != "truncated":
        raise ValueError("automorphism_from_linear needs a truncated polynomial algebra")
    p = A.p
    n = len(A.params[0])
    phi = np.asarray(phi, dtype=np.int64).reshape(n, n) % p
    if not ffmat.is_invertible(phi, p):
        raise ValueError("linear map is singular")
    images = [sum(int(phi[j, i]) * A.basis_vector(A.generators[j]) for j in range(n)) % p
              for i in range(n)]
    return automorphism_from_images(A, images)


def scalar_automorphism(A: Algebra, gamma: int) -> Automorphism:
    """w -> gamma * w on k[w]/(w^m)."""
    return automorphism_from_linear(A, [[gamma]])
