"""Dense exact linear algebra over a prime field F_p.

Every array handled here is a 2-D ``numpy.int64`` array whose entries are
reduced into ``[0, p)``.  Products go through float64 BLAS when the
accumulated sum is guaranteed to stay below 2**53, which keeps them exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

_EXACT_FLOAT = 2**53


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field F_p."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")

    def inv(self, x: int) -> int:
        return pow(int(x) % self.p, -1, self.p)


def asmat(a, p: int) -> np.ndarray:
    """Copy ``a`` into a reduced int64 array (1-D input becomes a column)."""
    a = np.array(a, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    return a % p


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact product ``a @ b`` mod p."""
    inner = a.shape[-1]
    if inner == 0:
        return np.zeros(a.shape[:-1] + b.shape[-1:], dtype=np.int64)
    if a.size * b.shape[-1] <= 4096:  # tiny: integer matmul beats the float round trip
        return (a @ b) % p
    if inner * (p - 1) ** 2 < _EXACT_FLOAT:
        out = np.rint(a.astype(np.float64) @ b.astype(np.float64))
        return out.astype(np.int64) % p
    return (a @ b) % p


def matpow(a: np.ndarray, k: int, p: int) -> np.ndarray:
    out = identity(a.shape[0])
    base = a % p
    while k:
        if k & 1:
            out = mul(out, base, p)
        base = mul(base, base, p)
        k >>= 1
    return out


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """np.kron for 2-D arrays without its per-call overhead (no reduction mod p)."""
    a, b = np.asarray(a), np.asarray(b)
    if a.ndim != 2 or b.ndim != 2:
        return np.kron(a, b)
    return (a[:, None, :, None] * b[None, :, None, :]).reshape(a.shape[0] * b.shape[0],
                                                               a.shape[1] * b.shape[1])


def kron_apply(a, b, S: np.ndarray, p: int) -> np.ndarray:
    """``kron(a, b) @ S`` without forming the Kronecker product; None stands for an identity."""
    if a is None and b is None:
        return S % p
    ac = a.shape[1] if a is not None else None
    bc = b.shape[1] if b is not None else None
    k = S.shape[1]
    if ac is None:
        ac = S.shape[0] // bc
    if bc is None:
        bc = S.shape[0] // ac
    T = S.reshape(ac, bc, k)
    if b is not None:
        T = mul(b, T, p)  # (ac, br, k)
    br = T.shape[1]
    if a is not None:
        T = mul(a, T.reshape(ac, br * k), p)
    return T.reshape(-1, k) % p


def apply_kron(M: np.ndarray, a, b, p: int) -> np.ndarray:
    """``M @ kron(a, b)`` without forming the Kronecker product."""
    return kron_apply(None if a is None else a.T, None if b is None else b.T, M.T, p).T.copy()


def kronecker(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Kronecker product; index of ``e_i (x) f_j`` is ``i * len(f) + j``."""
    return kron(a, b) % p


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int], int]:
    """Reduced row echelon form of ``a`` over F_p.

    Returns:
        (R, pivots, rank) with pivot columns in increasing order.
    """
    R = np.array(a, dtype=np.int64) % p
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = R[r:, c].nonzero()[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k], c:] = R[[k, r], c:]
        piv = int(R[r, c])
        if piv != 1:
            R[r, c:] = (R[r, c:] * pow(piv, -1, p)) % p
        col = R[:, c].copy()
        col[r] = 0
        hit = col.nonzero()[0]
        if hit.size:
            R[hit, c:] = (R[hit, c:] - col[hit, None] * R[r, c:]) % p
        pivots.append(c)
        r += 1
    return R, pivots, r


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    # eliminate along the shorter side
    if a.shape[0] > a.shape[1]:
        a = a.T
    return rref(a, p)[2]


def kernel_basis(a: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis of the right null space ``{x : a x = 0}``."""
    rows, cols = a.shape
    if rows == 0:
        return identity(cols)
    R, pivots, rk = rref(a, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    K = zeros(cols, len(free))
    for j, f in enumerate(free):
        K[f, j] = 1
        for i, pc in enumerate(pivots):
            K[pc, j] = (-R[i, f]) % p
    return K


def column_space(a: np.ndarray, p: int) -> np.ndarray:
    """A basis of the column span, as columns in reduced form."""
    if a.shape[1] == 0:
        return zeros(a.shape[0], 0)
    R, _, rk = rref(a.T, p)
    return R[:rk].T.copy()


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution X of ``a X = b`` or None when inconsistent."""
    b = asmat(b, p)
    n = a.shape[1]
    aug = np.hstack([a % p, b])
    R, pivots, rk = rref(aug, p)
    if any(pc >= n for pc in pivots):
        return None
    X = zeros(n, b.shape[1])
    for i, pc in enumerate(pivots):
        X[pc] = R[i, n:]
    return X


def inverse(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    R, pivots, rk = rref(np.hstack([a % p, identity(n)]), p)
    if rk < n or pivots[n - 1] >= n:
        raise ValueError("matrix is singular")
    return R[:, n:].copy()


def is_invertible(a: np.ndarray, p: int) -> bool:
    return a.shape[0] == a.shape[1] and rank(a, p) == a.shape[0]


def quotient_maps(w: np.ndarray, n: int, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Projection onto ``F_p^n / colspan(w)`` and a section of it.

    Quotient coordinates are the non-pivot positions of the RREF of ``w.T``,
    so ``proj @ sec`` is the identity and ``proj @ w`` vanishes.
    """
    if w.size == 0 or w.shape[1] == 0:
        return identity(n), identity(n)
    R, pivots, rk = rref(w.T, p)
    R = R[:rk]
    keep = [c for c in range(n) if c not in set(pivots)]
    sec = identity(n)[:, keep]
    proj = sec.T.copy()
    if rk:
        proj = (proj - R[:, keep].T @ identity(n)[pivots, :]) % p
    return proj, sec


def left_inverse_rows(k: np.ndarray, p: int) -> tuple[list[int], np.ndarray]:
    """Rows ``P`` on which the full-column-rank ``k`` is invertible, and that inverse."""
    if k.shape[1] == 0:
        return [], zeros(0, 0)
    _, pivots, rk = rref(k.T, p)
    if rk < k.shape[1]:
        raise ValueError("columns are linearly dependent")
    return pivots, inverse(k[pivots, :], p)


def restrict_to_subspace(mats, k: np.ndarray, p: int) -> list[np.ndarray]:
    """Matrices of operators restricted to the invariant subspace ``colspan(k)``."""
    rows, kinv = left_inverse_rows(k, p)
    out = []
    for m in mats:
        image = mul(m, k, p)
        x = mul(kinv, image[rows, :], p)
        if not np.array_equal(mul(k, x, p), image):
            raise ValueError("subspace is not invariant")
        out.append(x)
    return out


def batch_nonsingular(mats: np.ndarray, p: int) -> np.ndarray:
    """Boolean mask of the invertible matrices in a stack of shape (B, n, n)."""
    A = np.array(mats, dtype=np.int64) % p
    B, n, _ = A.shape
    alive = np.ones(B, dtype=bool)
    inv_table = np.array([0] + [pow(x, -1, p) for x in range(1, p)], dtype=np.int64)
    idx = np.arange(B)
    for c in range(n):
        sub = A[:, c:, c]
        has = sub != 0
        ok = has.any(axis=1)
        alive &= ok
        k = c + np.argmax(has, axis=1)
        rows_c = A[idx, c, :].copy()
        rows_k = A[idx, k, :].copy()
        A[idx, c, :] = rows_k
        A[idx, k, :] = rows_c
        piv = inv_table[A[:, c, c]]
        A[:, c, :] = (A[:, c, :] * piv[:, None]) % p
        factors = A[:, c + 1:, c].copy()
        A[:, c + 1:, :] = (A[:, c + 1:, :] - factors[:, :, None] * A[:, c, None, :]) % p
    return alive


@dataclass(frozen=True, eq=False)
class FpMatrix:
    """Immutable dense matrix over F_p with a JSON form."""

    p: int
    array: np.ndarray

    def __post_init__(self):
        FieldSpec(self.p)
        a = asmat(self.array, self.p) if np.ndim(self.array) else zeros(0, 0)
        a.setflags(write=False)
        object.__setattr__(self, "array", a)

    @classmethod
    def from_entries(cls, p: int, rows: int, cols: int, entries) -> "FpMatrix":
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValueError("entries length must equal rows * cols")
        return cls(p, np.array(entries, dtype=np.int64).reshape(rows, cols))

    @classmethod
    def identity(cls, p: int, n: int) -> "FpMatrix":
        return cls(p, identity(n))

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    @property
    def entries(self) -> list[int]:
        return [int(x) for x in self.array.ravel()]

    def __eq__(self, other):
        return (isinstance(other, FpMatrix) and self.p == other.p
                and self.array.shape == other.array.shape
                and np.array_equal(self.array, other.array))

    def __hash__(self):
        return hash((self.p, self.array.shape, self.array.tobytes()))

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        return FpMatrix(self.p, mul(self.array, other.array, self.p))

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        return FpMatrix(self.p, self.array + other.array)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        return FpMatrix(self.p, self.array - other.array)

    def scale(self, c: int) -> "FpMatrix":
        return FpMatrix(self.p, self.array * c)

    @property
    def T(self) -> "FpMatrix":
        return FpMatrix(self.p, self.array.T)

    def rref(self) -> tuple["FpMatrix", list[int], int]:
        R, piv, rk = rref(self.array, self.p)
        return FpMatrix(self.p, R), piv, rk

    @property
    def rank(self) -> int:
        return rank(self.array, self.p)

    def kernel_basis(self) -> "FpMatrix":
        return FpMatrix(self.p, kernel_basis(self.array, self.p))

    def kron(self, other: "FpMatrix") -> "FpMatrix":
        return FpMatrix(self.p, kronecker(self.array, other.array, self.p))

    def inverse(self) -> "FpMatrix":
        return FpMatrix(self.p, inverse(self.array, self.p))

    def to_json(self) -> dict:
        return {"p": self.p, "rows": self.rows, "cols": self.cols, "entries": self.entries}

    @classmethod
    def from_json(cls, d: dict) -> "FpMatrix":
        return cls.from_entries(int(d["p"]), int(d["rows"]), int(d["cols"]), d["entries"])
