"""Recompute the frozen golden values in tests/data/goldens.json.

Every number here comes from the plain-Python oracles in tests/oracles.py
applied to non-minimal (padded) resolutions or to raw action matrices, never
from the minimal-resolution or variety code paths that the tests check.

    python3 scripts/freeze_goldens.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from lrpkit.algebra import (Automorphism, automorphism_from_linear, elementary_abelian,  # noqa: E402
                            scalar_automorphism, truncated_polynomial_algebra)
from lrpkit.bimodule import free_bimodule, regular_bimodule, twisted_bimodule  # noqa: E402
from lrpkit.cohomology import padded_resolution  # noqa: E402
from lrpkit.module import trivial_module  # noqa: E402
from tests import oracles  # noqa: E402


def cochain_maps(R, N):
    """Coboundaries of Hom(P_., N) built entry by entry in plain Python."""
    A = R.algebra
    dA, p = A.dim, A.p
    NB = [oracles.to_lists(m) for m in N.basis_actions]
    dn = N.dim
    maps = []
    for i in range(1, len(R.ranks)):
        r, rp = R.ranks[i], R.ranks[i - 1]
        D = oracles.to_lists(R.differentials[i])
        M = [[0] * (rp * dn) for _ in range(r * dn)]
        for j in range(r):
            col = j * dA + A.unit_index
            for k in range(rp):
                coeffs = [D[k * dA + b][col] for b in range(dA)]
                for x in range(dn):
                    for y in range(dn):
                        M[j * dn + x][k * dn + y] = sum(c * NB[b][x][y] for b, c in enumerate(coeffs)) % p
        maps.append(M)
    return maps


def ext_oracle(M, N, d, seed=7):
    R = padded_resolution(M, d + 1, extra=1, seed=seed)
    return oracles.cohomology_dims(list(R.ranks), cochain_maps(R, N), N.dim, M.p, d)


def tensor_dim_oracle(X, Y):
    p = X.p
    rows = []
    dx, dy = X.dim, Y.dim
    for V, U in zip(X.right_actions, Y.left_actions):
        V, U = oracles.to_lists(V), oracles.to_lists(U)
        for a in range(dx):
            for b in range(dy):
                # x_a . g (x) y_b - x_a (x) g . y_b
                v = [0] * (dx * dy)
                for c in range(dx):
                    v[c * dy + b] += V[c][a]
                for c in range(dy):
                    v[a * dy + c] -= U[c][b]
                rows.append([t % p for t in v])
    return dx * dy - oracles.rank_mod_p(rows, p)


def main() -> None:
    g: dict = {"ext_k_k": {}, "hochschild": {}, "variety": {}, "tensor_dim": {}, "hom_dim": {}}
    for p, exps, d in [(2, [2], 6), (3, [3], 6), (2, [2, 2], 4), (3, [3, 3], 3), (2, [4], 4)]:
        A = truncated_polynomial_algebra(p, exps)
        k = trivial_module(A)
        g["ext_k_k"][f"p={p} exps={exps}"] = ext_oracle(k, k, d)
    for p, exps, d in [(2, [2], 6), (3, [3], 4), (2, [2, 2], 3)]:
        A = truncated_polynomial_algebra(p, exps)
        R = regular_bimodule(A).inner
        g["hochschild"][f"p={p} exps={exps}"] = ext_oracle(R, R, d)
    g["hochschild"]["p=3 exps=[3] degree0"] = ext_oracle(regular_bimodule(truncated_polynomial_algebra(3, [3])).inner,
                                                         regular_bimodule(truncated_polynomial_algebra(3, [3])).inner, 0)
    # env resolution of k over kZ/2: ranks of a minimal resolution = dims of Ext(k, k) over env
    E_k = trivial_module(regular_bimodule(elementary_abelian(2, 1)).env)
    g["ext_k_k"]["env p=2 exps=[2]"] = ext_oracle(E_k, E_k, 3)

    for p in (3, 5):
        A = elementary_abelian(p, 1)
        I = Automorphism.identity(A)
        for gamma in range(1, p):
            B = twisted_bimodule(scalar_automorphism(A, gamma), I)
            g["variety"][f"cyclic p={p} gamma={gamma}"] = [list(x) for x in oracles.variety(B.inner.actions, p)]
    for p in (2, 3):
        A = elementary_abelian(p, 2)
        I = Automorphism.identity(A)
        for name, phi in [("identity", [[1, 0], [0, 1]]), ("swap", [[0, 1], [1, 0]]),
                          ("upper", [[1, 1], [0, 1]])]:
            B = twisted_bimodule(automorphism_from_linear(A, phi), I)
            g["variety"][f"elementary p={p} {name}"] = [list(x) for x in oracles.variety(B.inner.actions, p)]

    for p, exps in [(2, [2]), (3, [3]), (2, [2, 2])]:
        A = truncated_polynomial_algebra(p, exps)
        F = free_bimodule(A)
        g["tensor_dim"][f"env(x)env p={p} exps={exps}"] = tensor_dim_oracle(F, F)
        R = regular_bimodule(A)
        g["tensor_dim"][f"A(x)A p={p} exps={exps}"] = tensor_dim_oracle(R, R)
        g["hom_dim"][f"End_env(A) p={p} exps={exps}"] = oracles.hom_dim(R.inner.actions, R.inner.actions, p)
        k = trivial_module(A)
        g["hom_dim"][f"Hom(k,A) p={p} exps={exps}"] = oracles.hom_dim(
            k.actions, [np.asarray(A.left_regular[gen]) for gen in A.generators], p)

    out = ROOT / "tests" / "data" / "goldens.json"
    out.write_text(json.dumps(g, indent=1, sort_keys=True) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
