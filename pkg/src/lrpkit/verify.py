"""End-to-end verification suite over k(Z/p)^n on seeded corpora.

Each check is a named, deterministic predicate; the report lists them in a
fixed order with pass/fail and a short detail string.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import ffmat
from .algebra import (Automorphism, automorphism_from_linear, elementary_abelian, enveloping,
                      hopf_structure, is_unipotent, scalar_automorphism,
                      truncated_polynomial_algebra)
from .bimodule import (free_bimodule, hom_tensor_iso_check, is_lrp, left_dual, regular_bimodule,
                       right_dual, tensor_over_algebra, trivial_bimodule, twisted_actions,
                       twisted_bimodule,
                       verify_zigzag)
from .cohomology import (aut_action_on_cohomology, ext_dims, ext_dims_oracle, holm_check,
                         minimal_resolution, padded_resolution, standard_complex)
from .corpus import point_module, random_automorphism, random_group_module, random_lrp_bimodule
from .hopf import (G, check_F_monoidal, check_GF_identity, functor_F, functor_F_literal,
                   sincerity_witness)
from .module import (direct_sum, is_isomorphic, is_projective, jordan_module, random_module,
                     regular_module, syzygy, trivial_module)
from .varieties import (ProjectivePoint, cyclic_twist_point, graph_variety, lrp_consistency_check,
                        rank_variety, tensor_product_property_check, variety_from_actions)

SUPPORTED_P = (2, 3, 5)
SUPPORTED_N = (1, 2)
#: bimodule-level checks run on k(Z/p)^n only up to this algebra dimension
BIMODULE_DIM_BUDGET = 9


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = field(default=0.0, compare=False)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": bool(self.passed), "detail": self.detail}


@dataclass
class Report:
    p: int
    n: int
    max_degree: int
    seed: int
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "max_degree": self.max_degree, "seed": self.seed,
                "passed": self.passed, "checks": [c.to_json() for c in self.checks]}

    def table(self) -> str:
        w = max(len(c.name) for c in self.checks)
        lines = [f"verify p={self.p} n={self.n} max_degree={self.max_degree} seed={self.seed}"]
        for c in self.checks:
            lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.name:<{w}}  {c.detail}")
        lines.append(f"{sum(c.passed for c in self.checks)}/{len(self.checks)} checks passed")
        return "\n".join(lines)


def _all(it) -> bool:
    return all(bool(x) for x in it)


def verify_paper_suite(p: int, n: int, max_degree: int = 4, seed: int = 0,
                       samples: int = 4) -> Report:
    """Run every check on k(Z/p)^n; raises ValueError off the supported grid."""
    if p not in SUPPORTED_P or n not in SUPPORTED_N:
        raise ValueError(f"unsupported grid point (p={p}, n={n}); "
                         f"p must be in {SUPPORTED_P} and n in {SUPPORTED_N}")
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    A = elementary_abelian(p, n)
    # bimodule computations scale with (dim A)^3; fall back to the cyclic factor when too big
    Ab = A if A.dim <= BIMODULE_DIM_BUDGET else elementary_abelian(p, 1)
    scope = f"k(Z/{p})^{len(Ab.generators)}"
    rng = np.random.default_rng(seed)
    mods = [random_group_module(A, rng, max_dim=min(4, A.dim)) for _ in range(samples)]
    bmods = [random_lrp_bimodule(Ab, rng, max_dim=max(12, Ab.dim)) for _ in range(samples)]
    auts = [random_automorphism(Ab, rng) for _ in range(samples)]
    I = Automorphism.identity(Ab)
    checks: list[CheckResult] = []

    def run(name, fn):
        t = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed report
            ok, detail = False, f"error: {type(exc).__name__}: {exc}"
        checks.append(CheckResult(name, bool(ok), detail, time.perf_counter() - t))

    # -- algebras ----------------------------------------------------------------------
    def unipotence():
        algs = [B for B in (A, Ab, truncated_polynomial_algebra(p, [p * p]))
                if B.dim <= BIMODULE_DIM_BUDGET]
        ok = all((not is_unipotent(B)) or is_unipotent(enveloping(B)) for B in algs)
        return ok and is_unipotent(A), f"{len(algs)} algebras of dimension <= {BIMODULE_DIM_BUDGET}"
    run("unipotence passes to the enveloping algebra", unipotence)
    run("Hopf axioms of the group algebra", lambda: (hopf_structure(A).verify(), str(A)))

    # -- bimodules ------------------------------------------------------------------------
    run("lrp membership of standard bimodules",
        lambda: (is_lrp(regular_bimodule(Ab)) and is_lrp(free_bimodule(Ab))
                 and not is_lrp(trivial_bimodule(Ab)), scope))
    run("lrp closed under tensor over the algebra",
        lambda: (_all(is_lrp(tensor_over_algebra(B, C)) for B, C in zip(bmods, bmods[1:])), scope))

    def unit_laws():
        R = regular_bimodule(Ab)
        return _all(is_isomorphic(tensor_over_algebra(R, B).inner, B.inner)
                    and is_isomorphic(tensor_over_algebra(B, R).inner, B.inner) for B in bmods), scope
    run("unit laws for the tensor product", unit_laws)

    def double_dual():
        return _all(is_isomorphic(right_dual(left_dual(B)).inner, B.inner)
                    and is_isomorphic(left_dual(right_dual(B)).inner, B.inner) for B in bmods), scope
    run("double duals recover the bimodule", double_dual)
    run("dual of the regular bimodule is regular",
        lambda: (is_isomorphic(left_dual(regular_bimodule(Ab)).inner, regular_bimodule(Ab).inner)
                 and is_isomorphic(right_dual(regular_bimodule(Ab)).inner, regular_bimodule(Ab).inner),
                 scope))

    def zigzags():
        objs = [regular_bimodule(Ab), twisted_bimodule(auts[0], auts[1])] + bmods
        if Ab.dim <= 4:
            objs.append(free_bimodule(Ab))
        res = [verify_zigzag(B) for B in objs]
        bad = [f for r in res for f in r.failing]
        return not bad, f"{len(objs)} bimodules" + (f"; failing {bad}" if bad else "")
    run("rigidity: zig-zag identities for both duals", zigzags)

    def hom_tensor():
        pairs = [(regular_bimodule(Ab), regular_bimodule(Ab))] + list(zip(bmods, bmods[1:]))[:2]
        return _all(hom_tensor_iso_check(B, C) for B, C in pairs), f"{len(pairs)} pairs"
    run("Hom-tensor map and adjunction are bijective", hom_tensor)

    def bass():
        ok = True
        for a, b in zip(auts, auts[1:]):
            lhs = tensor_over_algebra(twisted_bimodule(I, a), twisted_bimodule(I, b))
            ok &= bool(is_isomorphic(lhs.inner, twisted_bimodule(I, a @ b).inner))
        return ok, f"{len(auts) - 1} pairs, {scope}"
    run("twisted bimodules compose: 1_a (x) 1_b = 1_(ab)", bass)

    def twist_trivial():
        lin = [automorphism_from_linear(Ab, np.eye(len(Ab.generators), dtype=int) * c)
               for c in range(1, p)]
        ok = True
        R = regular_bimodule(Ab)
        for a in lin:
            iso = is_isomorphic(twisted_bimodule(a, I).inner, R.inner)
            ok &= (iso is True) == a.is_identity
        return ok, f"{len(lin)} scalar twists"
    run("twisted bimodule is regular iff the twist is trivial", twist_trivial)

    # -- Hopf functors ----------------------------------------------------------------------
    fmods = [M for M in mods if M.dim * Ab.dim <= 16 and M.algebra == Ab] or \
        [random_module(Ab, 2, rng), trivial_module(Ab)]
    jordans = [jordan_module(Ab, s) for s in range(1, p + 1)]
    run("GF is the identity (explicit comparison map)",
        lambda: (_all(check_GF_identity(M) for M in fmods + jordans), f"{len(fmods) + len(jordans)} modules"))
    run("F is monoidal",
        lambda: (_all(check_F_monoidal(M, N) for M, N in zip(fmods, fmods[1:] + fmods[:1])
                      if M.dim * N.dim <= 6) and bool(check_F_monoidal(jordans[-1], trivial_module(Ab))), scope))
    run("F agrees with literal induction",
        lambda: (_all(is_isomorphic(functor_F(M).inner, functor_F_literal(M).inner)
                      for M in fmods if M.dim <= 3), scope))
    run("image of F is lrp", lambda: (_all(is_lrp(functor_F(M)) for M in fmods + jordans), scope))
    run("sincerity: env-projective iff G projective",
        lambda: (_all(sincerity_witness(B) for B in bmods + [free_bimodule(Ab), regular_bimodule(Ab)]),
                 f"{len(bmods) + 2} bimodules"))
    run("G of a twisted bimodule is k",
        lambda: (_all(G(twisted_bimodule(a, I)).dim == 1 for a in auts), scope))

    # -- varieties ----------------------------------------------------------------------------
    if n == 1:
        A1 = elementary_abelian(p, 1)
        I1 = Automorphism.identity(A1)

        def cyclic():
            ok = True
            for g in range(1, p):
                V = rank_variety(twisted_bimodule(scalar_automorphism(A1, g), I1))
                ok &= V.points == (cyclic_twist_point(g, p),)
            return ok, f"{p - 1} twists over P^1(F_{p})"
        run("cyclic twist variety is the single point [-1/gamma:1]", cyclic)
        if p == 3:
            run("cyclic twist variety = {[1:1]} for gamma=2",
                lambda: (str(rank_variety(twisted_bimodule(scalar_automorphism(A1, 2), I1)).points[0])
                         == "[1:1]", "P^1(F_3)"))
    else:
        def graphs():
            phis = [np.array([[1, 0], [0, 1]]), np.array([[0, 1], [1, 0]]), np.array([[1, 1], [0, 1]])]
            if p > 2:
                phis.append(np.array([[2, 0], [0, 1]]))
            ok = True
            for phi in phis:
                a = automorphism_from_linear(A, phi)
                if A.dim <= BIMODULE_DIM_BUDGET:
                    V = rank_variety(twisted_bimodule(a, Automorphism.identity(A)))
                else:
                    left, right = twisted_actions(a, Automorphism.identity(A))
                    V = variety_from_actions(left + right, p)
                ok &= V == graph_variety(phi, p, sign=-1)
            return ok, f"{len(phis)} linear twists over P^3(F_{p})"
        run("twist variety is the graph {phi(a) = -b}", graphs)
        if p == 2:
            run("swap-twist variety, 3 points",
                lambda: (len(rank_variety(twisted_bimodule(automorphism_from_linear(A, [[0, 1], [1, 0]]),
                                                           Automorphism.identity(A)))) == 3, "P^3(F_2)"))
    run("lrp bimodules avoid the coordinate blocks",
        lambda: (_all(lrp_consistency_check(B) for B in bmods + [twisted_bimodule(I, a) for a in auts])
                 if Ab.is_elementary_abelian else True, scope))
    run("tensor product property at rational points",
        lambda: (_all(tensor_product_property_check(M, N) for M, N in zip(mods, mods[1:] + mods[:1])),
                 f"{len(mods)} pairs"))
    run("variety empty iff projective",
        lambda: (_all(rank_variety(M).is_empty == is_projective(M)
                      for M in mods + [regular_module(A), trivial_module(A)]), f"{len(mods) + 2} modules"))
    run("variety of a direct sum is the union",
        lambda: (_all(rank_variety(direct_sum(M, N)) == (rank_variety(M) | rank_variety(N))
                      for M, N in zip(mods, mods[1:])), scope))
    run("variety invariant under syzygy",
        lambda: (_all(rank_variety(syzygy(M)) == rank_variety(M) for M in mods if M.dim * A.dim <= 64), scope))

    def points():
        dirs = [np.eye(n, dtype=int)[0]] + ([np.array([1, 1])] if n == 2 else [])
        return _all(rank_variety(point_module(A, c)).points == (ProjectivePoint.make(c, p),)
                    for c in dirs), f"{len(dirs)} directions"
    run("point modules have one-point varieties", points)

    # -- cohomology ---------------------------------------------------------------------------
    k = trivial_module(A)

    def ext_k():
        d = ext_dims(k, k, max_degree).dims
        want = tuple(comb(i + n - 1, n - 1) for i in range(max_degree + 1))
        oracle = ext_dims_oracle(k, k, max_degree, seed=seed).dims
        return d == want == oracle, f"dims {list(d)}"
    run("Ext(k,k) dimensions (minimal, padded and closed form agree)", ext_k)

    def resolutions():
        R = minimal_resolution(k, max_degree)
        S = standard_complex(A, max_degree)
        P = padded_resolution(k, max_degree, seed=seed)
        return (R.is_exact() and R.is_minimal() and S.is_exact() and S.is_minimal()
                and P.is_exact() and R.ranks == S.ranks), f"ranks {list(R.ranks)}"
    run("resolutions are exact and minimal", resolutions)
    run("Ext of a projective vanishes in positive degree",
        lambda: (ext_dims(regular_module(A), k, max_degree).dims[1:] == (0,) * max_degree, str(A)))

    Ah = A if A.dim <= BIMODULE_DIM_BUDGET else elementary_abelian(p, 1)
    hdeg = min(max_degree, 4)
    run("Hochschild dims = dim A x group cohomology dims",
        lambda: (holm_check(Ah, hdeg), f"k(Z/{p})^{len(Ah.generators)}, degrees <= {hdeg}"))

    def action_mult():
        AA = elementary_abelian(p, n)
        ok = True
        for _ in range(2):
            a, b = (random_automorphism(AA, rng, linear=True) for _ in range(2))
            for d in (1, 2):
                lhs = aut_action_on_cohomology(a @ b, d)
                rhs = ffmat.mul(aut_action_on_cohomology(a, d), aut_action_on_cohomology(b, d), p)
                ok &= np.array_equal(lhs, rhs)
        return ok, "degrees 1, 2"
    run("automorphism action on Ext is multiplicative", action_mult)
    if n == 2:
        run("swap permutes the degree-one classes",
            lambda: (np.array_equal(aut_action_on_cohomology(automorphism_from_linear(A, [[0, 1], [1, 0]]), 1),
                                    np.array([[0, 1], [1, 0]])), "Ext^1"))
    if p > 2:
        def diag():
            c = 2
            phi = np.eye(n, dtype=int)
            phi[0, 0] = c
            T = aut_action_on_cohomology(automorphism_from_linear(A, phi), 1)
            s = int(T[0, 0])
            ok = s in (c % p, pow(c, -1, p)) and s != 1 and not T[0, 1:].any() and not T[1:, 0].any()
            return ok, f"degree-one scalar {s} for c={c}"
        run("diagonal twist moves the first degree-one class", diag)
    return Report(p, n, max_degree, seed, checks)
