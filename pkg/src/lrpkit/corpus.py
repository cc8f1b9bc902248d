"""Seeded generators of test objects: algebras, modules, automorphisms and lrp bimodules."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import ffmat
from .algebra import (Algebra, Automorphism, automorphism_from_images, automorphism_from_linear,
                      elementary_abelian, truncated_polynomial_algebra)
from .bimodule import (Bimodule, conjugate_bimodule, direct_sum_bimodules, free_bimodule,
                       regular_bimodule, tensor_over_algebra, twisted_bimodule)
from .hopf import functor_F
from .module import (Module, direct_sum, quotient_module, random_module, regular_module,
                     syzygy, trivial_module)


@dataclass(frozen=True)
class CorpusConfig:
    seed: int = 0
    max_module_dim: int = 4
    max_bimodule_dim: int = 12


def small_group_algebras(p: int) -> list[Algebra]:
    """Group algebras in w-presentation whose enveloping algebra has dimension <= 36 (p = 2, 3)."""
    if p == 2:
        return [elementary_abelian(2, 1), truncated_polynomial_algebra(2, [4]), elementary_abelian(2, 2)]
    if p == 3:
        return [elementary_abelian(3, 1)]
    return [elementary_abelian(p, 1)]


def random_invertible(n: int, p: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        P = rng.integers(0, p, size=(n, n))
        if ffmat.is_invertible(P, p):
            return P


def random_automorphism(A: Algebra, rng: np.random.Generator, linear: bool = False) -> Automorphism:
    """w_i -> (invertible linear part) + (random element of rad^2, unless ``linear``)."""
    p = A.p
    n = len(A.generators)
    gens = list(A.generators)
    deep = [i for i in range(A.dim) if i != A.unit_index and i not in gens]
    while True:
        phi = random_invertible(n, p, rng)
        if linear:
            try:
                return automorphism_from_linear(A, phi)
            except ValueError:
                continue
        images = []
        for i in range(n):
            v = np.zeros(A.dim, dtype=np.int64)
            for j in range(n):
                v[gens[j]] = phi[j, i]
            if deep:
                v[deep] = rng.integers(0, p, size=len(deep))
            images.append(v)
        try:
            return automorphism_from_images(A, images)
        except ValueError:
            continue


def all_automorphisms(A: Algebra, limit: int = 4096) -> list[Automorphism]:
    """Every automorphism of a small truncated algebra, by trying all generator images in rad A."""
    p = A.p
    rad = A.aug_kernel
    n = len(A.generators)
    if p ** (rad.shape[1] * n) > limit:
        raise ValueError("automorphism group too large to enumerate")
    out = []
    for coeffs in itertools.product(range(p), repeat=rad.shape[1] * n):
        c = np.array(coeffs, dtype=np.int64).reshape(n, rad.shape[1])
        try:
            out.append(automorphism_from_images(A, [ffmat.mul(rad, c[i].reshape(-1, 1), p).reshape(-1)
                                                    for i in range(n)]))
        except ValueError:
            continue
    return out


def point_module(A: Algebra, c) -> Module:
    """A / A.(sum c_i w_i): induced from the shifted cyclic subgroup in direction c."""
    p = A.p
    x = np.zeros(A.dim, dtype=np.int64)
    for ci, g in zip(c, A.generators):
        x[g] = ci
    R = regular_module(A)
    image = A.right_mult(x % p)  # columns: b . x
    Q, _, _ = quotient_module(R, image)
    return Q


def random_group_module(A: Algebra, rng: np.random.Generator, max_dim: int = 4) -> Module:
    """Mixed-shape module: random quotients, point modules, syzygies, sums."""
    kind = int(rng.integers(0, 5))
    if kind == 0:
        return random_module(A, int(rng.integers(1, max_dim + 1)), rng)
    if kind == 1:
        c = rng.integers(0, A.p, size=len(A.generators))
        if not c.any():
            c[0] = 1
        return point_module(A, c)
    if kind == 2:
        return trivial_module(A) if rng.integers(0, 2) else syzygy(trivial_module(A))
    if kind == 3:
        M = random_module(A, int(rng.integers(1, max(2, max_dim // 2) + 1)), rng)
        return direct_sum(M, trivial_module(A))
    return random_module(A, int(rng.integers(1, max_dim + 1)), rng, conjugate=False)


def random_lrp_bimodule(A: Algebra, rng: np.random.Generator, max_dim: int = 12) -> Bimodule:
    """A seeded lrp bimodule of dimension <= max_dim, in a random basis."""
    d = A.dim
    choices = []
    while not choices:
        kind = int(rng.integers(0, 5))
        if kind == 0:
            B = twisted_bimodule(random_automorphism(A, rng), random_automorphism(A, rng))
        elif kind == 1:
            m = int(rng.integers(1, max(1, max_dim // d) + 1))
            B = functor_F(random_module(A, m, rng))
        elif kind == 2:
            B = regular_bimodule(A)
            if 2 * d <= max_dim:
                B = direct_sum_bimodules(B, twisted_bimodule(Automorphism.identity(A), random_automorphism(A, rng)))
        elif kind == 3:
            B = tensor_over_algebra(twisted_bimodule(random_automorphism(A, rng), Automorphism.identity(A)),
                                    functor_F(random_module(A, 1, rng)))
        else:
            B = free_bimodule(A) if d * d <= max_dim else regular_bimodule(A)
        if B.dim <= max_dim:
            choices.append(B)
    B = choices[0]
    return conjugate_bimodule(B, random_invertible(B.dim, A.p, rng))
