"""JSON file formats.

matrix    {"p", "rows", "cols", "entries"}              (row-major entries)
algebra   {"kind": "truncated", "p", "exponents"}
          {"kind": "group", "p", "orders"}
          {"kind": "env" | "opposite", "base": algebra}
          {"kind": "table", "p", "dim", "labels", "unit", "generators", "augmentation", "mult"}
module    {"algebra", "dim", "actions": {generator name: matrix}}
bimodule  module over {"kind": "env", ...} plus {"split": {"u": [...], "v": [...]}}
variety   {"p", "ambient", "points": [[...], ...]}
dims      {"dims": [...]}

Output is canonical (sorted keys, fixed separators) so identical inputs give
byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .algebra import (Algebra, enveloping, group_algebra_abelian, opposite, table_algebra,
                      truncated_polynomial_algebra)
from .bimodule import Bimodule
from .ffmat import FpMatrix
from .module import Module
from .varieties import RankVariety


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def to_json(x) -> dict:
    if isinstance(x, (Algebra, Module, Bimodule, FpMatrix, RankVariety)):
        return x.to_json()
    if hasattr(x, "to_json"):
        return x.to_json()
    raise TypeError(f"no JSON form for {type(x).__name__}")


def save(x, path) -> None:
    Path(path).write_text(dumps(to_json(x)))


def load_json(path) -> dict:
    return json.loads(Path(path).read_text())


def algebra_from_json(d: dict) -> Algebra:
    kind = d.get("kind")
    if kind == "truncated":
        return truncated_polynomial_algebra(int(d["p"]), d["exponents"])
    if kind == "group":
        return group_algebra_abelian(int(d["p"]), d["orders"]).algebra
    if kind == "env":
        return enveloping(algebra_from_json(d["base"]))
    if kind == "opposite":
        return opposite(algebra_from_json(d["base"]))
    if kind == "table":
        dim = int(d["dim"])
        mult = np.array(d["mult"], dtype=np.int64).reshape(dim, dim, dim)
        return table_algebra(int(d["p"]), mult, int(d["unit"]), d["generators"],
                             d["augmentation"], labels=d.get("labels"))
    raise ValueError(f"unknown algebra kind {kind!r}")


def _generator_names(A: Algebra) -> list[str]:
    if A.kind == "env":
        n = len(A.generators) // 2
        return [f"u{i + 1}" for i in range(n)] + [f"v{i + 1}" for i in range(n)]
    return A.generator_labels


def module_from_json(d: dict, check: bool = True) -> Module:
    A = algebra_from_json(d["algebra"])
    dim = int(d["dim"])
    acts = d["actions"]
    names = _generator_names(A)
    if isinstance(acts, dict):
        missing = [n for n in names if n not in acts]
        if missing:
            raise ValueError(f"missing actions for generators {missing}")
        mats = [FpMatrix.from_json(acts[n]) for n in names]
    else:
        mats = [FpMatrix.from_json(m) for m in acts]
    for m in mats:
        if m.p != A.p or (m.rows, m.cols) != (dim, dim):
            raise ValueError("action matrix has the wrong field or shape")
    return Module(A, dim, tuple(m.array for m in mats), check=check)


def bimodule_from_json(d: dict, check: bool = True) -> Bimodule:
    M = module_from_json(d, check=check)
    if M.algebra.kind != "env":
        raise ValueError("a bimodule file must describe a module over an enveloping algebra")
    return Bimodule(M.algebra.base, M)


def variety_from_json(d: dict) -> RankVariety:
    return RankVariety.from_json(d)


def load_algebra(path) -> Algebra:
    d = load_json(path)
    # accept a module or bimodule file too and take its (base) algebra
    if "algebra" not in d:
        return algebra_from_json(d)
    A = algebra_from_json(d["algebra"])
    return A.base if "split" in d and A.base is not None else A


def load_module(path) -> Module:
    return module_from_json(load_json(path))


def load_bimodule(path) -> Bimodule:
    return bimodule_from_json(load_json(path))


def load_any(path) -> Module | Bimodule:
    d = load_json(path)
    M = module_from_json(d)
    if M.algebra.kind == "env":
        return Bimodule(M.algebra.base, M)
    return M
