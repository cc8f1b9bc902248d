"""Command-line interface: ``lrpkit <command> ...``.

Every command reads and writes the JSON formats in :mod:`lrpkit.io`.  Output
goes to ``-o FILE`` when given, otherwise to stdout.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

import numpy as np

from . import io
from .algebra import (Automorphism, automorphism_from_linear, elementary_abelian, enveloping,
                      group_algebra_abelian, is_unipotent, truncated_polynomial_algebra)
from .bimodule import (Bimodule, free_bimodule, is_lrp, left_dual, regular_bimodule, right_dual,
                       tensor_over_algebra, trivial_bimodule, twisted_bimodule, verify_zigzag)
from .cohomology import DEFAULT_DEGREE, ext_dims, hochschild_dims, holm_check
from .hopf import G, check_GF_identity, functor_F
from .module import (Module, free_module, is_isomorphic, is_projective, jordan_module,
                     regular_module, syzygy_power, trivial_module)
from .varieties import rank_variety, tensor_product_property_check
from .verify import verify_paper_suite

DEFAULT_SEED = 0


class CliError(Exception):
    pass


def _emit(obj: dict, out: str | None) -> None:
    text = io.dumps(obj)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _algebra_from_args(args):
    if args.group:
        return group_algebra_abelian(args.p, args.group).truncated
    if args.exponents:
        return truncated_polynomial_algebra(args.p, args.exponents)
    return elementary_abelian(args.p, args.n)


def _linear_aut(A, spec: str | None):
    """Parse 'a,b;c,d' (rows) or a single scalar into an automorphism."""
    if not spec:
        return Automorphism.identity(A)
    rows = [[int(x) for x in r.split(",")] for r in spec.split(";")]
    return automorphism_from_linear(A, np.array(rows))


# -- new / check --------------------------------------------------------------------------


def cmd_new(args):
    A = _algebra_from_args(args)
    what = args.what
    if what == "algebra":
        obj = A.to_json()
    elif what == "trivial":
        obj = trivial_module(A).to_json()
    elif what == "regular":
        obj = regular_module(A).to_json()
    elif what == "free":
        obj = free_module(A, args.rank).to_json()
    elif what == "jordan":
        obj = jordan_module(A, args.size, args.generator).to_json()
    elif what == "regular-bimodule":
        obj = regular_bimodule(A).to_json()
    elif what == "free-bimodule":
        obj = free_bimodule(A, args.rank).to_json()
    elif what == "trivial-bimodule":
        obj = trivial_bimodule(A).to_json()
    elif what == "twisted":
        obj = twisted_bimodule(_linear_aut(A, args.alpha), _linear_aut(A, args.beta)).to_json()
    else:  # pragma: no cover - argparse restricts choices
        raise CliError(f"unknown object {what}")
    _emit(obj, args.output)


def cmd_check(args):
    X = io.load_any(args.file)
    if isinstance(X, Bimodule):
        info = {"kind": "bimodule", "dim": X.dim, "lrp": bool(is_lrp(X)) if X.base.is_local else None,
                "env_projective": bool(is_projective(X.inner)) if X.env.is_local else None}
        A = X.base
    else:
        A = X.algebra
        info = {"kind": "module", "dim": X.dim,
                "projective": bool(is_projective(X)) if A.is_local else None,
                "top_dim": X.top_dim if A.is_local else None}
    info["algebra"] = {"dim": A.dim, "unipotent": bool(is_unipotent(A)),
                       "enveloping_unipotent": bool(is_unipotent(enveloping(A))) if A.dim <= 9 else None}
    _emit(info, args.output)


# -- bimodules -----------------------------------------------------------------------------


def cmd_lrp(args):
    B = io.load_bimodule(args.file)
    _emit({"lrp": bool(is_lrp(B))}, args.output)


def cmd_tensor(args):
    B, C = io.load_bimodule(args.left), io.load_bimodule(args.right)
    _emit(tensor_over_algebra(B, C).to_json(), args.output)


def cmd_dual(args):
    B = io.load_bimodule(args.file)
    D = left_dual(B) if args.side == "left" else right_dual(B)
    _emit(D.to_json(), args.output)


def cmd_zigzag(args):
    r = verify_zigzag(io.load_bimodule(args.file))
    _emit({"ok": r.ok, "failing": list(r.failing)}, args.output)
    return 0 if r.ok else 1


def cmd_iso(args):
    X, Y = io.load_any(args.left), io.load_any(args.right)
    X = X.inner if isinstance(X, Bimodule) else X
    Y = Y.inner if isinstance(Y, Bimodule) else Y
    _emit({"isomorphic": is_isomorphic(X, Y, seed=args.seed)}, args.output)


# -- modules -------------------------------------------------------------------------------


def cmd_syzygy(args):
    X = io.load_any(args.file)
    M = X.inner if isinstance(X, Bimodule) else X
    out = syzygy_power(M, args.k)
    _emit(Bimodule(X.base, out).to_json() if isinstance(X, Bimodule) else out.to_json(), args.output)


# -- Hopf functors -----------------------------------------------------------------------------


def cmd_F(args):
    _emit(functor_F(io.load_module(args.file)).to_json(), args.output)


def cmd_G(args):
    _emit(G(io.load_bimodule(args.file)).to_json(), args.output)


def cmd_verify_gf(args):
    r = check_GF_identity(io.load_module(args.file), seed=args.seed)
    _emit({"isomorphic": r.isomorphic, "comparison_map_ok": r.comparison_ok}, args.output)
    return 0 if r else 1


# -- varieties -------------------------------------------------------------------------------


def cmd_variety(args):
    X = io.load_any(args.file)
    _emit(rank_variety(X).to_json(), args.output)


def cmd_tpp(args):
    M, N = io.load_module(args.left), io.load_module(args.right)
    ok = tensor_product_property_check(M, N)
    _emit({"holds": bool(ok)}, args.output)
    return 0 if ok else 1


# -- cohomology ---------------------------------------------------------------------------------


def cmd_ext(args):
    M, N = io.load_any(args.left), io.load_any(args.right)
    M = M.inner if isinstance(M, Bimodule) else M
    N = N.inner if isinstance(N, Bimodule) else N
    _emit(ext_dims(M, N, args.max_degree).to_json(), args.output)


def cmd_hh(args):
    A = io.load_algebra(args.file)
    out = hochschild_dims(A, args.max_degree).to_json()
    if args.holm:
        out["holm"] = bool(holm_check(A, args.max_degree))
    _emit(out, args.output)
    return 0 if out.get("holm", True) else 1


# -- verify --------------------------------------------------------------------------------------


def cmd_verify(args):
    try:
        report = verify_paper_suite(args.p, args.n, args.max_degree, seed=args.seed)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if args.format == "table":
        text = report.table() + "\n"
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        _emit(report.to_json(), args.output)
    return 0 if report.passed else 1


# -- parser ----------------------------------------------------------------------------------------


def _add_common(sp, seed=False, degree=False):
    sp.add_argument("-o", "--output", help="write JSON here instead of stdout")
    if seed:
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    if degree:
        sp.add_argument("-d", "--max-degree", type=int, default=DEFAULT_DEGREE)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lrpkit", description="Bimodules, rank varieties and "
                                 "cohomology over unipotent algebras on prime fields.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("new", help="write a standard object as JSON")
    sp.add_argument("what", choices=["algebra", "trivial", "regular", "free", "jordan",
                                     "regular-bimodule", "free-bimodule", "trivial-bimodule", "twisted"])
    sp.add_argument("-p", type=int, default=2)
    sp.add_argument("-n", type=int, default=1, help="rank of k(Z/p)^n (default algebra)")
    sp.add_argument("--exponents", type=int, nargs="+", help="k[w1..]/(wi^mi) instead")
    sp.add_argument("--group", type=int, nargs="+", help="group algebra of Z/q1 x ... (w-presentation)")
    sp.add_argument("--rank", type=int, default=1)
    sp.add_argument("--size", type=int, default=1)
    sp.add_argument("--generator", type=int, default=0)
    sp.add_argument("--alpha", help="left twist: rows 'a,b;c,d' of a linear map on the w's")
    sp.add_argument("--beta", help="right twist, same syntax")
    _add_common(sp)
    sp.set_defaults(func=cmd_new)

    sp = sub.add_parser("check", help="validate a module/bimodule file and report basic properties")
    sp.add_argument("file")
    _add_common(sp)
    sp.set_defaults(func=cmd_check)

    bim = sub.add_parser("bimod", help="bimodule operations").add_subparsers(dest="sub", required=True)
    sp = bim.add_parser("lrp")
    sp.add_argument("file")
    _add_common(sp)
    sp.set_defaults(func=cmd_lrp)
    for parent in (bim, sub):
        sp = parent.add_parser("tensor", help="tensor product over the algebra")
        sp.add_argument("left")
        sp.add_argument("right")
        _add_common(sp)
        sp.set_defaults(func=cmd_tensor)
        sp = parent.add_parser("dual", help="left or right dual of an lrp bimodule")
        sp.add_argument("--side", choices=["left", "right"], default="left")
        sp.add_argument("file")
        _add_common(sp)
        sp.set_defaults(func=cmd_dual)
    sp = bim.add_parser("zigzag")
    sp.add_argument("file")
    _add_common(sp)
    sp.set_defaults(func=cmd_zigzag)

    sp = sub.add_parser("iso", help="three-valued isomorphism test")
    sp.add_argument("left")
    sp.add_argument("right")
    _add_common(sp, seed=True)
    sp.set_defaults(func=cmd_iso)

    sp = sub.add_parser("syzygy", help="Omega^k (negative k: cosyzygy)")
    sp.add_argument("file")
    sp.add_argument("-k", type=int, default=1)
    _add_common(sp)
    sp.set_defaults(func=cmd_syzygy)

    hopf = sub.add_parser("hopf", help="the functors F and G").add_subparsers(dest="sub", required=True)
    for parent in (hopf, sub):
        sp = parent.add_parser("F")
        sp.add_argument("file")
        _add_common(sp)
        sp.set_defaults(func=cmd_F)
        sp = parent.add_parser("G")
        sp.add_argument("file")
        _add_common(sp)
        sp.set_defaults(func=cmd_G)
    sp = hopf.add_parser("verify-gf")
    sp.add_argument("file")
    _add_common(sp, seed=True)
    sp.set_defaults(func=cmd_verify_gf)

    var = sub.add_parser("variety", help="rank varieties at rational points").add_subparsers(
        dest="sub", required=True)
    sp = var.add_parser("compute")
    sp.add_argument("file")
    _add_common(sp)
    sp.set_defaults(func=cmd_variety)
    sp = var.add_parser("tpp", help="tensor product property for two modules")
    sp.add_argument("left")
    sp.add_argument("right")
    _add_common(sp)
    sp.set_defaults(func=cmd_tpp)

    coh = sub.add_parser("cohom", help="Ext and Hochschild dimensions").add_subparsers(
        dest="sub", required=True)
    for parent in (coh, sub):
        sp = parent.add_parser("ext")
        sp.add_argument("left")
        sp.add_argument("right")
        _add_common(sp, degree=True)
        sp.set_defaults(func=cmd_ext)
    sp = coh.add_parser("hh")
    sp.add_argument("file", help="algebra or module file")
    sp.add_argument("--holm", action="store_true", help="also compare with dim A x H^*(A, k)")
    _add_common(sp, degree=True)
    sp.set_defaults(func=cmd_hh)

    sp = sub.add_parser("verify", help="run the verification suite")
    sp.add_argument("-p", type=int, default=2)
    sp.add_argument("-n", type=int, default=1)
    sp.add_argument("-d", "--max-degree", type=int, default=4)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--format", choices=["json", "table"], default="json")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        rc = args.func(args)
    except (CliError, ValueError, FileNotFoundError, json.JSONDecodeError, KeyError) as exc:
        sys.stderr.write(f"lrpkit: error: {exc}\n")
        return 2
    return int(rc or 0)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
