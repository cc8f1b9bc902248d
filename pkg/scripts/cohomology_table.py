"""Tabulate dim Ext^i(k, k) and dim HH^i for small truncated polynomial algebras.

    python3 scripts/cohomology_table.py [-d 5]
"""

import argparse

from lrpkit.algebra import truncated_polynomial_algebra
from lrpkit.cohomology import ext_dims, hochschild_dims
from lrpkit.module import trivial_module

CASES = [(2, [2]), (2, [4]), (3, [3]), (5, [5]), (2, [2, 2]), (3, [3, 3])]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("-d", type=int, default=5)
    args = ap.parse_args()
    print(f"{'algebra':<28}{'Ext^i(k,k)':<26}HH^i")
    for p, exps in CASES:
        A = truncated_polynomial_algebra(p, exps)
        k = trivial_module(A)
        ext = list(ext_dims(k, k, args.d))
        hh = list(hochschild_dims(A, min(args.d, 3))) if A.dim <= 4 else "-"
        print(f"{'p=%d exps=%s' % (p, exps):<28}{str(ext):<26}{hh}")


if __name__ == "__main__":
    main()
