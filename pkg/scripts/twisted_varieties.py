"""Print the rank varieties of twisted bimodules next to the graph they should equal.

    python3 scripts/twisted_varieties.py
"""

import numpy as np

from lrpkit.algebra import Automorphism, automorphism_from_linear, elementary_abelian, scalar_automorphism
from lrpkit.bimodule import twisted_bimodule
from lrpkit.varieties import cyclic_twist_point, graph_variety, rank_variety


def fmt(V):
    return "{" + ", ".join(str(pt) for pt in V.points) + "}"


def main() -> None:
    for p in (3, 5):
        A = elementary_abelian(p, 1)
        I = Automorphism.identity(A)
        for g in range(1, p):
            V = rank_variety(twisted_bimodule(scalar_automorphism(A, g), I))
            print(f"p={p} gamma={g}: V = {fmt(V)}  expected {{{cyclic_twist_point(g, p)}}}")
    for p in (2, 3):
        A = elementary_abelian(p, 2)
        I = Automorphism.identity(A)
        for name, phi in [("identity", [[1, 0], [0, 1]]), ("swap", [[0, 1], [1, 0]]),
                          ("upper", [[1, 1], [0, 1]])]:
            V = rank_variety(twisted_bimodule(automorphism_from_linear(A, phi), I))
            same = V == graph_variety(np.array(phi), p)
            print(f"p={p} {name}: {len(V)} points, equals graph of -phi: {same}  {fmt(V)}")


if __name__ == "__main__":
    main()
