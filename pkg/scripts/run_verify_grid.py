"""Run the verification suite on every supported (p, n) and print one summary line each.

    python3 scripts/run_verify_grid.py [--max-degree 4] [--seed 0] [--json out.json]
"""

import argparse
import json
import time

from lrpkit.verify import SUPPORTED_N, SUPPORTED_P, verify_paper_suite


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", help="write all reports here")
    args = ap.parse_args()
    reports = []
    for n in SUPPORTED_N:
        for p in SUPPORTED_P:
            t = time.perf_counter()
            rep = verify_paper_suite(p, n, args.max_degree, seed=args.seed)
            dt = time.perf_counter() - t
            failed = [c.name for c in rep.checks if not c.passed]
            status = "all passed" if not failed else f"FAILED: {failed}"
            print(f"p={p} n={n}: {len(rep.checks)} checks, {status}  ({dt:.1f}s)")
            reports.append(rep.to_json())
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(reports, fh, indent=1, sort_keys=True)


if __name__ == "__main__":
    main()
