"""Bound on dim S for every subgroup reached by the sweep, grouped by order and branch."""
import argparse
from collections import Counter

from drinfeld_obstruction.localglobal import elliptic_verify

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--p", type=int, nargs="+", default=[2, 3, 5])
ap.add_argument("--gen-bound", type=int, default=3, help="max number of generators per swept subgroup")
args = ap.parse_args()

for p in args.p:
    rep = elliptic_verify(p, args.gen_bound)
    tally = Counter((c["order"], c["branch"], c["type"], c["bound"]) for c in rep.checks)
    print(f"p = {p}: {len(rep.checks)} subgroups, all bounds 0: {rep.passed} ({rep.elapsed:.2f}s)")
    for (order, branch, kind, bound), n in sorted(tally.items(), key=lambda kv: (kv[0][0], kv[0][1], str(kv[0][2]))):
        print(f"  |G| = {order:3d}  type {kind}  {branch:6s}  bound {bound}  x{n}")
