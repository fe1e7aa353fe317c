"""Per-ring summary of the corpus and the verification suite.

    python scripts/corpus_report.py [--json report.json] [--workers N]

Prints ring invariants, then the suite table, then what the claims that
exclude particular orders actually do at those orders.
"""

import argparse
import time

from ringgraph.corpus import DEFAULT_CORPUS, get_ring
from ringgraph.ringcore import center, commutator_set, commutator_subgroup, has_unity, is_commutative
from ringgraph.verify import EXCLUDED, run_suite


def ring_table(rings):
    print(f"{'ring':<8}{'|R|':>5}{'|Z|':>5}{'|K|':>5}{'|[R,R]|':>9}  {'comm':<5}unity")
    for R in rings:
        u = has_unity(R)
        print(f"{R.name:<8}{R.order:>5}{len(center(R)):>5}{len(commutator_set(R)):>5}"
              f"{len(commutator_subgroup(R)):>9}  {'yes' if is_commutative(R) else 'no':<5}"
              f"{'-' if u is None else R.names[u]}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--json")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    rings = [get_ring(n) for n in DEFAULT_CORPUS]
    ring_table(rings)
    print()
    t0 = time.perf_counter()
    rep = run_suite(rings, "all", workers=args.workers)
    dt = time.perf_counter() - t0
    print(rep.to_table())
    print(f"suite time {dt:.2f}s, exit code {rep.exit_code()}")

    broken = [r for r in rep.results if r.section == EXCLUDED and "fails" in r.detail]
    if broken:
        print("\nclaims that do not hold at the orders they exclude:")
        seen = set()
        for r in broken:
            key = (r.check, r.ring)
            if key not in seen:
                seen.add(key)
                print(f"  {r.check:<24} {r.ring:<8} e.g. r={r.r_name}")
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(rep.to_json())


if __name__ == "__main__":
    main()
