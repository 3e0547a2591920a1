"""Sweep rank(Xi^q e_mu F S_n) against the cycle-type census and write a CSV.

    python3 scripts/conjecture_sweep.py --n 2-6 --p 2,3 --out sweep.csv

Compositions (not only partitions) are swept with --all-compositions.
"""

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from descentlab.combinat import enumerate_compositions, enumerate_partitions
from descentlab.modidem import modular_idempotents
from descentlab.pivots import conjecture_checker, conjecture_csv


def parse_range(text):
    if "-" in text:
        lo, hi = text.split("-")
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",")]


def sweep(args):
    n, p, all_comps = args
    idem = modular_idempotents(n, p)
    shapes = enumerate_compositions(n) if all_comps else enumerate_partitions(n)
    return [conjecture_checker(q, mu, p, idem) for q in shapes for mu in idem.order[::-1]]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", default="2-5", help="degrees, e.g. 2-6 or 4,5")
    ap.add_argument("--p", default="2,3", help="primes, comma separated")
    ap.add_argument("--all-compositions", action="store_true")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out")
    args = ap.parse_args()
    tasks = [(n, p, args.all_compositions) for p in parse_range(args.p) for n in parse_range(args.n)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            chunks = list(pool.map(sweep, tasks))
    else:
        chunks = [sweep(t) for t in tasks]
    rows = [r for chunk in chunks for r in chunk]
    text = conjecture_csv(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    misses = sum(r.verdict != "match" for r in rows)
    print(f"{len(rows)} entries, {misses} mismatches", file=sys.stderr)
    return 1 if misses else 0


if __name__ == "__main__":
    sys.exit(main())
