"""Regenerate the reference tables from scratch and diff them against the shipped data.

    python3 scripts/reproduce_tables.py            # idempotents and Lie dimensions
    python3 scripts/reproduce_tables.py --max-n 5  # quicker
"""

import argparse
import time

from descentlab.combinat import enumerate_partitions
from descentlab.golden import reference_idempotents, reference_lie_dimensions
from descentlab.higherlie import lie_dimension
from descentlab.modidem import check_idempotent_set, modular_idempotents


def idempotent_report(p, max_n):
    for n in range(2, max_n + 1):
        idem = modular_idempotents(n, p)
        ref = reference_idempotents(p, n)
        diff = sorted(lam for lam in ref if ref[lam] != idem[lam])
        status = "identical" if not diff else f"differs at {diff}"
        print(f"p={p} n={n}: {len(idem.order)} idempotents, invariants "
              f"{'ok' if not check_idempotent_set(idem) else 'FAILED'}, table {status}")


def lie_report(max_n):
    ref = reference_lie_dimensions()
    print(f"{'partition':<16}{'p=0':>6}{'p=2':>6}{'p=3':>6}")
    for n in range(2, max_n + 1):
        for lam in enumerate_partitions(n):
            dims = [lie_dimension(lam, p) for p in (0, 2, 3)]
            flag = "" if all(ref[(lam, p)] == d for p, d in zip((0, 2, 3), dims)) else "  <- differs"
            print(f"{str(lam):<16}" + "".join(f"{d:>6}" for d in dims) + flag)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    start = time.perf_counter()
    for p in (2, 3):
        idempotent_report(p, args.max_n)
    lie_report(args.max_n)
    print(f"done in {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
