"""Time the pure-Python and compiled kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]

Prints one row per (kernel, workload) with the best wall time of each
backend and the speedup, then checks that both backends agree.
"""

import argparse
import time

from symbreak import autgroup, generators, kernels
from symbreak.corpus import cycle, petersen, prism


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def _search_args(g):
    indptr, indices = g.csr
    colors = [0] * g.n
    order = autgroup._bfs_order(g, 0)
    return indptr, indices, colors, colors, order


def workloads():
    tree = generators.truncate(generators.stretched_tree(1.0), 30)
    t3 = generators.truncate(generators.homogeneous_tree(3), 6)
    out = []
    for name, g in (("stretched R=30", tree), ("T3 R=6", t3), ("C60", cycle(60))):
        indptr, indices = g.csr
        out.append(("refine", name, lambda b, i=indptr, j=indices, n=g.n: b.refine(i, j, [0] * n)))
    for name, g, cap in (("prism8", prism(8), 10_000), ("petersen", petersen(), 10_000), ("C40", cycle(40), 10_000)):
        indptr, indices, cp, cq, order = _search_args(g)
        out.append(("search", name, lambda b, a=(indptr, indices, cp, cq, order), c=cap: b.search(*a, 0, c)))
    # exhaustive over d**n labelings
    rot = [1, 2, 3, 0, 5, 4, 6, 7, 8, 9, 10, 11]
    out.append(("count_preserved", "n=12 d=3", lambda b, p=rot: b.count_preserved(p, 3)))
    pet = [p.images for p in autgroup.enumerate_automorphisms(petersen()).elements]
    out.append(("preservation_table", "petersen x 2^10", lambda b, p=pet: b.preservation_table(p, 10, 2)))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = kernels.available()
    backends = [kernels.load(n) for n in names]
    if "cython" not in names:
        print("compiled kernels not built; timing the pure-Python backend only")
    header = f"{'kernel':<20}{'workload':<18}" + "".join(f"{n:>12}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    mismatches = 0
    for kernel, label, fn in workloads():
        times, results = [], []
        for b in backends:
            t, r = _best(lambda: fn(b), args.repeat)
            times.append(t)
            results.append(r)
        if any(r != results[0] for r in results[1:]):
            mismatches += 1
        row = f"{kernel:<20}{label:<18}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)
    print("backends agree" if mismatches == 0 else f"{mismatches} workloads disagree between backends")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
