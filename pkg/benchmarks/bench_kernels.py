"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
from __future__ import annotations

import argparse
import sys
from time import perf_counter

from cluster_forge import _backend
from cluster_forge import constructions as C
from cluster_forge import invariants as I
from cluster_forge.group_core import all_subgroups


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = perf_counter()
        fn()
        best = min(best, perf_counter() - t0)
    return best


def cases():
    holo = C.holomorph_model(105)
    masks = I._conjugate_masks(holo)
    full = (1 << holo.table.order) - 1
    G = C.symmetric_model(5, 1).table
    subs = [S for S in all_subgroups(G) if S.order < G.order]

    def dimino(k):
        for S in subs:
            for x in range(G.order):
                if x not in S:
                    k.dimino_extend(G.mul_table, S.members, S.generators(), x)
                    break

    return [
        ("dimino_extend, S_5 subgroups", dimino),
        ("irredundant_search, holomorph 105, max 4", lambda k: k.irredundant_search(masks, 4, full)),
        ("count_minimal_of_size, holomorph 105, k=3", lambda k: k.count_minimal_of_size(masks, 3)),
        ("triplet_grid, N=200", lambda k: k.triplet_grid(200)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _backend.compiled_kernels is None:
        print("compiled kernels are not built; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'case':45} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in cases():
        tp = _best(lambda: fn(_backend.python_kernels), args.repeat)
        tc = _best(lambda: fn(_backend.compiled_kernels), args.repeat)
        print(f"{name:45} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
