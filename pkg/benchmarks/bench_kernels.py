"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Times the exhaustive FAT search (every k from n down to 1 on a graph whose
FAT chromatic number is 1, so the whole partition space is scanned) and
exact max-clique on constructed and random graphs.
"""

import argparse
import random
import time

from fatcolor import _pykernels
from fatcolor.construction import build_graph, plan_construction
from fatcolor.graph import Graph

try:
    from fatcolor import _ckernels
except ImportError:
    _ckernels = None


def full_fat_scan(mod, g):
    offsets, nbrs = g.csr
    for k in range(g.order, 0, -1):
        if mod.first_fat_partition(g.order, offsets, nbrs, k) is not None:
            return k
    return None


def clique(mod, g):
    offsets, nbrs = g.csr
    return len(mod.max_clique(g.order, offsets, nbrs))


def best_of(fn, repeat):
    times = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller instances")
    args = ap.parse_args()

    rng = random.Random(0)
    scan_n = 9 if args.quick else 11
    rand_n = 120 if args.quick else 200
    cases = [
        (f"chi-fat scan C_{scan_n}", full_fat_scan, Graph.cycle(scan_n)),
        ("clique G(k=2,a=2/5,n=3) 208v", clique, build_graph(plan_construction(2, "2/5", 3))[0]),
        ("clique G(k=3,a=2/7,n=3) 480v", clique, build_graph(plan_construction(3, "2/7", 3))[0]),
        (
            f"clique G({rand_n}, 0.5)",
            clique,
            Graph.from_edges(rand_n, [(u, v) for u in range(rand_n) for v in range(u + 1, rand_n) if rng.random() < 0.5]),
        ),
    ]
    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled extension not built; timing the Python kernels only")

    print(f"{'case':34s} " + " ".join(f"{name:>12s}" for name, _ in backends) + "   speedup  result")
    for label, fn, g in cases:
        row = []
        results = set()
        for _, mod in backends:
            t, res = best_of(lambda: fn(mod, g), args.repeat)
            row.append(t)
            results.add(res)
        assert len(results) == 1, f"backends disagree on {label}: {results}"
        speed = f"{row[0] / row[-1]:8.1f}x" if len(row) > 1 else "       -"
        print(f"{label:34s} " + " ".join(f"{t:11.4f}s" for t in row) + f" {speed}  {results.pop()}")


if __name__ == "__main__":
    main()
