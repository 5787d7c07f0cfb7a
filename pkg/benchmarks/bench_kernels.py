"""Compare the compiled and pure-numpy kernel backends on matched workloads.

Each workload drives one kernel through its public entry point, on fresh
objects every call so per-object caches cannot hide the kernel cost.  The
two backends must return identical values before any timing is reported.

Run:  python3 benchmarks/bench_kernels.py [--repeat N] [--seed S]
"""

import argparse
import random
import time

from hyperchrom import (
    Hypergraph,
    chromatic_polynomial,
    count_L_colorings,
    count_proper_colorings,
    list_color_function_exact,
    prop1_rhs,
    scan_assignments_one_extra_color,
)
from hyperchrom._kernels import available_backends, get_backend, set_backend
from hyperchrom.generators import random_assignment


def _random_triples(n, m, rng):
    edges = set()
    while len(edges) < m:
        edges.add(tuple(sorted(rng.sample(range(1, n + 1), 3))))
    return sorted(edges)


def build_workloads(seed):
    rng = random.Random(seed)
    e_poly = _random_triples(11, 14, rng)
    e_brute = _random_triples(9, 10, rng)
    e_census = _random_triples(10, 12, rng)
    e_scan = _random_triples(8, 4, rng)
    census_L = random_assignment(10, 3, 5, rng)
    pairs = []
    for _ in range(200):
        pairs.append(
            (_random_triples(8, 5, rng), random_assignment(8, 3, 5, rng))
        )

    def w_poly():
        return chromatic_polynomial(Hypergraph(11, e_poly)).to_pairs()

    def w_proper():
        return count_proper_colorings(Hypergraph(9, e_brute), 4)

    def w_lists():
        return [count_L_colorings(Hypergraph(8, es), L) for es, L in pairs]

    def w_exact():
        return list_color_function_exact(
            Hypergraph(5, [(1, 2, 3), (3, 4, 5)]), 2
        )[0]

    def w_census():
        return prop1_rhs(Hypergraph(10, e_census), census_L)

    def w_scan():
        return scan_assignments_one_extra_color(Hypergraph(8, e_scan), 3)

    return [
        ("expansion polynomial  n=11 m=14", w_poly),
        ("proper colorings      n=9  k=4", w_proper),
        ("list colorings        200 pairs", w_lists),
        ("exact list minimum    n=5  k=2", w_exact),
        ("per-edge census       n=10 m=12", w_census),
        ("assignment scan       n=8  k=3", w_scan),
    ]


def time_workload(fn, repeat):
    fn()  # warm-up: triggers any lazy compilation, untimed
    best = float("inf")
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return best, value


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    if "numba" not in backends:
        print("compiled backend unavailable, timing pure numpy only")

    workloads = build_workloads(args.seed)
    results = {}
    previous = get_backend()
    try:
        for backend in backends:
            set_backend(backend)
            for name, fn in workloads:
                results[backend, name] = time_workload(fn, args.repeat)
    finally:
        set_backend(previous)

    for name, _fn in workloads:
        values = {b: results[b, name][1] for b in backends}
        first = next(iter(values.values()))
        if any(v != first for v in values.values()):
            raise SystemExit(f"backend disagreement on {name!r}: {values}")

    header = f"{'workload':34}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, _fn in workloads:
        times = [results[b, name][0] for b in backends]
        row = f"{name:34}" + "".join(f"{t * 1000:10.1f}ms" for t in times)
        if len(backends) > 1:
            base = results["numpy", name][0]
            fast = min(t for b, t in zip(backends, times) if b != "numpy")
            row += f"{base / fast:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
