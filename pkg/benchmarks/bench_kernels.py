"""Compare the numba-compiled kernels against the interpreted fallback.

Each backend runs in its own interpreter because ``MINCUTS_JIT`` is read at
import time. Both backends get the same workloads so the ratio is direct;
they are sized for the slow path.

    python benchmarks/bench_kernels.py
"""

import argparse
import json
import os
import subprocess
import sys
import time


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - started)
    return best


def worker() -> dict:
    import random

    from mincuts import canon, census
    from mincuts.constructions import seymour
    from mincuts.graph import Graph
    from mincuts.separators import count_minimal_separators, enumerate_minimal_vertex_cuts

    rng = random.Random(5)
    pool = [
        Graph.from_edges(9, [(i, j) for i in range(9) for j in range(i + 1, 9) if rng.random() < 0.35])
        for _ in range(30)
    ]
    g = seymour(5).g

    def generate():
        canon.level_codes.cache_clear()
        return canon.level_codes(6)

    cases = {
        "count seymour(5)": lambda: count_minimal_separators(g, 0, 1),
        "vertex cuts, 30 x n=9": lambda: [enumerate_minimal_vertex_cuts(h) for h in pool],
        "generate n=6 (156)": generate,
        "g census k=3": lambda: census.compute_g(3),
    }
    out = {}
    for name, fn in cases.items():
        fn()  # compile / warm caches
        out[name] = _best(fn, 3)
    return out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--worker", action="store_true")
    args = parser.parse_args()
    if args.worker:
        print(json.dumps(worker()))
        return

    timings = {}
    for label, flag in (("numba", "1"), ("python", "0")):
        env = dict(os.environ, MINCUTS_JIT=flag)
        proc = subprocess.run([sys.executable, __file__, "--worker"], env=env,
                              capture_output=True, text=True, check=True)
        timings[label] = json.loads(proc.stdout.strip().splitlines()[-1])

    print(f"{'case':<24} {'numba s':>10} {'python s':>10} {'speedup':>9}")
    for case, fast in timings["numba"].items():
        slow = timings["python"][case]
        print(f"{case:<24} {fast:10.5f} {slow:10.4f} {slow / fast:8.0f}x")


if __name__ == "__main__":
    main()
