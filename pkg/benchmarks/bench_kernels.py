"""Compare the compiled and pure-Python kernels.

Usage::

    python3 benchmarks/bench_kernels.py [--sizes 20 40 80] [--repeat 3] [--seed 0]
"""
import argparse
import random
import time
from itertools import combinations

from rigaug import kernels


def backends():
    out = [("python", kernels.pure_backend())]
    try:
        from rigaug import _kernels
        out.append(("cython", _kernels))
    except ImportError:
        pass
    return out


def random_edges(n, rng, density):
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    return pairs[: int(density * len(pairs))]


def pebble_run(impl, n, edges):
    game = impl.PebbleGame(n)
    for u, v in edges:
        game.add_edge(u, v)
    return game.accepted


def flow_run(impl, n, edges, queries):
    nbrs = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return sum(impl.disjoint_paths(n, nbrs, s, t, n) for s, t in queries)


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[20, 40, 80])
    ap.add_argument("--density", type=float, default=0.3)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    impls = backends()
    print(f"active backend: {kernels.BACKEND}")
    print(f"{'kernel':<10}{'n':>5}{'m':>7}" + "".join(f"{name + ' (s)':>14}" for name, _ in impls) + f"{'speedup':>10}")
    for n in args.sizes:
        rng = random.Random(args.seed + n)
        edges = random_edges(n, rng, args.density)
        queries = [tuple(rng.sample(range(n), 2)) for _ in range(50)]
        for kernel, fn in (("pebble", lambda impl: pebble_run(impl, n, edges)),
                           ("flow", lambda impl: flow_run(impl, n, edges, queries))):
            times, results = [], set()
            for _, impl in impls:
                dt, res = best_time(lambda: fn(impl), args.repeat)
                times.append(dt)
                results.add(res)
            # both backends must compute the same answer
            assert len(results) == 1, f"backends disagree on {kernel} n={n}"
            speed = f"{times[0] / times[-1]:.1f}x" if len(times) > 1 else "-"
            print(f"{kernel:<10}{n:>5}{len(edges):>7}" + "".join(f"{t:>14.4f}" for t in times) + f"{speed:>10}")


if __name__ == "__main__":
    main()
