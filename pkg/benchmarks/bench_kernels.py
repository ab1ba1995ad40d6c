"""Compare the compiled and pure-Python reachability kernels.

Usage: python benchmarks/bench_kernels.py [--branches 6] [--length 5] [--repeat 3]

The workload is an AND-split into ``branches`` parallel chains of ``length``
transitions each, joined before the sink. Its state space has
(length + 1) ** branches + 2 markings, which is the worst case for
soundness checking at desk scale.
"""

from __future__ import annotations

import argparse
import time

from procmatch import _kernels_py

try:
    from procmatch import _kernels as _compiled
except ImportError:
    _compiled = None


def parallel_chains(branches: int, length: int):
    """pre/post index lists for source -> split -> chains -> join -> sink."""
    places = 2 + branches * (length + 1)
    heads = [2 + b * (length + 1) for b in range(branches)]
    pre, post = [[0]], [heads]
    for head in heads:
        for k in range(length):
            pre.append([head + k])
            post.append([head + k + 1])
    pre.append([head + length for head in heads])
    post.append([1])
    initial = [1] + [0] * (places - 1)
    return pre, post, initial


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--branches", type=int, default=6)
    parser.add_argument("--length", type=int, default=5)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    pre, post, initial = parallel_chains(args.branches, args.length)
    bound = (args.length + 1) ** args.branches + 2

    backends = [("python", _kernels_py)]
    if _compiled is not None:
        backends.append(("cython", _compiled))
    else:
        print("compiled extension not built; timing the pure-Python backend only")

    results = {}
    for name, impl in backends:
        results[name] = impl.explore_markings(pre, post, initial, bound)
        assert results[name][2], "bound too small"
        elapsed = best_of(lambda: impl.explore_markings(pre, post, initial, bound), args.repeat)
        results[name] = (results[name], elapsed)

    markings = len(results["python"][0][0])
    print(f"{args.branches} parallel chains of {args.length}: {markings} markings")
    print(f"{'backend':<8} {'seconds':>9} {'markings/s':>12}")
    for name, (_, elapsed) in results.items():
        print(f"{name:<8} {elapsed:>9.4f} {markings / elapsed:>12,.0f}")
    if "cython" in results:
        print(f"speedup  {results['python'][1] / results['cython'][1]:>8.1f}x")
        print(f"identical output: {results['python'][0] == results['cython'][0]}")


if __name__ == "__main__":
    main()
