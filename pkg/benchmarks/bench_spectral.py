#!/usr/bin/env python3
"""
Benchmark the two power-iteration kernels (numba @njit vs pure numpy).

Both implementations are imported directly, so the script ignores the
C4FREE_NO_NUMBA selection flag and always times the pair side by side.
Workloads are the graphs the library actually spends time on: S_{n,k}
constructions and random connected graphs of growing order.

Usage:
    python benchmarks/bench_spectral.py [--repeats 5] [--tol 1e-12]
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

import numpy as np

from c4free import _kernels
from c4free.graph import Graph, make_snk
from c4free.spectral import to_numpy


def _random_connected(rng: random.Random, n: int, extra: int) -> Graph:
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    g = Graph.from_edges(n, edges)
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v and not g.has_edge(u, v):
            g = g.add_edge(u, v)
    return g


def workloads() -> list[tuple[str, np.ndarray]]:
    rng = random.Random(1)
    cases = [
        ("S_{31,15}", to_numpy(make_snk(31, 15))),
        ("S_{201,100}", to_numpy(make_snk(201, 100))),
        ("random n=50", to_numpy(_random_connected(rng, 50, 30))),
        ("random n=200", to_numpy(_random_connected(rng, 200, 120))),
        ("random n=500", to_numpy(_random_connected(rng, 500, 400))),
    ]
    return cases


def time_kernel(fn, a: np.ndarray, tol: float, repeats: int) -> tuple[float, float]:
    best = []
    mu = 0.0
    for _ in range(repeats):
        t0 = time.perf_counter()
        mu, _, _, _, converged = fn(a + np.eye(a.shape[0]), tol, 10**6)
        best.append(time.perf_counter() - t0)
        assert converged
    # the kernel iterates on A + I, so shift the Rayleigh value back
    return mu - 1.0, statistics.median(best)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--tol", type=float, default=1e-12)
    args = parser.parse_args()

    try:
        from numba import njit  # noqa: F401

        import importlib
        import os

        os.environ.pop("C4FREE_NO_NUMBA", None)
        kernels = importlib.reload(_kernels)
        if not kernels.USING_NUMBA:
            raise ImportError
        njit_kernel = kernels.power_iteration
    except ImportError:
        print("numba unavailable; nothing to compare")
        return 1

    numpy_kernel = _kernels._power_iteration_numpy

    # one warm-up call so JIT compilation is not billed to the first row
    warm = to_numpy(make_snk(5, 1)) + np.eye(5)
    njit_kernel(warm, args.tol, 10**6)

    header = f"{'case':<14} {'mu':>12} {'numpy (ms)':>12} {'numba (ms)':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, a in workloads():
        mu_np, t_np = time_kernel(numpy_kernel, a, args.tol, args.repeats)
        mu_nb, t_nb = time_kernel(njit_kernel, a, args.tol, args.repeats)
        assert abs(mu_np - mu_nb) < 1e-9
        print(
            f"{name:<14} {mu_np:>12.6f} {t_np * 1e3:>12.3f} {t_nb * 1e3:>12.3f}"
            f" {t_np / t_nb:>7.2f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
