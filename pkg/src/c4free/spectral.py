"""
Perron root computation and the closed-form spectral radius of S_{n,k}.

The spectral radius is computed by shifted power iteration per connected
component (see _kernels); mu(S_{n,k}) additionally has a cubic
characteristic factor x^3 - x^2 - (n-1)x + n-1-2k whose largest root is
found by bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import power_iteration
from .graph import Graph, SnkParams

DEFAULT_TOL = 1e-12
MAX_ITER = 10**6

INV_SQRT2 = 2.0 ** -0.5


class ConvergenceError(RuntimeError):
    """Eigensolver failed to reach the requested residual."""


@dataclass(frozen=True)
class SpectralResult:
    mu: float
    vec: np.ndarray
    residual: float
    iters: int


def to_numpy(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> SpectralResult:
    """Largest adjacency eigenvalue with nonnegative unit eigenvector.

    Disconnected graphs are handled per component; the returned vector is
    supported on a component achieving the maximum and zero elsewhere.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if tol <= 0:
        raise ValueError("tol must be positive")
    best_mu = -1.0
    best: tuple[float, np.ndarray, float, int, list[int]] | None = None
    total_iters = 0
    for comp in g.components():
        if len(comp) == 1:
            mu, vec, res, it = 0.0, np.ones(1), 0.0, 0
        else:
            sub = _submatrix(g, comp)
            mu, vec, res, it, ok = power_iteration(sub, tol, MAX_ITER)
            if not ok:
                raise ConvergenceError(
                    f"no convergence after {MAX_ITER} iterations "
                    f"(component size {len(comp)}, residual {res:.3e}, tol {tol:.3e})"
                )
        total_iters += it
        if mu > best_mu:
            best_mu = mu
            best = (mu, vec, res, it, comp)
    assert best is not None
    mu, vec, res, _, comp = best
    full = np.zeros(g.n)
    full[comp] = np.abs(vec)
    full /= np.linalg.norm(full)
    return SpectralResult(mu=mu, vec=full, residual=res, iters=total_iters)


def _submatrix(g: Graph, comp: list[int]) -> np.ndarray:
    idx = {v: i for i, v in enumerate(comp)}
    a = np.zeros((len(comp), len(comp)))
    for v in comp:
        r = g.rows[v]
        for u in comp:
            if r >> u & 1:
                a[idx[v], idx[u]] = 1.0
    return a


def rayleigh(g: Graph, x: np.ndarray) -> float:
    """2 * sum over edges ij of x_i x_j, for a unit vector x. By the
    Rayleigh principle this never exceeds mu(g)."""
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise ValueError(f"vector length {x.shape} does not match n={g.n}")
    if abs(float(np.linalg.norm(x)) - 1.0) > 1e-9:
        raise ValueError("x must be a unit vector")
    return 2.0 * sum(x[u] * x[v] for u, v in g.edges())


def snk_cubic(n: int, k: int):
    """Coefficients (1, -1, -(n-1), n-1-2k) of the characteristic factor of
    S_{n,k} and the corresponding callable."""
    coeffs = (1.0, -1.0, -(n - 1.0), n - 1.0 - 2.0 * k)

    def f(x: float) -> float:
        return ((x - 1.0) * x - (n - 1.0)) * x + n - 1.0 - 2.0 * k

    return coeffs, f


def xmin(n: int) -> float:
    """Location of the local minimum of the S_{n,k} cubic; the largest root
    lies to its right, where the cubic is increasing."""
    if n < 2:
        raise ValueError("need n >= 2")
    return 1.0 / 3.0 + math.sqrt(1.0 / 9.0 + (n - 1.0) / 3.0)


def snk_mu(n: int, k: int) -> float:
    """mu(S_{n,k}) as the largest root of x^3 - x^2 - (n-1)x + n-1-2k,
    by bisection on [xmin(n), n]."""
    p = SnkParams(n, k)
    if n < 2:
        raise ValueError("need n >= 2")
    _, f = snk_cubic(p.n, p.k)
    lo, hi = xmin(n), float(n)
    if f(lo) >= 0.0:
        # largest root coincides with the local minimum (double root)
        return lo
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def snk_bound_identity(n: int, k: int) -> tuple[float, float]:
    """Evaluate the cubic at sqrt(n-1+k) two ways: directly, and via the
    algebraic identity k*(sqrt(n-1+k) - 3). The two agree to rounding; the
    sign settles whether mu(S_{n,k}) exceeds sqrt(n-1+k)."""
    p = SnkParams(n, k)
    s = math.sqrt(p.n - 1 + p.k)
    _, f = snk_cubic(p.n, p.k)
    return f(s), p.k * (s - 3.0)


def max_entry_ok(r: SpectralResult, tol: float = 1e-9) -> bool:
    """Perron-vector entries of a graph with edges never exceed 1/sqrt(2)."""
    return float(np.max(r.vec)) <= INV_SQRT2 + tol
