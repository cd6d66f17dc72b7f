"""Edge-polynomial evaluation and multiplicative ascent on the simplex.

Two interchangeable implementations: scalar loops compiled by numba, and
vectorised numpy used when the JIT is disabled.
"""

import numpy as np

from .._jit import JIT_ENABLED, njit


@njit
def lam_loop(edges, mu):
    total = 0.0
    for i in range(edges.shape[0]):
        p = 1.0
        for j in range(edges.shape[1]):
            p *= mu[edges[i, j]]
        total += p
    return total


@njit
def grad_loop(edges, mu):
    g = np.zeros(mu.shape[0])
    r = edges.shape[1]
    for i in range(edges.shape[0]):
        for j in range(r):
            p = 1.0
            for k in range(r):
                if k != j:
                    p *= mu[edges[i, k]]
            g[edges[i, j]] += p
    return g


def lam_np(edges, mu):
    if edges.shape[0] == 0:
        return 0.0
    return float(np.prod(mu[edges], axis=1).sum())


def grad_np(edges, mu):
    g = np.zeros(mu.shape[0])
    if edges.shape[0] == 0:
        return g
    w = mu[edges]
    r = edges.shape[1]
    for j in range(r):
        others = np.prod(np.delete(w, j, axis=1), axis=1) if r > 1 else np.ones(len(w))
        np.add.at(g, edges[:, j], others)
    return g


def _ascent(lam, grad, edges, mu0, tol, max_iter):
    """Baum-Eagon growth transform mu <- mu * grad / <mu, grad>.

    Returns ``(mu, value, iterations, converged, monotone)``.  On a decrease
    the step is halved back toward the previous point.
    """
    mu = mu0.copy()
    val = lam(edges, mu)
    monotone = True
    for it in range(max_iter):
        g = grad(edges, mu)
        s = 0.0
        for i in range(mu.shape[0]):
            s += mu[i] * g[i]
        if s <= 0.0:
            return mu, val, it, True, monotone
        target = mu * g / s
        cand = target
        new_val = lam(edges, cand)
        step = 1.0
        while new_val < val and step > 1e-12:
            step *= 0.5
            cand = (1.0 - step) * mu + step * target
            new_val = lam(edges, cand)
        if new_val < val:
            if val - new_val > 1e-15:
                monotone = False
            return mu, val, it + 1, True, monotone
        gain = new_val - val
        mu = cand
        val = new_val
        if gain < tol:
            return mu, val, it + 1, True, monotone
    return mu, val, max_iter, False, monotone


ascent_loop = njit(_ascent)


def ascent_np(edges, mu0, tol, max_iter):
    return _ascent(lam_np, grad_np, edges, mu0, tol, max_iter)


if JIT_ENABLED:
    lam_fast = lam_loop
    grad_fast = grad_loop

    def ascent_fast(edges, mu0, tol, max_iter):
        return ascent_loop(lam_loop, grad_loop, edges, mu0, tol, max_iter)
else:
    lam_fast = lam_np
    grad_fast = grad_np
    ascent_fast = ascent_np
