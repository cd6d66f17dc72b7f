"""Weighted densities, the Lagrangian, and first-order (criticality) checks."""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, NonConvergenceWarning, ValidationError
from .hypercore import Hypergraph
from .kernels import lagrange as _k

SUPPORT_TOL = 1e-9


@dataclass(frozen=True)
class WeightedHypergraph:
    """A hypergraph with a probability vector on its vertices.

    ``mu`` entries are either all :class:`fractions.Fraction` (exact mode) or floats.
    """

    graph: Hypergraph
    mu: tuple

    def __post_init__(self):
        mu = tuple(self.mu)
        if len(mu) != self.graph.n:
            raise DimensionMismatch(f"mu has {len(mu)} entries for {self.graph.n} vertices")
        if any(x < 0 for x in mu):
            raise ValidationError("weights must be non-negative")
        total = sum(mu)
        if _is_exact(mu):
            if total != 1:
                raise ValidationError(f"weights sum to {total}, not 1")
        elif abs(float(total) - 1.0) > 1e-12:
            raise ValidationError(f"weights sum to {float(total)!r}, not 1")
        object.__setattr__(self, "mu", mu)

    @property
    def support(self) -> tuple:
        return tuple(i for i, x in enumerate(self.mu) if x > 0)

    @classmethod
    def uniform(cls, F: Hypergraph, exact: bool = True) -> "WeightedHypergraph":
        w = Fraction(1, F.n) if exact else 1.0 / F.n
        return cls(F, (w,) * F.n)

    def to_dict(self):
        return {
            "r": self.graph.r,
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges],
            "mu": [_num_out(x) for x in self.mu],
        }


def _is_exact(mu) -> bool:
    return len(mu) > 0 and all(isinstance(x, Rational) for x in mu)


def _num_out(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    return float(x)


def _num_in(x):
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    return float(x)


def weighted_from_dict(data) -> WeightedHypergraph:
    for key in ("r", "n", "edges", "mu"):
        if key not in data:
            raise ValidationError(f"weighted graph JSON is missing {key!r}")
    F = Hypergraph(int(data["r"]), int(data["n"]), tuple(tuple(e) for e in data["edges"]))
    mu = [_num_in(x) for x in data["mu"]]
    if not all(isinstance(x, Fraction) for x in mu):
        mu = [float(x) for x in mu]
    return WeightedHypergraph(F, tuple(mu))


def read_weighted(path) -> WeightedHypergraph:
    with open(path) as fh:
        return weighted_from_dict(json.load(fh))


def _check_dim(F: Hypergraph, mu):
    if len(mu) != F.n:
        raise DimensionMismatch(f"weight vector has {len(mu)} entries, graph has {F.n} vertices")


def lambda_eval(F: Hypergraph, mu: Sequence) -> float | Fraction:
    """Sum over edges of the product of vertex weights (exact for Fraction weights)."""
    _check_dim(F, mu)
    if _is_exact(mu):
        total = Fraction(0)
        for e in F.edges:
            p = Fraction(1)
            for v in e:
                p *= mu[v]
            total += p
        return total
    return float(_k.lam_fast(F.edge_array, np.asarray(mu, dtype=np.float64)))


def lambda_grad(F: Hypergraph, mu: Sequence):
    """Partial derivatives: component i sums the weight products over the link of i."""
    _check_dim(F, mu)
    if _is_exact(mu):
        g = [Fraction(0)] * F.n
        for e in F.edges:
            for v in e:
                p = Fraction(1)
                for u in e:
                    if u != v:
                        p *= mu[u]
                g[v] += p
        return g
    return _k.grad_fast(F.edge_array, np.asarray(mu, dtype=np.float64))


def critical_residual(F: Hypergraph, mu: Sequence):
    """max over the support of |d_i lambda - r * lambda|; zero at interior critical points."""
    _check_dim(F, mu)
    val = lambda_eval(F, mu)
    g = lambda_grad(F, mu)
    worst = Fraction(0) if _is_exact(mu) else 0.0
    for i, x in enumerate(mu):
        if x > 0:
            worst = max(worst, abs(g[i] - F.r * val))
    return worst


def kkt_residual(F: Hypergraph, mu, support_tol: float = SUPPORT_TOL) -> float:
    mu = np.asarray(mu, dtype=np.float64)
    val = lambda_eval(F, mu)
    g = lambda_grad(F, mu) - F.r * val
    on = mu > support_tol
    inner = float(np.abs(g[on]).max()) if on.any() else 0.0
    outer = float(np.clip(g[~on], 0.0, None).max()) if (~on).any() else 0.0
    return max(inner, outer)


@dataclass
class OptResult:
    """Best point found by the ascent.  ``value`` is a lower bound on the Lagrangian."""

    value: float
    point: np.ndarray
    kkt_residual: float
    restarts_used: int
    support: tuple
    converged: bool = True
    iterations: int = 0
    monotone: bool = True
    best_restart: int = 0

    def to_dict(self):
        return {
            "value": self.value,
            "point": [float(x) for x in self.point],
            "kkt_residual": self.kkt_residual,
            "restarts_used": self.restarts_used,
            "support": list(self.support),
            "converged": self.converged,
            "iterations": self.iterations,
            "best_restart": self.best_restart,
            "certified_global": False,
        }


def maximize_lambda(
    F: Hypergraph,
    restarts: int = 50,
    tol: float = 1e-10,
    seed: int = 0,
    max_iter: int = 10_000,
) -> OptResult:
    """Multiplicative ascent from the uniform point plus seeded Dirichlet(1) starts.

    Restart 0 is the uniform point.  The best value wins; ties go to the lower
    restart index.
    """
    n = F.n
    if n == 0:
        return OptResult(0.0, np.zeros(0), 0.0, 0, ())
    rng = np.random.default_rng(seed)
    starts = [np.full(n, 1.0 / n)]
    if restarts > 1:
        starts.extend(rng.dirichlet(np.ones(n), size=restarts - 1))
    edges = F.edge_array
    best = None
    total_iters = 0
    all_monotone = True
    for idx, start in enumerate(starts):
        mu, val, iters, converged, monotone = _k.ascent_fast(edges, start, tol, max_iter)
        total_iters += int(iters)
        all_monotone &= bool(monotone)
        if best is None or val > best[1]:
            best = (mu, val, converged, idx)
    mu, _, converged, idx = best
    mu = mu / mu.sum()
    value = lambda_eval(F, mu)
    result = OptResult(
        value=value,
        point=mu,
        kkt_residual=kkt_residual(F, mu),
        restarts_used=len(starts),
        support=tuple(int(i) for i in np.flatnonzero(mu > SUPPORT_TOL)),
        converged=bool(converged),
        iterations=total_iters,
        monotone=all_monotone,
        best_restart=idx,
    )
    if not converged:
        warnings.warn(
            f"ascent did not reach tol={tol} within {max_iter} iterations", NonConvergenceWarning
        )
    return result


@dataclass
class BalanceReport:
    xi_value: Fraction
    optimized_value: float
    excess: float
    critical_residual_at_xi: Fraction
    verdict: str
    opt: OptResult = field(repr=False)
    uniquely_dense: str = "not certified"

    def to_dict(self):
        return {
            "xi_value": str(self.xi_value),
            "xi_value_float": float(self.xi_value),
            "optimized_value": self.optimized_value,
            "excess": self.excess,
            "critical_residual_at_xi": str(self.critical_residual_at_xi),
            "verdict": self.verdict,
            "uniquely_dense": self.uniquely_dense,
            "opt": self.opt.to_dict(),
        }


def check_balanced(S, restarts: int = 50, tol: float = 1e-9, seed: int = 0) -> BalanceReport:
    """Compare the best ascent value against the uniform point of a Steiner system."""
    F = getattr(S, "base", S)
    xi = WeightedHypergraph.uniform(F).mu
    xi_value = lambda_eval(F, xi)
    opt = maximize_lambda(F, restarts=restarts, seed=seed)
    excess = opt.value - float(xi_value)
    verdict = "consistent-with-balanced" if excess <= tol else "not-balanced"
    return BalanceReport(xi_value, opt.value, excess, critical_residual(F, xi), verdict, opt)
