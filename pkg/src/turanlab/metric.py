"""Edit distances: between graphs, to a blowup family, and between weighted graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional

import numpy as np

from .blowup import BlowupSpec, blow_up
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    InconsistentWeights,
    InvalidArgument,
    MemoryBudget,
)
from .hypercore import Hypergraph
from .kernels import distance as _k
from .lagrange import WeightedHypergraph, _is_exact

DEFAULT_BUDGET = 10**8
TABLE_CAP = 1 << 26


def symmetric_difference(F1: Hypergraph, F2: Hypergraph) -> int:
    if F1.r != F2.r or F1.n != F2.n:
        raise DimensionMismatch(
            f"graphs differ in shape: (r={F1.r}, n={F1.n}) vs (r={F2.r}, n={F2.n})"
        )
    return len(F1.edge_set ^ F2.edge_set)


@dataclass
class DistanceResult:
    value: int
    witness: BlowupSpec
    exact: bool
    steps: int = 0

    def to_dict(self):
        return {
            "value": self.value,
            "exact": self.exact,
            "witness": {"assignment": list(self.witness.assignment)},
            "steps": self.steps,
        }


class _Problem:
    """Arrays shared by the exact and heuristic kernels."""

    def __init__(self, F: Hypergraph, base: Hypergraph):
        if F.r != base.r:
            raise DimensionMismatch(f"uniformities differ: {F.r} vs {base.r}")
        if base.n == 0 and F.n > 0:
            raise InvalidArgument("an empty base has no blowups on a non-empty vertex set")
        n, m, r = F.n, base.n, F.r
        if m**r > TABLE_CAP:
            raise MemoryBudget(f"base lookup table would need {m**r} entries")
        self.F, self.base = F, base
        self.n, self.m, self.r = n, m, r
        combos = list(itertools.combinations(range(n), r))
        self.sets = np.array(combos, dtype=np.int64).reshape(len(combos), r)
        self.in_f = np.array([c in F.edge_set for c in combos], dtype=np.bool_)
        self.table = _k.base_table(base.edges, m, r)
        inc = [[] for _ in range(n)]
        for s, c in enumerate(combos):
            for v in c:
                inc[v].append(s)
        self.inc_ptr = np.zeros(n + 1, dtype=np.int64)
        self.inc_ptr[1:] = np.cumsum([len(x) for x in inc])
        self.inc_sets = np.array([s for x in inc for s in x], dtype=np.int64)

    def cost(self, phi) -> int:
        return symmetric_difference(self.F, blow_up(BlowupSpec(self.base, tuple(phi))))


def _heuristic(prob: _Problem, seed: int, restarts: int):
    rng = np.random.default_rng(seed)
    starts = rng.integers(0, prob.m, size=(max(restarts, 1), prob.n), dtype=np.int64)
    max_sideways = prob.n * prob.n
    cost, phi, _ = _k.local_search(
        prob.sets, prob.in_f, prob.inc_ptr, prob.inc_sets, prob.table, prob.m,
        starts, int(rng.integers(1, 2**31 - 1)), max_sideways,
    )
    return int(cost), phi


def distance_to_blowups(
    F: Hypergraph,
    base: Hypergraph,
    mode: str = "exact",
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    restarts: int = 20,
) -> DistanceResult:
    """min over assignments phi: V(F) -> V(base) of |F ^ blow_up(phi)|.

    ``exact`` enumerates all m**n assignments with pruning (refused with
    :class:`BudgetExceeded` when m**n > budget); ``heuristic`` returns a
    witnessed upper bound from randomized local search.
    """
    if mode not in ("exact", "heuristic"):
        raise InvalidArgument(f"unknown mode {mode!r}")
    prob = _Problem(F, base)
    n, m = prob.n, prob.m
    if n == 0:
        return DistanceResult(0, BlowupSpec(base, ()), True)
    if mode == "exact" and m**n > budget:
        raise BudgetExceeded(
            f"exact search needs {m}^{n} = {m**n} assignments (budget {budget}); try heuristic mode"
        )
    value, phi = _heuristic(prob, seed, restarts)
    if mode == "heuristic":
        return DistanceResult(value, BlowupSpec(base, tuple(int(x) for x in phi)), value == 0)

    degrees = F.degrees()
    order = np.array(sorted(range(n), key=lambda v: (-degrees[v], v)), dtype=np.int64)
    pos = np.empty(n, dtype=np.int64)
    pos[order] = np.arange(n)
    last = pos[prob.sets].max(axis=1) if len(prob.sets) else np.zeros(0, dtype=np.int64)
    group_sets = np.argsort(last, kind="stable").astype(np.int64)
    group_ptr = np.zeros(n + 1, dtype=np.int64)
    group_ptr[1:] = np.cumsum(np.bincount(last, minlength=n))
    best, best_phi, steps, exhausted = _k.exact_search(
        order, group_ptr, group_sets, prob.sets, prob.in_f, prob.table, m,
        value, phi.astype(np.int64), budget,
    )
    if not exhausted:  # pragma: no cover - steps never exceed m**n
        raise BudgetExceeded("exact search ran out of budget")
    return DistanceResult(int(best), BlowupSpec(base, tuple(int(x) for x in best_phi)), True, int(steps))


# ---------------------------------------------------------------------------
# weighted distances


def _pushforward(spec: BlowupSpec, mu):
    out = [0] * spec.m
    for v, p in enumerate(spec.assignment):
        out[p] = out[p] + mu[v]
    return out


def _weights_match(a, b) -> bool:
    if _is_exact(a) and _is_exact(b):
        return all(x == y for x, y in zip(a, b))
    return all(abs(float(x) - float(y)) <= 1e-12 for x, y in zip(a, b))


def _product_weight(edges, mu):
    total = Fraction(0) if _is_exact(mu) else 0.0
    for e in edges:
        p = Fraction(1) if _is_exact(mu) else 1.0
        for v in e:
            p *= mu[v]
        total += p
    return total


def weighted_distance_witness(
    W1: WeightedHypergraph,
    W2: WeightedHypergraph,
    spec1: BlowupSpec,
    spec2: BlowupSpec,
    mu=None,
):
    """d'(B1, B2, mu) for blowups B1 of W1 and B2 of W2 on a common vertex set.

    This is an upper bound on the weighted distance between W1 and W2.  When
    ``mu`` is omitted it is pulled back through whichever spec is injective.
    """
    if spec1.base != W1.graph or spec2.base != W2.graph:
        raise InconsistentWeights("each spec must blow up its own weighted graph")
    if spec1.n != spec2.n:
        raise DimensionMismatch(f"specs live on {spec1.n} and {spec2.n} vertices")
    if mu is None:
        for spec, W in ((spec1, W1), (spec2, W2)):
            if len(set(spec.assignment)) == spec.n:
                mu = [W.mu[p] for p in spec.assignment]
                break
        else:
            raise InconsistentWeights("no injective spec; pass the common weights explicitly")
    mu = list(mu)
    if len(mu) != spec1.n:
        raise DimensionMismatch(f"common weights have {len(mu)} entries for {spec1.n} vertices")
    if any(x < 0 for x in mu):
        raise InconsistentWeights("common weights must be non-negative")
    for spec, W in ((spec1, W1), (spec2, W2)):
        if not _weights_match(_pushforward(spec, mu), W.mu):
            raise InconsistentWeights("part weights do not add up to the base weights")
    B1, B2 = blow_up(spec1), blow_up(spec2)
    return _product_weight(B1.edge_set ^ B2.edge_set, mu)


@dataclass
class TransferReport:
    lhs: int
    rhs: Fraction
    witness_value: Fraction
    factor: Fraction
    exact: bool
    passed: bool
    witness: Optional[BlowupSpec] = None

    def to_dict(self):
        return {
            "lhs": self.lhs,
            "rhs": float(self.rhs),
            "rhs_exact": str(self.rhs),
            "witness_value": str(self.witness_value),
            "factor": str(self.factor),
            "exact": self.exact,
            "passed": self.passed,
            "witness": None if self.witness is None else list(self.witness.assignment),
        }


def transfer_factor(n: int, r: int) -> Fraction:
    """r! n / (n - r^2) * C(n, r)."""
    if n <= r * r:
        raise InvalidArgument(f"the transfer bound needs n > r^2 (n={n}, r={r})")
    return Fraction(factorial(r) * n, n - r * r) * comb(n, r)


def check_distance_transfer(
    F: Hypergraph,
    base: Hypergraph,
    witness=None,
    mode: str = "exact",
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
) -> TransferReport:
    """Check d(F) <= r! n/(n - r^2) C(n, r) d' for a weighted witness d'.

    ``witness`` is ``(spec1, spec2, mu)``: spec1 blows up F (weighted
    uniformly), spec2 blows up ``base``, both on a common vertex set carrying
    ``mu``.  By default the witness is F itself against the blowup found for
    the left-hand side.
    """
    n, r = F.n, F.r
    factor = transfer_factor(n, r)
    lhs = distance_to_blowups(F, base, mode=mode, seed=seed, budget=budget)
    W1 = WeightedHypergraph.uniform(F)
    if witness is None:
        spec1 = BlowupSpec.identity(F)
        spec2 = lhs.witness
        mu = list(W1.mu)
    else:
        spec1, spec2, mu = witness
        mu = [Fraction(x) if not isinstance(x, float) else x for x in mu]
    if spec2.base != base:
        raise InconsistentWeights("the second witness spec must blow up the base")
    W2 = WeightedHypergraph(base, tuple(_pushforward(spec2, mu)))
    d_prime = weighted_distance_witness(W1, W2, spec1, spec2, mu)
    rhs = factor * d_prime
    return TransferReport(lhs.value, rhs, d_prime, factor, lhs.exact, lhs.value <= rhs, lhs.witness)
