"""Weight shifting across uncovered pairs.

For a pair {v1, v2} lying in no common edge, the density is affine in the
share of their combined weight held by v1, so moving all of it to one endpoint
never lowers the density.  Repeating this until the support covers pairs is the
constructive kernel of the symmetrization argument.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidArgument, InvalidPair
from .hypercore import Hypergraph, covers_pairs, induce
from .lagrange import WeightedHypergraph, _num_out, lambda_eval


@dataclass
class Step:
    pair: tuple
    direction: int  # 1: weight moved onto v1, 0: onto v2
    before: object
    after: object

    def to_dict(self):
        return {
            "pair": list(self.pair),
            "direction": self.direction,
            "lambda_before": _num_out(self.before),
            "lambda_after": _num_out(self.after),
        }


@dataclass
class SymmetrizationTrace:
    steps: list
    final: WeightedHypergraph
    covers_pairs_on_support: bool
    initial_lambda: object = None
    final_lambda: object = None

    def to_dict(self):
        return {
            "steps": [s.to_dict() for s in self.steps],
            "final": self.final.to_dict(),
            "covers_pairs_on_support": self.covers_pairs_on_support,
            "initial_lambda": _num_out(self.initial_lambda),
            "final_lambda": _num_out(self.final_lambda),
        }


def find_uncovered_pair(F: Hypergraph, support) -> Optional[tuple]:
    """Lexicographically smallest pair in ``support`` sharing no edge inside the support."""
    support = sorted(set(int(v) for v in support))
    if any(not 0 <= v < F.n for v in support):
        raise InvalidArgument("support must be a subset of V(F)")
    inside = set(support)
    covered = set()
    for e in F.edges:
        if inside.issuperset(e):
            covered.update(itertools.combinations(e, 2))
    for pair in itertools.combinations(support, 2):
        if pair not in covered:
            return pair
    return None


def _shifted(mu, v1, v2, onto):
    out = list(mu)
    total = out[v1] + out[v2]
    out[v1] = total if onto == v1 else total * 0
    out[v2] = total if onto == v2 else total * 0
    return tuple(out)


def symmetrize_step(W: WeightedHypergraph, v1: int, v2: int) -> WeightedHypergraph:
    """Move the combined weight of an uncovered pair to the better endpoint (ties keep v1)."""
    F, mu = W.graph, W.mu
    if v1 == v2 or not (0 <= v1 < F.n and 0 <= v2 < F.n):
        raise InvalidPair(f"({v1}, {v2}) is not a pair of vertices")
    # edges through a zero-weight vertex contribute nothing and do not count
    for e in F.edges:
        if v1 in e and v2 in e and all(mu[u] > 0 for u in e if u not in (v1, v2)):
            raise InvalidPair(f"pair ({v1}, {v2}) lies in edge {e}")
    if not mu[v1] + mu[v2] > 0:
        raise InvalidPair(f"pair ({v1}, {v2}) carries no weight")
    on_v1 = _shifted(mu, v1, v2, v1)
    on_v2 = _shifted(mu, v1, v2, v2)
    keep = on_v1 if lambda_eval(F, on_v1) >= lambda_eval(F, on_v2) else on_v2
    return WeightedHypergraph(F, keep)


def symmetrize(W: WeightedHypergraph) -> SymmetrizationTrace:
    F = W.graph
    current = W
    lam = lambda_eval(F, current.mu)
    initial = lam
    steps = []
    while True:
        support = current.support
        pair = find_uncovered_pair(F, support)
        if pair is None:
            break
        v1, v2 = pair
        nxt = symmetrize_step(current, v1, v2)
        after = lambda_eval(F, nxt.mu)
        steps.append(Step(pair, 1 if nxt.mu[v1] > 0 else 0, lam, after))
        current, lam = nxt, after
    sub, _ = induce(F, current.support)
    return SymmetrizationTrace(steps, current, covers_pairs(sub), initial, lam)
