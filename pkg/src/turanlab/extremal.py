"""Exact Turán numbers at desk scale by branch and bound."""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InvalidArgument
from .hypercore import Hypergraph, to_hgr
from .kernels import search as _k
from .kernels.bits import edge_masks

PATTERNS = {
    "thin": _k.THIN,
    "sigma": _k.SIGMA,
    "triangle": _k.TRIANGLE,
    "clique": _k.CLIQUE,
}
DEFAULT_BUDGET = 10**9
N_CAP = {2: 10, 3: 8}


@dataclass
class SearchResult:
    n: int
    r: int
    pattern: str
    max_edges: int
    witness: Hypergraph
    nodes_explored: int
    status: str  # "exhausted" | "budget"
    t: Optional[int] = None
    seed_edges: int = 0

    @property
    def certified(self) -> bool:
        return self.status == "exhausted"

    def to_dict(self):
        return {
            "n": self.n,
            "r": self.r,
            "pattern": self.pattern,
            "t": self.t,
            "max_edges": self.max_edges,
            "certified": self.certified,
            "status": self.status,
            "nodes_explored": self.nodes_explored,
            "seed_edges": self.seed_edges,
            "witness_hgr": to_hgr(self.witness),
        }


def bollobas_formula(n: int) -> int:
    if n < 3:
        raise InvalidArgument(f"formula stated for n >= 3, got {n}")
    return (n // 3) * ((n + 1) // 3) * ((n + 2) // 3)


def colex_edges(n: int, r: int) -> list:
    return sorted(itertools.combinations(range(n), r), key=lambda e: tuple(reversed(e)))


def _complete_partite(n: int, r: int, parts: int) -> set:
    """Edges of the complete balanced ``parts``-partite r-graph (transversal r-sets)."""
    label = [v % parts for v in range(n)]
    return {e for e in itertools.combinations(range(n), r) if len({label[v] for v in e}) == r}


def _seed(n, r, pattern, t, cand, verts, edges):
    code = PATTERNS[pattern]
    if pattern == "clique":
        chosen = _complete_partite(n, 2, max(t - 1, 1)) if t > 2 else set()
    elif pattern in ("sigma", "triangle") and n >= r:
        chosen = _complete_partite(n, r, r)
    else:
        chosen = set()
    sel = np.array([e in chosen for e in edges], dtype=np.bool_)
    if not (pattern == "clique" and t <= 2):
        sel = _k.greedy_extend(cand, verts, r, n, code, t, sel)
    return sel


def max_free_edges(
    n: int,
    r: int,
    pattern: str = "sigma",
    budget: int = DEFAULT_BUDGET,
    parallel: bool = False,
    t: int = 3,
    deterministic: bool = True,
    threads: Optional[int] = None,
    n_cap: Optional[int] = None,
) -> SearchResult:
    """The largest number of edges in a pattern-free r-graph on n vertices.

    ``pattern`` is ``sigma`` (members of Sigma_r), ``triangle`` (T_r),
    ``thin`` (two edges sharing r - 1 vertices) or ``clique`` (K_t, r = 2).
    A result with status ``"budget"`` is a best-so-far lower bound only.
    """
    if pattern not in PATTERNS:
        raise InvalidArgument(f"unknown pattern {pattern!r}; choose from {sorted(PATTERNS)}")
    if r < 2:
        raise InvalidArgument(f"r must be at least 2, got {r}")
    if pattern == "clique" and r != 2:
        raise InvalidArgument("clique pattern needs r = 2")
    if pattern == "clique" and t < 2:
        raise InvalidArgument(f"clique size must be at least 2, got {t}")
    cap = n_cap if n_cap is not None else N_CAP.get(r, 8)
    if not 0 <= n <= min(cap, 64):
        raise InvalidArgument(f"n = {n} outside the search cap 0..{cap} for r = {r}")

    edges = colex_edges(n, r)
    N = len(edges)
    cand = edge_masks(edges)
    verts = np.array(edges, dtype=np.int64).reshape(N, r)
    code = PATTERNS[pattern]
    seed_sel = _seed(n, r, pattern, t, cand, verts, edges)
    seed_count = int(seed_sel.sum())
    shared = np.array([seed_count], dtype=np.int64)

    if not parallel or N == 0:
        best, best_sel, nodes, status = _k.branch_and_bound(
            cand, verts, r, n, code, t, np.zeros(N, dtype=np.bool_), 0,
            seed_count, seed_sel, budget, shared, False,
        )
        nodes = int(nodes)
    else:
        best, best_sel, nodes, status = _parallel(
            cand, verts, r, n, code, t, seed_count, seed_sel, budget, shared,
            use_shared=not deterministic, threads=threads,
        )
    witness = Hypergraph(r, n, tuple(e for e, keep in zip(edges, best_sel) if keep))
    return SearchResult(
        n, r, pattern, int(best), witness, nodes,
        "exhausted" if status == _k.EXHAUSTED else "budget",
        t if pattern == "clique" else None, seed_count,
    )


def _prefixes(cand, verts, r, n, code, t, depth):
    """Include-first decision prefixes of length ``depth`` that are pattern-free."""
    N = cand.shape[0]
    out = []
    for bits in itertools.product((True, False), repeat=depth):
        sel = np.zeros(N, dtype=np.bool_)
        sel[:depth] = bits
        chosen = np.zeros(N, dtype=np.uint64)
        adj = np.zeros(max(n, 1), dtype=np.uint64)
        cnt, ok = 0, True
        for k in range(depth):
            if not bits[k]:
                continue
            u, w = int(verts[k, 0]), int(verts[k, min(1, r - 1)])
            if not _k.compatible(cand[k], chosen, cnt, r, code, adj, u, w, t):
                ok = False
                break
            chosen[cnt] = cand[k]
            cnt += 1
            if code == _k.CLIQUE:
                adj[u] |= np.uint64(1 << w)
                adj[w] |= np.uint64(1 << u)
        if ok:
            out.append(sel)
    return out


def _parallel(cand, verts, r, n, code, t, seed_count, seed_sel, budget, shared, use_shared, threads):
    import os

    workers = threads or os.cpu_count() or 1
    depth = min(cand.shape[0], max(2, (4 * workers - 1).bit_length()))
    jobs = _prefixes(cand, verts, r, n, code, t, depth)

    def run(sel):
        return _k.branch_and_bound(
            cand, verts, r, n, code, t, sel, depth, seed_count, seed_sel, budget, shared, use_shared
        )

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(run, jobs))
    best, best_sel = seed_count, seed_sel
    nodes, status = 0, _k.EXHAUSTED
    for value, sel, used, st in results:  # job order = sequential DFS order
        nodes += int(used)
        if st != _k.EXHAUSTED:
            status = st
        if value > best:
            best, best_sel = value, sel
    return best, best_sel, nodes, status


# ---------------------------------------------------------------------------
# independent re-verification


def brute_force_hit(F: Hypergraph, pattern: str, t: int = 3) -> Optional[tuple]:
    """Exhaustive pair/triple (or vertex-subset) scan over frozensets; no bit tricks."""
    sets = [frozenset(e) for e in F.edges]
    r = F.r
    if pattern == "thin":
        for A, B in itertools.combinations(sets, 2):
            if len(A & B) == r - 1:
                return (A, B)
        return None
    if pattern in ("sigma", "triangle"):
        for A, B, C in itertools.permutations(sets, 3):
            if len(A & B) != r - 1 or not (A ^ B) <= C:
                continue
            if pattern == "triangle" and (C & A & B):
                continue
            return (A, B, C)
        return None
    if pattern == "clique":
        es = F.edge_set
        for S in itertools.combinations(range(F.n), t):
            if all(p in es for p in itertools.combinations(S, 2)):
                return tuple(S)
        return None
    raise InvalidArgument(f"unknown pattern {pattern!r}")


@dataclass
class WitnessReport:
    edge_count_ok: bool
    free: bool
    shape_ok: bool
    hit: Optional[tuple] = None
    counted: int = 0

    @property
    def passed(self):
        return self.edge_count_ok and self.free and self.shape_ok

    def to_dict(self):
        return {
            "passed": self.passed,
            "edge_count_ok": self.edge_count_ok,
            "counted_edges": self.counted,
            "free": self.free,
            "shape_ok": self.shape_ok,
            "hit": None if self.hit is None else [sorted(x) if isinstance(x, frozenset) else x for x in self.hit],
        }


def extremal_witness_check(res: SearchResult) -> WitnessReport:
    W = res.witness
    hit = brute_force_hit(W, res.pattern, res.t or 3)
    return WitnessReport(
        edge_count_ok=len(W) == res.max_edges,
        free=hit is None,
        shape_ok=(W.n == res.n and W.r == res.r),
        hit=hit,
        counted=len(W),
    )
