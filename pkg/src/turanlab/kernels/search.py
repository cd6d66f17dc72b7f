"""Branch and bound for the largest pattern-free r-graph on n vertices.

Candidate edges are uint64 vertex masks in colex order.  The search decides
them one at a time, "include" before "exclude", and keeps the chosen set free
of the pattern incrementally: only configurations through the new edge are
checked.
"""

import numpy as np

from .._jit import njit
from .bits import popcount

THIN = 0
SIGMA = 1
TRIANGLE = 2
CLIQUE = 3

EXHAUSTED = 0
OUT_OF_BUDGET = 2


@njit
def _lowest_index(x):
    low = x & (~x + np.uint64(1))
    return popcount(low - np.uint64(1))


@njit
def has_clique(cand, k, adj):
    """Whether the vertex mask ``cand`` contains k pairwise adjacent vertices."""
    if k <= 0:
        return True
    if popcount(cand) < k:
        return False
    stack = np.zeros(k + 1, dtype=np.uint64)
    stack[0] = cand
    level = 0
    zero = np.uint64(0)
    while level >= 0:
        c = stack[level]
        if c == zero or popcount(c) < k - level:
            level -= 1
            continue
        v = _lowest_index(c)
        rest = c & ~(np.uint64(1) << np.uint64(v))
        stack[level] = rest
        if level + 1 == k:
            return True
        stack[level + 1] = rest & adj[v]
        level += 1
    return False


@njit
def compatible(e, chosen, cnt, r, pattern, adj, u, v, t):
    """Whether adding edge mask ``e`` keeps ``chosen[:cnt]`` free of the pattern."""
    zero = np.uint64(0)
    if pattern == CLIQUE:
        if t <= 2:
            return False
        return not has_clique(adj[u] & adj[v], t - 2, adj)
    if pattern == THIN:
        for i in range(cnt):
            if popcount(e & chosen[i]) == r - 1:
                return False
        return True
    # e together with f as the pair sharing r - 1 vertices
    for i in range(cnt):
        f = chosen[i]
        core = e & f
        if popcount(core) != r - 1:
            continue
        sym = e ^ f
        for j in range(cnt):
            g = chosen[j]
            if j != i and (g & sym) == sym:
                if pattern == SIGMA or (g & core) == zero:
                    return False
    # e as the edge covering the symmetric difference of a chosen pair
    for i in range(cnt):
        a = chosen[i]
        for j in range(i + 1, cnt):
            b = chosen[j]
            core = a & b
            if popcount(core) != r - 1:
                continue
            sym = a ^ b
            if (e & sym) == sym:
                if pattern == SIGMA or (e & core) == zero:
                    return False
    return True


@njit
def greedy_extend(cand, verts, r, n, pattern, t, sel):
    """Add every candidate (in order) that keeps ``sel`` pattern-free."""
    N = cand.shape[0]
    out = sel.copy()
    chosen = np.zeros(N, dtype=np.uint64)
    adj = np.zeros(max(n, 1), dtype=np.uint64)
    cnt = 0
    for k in range(N):
        if out[k]:
            chosen[cnt] = cand[k]
            cnt += 1
            if pattern == CLIQUE:
                adj[verts[k, 0]] |= np.uint64(1) << np.uint64(verts[k, 1])
                adj[verts[k, 1]] |= np.uint64(1) << np.uint64(verts[k, 0])
    for k in range(N):
        if out[k]:
            continue
        u = verts[k, 0]
        w = verts[k, 1] if r > 1 else verts[k, 0]
        if compatible(cand[k], chosen, cnt, r, pattern, adj, u, w, t):
            out[k] = True
            chosen[cnt] = cand[k]
            cnt += 1
            if pattern == CLIQUE:
                adj[u] |= np.uint64(1) << np.uint64(w)
                adj[w] |= np.uint64(1) << np.uint64(u)
    return out


@njit(nogil=True)
def branch_and_bound(cand, verts, r, n, pattern, t, start_sel, start_k,
                     best_init, best_sel_init, budget, shared, use_shared):
    """Exact maximum over all extensions of the decisions ``start_sel[:start_k]``.

    Only sets strictly larger than ``best_init`` (or the shared incumbent,
    when ``use_shared``) are recorded.  Returns ``(best, best_sel, nodes, status)``.
    """
    N = cand.shape[0]
    sel = start_sel.copy()
    chosen = np.zeros(N, dtype=np.uint64)
    adj = np.zeros(max(n, 1), dtype=np.uint64)
    one = np.uint64(1)
    cnt = 0
    for k in range(start_k):
        if sel[k]:
            chosen[cnt] = cand[k]
            cnt += 1
            if pattern == CLIQUE:
                adj[verts[k, 0]] |= one << np.uint64(verts[k, 1])
                adj[verts[k, 1]] |= one << np.uint64(verts[k, 0])
    for k in range(start_k, N):
        sel[k] = False
    best = best_init
    best_sel = best_sel_init.copy()
    state = np.zeros(N, dtype=np.int8)
    nodes = 0
    k = start_k
    while True:
        inc = best
        if use_shared and shared[0] > inc:
            inc = shared[0]
        if cnt + (N - k) <= inc or k == N:
            if k == N and cnt > inc:
                best = cnt
                best_sel = sel.copy()
                if use_shared and shared[0] < cnt:
                    shared[0] = cnt
            # backtrack to the deepest include that can still be flipped
            k -= 1
            resumed = False
            while k >= start_k:
                if state[k] == 1:
                    sel[k] = False
                    cnt -= 1
                    if pattern == CLIQUE:
                        adj[verts[k, 0]] &= ~(one << np.uint64(verts[k, 1]))
                        adj[verts[k, 1]] &= ~(one << np.uint64(verts[k, 0]))
                    state[k] = 2
                    k += 1
                    resumed = True
                    break
                state[k] = 0
                k -= 1
            if not resumed:
                return best, best_sel, nodes, EXHAUSTED
            continue
        nodes += 1
        if nodes > budget:
            return best, best_sel, nodes, OUT_OF_BUDGET
        u = verts[k, 0]
        w = verts[k, 1] if r > 1 else verts[k, 0]
        if compatible(cand[k], chosen, cnt, r, pattern, adj, u, w, t):
            sel[k] = True
            chosen[cnt] = cand[k]
            cnt += 1
            if pattern == CLIQUE:
                adj[u] |= one << np.uint64(w)
                adj[w] |= one << np.uint64(u)
            state[k] = 1
        else:
            state[k] = 2
        k += 1
