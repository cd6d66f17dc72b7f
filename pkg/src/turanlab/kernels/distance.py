"""Edit distance from a graph to the blowups of a base graph.

An assignment ``phi`` maps each of the n vertices to one of m base vertices;
an r-set S is an edge of the blowup iff ``phi(S)`` is an edge of the base.
Base membership is a dense boolean table over ``m**r`` image tuples with every
permutation of each base edge filled in, so repeated images read as False.
"""

import numpy as np

from .._jit import njit

_MODULUS = 2147483647
_MULT = 48271


def base_table(base_edges, m, r):
    import itertools

    table = np.zeros(m**r, dtype=np.bool_)
    weights = m ** np.arange(r, dtype=np.int64)
    for e in base_edges:
        for perm in itertools.permutations(e):
            table[int(np.dot(perm, weights))] = True
    return table


@njit
def _mapped(sets, s, phi, table, m):
    idx = 0
    w = 1
    for k in range(sets.shape[1]):
        idx += phi[sets[s, k]] * w
        w *= m
    return table[idx]


@njit
def exact_search(order, group_ptr, group_sets, sets, in_f, table, m, best_init, best_phi_init, budget):
    """Depth-first enumeration of assignments in ``order`` with forced-edit pruning.

    r-sets are charged when their last vertex (in ``order``) is assigned.
    Returns ``(best, best_phi, steps, exhausted)``; only strict improvements on
    ``best_init`` replace the incumbent.
    """
    n = order.shape[0]
    phi = np.full(n, -1, dtype=np.int64)
    choice = np.full(n, -1, dtype=np.int64)
    cost = np.zeros(n + 1, dtype=np.int64)
    best = best_init
    best_phi = best_phi_init.copy()
    steps = 0
    d = 0
    if n == 0:
        return best, best_phi, steps, True
    while d >= 0:
        choice[d] += 1
        v = order[d]
        if choice[d] >= m:
            choice[d] = -1
            phi[v] = -1
            d -= 1
            continue
        phi[v] = choice[d]
        steps += 1
        if steps > budget:
            return best, best_phi, steps, False
        c = cost[d]
        for t in range(group_ptr[d], group_ptr[d + 1]):
            s = group_sets[t]
            if _mapped(sets, s, phi, table, m) != in_f[s]:
                c += 1
                if c >= best:
                    break
        if c >= best:
            continue
        if d == n - 1:
            best = c
            for u in range(n):
                best_phi[u] = phi[u]
            continue
        cost[d + 1] = c
        d += 1
    return best, best_phi, steps, True


@njit
def local_search(sets, in_f, inc_ptr, inc_sets, table, m, starts, rng_state, max_sideways):
    """Steepest-descent single-vertex reassignment from each row of ``starts``.

    Zero-gain (sideways) moves are taken at random, at most ``max_sideways``
    per restart.  Returns ``(best_cost, best_phi, best_restart)``.
    """
    n = starts.shape[1]
    num_sets = sets.shape[0]
    best_cost = num_sets + 1
    best_phi = starts[0].copy()
    best_restart = 0
    state = rng_state % _MODULUS
    if state == 0:
        state = 1
    mis = np.zeros(num_sets, dtype=np.bool_)
    for k in range(starts.shape[0]):
        phi = starts[k].copy()
        cost = 0
        for s in range(num_sets):
            mis[s] = _mapped(sets, s, phi, table, m) != in_f[s]
            if mis[s]:
                cost += 1
        run_best = cost
        run_phi = phi.copy()
        sideways = 0
        while True:
            best_delta = num_sets + 1
            best_v = -1
            best_p = -1
            zero_count = 0
            zero_v = -1
            zero_p = -1
            for v in range(n):
                old = phi[v]
                for p in range(m):
                    if p == old:
                        continue
                    phi[v] = p
                    delta = 0
                    for t in range(inc_ptr[v], inc_ptr[v + 1]):
                        s = inc_sets[t]
                        now = _mapped(sets, s, phi, table, m) != in_f[s]
                        if now != mis[s]:
                            delta += 1 if now else -1
                    phi[v] = old
                    if delta < best_delta:
                        best_delta = delta
                        best_v = v
                        best_p = p
                    if delta == 0:
                        zero_count += 1
                        state = (state * _MULT) % _MODULUS
                        if state % zero_count == 0:
                            zero_v = v
                            zero_p = p
            if best_v < 0:
                break
            if best_delta < 0:
                sideways = 0
                mv = best_v
                mp = best_p
            elif best_delta == 0 and zero_v >= 0 and sideways < max_sideways:
                sideways += 1
                mv = zero_v
                mp = zero_p
            else:
                break
            phi[mv] = mp
            for t in range(inc_ptr[mv], inc_ptr[mv + 1]):
                s = inc_sets[t]
                now = _mapped(sets, s, phi, table, m) != in_f[s]
                if now != mis[s]:
                    cost += 1 if now else -1
                    mis[s] = now
            if cost < run_best:
                run_best = cost
                run_phi = phi.copy()
        if run_best < best_cost:
            best_cost = run_best
            best_phi = run_phi
            best_restart = k
    return best_cost, best_phi, best_restart
