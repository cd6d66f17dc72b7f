"""Dancing links over flat int64 arrays.

Node 0 is the root, nodes 1..num_items are column headers (item c lives in
header c + 1), row nodes follow.  The search is iterative so that it compiles
under numba without recursion.
"""

import numpy as np

from .._jit import njit

FOUND = 1
EXHAUSTED = 0
OUT_OF_BUDGET = 2


def build_links(num_items, rows):
    total = 1 + num_items + sum(len(row) for row in rows)
    L = np.zeros(total, dtype=np.int64)
    R = np.zeros(total, dtype=np.int64)
    U = np.arange(total, dtype=np.int64)
    D = np.arange(total, dtype=np.int64)
    C = np.arange(total, dtype=np.int64)
    ROW = np.full(total, -1, dtype=np.int64)
    S = np.zeros(num_items + 1, dtype=np.int64)
    for h in range(num_items + 1):
        L[h] = h - 1 if h > 0 else num_items
        R[h] = h + 1 if h < num_items else 0
    first_node = np.empty(len(rows), dtype=np.int64)
    nxt = num_items + 1
    for ri, row in enumerate(rows):
        start = nxt
        first_node[ri] = start
        k = len(row)
        for pos, item in enumerate(row):
            x = nxt
            col = item + 1
            C[x] = col
            ROW[x] = ri
            # append at the bottom of the column
            U[x] = U[col]
            D[x] = col
            D[U[col]] = x
            U[col] = x
            S[col] += 1
            L[x] = start + (pos - 1) % k
            R[x] = start + (pos + 1) % k
            nxt += 1
    return L, R, U, D, C, ROW, S, first_node


@njit
def _cover(c, L, R, U, D, C, S):
    L[R[c]] = L[c]
    R[L[c]] = R[c]
    i = D[c]
    while i != c:
        j = R[i]
        while j != i:
            U[D[j]] = U[j]
            D[U[j]] = D[j]
            S[C[j]] -= 1
            j = R[j]
        i = D[i]


@njit
def _uncover(c, L, R, U, D, C, S):
    i = U[c]
    while i != c:
        j = L[i]
        while j != i:
            S[C[j]] += 1
            U[D[j]] = j
            D[U[j]] = j
            j = L[j]
        i = U[i]
    L[R[c]] = c
    R[L[c]] = c


@njit
def search(L, R, U, D, C, ROW, S, forced, budget):
    """First exact cover extending the rows whose first nodes are in ``forced``.

    Returns ``(status, chosen_rows, nodes)``.  Columns are chosen by fewest
    remaining candidates, ties to the lowest item.
    """
    for t in range(forced.shape[0]):
        x = forced[t]
        _cover(C[x], L, R, U, D, C, S)
        j = R[x]
        while j != x:
            _cover(C[j], L, R, U, D, C, S)
            j = R[j]

    depth_cap = S.shape[0] + 1
    sol = np.empty(depth_cap, dtype=np.int64)
    cols = np.empty(depth_cap, dtype=np.int64)
    level = 0
    nodes = 0
    while True:
        if R[0] == 0:
            out = np.empty(level, dtype=np.int64)
            for k in range(level):
                out[k] = ROW[sol[k]]
            return FOUND, out, nodes
        best = R[0]
        size = S[best]
        c = R[best]
        while c != 0 and size > 0:
            if S[c] < size:
                best = c
                size = S[c]
            c = R[c]
        advanced = False
        if size > 0:
            _cover(best, L, R, U, D, C, S)
            cols[level] = best
            row = D[best]
            sol[level] = row
            j = R[row]
            while j != row:
                _cover(C[j], L, R, U, D, C, S)
                j = R[j]
            level += 1
            nodes += 1
            advanced = True
        if advanced:
            if nodes >= budget:
                return OUT_OF_BUDGET, np.empty(0, dtype=np.int64), nodes
            continue
        # backtrack until some level has an untried row
        while True:
            if level == 0:
                return EXHAUSTED, np.empty(0, dtype=np.int64), nodes
            level -= 1
            row = sol[level]
            col = cols[level]
            j = L[row]
            while j != row:
                _uncover(C[j], L, R, U, D, C, S)
                j = L[j]
            row = D[row]
            if row != col:
                sol[level] = row
                j = R[row]
                while j != row:
                    _cover(C[j], L, R, U, D, C, S)
                    j = R[j]
                level += 1
                nodes += 1
                break
            _uncover(col, L, R, U, D, C, S)
        if nodes >= budget:
            return OUT_OF_BUDGET, np.empty(0, dtype=np.int64), nodes
