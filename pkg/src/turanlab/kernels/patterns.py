import numpy as np

from .._jit import njit
from .bits import popcount

# kinds for scan_triples
SIGMA = 0
TRIANGLE = 1


@njit
def scan_thin(masks, r):
    """First pair (i, j), i < j, of edges sharing r - 1 vertices, else (-1, -1)."""
    m = masks.shape[0]
    for i in range(m):
        a = masks[i]
        for j in range(i + 1, m):
            if popcount(a & masks[j]) == r - 1:
                return i, j
    return -1, -1


@njit
def scan_triples(masks, r, kind):
    """Lexicographically first (i, j, k) with i < j, |A & B| = r - 1 and A ^ B <= C.

    For kind == TRIANGLE, C must also avoid A & B.
    """
    m = masks.shape[0]
    zero = np.uint64(0)
    for i in range(m):
        a = masks[i]
        for j in range(i + 1, m):
            b = masks[j]
            core = a & b
            if popcount(core) != r - 1:
                continue
            sym = a ^ b
            for k in range(m):
                c = masks[k]
                if (c & sym) == sym:
                    if kind == TRIANGLE and (c & core) != zero:
                        continue
                    return i, j, k
    return -1, -1, -1
