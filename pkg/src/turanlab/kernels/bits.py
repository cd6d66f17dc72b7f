import numpy as np

from .._jit import njit

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_LOW7 = np.uint64(0x7F)


@njit
def popcount(x):
    x = np.uint64(x)
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    # fold the byte counts with shifts; a multiply would wrap (and warn when interpreted)
    x = x + (x >> np.uint64(8))
    x = x + (x >> np.uint64(16))
    x = x + (x >> np.uint64(32))
    return np.int64(x & _LOW7)


def edge_masks(edges):
    """uint64 bitmask per edge; vertices must be < 64."""
    out = np.zeros(len(edges), dtype=np.uint64)
    for i, e in enumerate(edges):
        m = 0
        for v in e:
            m |= 1 << v
        out[i] = m
    return out
