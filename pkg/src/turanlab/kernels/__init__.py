"""Hot loops.  Every function here is compiled by numba unless the JIT is disabled."""
