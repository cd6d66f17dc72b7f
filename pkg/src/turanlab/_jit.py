"""JIT switch for the numeric kernels.

Kernels are written once as plain numpy loops and compiled with ``numba.njit``
unless ``TURANLAB_DISABLE_JIT`` is set to a truthy value (or numba is missing),
in which case the same functions run interpreted.  The flag is read at import
time, so it has to be set before ``turanlab`` is first imported.
"""

import os

_FLAG = os.environ.get("TURANLAB_DISABLE_JIT", "").strip().lower()

try:
    import numba as _numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None

JIT_ENABLED = _numba is not None and _FLAG in ("", "0", "false", "no")


def njit(*args, **kwargs):
    """``numba.njit`` when JIT is enabled, otherwise an identity decorator."""
    if JIT_ENABLED:
        kwargs.setdefault("cache", True)
        return _numba.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]

    def decorator(func):
        return func

    return decorator


def py_func(kernel):
    """The interpreted version of a kernel, whichever mode is active."""
    return getattr(kernel, "py_func", kernel)


def backend():
    return "numba" if JIT_ENABLED else "numpy"
