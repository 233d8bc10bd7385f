"""Optional numba acceleration.

Importing this module never fails: if numba is missing, or the environment
sets CROSSFAM_NO_NUMBA=1, `jit` degrades to a no-op decorator and HAS_NUMBA
is False.  Kernels written against `jit` then run as plain Python/numpy,
which keeps results identical (all integer arithmetic, just slower).
"""

import os


def _dummy_jit(*args, **kwargs):
    """Mimic the numba.njit decorator in both @jit and @jit(...) forms."""

    def wrapper(f):
        return f

    if len(args) == 1 and callable(args[0]):
        return args[0]
    return wrapper


if os.environ.get("CROSSFAM_NO_NUMBA", "0") == "1":
    HAS_NUMBA = False
    jit = _dummy_jit
else:
    try:
        import numba

        def jit(*args, **kwargs):
            # cache compiled kernels on disk so repeat runs skip the JIT cost
            kwargs.setdefault("cache", True)
            if len(args) == 1 and callable(args[0]):
                return numba.njit(cache=True)(args[0])
            return numba.njit(*args, **kwargs)

        HAS_NUMBA = True
    except ImportError:  # pragma: no cover - depends on environment
        HAS_NUMBA = False
        jit = _dummy_jit
