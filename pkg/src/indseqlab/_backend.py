"""Kernel backend selection: compiled extension if built, pure Python otherwise.

All hot-path callers go through ``_backend.kernels`` so that `use()` can
switch implementations at runtime (used by the benchmark and by tests that
exercise the fallback).
"""

from . import _kernels_py

try:
    from . import _kernels_c

    kernels = _kernels_c
    name = "c"
except ImportError:  # extension not built; stay on the pure-Python twin
    _kernels_c = None
    kernels = _kernels_py
    name = "py"


def available():
    """Names of the importable backends."""
    return ("c", "py") if _kernels_c is not None else ("py",)


def use(which):
    """Select the kernel backend by name ("c" or "py").

    Returns the previously active name.  Intended for benchmarks and
    tests; library results are identical under either backend.
    """
    global kernels, name
    prev = name
    if which == "c":
        if _kernels_c is None:
            raise ValueError("compiled kernels are not available")
        kernels, name = _kernels_c, "c"
    elif which == "py":
        kernels, name = _kernels_py, "py"
    else:
        raise ValueError("unknown backend %r" % (which,))
    return prev
