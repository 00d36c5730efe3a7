"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``FANFORGE_PURE_PYTHON=1`` to force the fallback.
"""
import os

from fanforge import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("FANFORGE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from fanforge import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on the build
        _impl = _kernels_py


def connected(adj, alive):
    if len(adj) > 64:
        return _kernels_py.connected(adj, alive)
    return _impl.connected(adj, alive)


def is_k_connected(adj, n, k):
    if n > 64:
        return _kernels_py.is_k_connected(adj, n, k)
    return _impl.is_k_connected(adj, n, k)


def forest_rank(n, us, vs):
    if n > 256:
        return _kernels_py.forest_rank(n, us, vs)
    return _impl.forest_rank(n, us, vs)
