"""Kernel backend selection.

The compiled extension ``rigaug._kernels`` is preferred.  The pure-Python
twin is used when the extension is missing or when the environment variable
``RIGAUG_PURE`` is set to a non-empty value other than ``0``.
"""
import os

from . import _kernels_py

__all__ = ["PebbleGame", "disjoint_paths", "BACKEND", "pure_backend"]


def _load():
    if os.environ.get("RIGAUG_PURE", "0") not in ("", "0"):
        return _kernels_py, "python"
    try:
        from . import _kernels
    except ImportError:
        return _kernels_py, "python"
    return _kernels, "cython"


_impl, BACKEND = _load()
PebbleGame = _impl.PebbleGame
disjoint_paths = _impl.disjoint_paths


def pure_backend():
    """The pure-Python kernel module (for benchmarks and cross-checks)."""
    return _kernels_py
