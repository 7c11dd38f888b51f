"""Kernel selection: compiled extension when available, pure Python otherwise.

The compiled kernel only handles prime characteristic; rational-coefficient
work always runs on the pure kernel. Set SATLEN_BACKEND=python to force the
fallback (used by the backend-parity tests and the benchmark).
"""

import os

from . import _kernel_py

try:
    from . import _gbcore as _compiled
except ImportError:
    _compiled = None


def _requested() -> str:
    return os.environ.get("SATLEN_BACKEND", "auto")


def available_backends() -> list[str]:
    names = ["python"]
    if _compiled is not None:
        names.insert(0, "cython")
    return names


def active_backend() -> str:
    mode = _requested()
    if mode == "python":
        return "python"
    if mode == "cython":
        if _compiled is None:
            raise RuntimeError("SATLEN_BACKEND=cython but the compiled kernel is not built")
        return "cython"
    return "cython" if _compiled is not None else "python"


def kernel_for(characteristic: int):
    """Kernel module for the given characteristic (0 means rationals)."""
    if characteristic and active_backend() == "cython":
        return _compiled
    return _kernel_py
