"""Kernel backend selection.

The compiled Cython kernel is used when built; otherwise the pure-numpy
fallback. Override with STIMCHECK_KERNEL=cython|python or use_backend().
"""
from __future__ import annotations

import os

from . import _kernels_py

_backends = {"python": _kernels_py}
try:
    from . import _kernels as _kernels_cy

    _backends["cython"] = _kernels_cy
except ImportError:
    _kernels_cy = None

_active = None


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_backends))


def use_backend(name: str) -> None:
    global _active
    if name not in _backends:
        raise ValueError(f"unknown kernel backend {name!r}; available: {available_backends()}")
    _active = _backends[name]


def backend_name() -> str:
    return _active.BACKEND


def apply_2x2(amps, num_qubits, target, control_mask, m00, m01, m10, m11):
    _active.apply_2x2(amps, num_qubits, target, control_mask, m00, m01, m10, m11)


_requested = os.environ.get("STIMCHECK_KERNEL")
if _requested:
    use_backend(_requested)
else:
    use_backend("cython" if "cython" in _backends else "python")
