"""Backend selection for the hot loops.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module provides the same functions.  Setting
``FILLSURG_BACKEND=python`` forces the fallback.  Both are always
reachable through :func:`get_backend` for testing and benchmarking.
"""

from __future__ import annotations

import importlib
import os
from types import ModuleType

from fillsurg import _pykernels

_impl: ModuleType = _pykernels
BACKEND = "python"
if os.environ.get("FILLSURG_BACKEND", "").lower() != "python":
    try:
        from fillsurg import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        pass

_NAMES = (
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_exact_div",
    "poly_det",
    "burau_poly_matrix",
    "square_sum_table",
    "square_partitions",
)


def available_backends() -> list[str]:
    out = ["python"]
    try:
        importlib.import_module("fillsurg._ckernels")
        out.append("cython")
    except ImportError:
        pass
    return out


def get_backend(name: str) -> ModuleType:
    if name == "python":
        return _pykernels
    if name == "cython":
        return importlib.import_module("fillsurg._ckernels")
    raise ValueError(f"unknown kernel backend {name!r}")


poly_add = _impl.poly_add
poly_sub = _impl.poly_sub
poly_mul = _impl.poly_mul
poly_exact_div = _impl.poly_exact_div
poly_det = _impl.poly_det
burau_poly_matrix = _impl.burau_poly_matrix
square_sum_table = _impl.square_sum_table
square_partitions = _impl.square_partitions
