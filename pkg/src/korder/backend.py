"""Selects between the numba search kernels and the pure-Python fallback.

The KORDER_BACKEND environment variable picks the default: "numba",
"python", or "auto" (numba when importable and the graph fits in 62-bit
masks).  Callers can override per call; both backends are exercised against
each other in the test suite.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

from .graphs import Graph

BACKENDS = ("auto", "numba", "python")
_ENV_VAR = "KORDER_BACKEND"
_NUMBA_MAX_N = 62


@lru_cache(maxsize=1)
def numba_available() -> bool:
    try:
        from . import _kernels_nb  # noqa: F401
    except ImportError:
        return False
    return True


def default_backend() -> str:
    value = os.environ.get(_ENV_VAR, "auto").strip().lower()
    if value not in BACKENDS:
        raise ValueError(
            f"{_ENV_VAR} must be one of {BACKENDS}, got {value!r}"
        )
    return value


def resolve_backend(n: int, override: str | None = None) -> str:
    """Concrete backend ("numba" or "python") for a graph on n vertices."""
    choice = override if override is not None else default_backend()
    if choice not in BACKENDS:
        raise ValueError(f"backend must be one of {BACKENDS}, got {choice!r}")
    if choice == "numba":
        if not numba_available():
            raise RuntimeError("numba backend requested but numba is not importable")
        if n > _NUMBA_MAX_N:
            raise ValueError(f"numba backend supports n <= {_NUMBA_MAX_N}, got {n}")
        return "numba"
    if choice == "python":
        return "python"
    if numba_available() and n <= _NUMBA_MAX_N:
        return "numba"
    return "python"


def neighbor_masks(g: Graph) -> list[int]:
    """Adjacency as one Python-int bitmask per vertex."""
    masks = []
    for v in range(g.n):
        m = 0
        for w in g.adjacency[v]:
            m |= 1 << w
        masks.append(m)
    return masks


def neighbor_masks_np(g: Graph) -> np.ndarray:
    """Adjacency as an int64 mask array for the numba kernels."""
    if g.n > _NUMBA_MAX_N:
        raise ValueError(f"int64 masks support n <= {_NUMBA_MAX_N}, got {g.n}")
    return np.array(neighbor_masks(g), dtype=np.int64)


def warmup() -> None:
    """Compile the numba kernels now (no-op without numba)."""
    if numba_available():
        from . import _kernels_nb

        _kernels_nb.warmup()
