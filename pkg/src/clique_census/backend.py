"""Kernel selection: compiled extension when importable, pure Python otherwise.

The environment variable CLIQUE_CENSUS_BACKEND ("compiled" or "pure") forces
a choice; asking for the compiled kernel when it is not built is an error.
"""

from __future__ import annotations

import os
from array import array

from . import _kernel_py

try:
    from . import _kernel  # type: ignore[attr-defined]
except ImportError:
    _kernel = None

_WORD_MASK = (1 << 64) - 1


def available_backends() -> tuple[str, ...]:
    return ("compiled", "pure") if _kernel is not None else ("pure",)


def default_backend() -> str:
    forced = os.environ.get("CLIQUE_CENSUS_BACKEND", "").strip().lower()
    if forced:
        if forced not in ("compiled", "pure"):
            raise ValueError(f"unknown backend {forced!r}")
        if forced == "compiled" and _kernel is None:
            raise ValueError("compiled backend requested but not built")
        return forced
    return "compiled" if _kernel is not None else "pure"


def census_of_subset(g, start_mask: int, backend: str | None = None) -> list[int]:
    """Per-depth clique-tree node counts below the given candidate set of g."""
    if backend is None:
        backend = default_backend()
    if backend == "pure":
        return _kernel_py.census_of_subset(g.bits, start_mask, g.n)
    if backend != "compiled":
        raise ValueError(f"unknown backend {backend!r}")
    if _kernel is None:
        raise ValueError("compiled backend requested but not built")
    if g.n == 0:
        return [1]
    w, adj = g.packed_words()
    start = array("Q", [(start_mask >> (64 * i)) & _WORD_MASK for i in range(w)])
    return _kernel.census_of_words(adj, start, g.n, w)
