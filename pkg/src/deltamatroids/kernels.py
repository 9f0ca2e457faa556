"""Backend selection for the hot kernels.

Prefers the compiled extension where its word-size limits allow and falls
back to the pure-Python implementation otherwise.  Set the environment
variable ``DELTAMATROIDS_PURE=1`` before import to force pure Python.
"""

from __future__ import annotations

import os

from . import _kernels_py as _py

_ext = None
if os.environ.get("DELTAMATROIDS_PURE") != "1":
    try:
        from . import _kernels as _ext  # type: ignore[no-redef]
    except ImportError:
        _ext = None

# The compiled kernels keep subset bitmaps in a 64-bit word.
_EXT_MAX_N = 6
# Static buffers in the compiled boundary walker.
_EXT_MAX_HALF_EDGES = 64
_EXT_MAX_EDGES = 16

rank_bits = _py.rank_bits


def backend_name() -> str:
    return "cython" if _ext is not None else "python"


def sea_holds(n: int, bitmap: int) -> bool:
    if _ext is not None and n <= _EXT_MAX_N:
        return _ext.sea_holds(n, bitmap)
    return _py.sea_holds(n, bitmap)


def feas_bitmap(n: int, rows) -> int:
    if _ext is not None and n <= _EXT_MAX_N:
        return _ext.feas_bitmap(n, tuple(rows))
    return _py.feas_bitmap(n, rows)


def twist_bitmap(n: int, bitmap: int, t: int) -> int:
    if _ext is not None and n <= _EXT_MAX_N:
        return _ext.twist_bitmap(n, bitmap, t)
    return _py.twist_bitmap(n, bitmap, t)


def slide_bitmap(n: int, bitmap: int, a: int, b: int) -> int:
    if _ext is not None and n <= _EXT_MAX_N:
        return _ext.slide_bitmap(n, bitmap, a, b)
    return _py.slide_bitmap(n, bitmap, a, b)


def canon_bitmap(n: int, bitmap: int) -> int:
    if _ext is not None and n <= _EXT_MAX_N:
        return _ext.canon_bitmap(n, bitmap)
    return _py.canon_bitmap(n, bitmap)


def transverse_bitmap(n: int, rows) -> int:
    if _ext is not None and n <= _EXT_MAX_N:
        return _ext.transverse_bitmap(n, tuple(rows))
    return _py.transverse_bitmap(n, rows)


def boundary_circles(n_vertices, vertex_of, rot_next, edge_of, partner, neg, subset):
    if (
        _ext is not None
        and n_vertices <= _EXT_MAX_HALF_EDGES
        and len(vertex_of) <= _EXT_MAX_HALF_EDGES
        and len(neg) <= _EXT_MAX_EDGES
    ):
        return _ext.boundary_circles(
            n_vertices, vertex_of, rot_next, edge_of, partner, neg, subset
        )
    return _py.boundary_circles(
        n_vertices, vertex_of, rot_next, edge_of, partner, neg, subset
    )


def quasi_tree_masks(n_vertices, n_edges, vertex_of, rot_next, edge_of, partner, neg):
    if (
        _ext is not None
        and n_vertices <= _EXT_MAX_HALF_EDGES
        and len(vertex_of) <= _EXT_MAX_HALF_EDGES
        and n_edges <= _EXT_MAX_EDGES
    ):
        return _ext.quasi_tree_masks(
            n_vertices, n_edges, vertex_of, rot_next, edge_of, partner, neg
        )
    return _py.quasi_tree_masks(
        n_vertices, n_edges, vertex_of, rot_next, edge_of, partner, neg
    )
