"""Framed graphs and binary delta-matroid recognition.

A framed graph is a symmetric adjacency matrix over F2 whose diagonal
entry at a vertex is its framing.  Its nondegeneracy delta-matroid has as
feasible sets the vertex subsets inducing a nondegenerate principal
submatrix; twists of such delta-matroids are exactly the binary ones, and
``recognize_binary`` reconstructs a witness or rejects.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .core import SetSystem, from_bitmap, twist
from .errors import NotSymmetric, SameVertex
from .f2 import MatrixF2


class FramedGraph:
    """Vertices 0..n-1 with framings on the diagonal of ``adj``."""

    __slots__ = ("n", "adj")

    def __init__(self, adj: MatrixF2):
        if not adj.is_symmetric():
            raise NotSymmetric("a framed graph needs a symmetric adjacency matrix")
        object.__setattr__(self, "n", adj.rows)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("FramedGraph is immutable")

    def __eq__(self, other):
        return isinstance(other, FramedGraph) and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)

    def __repr__(self):
        return f"FramedGraph({self.adj!r})"

    def framing(self, v: int) -> int:
        return self.adj.entry(v, v)


def framed_graph_from_rows(n: int, bits) -> FramedGraph:
    return FramedGraph(MatrixF2(n, n, bits))


def nondeg_delta_matroid(g: FramedGraph) -> SetSystem:
    """Feasible sets = vertex subsets with nondegenerate principal submatrix."""
    return from_bitmap(g.n, kernels.feas_bitmap(g.n, g.adj.bits))


def graph_slide(g: FramedGraph, a: int, b: int) -> FramedGraph:
    """Second Vassiliev move on the graph: add row/column b to row/column a.

    Equivalently: the adjacency of a to c toggles iff c is adjacent to b,
    the adjacency of a and b toggles iff the framing of b is 1, and the
    framing of a toggles iff the framing of b is 1.
    """
    if a == b:
        raise SameVertex("slide needs two distinct vertices")
    rows = list(g.adj.bits)
    rows[a] ^= rows[b]
    col_b = 1 << b
    col_a = 1 << a
    for i in range(g.n):
        if rows[i] & col_b:
            rows[i] ^= col_a
    return FramedGraph(MatrixF2(g.n, g.n, rows))


@dataclass(frozen=True)
class BinaryWitness:
    """A twist set and framed graph certifying that a system is binary.

    ``twist(nondeg_delta_matroid(graph), twist_set)`` reproduces the input
    exactly.
    """

    twist_set: int
    graph: FramedGraph


def _reconstruct_rows(n: int, t: int) -> list[int]:
    """The only matrix candidate for a twisted bitmap with the empty set
    feasible: diagonal from singleton feasibility, off-diagonal entries
    forced by pair feasibility (a 2x2 principal minor is nondegenerate iff
    a_ef != a_ee * a_ff)."""
    rows = [0] * n
    for e in range(n):
        if t >> (1 << e) & 1:
            rows[e] |= 1 << e
    for e in range(n):
        for f in range(e + 1, n):
            if bool(t >> ((1 << e) | (1 << f)) & 1) ^ (
                bool(rows[e] >> e & 1) and bool(rows[f] >> f & 1)
            ):
                rows[e] |= 1 << f
                rows[f] |= 1 << e
    return rows


def recognize_binary(s: SetSystem) -> BinaryWitness | None:
    """Reconstruct a binary representation of ``s`` or return None.

    Twisting by any feasible set makes the empty set feasible; singleton
    and pair feasibility then force the only candidate matrix, and full
    verification of its nondegeneracy delta-matroid decides acceptance.
    """
    phi0 = s.masks[0]
    t = twist(s, phi0)
    rows = _reconstruct_rows(s.n, t.bitmap)
    if kernels.feas_bitmap(s.n, rows) != t.bitmap:
        return None
    return BinaryWitness(phi0, framed_graph_from_rows(s.n, rows))


def is_binary(s: SetSystem) -> bool:
    return recognize_binary(s) is not None


def is_binary_bitmap(n: int, bitmap: int) -> bool:
    """Recognizer fast path on a raw feasible-set bitmap (for sweeps)."""
    phi0 = (bitmap & -bitmap).bit_length() - 1
    t = kernels.twist_bitmap(n, bitmap, phi0)
    rows = _reconstruct_rows(n, t)
    return kernels.feas_bitmap(n, rows) == t
