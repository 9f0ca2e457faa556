"""Ribbon graphs as signed rotation systems.

A ribbon graph stores one cyclic half-edge sequence per vertex and a sign
per edge (+1 orientable ribbon, -1 half-twisted).  Half-edge ids must be
exactly 0..2m-1, each appearing once across the rotations and once across
the edges.  Feasible sets of the associated delta-matroid are the edge
subsets whose spanning ribbon subgraph has a single boundary circle.
"""

from __future__ import annotations

from . import kernels
from .core import SetSystem
from .errors import (
    Disconnected,
    EmptyFamily,
    IndexOutOfRange,
    MaskOutOfRange,
    NotAdjacent,
    SameEdge,
)
from .f2 import MatrixF2
from .graphs import FramedGraph


class RibbonGraph:
    __slots__ = ("vertices", "edges", "_arrays")

    def __init__(self, vertices, edges):
        vertices = tuple(tuple(v) for v in vertices)
        edges = tuple((h1, h2, sign) for h1, h2, sign in edges)
        nh = 2 * len(edges)
        seen_rot = [h for rot in vertices for h in rot]
        if sorted(seen_rot) != list(range(nh)):
            raise ValueError("rotations must use half-edge ids 0..2m-1 exactly once")
        seen_edge = sorted(h for h1, h2, _ in edges for h in (h1, h2))
        if seen_edge != list(range(nh)):
            raise ValueError("edges must pair half-edge ids 0..2m-1 exactly once")
        for _, _, sign in edges:
            if sign not in (1, -1):
                raise ValueError("edge sign must be +1 or -1")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        vertex_of = [0] * nh
        rot_next = [0] * nh
        for vi, rot in enumerate(vertices):
            for k, h in enumerate(rot):
                vertex_of[h] = vi
                rot_next[h] = rot[(k + 1) % len(rot)]
        edge_of = [0] * nh
        partner = [0] * nh
        neg = []
        for ei, (h1, h2, sign) in enumerate(edges):
            edge_of[h1] = edge_of[h2] = ei
            partner[h1] = h2
            partner[h2] = h1
            neg.append(1 if sign < 0 else 0)
        object.__setattr__(
            self, "_arrays", (vertex_of, rot_next, edge_of, partner, neg)
        )

    def __setattr__(self, name, value):
        raise AttributeError("RibbonGraph is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, RibbonGraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"RibbonGraph(vertices={self.vertices}, edges={self.edges})"

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def is_connected(self) -> bool:
        nv = self.n_vertices
        if nv <= 1:
            return True
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        vertex_of = self._arrays[0]
        for h1, h2, _ in self.edges:
            parent[find(vertex_of[h1])] = find(vertex_of[h2])
        return len({find(v) for v in range(nv)}) == 1


def boundary_components(r: RibbonGraph, edge_subset: int) -> int:
    """Boundary circles of the spanning subgraph on the selected ribbons."""
    if edge_subset < 0 or edge_subset >= 1 << r.n_edges:
        raise MaskOutOfRange(f"edge subset {edge_subset:#x} out of range")
    vertex_of, rot_next, edge_of, partner, neg = r._arrays
    return kernels.boundary_circles(
        r.n_vertices, vertex_of, rot_next, edge_of, partner, neg, edge_subset
    )


def ribbon_delta_matroid(r: RibbonGraph) -> SetSystem:
    """Quasi-tree delta-matroid; the ribbon graph must be connected."""
    if not r.is_connected():
        raise Disconnected("delta-matroid extraction needs a connected ribbon graph")
    vertex_of, rot_next, edge_of, partner, neg = r._arrays
    masks = kernels.quasi_tree_masks(
        r.n_vertices, r.n_edges, vertex_of, rot_next, edge_of, partner, neg
    )
    if not masks:
        raise EmptyFamily("no edge subset has a connected boundary")
    return SetSystem(r.n_edges, masks)


def restrict_edges(r: RibbonGraph, edge_subset: int) -> RibbonGraph:
    """Spanning subgraph on the selected ribbons, half-edges renumbered."""
    if edge_subset < 0 or edge_subset >= 1 << r.n_edges:
        raise MaskOutOfRange(f"edge subset {edge_subset:#x} out of range")
    edge_of = r._arrays[2]
    keep = [h for rot in r.vertices for h in rot if edge_subset >> edge_of[h] & 1]
    renum = {h: i for i, h in enumerate(sorted(keep))}
    vertices = [
        tuple(renum[h] for h in rot if edge_subset >> edge_of[h] & 1)
        for rot in r.vertices
    ]
    edges = [
        (renum[h1], renum[h2], sign)
        for ei, (h1, h2, sign) in enumerate(r.edges)
        if edge_subset >> ei & 1
    ]
    return RibbonGraph(vertices, edges)


def connected_components(r: RibbonGraph) -> list[RibbonGraph]:
    """Components as separate ribbon graphs, vertices in original order."""
    nv = r.n_vertices
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    vertex_of = r._arrays[0]
    for h1, h2, _ in r.edges:
        parent[find(vertex_of[h1])] = find(vertex_of[h2])
    roots: list[int] = []
    for v in range(nv):
        rv = find(v)
        if rv not in roots:
            roots.append(rv)
    out = []
    for root in roots:
        vids = [v for v in range(nv) if find(v) == root]
        held = [h for v in vids for h in r.vertices[v]]
        renum = {h: i for i, h in enumerate(sorted(held))}
        vertices = [tuple(renum[h] for h in r.vertices[v]) for v in vids]
        edges = [
            (renum[h1], renum[h2], sign)
            for h1, h2, sign in r.edges
            if h1 in renum
        ]
        out.append(RibbonGraph(vertices, edges))
    return out


def _opened(rot, p: int):
    if not rot:
        if p != 0:
            raise IndexOutOfRange("break point of an empty rotation must be 0")
        return ()
    if p < 0 or p >= len(rot):
        raise IndexOutOfRange(f"break point {p} out of range")
    return tuple(rot[p:]) + tuple(rot[:p])


def vertex_gluing(
    r1: RibbonGraph, v1: int, p1: int, r2: RibbonGraph, v2: int, p2: int
) -> RibbonGraph:
    """Glue two ribbon graphs along a vertex.

    The merged vertex reads r1's rotation opened at p1 followed by r2's
    opened at p2; the ground set is r1's edges followed by r2's.
    """
    if not (0 <= v1 < r1.n_vertices and 0 <= v2 < r2.n_vertices):
        raise IndexOutOfRange("vertex index out of range")
    shift = 2 * r1.n_edges
    merged = _opened(r1.vertices[v1], p1) + tuple(
        h + shift for h in _opened(r2.vertices[v2], p2)
    )
    vertices = [merged]
    vertices += [rot for i, rot in enumerate(r1.vertices) if i != v1]
    vertices += [
        tuple(h + shift for h in rot)
        for i, rot in enumerate(r2.vertices)
        if i != v2
    ]
    edges = list(r1.edges) + [
        (h1 + shift, h2 + shift, sign) for h1, h2, sign in r2.edges
    ]
    return RibbonGraph(vertices, edges)


def ribbon_end_exchange(r: RibbonGraph, v: int, p: int) -> RibbonGraph:
    """First Vassiliev move: transpose the half-edges at positions p, p+1 of v.

    The two half-edges must belong to distinct edges.
    """
    if not 0 <= v < r.n_vertices:
        raise IndexOutOfRange("vertex index out of range")
    rot = list(r.vertices[v])
    if not 0 <= p < len(rot):
        raise IndexOutOfRange(f"position {p} out of range")
    q = (p + 1) % len(rot)
    edge_of = r._arrays[2]
    if edge_of[rot[p]] == edge_of[rot[q]]:
        raise SameEdge("the adjacent ends belong to a single ribbon")
    rot[p], rot[q] = rot[q], rot[p]
    vertices = list(r.vertices)
    vertices[v] = tuple(rot)
    return RibbonGraph(vertices, r.edges)


class ChordDiagram:
    """A one-vertex ribbon graph given by a word of chord labels plus signs.

    Chords are indexed 0..n-1 in order of first occurrence along the
    rotation, which is also the ground-set order of the delta-matroid.
    """

    __slots__ = ("word", "signs", "labels")

    def __init__(self, word, signs, labels=None):
        word = tuple(word)
        signs = tuple(signs)
        n = len(signs)
        if sorted(word) != sorted(list(range(n)) * 2):
            raise ValueError("each chord index must appear exactly twice")
        first = []
        for c in word:
            if c not in first:
                first.append(c)
        if first != list(range(n)):
            raise ValueError("chords must be indexed in order of first occurrence")
        for s in signs:
            if s not in (1, -1):
                raise ValueError("chord sign must be +1 or -1")
        if labels is None:
            labels = tuple(f"c{i}" for i in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n or len(set(labels)) != n:
                raise ValueError("labels must be distinct, one per chord")
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "signs", signs)
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("ChordDiagram is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, ChordDiagram)
            and self.word == other.word
            and self.signs == other.signs
        )

    def __hash__(self):
        return hash((self.word, self.signs))

    def __repr__(self):
        w = " ".join(self.labels[c] for c in self.word)
        s = " ".join(
            f"{l}={'+' if s > 0 else '-'}" for l, s in zip(self.labels, self.signs)
        )
        return f"ChordDiagram({w!r}, {s!r})"

    @property
    def n_chords(self) -> int:
        return len(self.signs)

    @classmethod
    def from_labels(cls, label_word, signs_by_label=None) -> "ChordDiagram":
        """Build from a label sequence like ['a','b','a','b'] and a sign map."""
        label_word = list(label_word)
        order: list = []
        for lab in label_word:
            if lab not in order:
                order.append(lab)
        index = {lab: i for i, lab in enumerate(order)}
        word = [index[lab] for lab in label_word]
        signs_by_label = signs_by_label or {}
        for lab in signs_by_label:
            if lab not in index:
                raise ValueError(f"sign given for unknown chord {lab!r}")
        signs = [signs_by_label.get(lab, 1) for lab in order]
        return cls(word, signs, [str(lab) for lab in order])

    def to_ribbon(self) -> RibbonGraph:
        """One vertex whose rotation is the positions 0..2n-1 in word order."""
        positions: dict[int, list[int]] = {}
        for pos, c in enumerate(self.word):
            positions.setdefault(c, []).append(pos)
        edges = [
            (positions[c][0], positions[c][1], self.signs[c])
            for c in range(self.n_chords)
        ]
        return RibbonGraph([tuple(range(2 * self.n_chords))], edges)

    def chord_positions(self, c: int) -> tuple[int, int]:
        p = [i for i, x in enumerate(self.word) if x == c]
        return (p[0], p[1])


def chord_delta_matroid(c: ChordDiagram) -> SetSystem:
    return ribbon_delta_matroid(c.to_ribbon())


def intersection_graph(c: ChordDiagram) -> FramedGraph:
    """Framed intersection graph: framing 1 for half-twisted chords, edges
    between chords whose ends alternate along the vertex."""
    n = c.n_chords
    rows = [0] * n
    for i in range(n):
        if c.signs[i] < 0:
            rows[i] |= 1 << i
        ai, bi = c.chord_positions(i)
        for j in range(i + 1, n):
            aj, bj = c.chord_positions(j)
            if (ai < aj < bi) != (ai < bj < bi):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return FramedGraph(MatrixF2(n, n, rows))


def _renormalize(word, signs):
    """Reindex chords by first occurrence so ChordDiagram accepts the word."""
    order: list[int] = []
    for x in word:
        if x not in order:
            order.append(x)
    index = {old: new for new, old in enumerate(order)}
    return [index[x] for x in word], [signs[old] for old in order], order


def chord_slide(
    c: ChordDiagram, a: int, b: int, which_end: int = 0
) -> tuple[ChordDiagram, list[int]]:
    """Slide chord a over chord b at a rotation adjacency.

    The selected end of a (first or second occurrence per ``which_end``)
    must be cyclically adjacent to an end of b.  The end detaches and
    reappears next to b's other end: across an orientable ribbon it comes
    out on the opposite side, across a half-twisted one on the same side,
    and the sign of a is multiplied by the sign of b.  Returns the new
    diagram plus the map from its chord indices to the input's, since
    reindexing by first occurrence can relabel chords.
    """
    if a == b:
        raise SameEdge("slide needs two distinct chords")
    n2 = 2 * c.n_chords
    if not (0 <= a < c.n_chords and 0 <= b < c.n_chords):
        raise IndexOutOfRange("chord index out of range")
    if which_end not in (0, 1):
        raise IndexOutOfRange("which_end must be 0 or 1")
    p_sel = c.chord_positions(a)[which_end]
    b1, b2 = c.chord_positions(b)
    succ = (p_sel + 1) % n2
    pred = (p_sel - 1) % n2
    if c.word[succ] == b:
        adj, after_b1 = succ, False
    elif c.word[pred] == b:
        adj, after_b1 = pred, True
    else:
        raise NotAdjacent("the selected end of a is not adjacent to an end of b")
    other = b2 if adj == b1 else b1
    word = list(c.word)
    del word[p_sel]
    other_idx = other if other < p_sel else other - 1
    # Opposite side across a + ribbon, same side across a - ribbon.
    same_side = c.signs[b] < 0
    goes_after = (not after_b1) if not same_side else after_b1
    insert_at = other_idx + 1 if goes_after else other_idx
    word.insert(insert_at, a)
    signs = list(c.signs)
    signs[a] = signs[a] * signs[b]
    new_word, new_signs, order = _renormalize(word, signs)
    labels = [c.labels[old] for old in order]
    return ChordDiagram(new_word, new_signs, labels), order
