"""Pure-Python fallback for the bit-level hot kernels.

The compiled extension ``deltamatroids._kernels`` exports the same
functions; ``deltamatroids.kernels`` selects a backend per call at import
time.  Families of subsets travel as membership bitmaps: bit ``m`` of the
bitmap marks the subset with element mask ``m`` as feasible, so a bitmap
for a ground set of n elements has 2**n bits.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

BACKEND_NAME = "python"


def _mask_bits(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def _bitmap_masks(bitmap: int) -> list[int]:
    return _mask_bits(bitmap)


def rank_bits(rows) -> int:
    """Rank over F2 of rows given as bit-row integers."""
    pivots = {}
    rank = 0
    for v in rows:
        while v:
            h = v.bit_length() - 1
            p = pivots.get(h)
            if p is None:
                pivots[h] = v
                rank += 1
                break
            v ^= p
    return rank


def sea_holds(n: int, bitmap: int) -> bool:
    """Symmetric exchange axiom on a feasible-set bitmap.

    For feasible sets p1, p2 and any e in p1^p2 there must be an e' in
    p1^p2 (e' = e allowed, giving the single-element step p1^{e}) with
    p1 ^ ({e} | {e'}) feasible.
    """
    masks = _bitmap_masks(bitmap)
    if len(masks) <= 1:
        return True
    # valid[i][e] = bitmask over e' such that masks[i]^({e}|{e'}) is feasible
    valid = []
    for m in masks:
        row = []
        for e in range(n):
            base = m ^ (1 << e)
            v = 0
            for ep in range(n):
                target = base if ep == e else base ^ (1 << ep)
                if bitmap >> target & 1:
                    v |= 1 << ep
            row.append(v)
        valid.append(row)
    for i, m1 in enumerate(masks):
        row = valid[i]
        for m2 in masks:
            d = m1 ^ m2
            dd = d
            while dd:
                low = dd & -dd
                dd ^= low
                if not (row[low.bit_length() - 1] & d):
                    return False
    return True


def feas_bitmap(n: int, rows) -> int:
    """Bitmap of subsets U whose principal submatrix is nondegenerate.

    ``rows`` is a symmetric n x n matrix as bit rows.  The empty subset is
    always feasible (bit 0 set).
    """
    out = 1
    for u in range(1, 1 << n):
        sub = [rows[i] & u for i in _mask_bits(u)]
        if rank_bits(sub) == len(sub):
            out |= 1 << u
    return out


def twist_bitmap(n: int, bitmap: int, t: int) -> int:
    """Replace every feasible mask m by m ^ t."""
    if t == 0:
        return bitmap
    out = 0
    for m in _bitmap_masks(bitmap):
        out |= 1 << (m ^ t)
    return out


def slide_bitmap(n: int, bitmap: int, a: int, b: int) -> int:
    """Handle slide of a over b on a feasible-set bitmap.

    Toggles the mask m|{a} for every m avoiding both a and b such that
    m|{b} is feasible.
    """
    ab = (1 << a) | (1 << b)
    rest = ((1 << n) - 1) & ~ab
    out = bitmap
    m = rest
    while True:
        if bitmap >> (m | (1 << b)) & 1:
            out ^= 1 << (m | (1 << a))
        if m == 0:
            break
        m = (m - 1) & rest
    return out


@lru_cache(maxsize=None)
def _perm_tables(n: int):
    """For each permutation of range(n), the induced map on subset masks."""
    tables = []
    for perm in permutations(range(n)):
        t = [0] * (1 << n)
        for m in range(1 << n):
            img = 0
            mm = m
            while mm:
                low = mm & -mm
                img |= 1 << perm[low.bit_length() - 1]
                mm ^= low
            t[m] = img
        tables.append(tuple(t))
    return tuple(tables)


_PERM_TABLE_MAX_N = 6


def canon_bitmap(n: int, bitmap: int) -> int:
    """Minimum of the bitmap over all relabelings of the ground set."""
    if n <= 1:
        return bitmap
    best = bitmap
    if n <= _PERM_TABLE_MAX_N:
        for t in _perm_tables(n):
            img = 0
            bb = bitmap
            while bb:
                low = bb & -bb
                img |= 1 << t[low.bit_length() - 1]
                bb ^= low
            if img < best:
                best = img
    else:
        # Table-free path; permutes the sparse mask list instead.
        masks = _bitmap_masks(bitmap)
        for perm in permutations(range(n)):
            img = 0
            for m in masks:
                pm = 0
                mm = m
                while mm:
                    low = mm & -mm
                    pm |= 1 << perm[low.bit_length() - 1]
                    mm ^= low
                img |= 1 << pm
            if img < best:
                best = img
    return best


def transverse_bitmap(n: int, rows) -> int:
    """Bitmap of subsets U whose coordinate Lagrangian meets ``rows`` trivially.

    ``rows`` are n basis rows of a Lagrangian in the 2n-dimensional
    symplectic space, bit i = e_i for i < n and bit n+j = e*_j.  U is
    transverse iff the rows masked to the columns outside the coordinate
    subspace keep full rank n.
    """
    full = (1 << n) - 1
    out = 0
    for u in range(1 << n):
        colmask = (full ^ u) | (u << n)
        if rank_bits([r & colmask for r in rows]) == n:
            out |= 1 << u
    return out


def boundary_circles(
    n_vertices: int,
    vertex_of,
    rot_next,
    edge_of,
    partner,
    neg,
    subset: int,
) -> int:
    """Count boundary circles of the spanning ribbon subgraph.

    Half-edge h carries two sides 2h and 2h+1.  Consecutive visible
    rotation neighbours join side 2h+1 to side 2*next; a selected edge
    joins the sides straight (sign -) or crossed (sign +).  Circles are
    the components of this 2-regular structure, plus one per vertex with
    no visible half-edge.
    """
    nh = len(vertex_of)
    parent = list(range(2 * nh))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    visible = [bool(subset >> edge_of[h] & 1) for h in range(nh)]
    seen_vertex = [False] * n_vertices
    for h in range(nh):
        if visible[h]:
            seen_vertex[vertex_of[h]] = True
            nx = rot_next[h]
            while not (subset >> edge_of[nx] & 1):
                nx = rot_next[nx]
            union(2 * h + 1, 2 * nx)
    for h in range(nh):
        if visible[h] and h < partner[h]:
            h2 = partner[h]
            if neg[edge_of[h]]:
                union(2 * h, 2 * h2)
                union(2 * h + 1, 2 * h2 + 1)
            else:
                union(2 * h, 2 * h2 + 1)
                union(2 * h + 1, 2 * h2)
    roots = set()
    for h in range(nh):
        if visible[h]:
            roots.add(find(2 * h))
            roots.add(find(2 * h + 1))
    return len(roots) + sum(1 for v in range(n_vertices) if not seen_vertex[v])


def quasi_tree_masks(
    n_vertices: int,
    n_edges: int,
    vertex_of,
    rot_next,
    edge_of,
    partner,
    neg,
) -> list[int]:
    """Edge subsets whose spanning ribbon subgraph has one boundary circle."""
    out = []
    for subset in range(1 << n_edges):
        if (
            boundary_circles(
                n_vertices, vertex_of, rot_next, edge_of, partner, neg, subset
            )
            == 1
        ):
            out.append(subset)
    return out
