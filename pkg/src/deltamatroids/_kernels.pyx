# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirrors ``_kernels_py`` for ground sets with at
most 6 elements (subset bitmaps live in one 64-bit word) and for ribbon
graphs with at most 64 half-edges.  ``deltamatroids.kernels`` dispatches
here when those limits hold.
"""

from itertools import permutations

from libc.string cimport memset

BACKEND_NAME = "cython"

ctypedef unsigned long long u64


cdef inline int _popcount(u64 x):
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline int _bit_length(u64 x):
    cdef int n = 0
    while x:
        x >>= 1
        n += 1
    return n


cdef inline int _rank_c(u64 *rows, int nrows):
    cdef u64 pivots[64]
    cdef int lead[64]
    cdef int rank = 0, i, j, h
    cdef u64 v
    for i in range(nrows):
        v = rows[i]
        while v:
            h = _bit_length(v) - 1
            for j in range(rank):
                if lead[j] == h:
                    v ^= pivots[j]
                    break
            else:
                pivots[rank] = v
                lead[rank] = h
                rank += 1
                break
    return rank


def sea_holds(int n, u64 bitmap):
    cdef u64 masks[64]
    cdef unsigned char valid[64 * 6]
    cdef int nm = 0, i, k, e, ep
    cdef u64 m, d, dd, base, target
    for m in range(1 << n):
        if bitmap >> m & 1:
            masks[nm] = m
            nm += 1
    if nm <= 1:
        return True
    for i in range(nm):
        for e in range(n):
            base = masks[i] ^ (<u64> 1 << e)
            k = 0
            for ep in range(n):
                target = base if ep == e else base ^ (<u64> 1 << ep)
                if bitmap >> target & 1:
                    k |= 1 << ep
            valid[i * n + e] = <unsigned char> k
    for i in range(nm):
        for k in range(nm):
            d = masks[i] ^ masks[k]
            dd = d
            while dd:
                e = _bit_length(dd & (~dd + 1)) - 1
                dd &= dd - 1
                if not (valid[i * n + e] & d):
                    return False
    return True


def feas_bitmap(int n, rows):
    cdef u64 rr[6]
    cdef u64 sub[6]
    cdef int i, ns
    cdef u64 u, out = 1, mm
    for i in range(n):
        rr[i] = rows[i]
    for u in range(1, <u64> 1 << n):
        ns = 0
        mm = u
        while mm:
            i = _bit_length(mm & (~mm + 1)) - 1
            mm &= mm - 1
            sub[ns] = rr[i] & u
            ns += 1
        if _rank_c(sub, ns) == ns:
            out |= <u64> 1 << u
    return out


def twist_bitmap(int n, u64 bitmap, u64 t):
    if t == 0:
        return bitmap
    cdef u64 out = 0, m
    for m in range(<u64> 1 << n):
        if bitmap >> m & 1:
            out |= <u64> 1 << (m ^ t)
    return out


def slide_bitmap(int n, u64 bitmap, int a, int b):
    cdef u64 ab = (<u64> 1 << a) | (<u64> 1 << b)
    cdef u64 rest = ((<u64> 1 << n) - 1) & ~ab
    cdef u64 out = bitmap, m = rest
    while True:
        if bitmap >> (m | (<u64> 1 << b)) & 1:
            out ^= <u64> 1 << (m | (<u64> 1 << a))
        if m == 0:
            break
        m = (m - 1) & rest
    return out


# Cached flat permutation tables per n: table[p * 2**n + mask] = relabeled mask.
_perm_cache = {}


cdef _perm_table(int n):
    key = n
    cached = _perm_cache.get(key)
    if cached is None:
        size = 1 << n
        flat = bytearray()
        count = 0
        for perm in permutations(range(n)):
            row = bytearray(size)
            for m in range(size):
                img = 0
                mm = m
                while mm:
                    low = mm & -mm
                    img |= 1 << perm[low.bit_length() - 1]
                    mm ^= low
                row[m] = img
            flat += row
            count += 1
        cached = (bytes(flat), count)
        _perm_cache[key] = cached
    return cached


def canon_bitmap(int n, u64 bitmap):
    if n <= 1:
        return bitmap
    table, count = _perm_table(n)
    cdef const unsigned char[:] t = table
    cdef int nperm = count, size = 1 << n
    cdef u64 best = bitmap, img, bb
    cdef int p, base
    cdef u64 low
    for p in range(nperm):
        base = p * size
        img = 0
        bb = bitmap
        while bb:
            low = bb & (~bb + 1)
            img |= <u64> 1 << t[base + _bit_length(low) - 1]
            bb ^= low
        if img < best:
            best = img
    return best


def transverse_bitmap(int n, rows):
    cdef u64 rr[6]
    cdef u64 masked[6]
    cdef int i
    cdef u64 u, colmask, out = 0
    cdef u64 full = (<u64> 1 << n) - 1
    for i in range(n):
        rr[i] = rows[i]
    for u in range(<u64> 1 << n):
        colmask = (full ^ u) | (u << n)
        for i in range(n):
            masked[i] = rr[i] & colmask
        if _rank_c(masked, n) == n:
            out |= <u64> 1 << u
    return out


cdef int _boundary_c(
    int n_vertices,
    int nh,
    int *vertex_of,
    int *rot_next,
    int *edge_of,
    int *partner,
    int *neg,
    u64 subset,
):
    cdef int parent[128]
    cdef unsigned char seen[64]
    cdef int h, nx, h2, x, y, i, circles
    memset(seen, 0, n_vertices)
    for i in range(2 * nh):
        parent[i] = i
    for h in range(nh):
        if subset >> edge_of[h] & 1:
            seen[vertex_of[h]] = 1
            nx = rot_next[h]
            while not (subset >> edge_of[nx] & 1):
                nx = rot_next[nx]
            x = 2 * h + 1
            y = 2 * nx
            while parent[x] != x:
                x = parent[x]
            while parent[y] != y:
                y = parent[y]
            if x != y:
                parent[x] = y
    for h in range(nh):
        h2 = partner[h]
        if h < h2 and (subset >> edge_of[h] & 1):
            if neg[edge_of[h]]:
                x = 2 * h
                y = 2 * h2
            else:
                x = 2 * h
                y = 2 * h2 + 1
            while parent[x] != x:
                x = parent[x]
            while parent[y] != y:
                y = parent[y]
            if x != y:
                parent[x] = y
            if neg[edge_of[h]]:
                x = 2 * h + 1
                y = 2 * h2 + 1
            else:
                x = 2 * h + 1
                y = 2 * h2
            while parent[x] != x:
                x = parent[x]
            while parent[y] != y:
                y = parent[y]
            if x != y:
                parent[x] = y
    circles = 0
    for h in range(nh):
        if subset >> edge_of[h] & 1:
            for i in range(2):
                x = 2 * h + i
                if parent[x] == x:
                    circles += 1
    for i in range(n_vertices):
        if not seen[i]:
            circles += 1
    return circles


cdef int _fill_arrays(
    vertex_of, rot_next, edge_of, partner, neg,
    int *c_vertex, int *c_next, int *c_edge, int *c_partner, int *c_neg,
):
    cdef int nh = len(vertex_of), i
    for i in range(nh):
        c_vertex[i] = vertex_of[i]
        c_next[i] = rot_next[i]
        c_edge[i] = edge_of[i]
        c_partner[i] = partner[i]
    for i in range(len(neg)):
        c_neg[i] = neg[i]
    return nh


def boundary_circles(
    int n_vertices, vertex_of, rot_next, edge_of, partner, neg, u64 subset
):
    cdef int c_vertex[64]
    cdef int c_next[64]
    cdef int c_edge[64]
    cdef int c_partner[64]
    cdef int c_neg[16]
    cdef int nh = _fill_arrays(
        vertex_of, rot_next, edge_of, partner, neg,
        c_vertex, c_next, c_edge, c_partner, c_neg,
    )
    return _boundary_c(
        n_vertices, nh, c_vertex, c_next, c_edge, c_partner, c_neg, subset
    )


def quasi_tree_masks(
    int n_vertices, int n_edges, vertex_of, rot_next, edge_of, partner, neg
):
    cdef int c_vertex[64]
    cdef int c_next[64]
    cdef int c_edge[64]
    cdef int c_partner[64]
    cdef int c_neg[16]
    cdef int nh = _fill_arrays(
        vertex_of, rot_next, edge_of, partner, neg,
        c_vertex, c_next, c_edge, c_partner, c_neg,
    )
    cdef u64 subset
    out = []
    for subset in range(<u64> 1 << n_edges):
        if (
            _boundary_c(
                n_vertices, nh, c_vertex, c_next, c_edge, c_partner, c_neg, subset
            )
            == 1
        ):
            out.append(subset)
    return out
