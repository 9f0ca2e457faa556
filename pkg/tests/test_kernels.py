import random

import pytest

from deltamatroids import _kernels_py as py
from deltamatroids import kernels
from deltamatroids.ribbon import RibbonGraph

cy = pytest.importorskip(
    "deltamatroids._kernels", reason="compiled kernels not built"
)


def _random_symmetric_rows(rng, n):
    rows = [0] * n
    for i in range(n):
        for j in range(i, n):
            if rng.random() < 0.5:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def test_bitmap_kernel_parity():
    rng = random.Random(42)
    for _ in range(1500):
        n = rng.randint(0, 6)
        bitmap = rng.getrandbits(1 << n) or 1
        assert cy.sea_holds(n, bitmap) == py.sea_holds(n, bitmap)
        assert cy.canon_bitmap(n, bitmap) == py.canon_bitmap(n, bitmap)
        t = rng.randrange(1 << n)
        assert cy.twist_bitmap(n, bitmap, t) == py.twist_bitmap(n, bitmap, t)
        if n >= 2:
            a, b = rng.sample(range(n), 2)
            assert cy.slide_bitmap(n, bitmap, a, b) == py.slide_bitmap(
                n, bitmap, a, b
            )


def test_matrix_kernel_parity():
    rng = random.Random(43)
    for _ in range(800):
        n = rng.randint(1, 6)
        rows = _random_symmetric_rows(rng, n)
        assert cy.feas_bitmap(n, tuple(rows)) == py.feas_bitmap(n, rows)
        lag = tuple(rng.getrandbits(2 * n) for _ in range(n))
        assert cy.transverse_bitmap(n, lag) == py.transverse_bitmap(n, lag)


def _random_ribbon(rng, n_edges, n_vertices):
    hs = list(range(2 * n_edges))
    rng.shuffle(hs)
    cuts = sorted(rng.sample(range(2 * n_edges + 1), n_vertices - 1))
    rots, prev = [], 0
    for cut in cuts + [2 * n_edges]:
        rots.append(tuple(hs[prev:cut]))
        prev = cut
    pairing = list(range(2 * n_edges))
    rng.shuffle(pairing)
    edges = [
        (pairing[2 * i], pairing[2 * i + 1], rng.choice((1, -1)))
        for i in range(n_edges)
    ]
    return RibbonGraph(rots, edges)


def test_boundary_kernel_parity():
    rng = random.Random(44)
    for _ in range(300):
        ne = rng.randint(1, 5)
        nv = rng.randint(1, 3)
        r = _random_ribbon(rng, ne, nv)
        vo, rn, eo, pa, ng = r._arrays
        for subset in range(1 << ne):
            assert cy.boundary_circles(
                nv, vo, rn, eo, pa, ng, subset
            ) == py.boundary_circles(nv, vo, rn, eo, pa, ng, subset)
        assert cy.quasi_tree_masks(nv, ne, vo, rn, eo, pa, ng) == py.quasi_tree_masks(
            nv, ne, vo, rn, eo, pa, ng
        )


def test_dispatcher_reports_backend():
    assert kernels.backend_name() in ("cython", "python")
