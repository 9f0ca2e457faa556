import random
from itertools import product as iproduct

import pytest

from deltamatroids import core, kernels
from deltamatroids.core import is_even, lookup, make_set_system, twist
from deltamatroids.errors import NotSymmetric, SameVertex
from deltamatroids.f2 import MatrixF2
from deltamatroids.graphs import (
    FramedGraph,
    framed_graph_from_rows,
    graph_slide,
    is_binary,
    is_binary_bitmap,
    nondeg_delta_matroid,
    recognize_binary,
)
from deltamatroids.moves import slide


def all_framed_graphs(n):
    """All symmetric n x n matrices over F2 (free diagonal)."""
    positions = [(i, j) for i in range(n) for j in range(i, n)]
    for choice in iproduct((0, 1), repeat=len(positions)):
        rows = [0] * n
        for bit, (i, j) in zip(choice, positions):
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield framed_graph_from_rows(n, rows)


def test_framed_graph_validation():
    with pytest.raises(NotSymmetric):
        FramedGraph(MatrixF2(2, 2, [0b10, 0b00]))
    g = framed_graph_from_rows(2, [0b01, 0b10])
    assert g.framing(0) == 1 and g.framing(1) == 1


def test_nondeg_examples():
    assert nondeg_delta_matroid(framed_graph_from_rows(1, [0b0])) == lookup("s11")
    assert nondeg_delta_matroid(framed_graph_from_rows(1, [0b1])) == lookup("s12")
    path = framed_graph_from_rows(3, [0b010, 0b101, 0b010])
    assert nondeg_delta_matroid(path) == make_set_system(3, [0b000, 0b011, 0b110])


def test_nondeg_outputs_are_delta_matroids():
    for n in range(1, 5):
        for g in all_framed_graphs(n):
            dm = nondeg_delta_matroid(g)
            assert core.is_delta_matroid(dm)
            witness = recognize_binary(dm)
            assert witness is not None and witness.twist_set == 0


def test_graph_slide_examples():
    path = framed_graph_from_rows(3, [0b010, 0b101, 0b010])
    triangle = framed_graph_from_rows(3, [0b110, 0b101, 0b011])
    assert graph_slide(path, 0, 1) == triangle
    assert graph_slide(graph_slide(path, 0, 1), 0, 1) == path
    isolated = framed_graph_from_rows(2, [0, 0])
    assert graph_slide(isolated, 0, 1) == isolated
    with pytest.raises(SameVertex):
        graph_slide(path, 1, 1)


def test_graph_slide_matches_set_system_slide_small():
    for n in (2, 3):
        for g in all_framed_graphs(n):
            for a in range(n):
                for b in range(n):
                    if a == b:
                        continue
                    assert nondeg_delta_matroid(graph_slide(g, a, b)) == slide(
                        nondeg_delta_matroid(g), a, b
                    )


def test_recognizer_witness_examples():
    w23 = recognize_binary(lookup("s23"))
    assert w23.twist_set == 0
    assert w23.graph.adj.bits == (0b11, 0b11)
    w25 = recognize_binary(lookup("s25"))
    assert w25.twist_set == 0b01
    assert w25.graph.adj.bits == (0b10, 0b11)


def test_recognizer_round_trip(binary_bitmaps):
    for n in range(1, 4):
        for bmp in binary_bitmaps[n]:
            s = core.from_bitmap(n, bmp)
            witness = recognize_binary(s)
            assert witness is not None
            back = twist(nondeg_delta_matroid(witness.graph), witness.twist_set)
            assert back == s


def test_slid_three_element_family_is_not_binary():
    # regression value: the slid three-element family that stops being a
    # delta-matroid is rejected by the recognizer too
    s = make_set_system(3, [0b000, 0b011, 0b110, 0b111])
    assert recognize_binary(s) is None


def test_recognizer_choice_independence(delta_matroid_bitmaps):
    rng = random.Random(99)
    for n in range(1, 4):
        for bmp in range(1, 1 << (1 << n)):
            decisions = {
                is_binary_bitmap(n, kernels.twist_bitmap(n, bmp, m))
                for m in range(1 << n)
                if bmp >> m & 1
            }
            assert len(decisions) == 1
    for _ in range(1500):
        bmp = rng.getrandbits(16) or 1
        decisions = {
            is_binary_bitmap(4, kernels.twist_bitmap(4, bmp, m))
            for m in range(16)
            if bmp >> m & 1
        }
        assert len(decisions) == 1


def test_catalog_systems_are_binary():
    for name, s in core.named_catalog().items():
        assert is_binary(s), name


def test_evenness_iff_zero_framings():
    for n in range(1, 5):
        for g in all_framed_graphs(n):
            zero_diag = all(g.framing(v) == 0 for v in range(n))
            assert is_even(nondeg_delta_matroid(g)) == zero_diag


def test_twists_of_nondeg_delta_matroids_pass_exchange_axiom():
    for n in range(1, 5):
        for g in all_framed_graphs(n):
            dm = nondeg_delta_matroid(g)
            for t in range(1 << n):
                assert core.is_delta_matroid(twist(dm, t))
