"""Shared enumeration fixtures.

The exhaustive sweeps enumerate labeled objects once per session: all
delta-matroids and all binary delta-matroids on small ground sets (as
feasible-set bitmaps), plus every signed chord diagram with at most five
chords together with its delta-matroid.
"""

from __future__ import annotations

import pytest

from deltamatroids import kernels
from deltamatroids.graphs import is_binary_bitmap
from deltamatroids.ribbon import ribbon_delta_matroid

from diagrams import signed_diagrams


@pytest.fixture(scope="session")
def delta_matroid_bitmaps():
    """n -> all bitmaps on n elements satisfying the exchange axiom."""
    return {
        n: [b for b in range(1, 1 << (1 << n)) if kernels.sea_holds(n, b)]
        for n in range(5)
    }


@pytest.fixture(scope="session")
def binary_bitmaps():
    """n -> all bitmaps accepted by the binary recognizer."""
    return {
        n: [b for b in range(1, 1 << (1 << n)) if is_binary_bitmap(n, b)]
        for n in range(5)
    }


@pytest.fixture(scope="session")
def diagram_dm_table():
    """(word, signs) -> delta-matroid, for every signed diagram with <= 5 chords."""
    table = {}
    for c in signed_diagrams(5):
        table[(c.word, c.signs)] = ribbon_delta_matroid(c.to_ribbon())
    return table
