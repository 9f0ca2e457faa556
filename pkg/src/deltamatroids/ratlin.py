"""Incremental exact-rational echelon forms over sparse vectors.

Vectors are dicts mapping hashable, sortable column keys to nonzero
Fractions.  The echelon keeps fully reduced rows (no pivot key occurs in
any other row), so ranks, span membership and projections are exact and
deterministic.
"""

from __future__ import annotations

from fractions import Fraction


def vec_add(acc: dict, other: dict, scale: Fraction) -> None:
    """acc += scale * other, dropping zero entries."""
    for k, v in other.items():
        nv = acc.get(k, 0) + scale * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


class Echelon:
    def __init__(self):
        self.rows: dict = {}  # pivot key -> row dict with coefficient 1 at pivot

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Residual of ``vec`` modulo the current row space."""
        out = dict(vec)
        for k in sorted(vec):
            coeff = out.get(k)
            if coeff and k in self.rows:
                vec_add(out, self.rows[k], -coeff)
        return out

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; True iff it enlarged the row space."""
        res = self.reduce(vec)
        if not res:
            return False
        pivot = min(res)
        inv = Fraction(1) / res[pivot]
        row = {k: v * inv for k, v in res.items()}
        for other in self.rows.values():
            c = other.get(pivot)
            if c:
                vec_add(other, row, -c)
        self.rows[pivot] = row
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def rank_of(vectors) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank
