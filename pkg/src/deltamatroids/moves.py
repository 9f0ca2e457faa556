"""The two Vassiliev moves on set systems and the 4-term combination.

The slide (second move) of a over b toggles the feasibility of m | {a}
for every m avoiding a and b with m | {b} feasible.  The end exchange
(first move) conjugates the slide by a twist with {b}; it is symmetric in
a and b.  The 4-term combination of a system D is the signed list
(+D, -exchange(D), -slide(D), +exchange(slide(D))).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .core import SetSystem, from_bitmap
from .errors import IndexOutOfRange, NotBinary, SameElement


def _check_pair(s: SetSystem, a: int, b: int):
    if a == b:
        raise SameElement("move needs two distinct elements")
    if not (0 <= a < s.n and 0 <= b < s.n):
        raise IndexOutOfRange(f"elements {a},{b} out of range for n={s.n}")


def slide(s: SetSystem, a: int, b: int) -> SetSystem:
    """Slide element a over element b (not symmetric in a, b)."""
    _check_pair(s, a, b)
    return from_bitmap(s.n, kernels.slide_bitmap(s.n, s.bitmap, a, b))


def exchange(s: SetSystem, a: int, b: int) -> SetSystem:
    """Exchange the ends of a and b: twist by {b}, slide a over b, twist back."""
    _check_pair(s, a, b)
    out = _exchange_bitmap(s.n, s.bitmap, a, b)
    assert out == _exchange_bitmap(s.n, s.bitmap, b, a), "exchange must be symmetric"
    return from_bitmap(s.n, out)


def _exchange_bitmap(n: int, bitmap: int, a: int, b: int) -> int:
    tb = 1 << b
    out = kernels.twist_bitmap(n, bitmap, tb)
    out = kernels.slide_bitmap(n, out, a, b)
    return kernels.twist_bitmap(n, out, tb)


@dataclass(frozen=True)
class FourTermCombination:
    """Signed systems (+1, D), (-1, D'), (-1, D~), (+1, D~') sharing one ground set."""

    base: SetSystem
    exchanged: SetSystem
    slid: SetSystem
    slid_exchanged: SetSystem

    @property
    def terms(self):
        return (
            (1, self.base),
            (-1, self.exchanged),
            (-1, self.slid),
            (1, self.slid_exchanged),
        )

    def is_zero(self) -> bool:
        """True iff the four signed terms cancel as a formal combination."""
        acc: dict[SetSystem, int] = {}
        for c, t in self.terms:
            acc[t] = acc.get(t, 0) + c
        return all(v == 0 for v in acc.values())


def four_term(
    s: SetSystem, a: int, b: int, require_binary: bool = True
) -> FourTermCombination:
    """The 4-term combination of ``s`` at the ordered pair (a, b)."""
    _check_pair(s, a, b)
    if require_binary:
        from .graphs import is_binary

        if not is_binary(s):
            raise NotBinary("4-term combination requires a binary delta-matroid")
    slid = slide(s, a, b)
    return FourTermCombination(
        base=s,
        exchanged=exchange(s, a, b),
        slid=slid,
        slid_exchanged=exchange(slid, a, b),
    )
