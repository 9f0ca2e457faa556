"""Set systems as immutable values.

A set system is a ground set of n labeled elements (indices 0..n-1) with a
nonempty family of feasible subsets, each subset stored as a bit mask.
This module provides construction, the symmetric exchange axiom, twist,
minors, restriction, the direct-sum product, and isomorphism-canonical
forms, plus the catalog of named small systems used throughout the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from . import kernels
from .errors import (
    EmptyFamily,
    GroundSetTooLarge,
    IndexOutOfRange,
    MaskOutOfRange,
)

#: Largest ground set for which the 2**n-bit membership bitmap is kept.
BITMAP_MAX_N = 16

#: Default bound for canonicalization (n! relabelings are enumerated).
CANON_DEFAULT_MAX_N = 8


class ElementRole(Enum):
    LOOP = "loop"
    COLOOP = "coloop"
    ORDINARY = "ordinary"


class SetSystem:
    """A proper set system: ground-set size plus sorted feasible masks.

    Instances are immutable after construction and hashable.  ``masks`` is
    a strictly increasing tuple; ``bitmap`` is the 2**n-bit membership
    bitmap (bit m set iff mask m is feasible), kept for n <= BITMAP_MAX_N.
    """

    __slots__ = ("n", "masks", "bitmap")

    def __init__(self, n: int, subsets):
        if n < 0:
            raise IndexOutOfRange(f"ground-set size {n} is negative")
        masks = sorted(set(subsets))
        if not masks:
            raise EmptyFamily("a proper set system needs at least one feasible set")
        if masks[-1] >= 1 << n:
            raise MaskOutOfRange(
                f"mask {masks[-1]:#x} does not fit a ground set of {n} elements"
            )
        if masks[0] < 0:
            raise MaskOutOfRange(f"mask {masks[0]} is negative")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "masks", tuple(masks))
        bitmap = None
        if n <= BITMAP_MAX_N:
            bitmap = 0
            for m in masks:
                bitmap |= 1 << m
        object.__setattr__(self, "bitmap", bitmap)

    def __setattr__(self, name, value):
        raise AttributeError("SetSystem is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, SetSystem)
            and self.n == other.n
            and self.masks == other.masks
        )

    def __hash__(self):
        return hash((self.n, self.masks))

    def __repr__(self):
        phi = ", ".join(f"{m:#x}" for m in self.masks)
        return f"SetSystem({self.n}, [{phi}])"

    def __mul__(self, other):
        return product(self, other)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def member(self, mask: int) -> bool:
        if self.bitmap is not None:
            return bool(self.bitmap >> mask & 1)
        return mask in self.masks


def make_set_system(n: int, subsets) -> SetSystem:
    """Build the normalized (sorted, deduplicated) set system."""
    return SetSystem(n, subsets)


def from_bitmap(n: int, bitmap: int) -> SetSystem:
    """Inverse of ``SetSystem.bitmap``."""
    masks = []
    m = bitmap
    while m:
        low = m & -m
        masks.append(low.bit_length() - 1)
        m ^= low
    return SetSystem(n, masks)


def unit() -> SetSystem:
    """The set system on zero elements whose only feasible set is empty."""
    return SetSystem(0, [0])


def is_delta_matroid(s: SetSystem) -> bool:
    """Symmetric exchange axiom check."""
    if s.bitmap is None:
        raise GroundSetTooLarge(f"axiom check capped at n <= {BITMAP_MAX_N}")
    return kernels.sea_holds(s.n, s.bitmap)


def sea_counterexample(s: SetSystem):
    """First witness (phi1, phi2, e) violating the exchange axiom, or None.

    Feasible sets are scanned in increasing mask order, elements in
    increasing index order, so the witness is deterministic.
    """
    for p1 in s.masks:
        for p2 in s.masks:
            d = p1 ^ p2
            for e in range(s.n):
                if not d >> e & 1:
                    continue
                if not any(
                    d >> ep & 1 and s.member(p1 ^ ((1 << e) | (1 << ep)))
                    for ep in range(s.n)
                ):
                    return (p1, p2, e)
    return None


def is_even(s: SetSystem) -> bool:
    """True iff all feasible sets have cardinality of the same parity."""
    parity = s.masks[0].bit_count() & 1
    return all(m.bit_count() & 1 == parity for m in s.masks)


def _check_mask(s: SetSystem, mask: int):
    if mask < 0 or mask >= 1 << s.n:
        raise MaskOutOfRange(f"mask {mask:#x} does not fit n={s.n}")


def _check_element(s: SetSystem, e: int):
    if e < 0 or e >= s.n:
        raise IndexOutOfRange(f"element {e} out of range for n={s.n}")


def twist(s: SetSystem, a: int) -> SetSystem:
    """Symmetric difference of every feasible set with the fixed mask ``a``."""
    _check_mask(s, a)
    if a == 0:
        return s
    return SetSystem(s.n, [m ^ a for m in s.masks])


def element_role(s: SetSystem, e: int) -> ElementRole:
    """Coloop if e is in every feasible set, loop if in none."""
    _check_element(s, e)
    bit = 1 << e
    if all(m & bit for m in s.masks):
        return ElementRole.COLOOP
    if not any(m & bit for m in s.masks):
        return ElementRole.LOOP
    return ElementRole.ORDINARY


def _drop_bit(mask: int, e: int) -> int:
    """Remove bit position e, shifting higher bits down."""
    return (mask & ((1 << e) - 1)) | ((mask >> (e + 1)) << e)


def delete(s: SetSystem, e: int) -> SetSystem:
    """Keep feasible sets avoiding e; falls through to contract on a coloop."""
    role = element_role(s, e)
    if role is ElementRole.COLOOP:
        return _contract_raw(s, e)
    bit = 1 << e
    return SetSystem(s.n - 1, [_drop_bit(m, e) for m in s.masks if not m & bit])


def contract(s: SetSystem, e: int) -> SetSystem:
    """Keep feasible sets through e, minus e; falls back to delete on a loop."""
    role = element_role(s, e)
    if role is ElementRole.LOOP:
        return delete(s, e)
    return _contract_raw(s, e)


def _contract_raw(s: SetSystem, e: int) -> SetSystem:
    bit = 1 << e
    return SetSystem(s.n - 1, [_drop_bit(m, e) for m in s.masks if m & bit])


def restrict(s: SetSystem, keep: int) -> SetSystem:
    """Delete every element outside ``keep`` (highest index first)."""
    _check_mask(s, keep)
    out = s
    for e in range(s.n - 1, -1, -1):
        if not keep >> e & 1:
            out = delete(out, e)
    return out


def product(s1: SetSystem, s2: SetSystem) -> SetSystem:
    """Direct sum; the second factor's elements are shifted by s1.n."""
    masks = [m1 | (m2 << s1.n) for m1 in s1.masks for m2 in s2.masks]
    return SetSystem(s1.n + s2.n, masks)


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Isomorphism key: the minimal membership bitmap over all relabelings.

    Codes compare and sort as (n, code); equal code iff isomorphic.
    """

    n: int
    code: int

    def to_set_system(self) -> SetSystem:
        return from_bitmap(self.n, self.code)


def canonical_form(s: SetSystem, max_n: int | None = None) -> CanonicalCode:
    """Canonical code of ``s``; raises above the relabeling bound."""
    bound = CANON_DEFAULT_MAX_N if max_n is None else max_n
    if s.n > bound:
        raise GroundSetTooLarge(f"canonical form capped at n <= {bound}")
    return CanonicalCode(s.n, kernels.canon_bitmap(s.n, s.bitmap))


def are_isomorphic(s1: SetSystem, s2: SetSystem, max_n: int | None = None) -> bool:
    if s1.n != s2.n:
        return False
    return canonical_form(s1, max_n) == canonical_form(s2, max_n)


# Named small systems.  Single-element: s11 = ({1};{0}), s12 = ({1};{0,{1}}),
# s13 = ({1};{{1}}); two-element systems s21..s25 and the six products of
# single-element ones.  Element i+1 of the traditional labels is bit i.
_CATALOG_MASKS = {
    "s11": (1, (0b0,)),
    "s12": (1, (0b0, 0b1)),
    "s13": (1, (0b1,)),
    "s21": (2, (0b00, 0b11)),
    "s22": (2, (0b00, 0b01, 0b11)),
    "s23": (2, (0b00, 0b01, 0b10)),
    "s24": (2, (0b01, 0b10)),
    "s25": (2, (0b01, 0b10, 0b11)),
    "s11s11": (2, (0b00,)),
    "s11s12": (2, (0b00, 0b01)),
    "s11s13": (2, (0b01,)),
    "s12s12": (2, (0b00, 0b01, 0b10, 0b11)),
    "s12s13": (2, (0b01, 0b11)),
    "s13s13": (2, (0b11,)),
}


@lru_cache(maxsize=1)
def named_catalog() -> dict[str, SetSystem]:
    """The fourteen named systems on one and two elements."""
    return {name: SetSystem(n, masks) for name, (n, masks) in _CATALOG_MASKS.items()}


def lookup(name: str) -> SetSystem:
    try:
        return named_catalog()[name]
    except KeyError:
        raise KeyError(f"unknown catalog name {name!r}") from None
