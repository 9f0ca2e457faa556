"""Linear algebra over the two-element field.

Matrices are tuples of bit rows.  The symplectic space attached to a
ground set E has dimension 2|E| with basis order (e_0..e_{n-1},
e*_0..e*_{n-1}) and pairing (e_i, e*_i) = 1; Lagrangian subspaces are
stored as reduced row-echelon bases so equality is tuple comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import kernels
from .core import SetSystem, from_bitmap
from .errors import EmptyFamily, MaskOutOfRange, NotSymmetric, SameElement, SpaceMismatch


class MatrixF2:
    """A rows x cols matrix over F2, stored as bit rows (bit j = column j)."""

    __slots__ = ("rows", "cols", "bits")

    def __init__(self, rows: int, cols: int, bits):
        bits = tuple(bits)
        if len(bits) != rows:
            raise ValueError(f"expected {rows} rows, got {len(bits)}")
        for r in bits:
            if r < 0 or r >= 1 << cols:
                raise ValueError(f"row {r:#x} does not fit {cols} columns")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixF2 is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, MatrixF2)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.bits == other.bits
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.bits))

    def __repr__(self):
        return f"MatrixF2({self.rows}x{self.cols}, {[f'{r:#x}' for r in self.bits]})"

    def entry(self, i: int, j: int) -> int:
        return self.bits[i] >> j & 1

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self.entry(i, j) == self.entry(j, i)
            for i in range(self.rows)
            for j in range(i)
        )


def matrix_from_lists(entries) -> MatrixF2:
    """Build a MatrixF2 from a list of 0/1 lists."""
    rows = len(entries)
    cols = len(entries[0]) if rows else 0
    bits = []
    for row in entries:
        if len(row) != cols:
            raise ValueError("ragged matrix")
        bits.append(sum((1 << j) for j, v in enumerate(row) if v & 1))
    return MatrixF2(rows, cols, bits)


def rank_f2(m: MatrixF2) -> int:
    """Rank over F2 by Gaussian elimination on bit rows."""
    return kernels.rank_bits(m.bits)


def _require_symmetric(a: MatrixF2):
    if not a.is_symmetric():
        raise NotSymmetric("matrix must be symmetric")


def principal_nondegenerate(a: MatrixF2, u: int) -> bool:
    """True iff the principal submatrix on the index set ``u`` has full rank.

    The empty submatrix is nondegenerate by convention.
    """
    _require_symmetric(a)
    if u < 0 or u >= 1 << a.rows:
        raise MaskOutOfRange(f"subset {u:#x} does not fit n={a.rows}")
    sub = []
    uu = u
    while uu:
        low = uu & -uu
        sub.append(a.bits[low.bit_length() - 1] & u)
        uu ^= low
    return kernels.rank_bits(sub) == len(sub)


@dataclass(frozen=True)
class SymplecticSpace:
    """The 2n-dimensional symplectic F2 space on a ground set of size n."""

    n: int

    @property
    def dim(self) -> int:
        return 2 * self.n

    def pairing(self, u: int, v: int) -> int:
        """Symplectic form of two vectors given as 2n-bit masks."""
        n = self.n
        low = (1 << n) - 1
        cross = ((u & low) & (v >> n)) ^ ((u >> n) & (v & low))
        return cross.bit_count() & 1


def rref_rows(rows) -> tuple[int, ...]:
    """Reduced row echelon form of bit rows; zero rows are dropped."""
    basis: list[int] = []
    for v in rows:
        for b in basis:
            if v >> (b.bit_length() - 1) & 1:
                v ^= b
        if v:
            for i, b in enumerate(basis):
                if b >> (v.bit_length() - 1) & 1:
                    basis[i] = b ^ v
            basis.append(v)
            basis.sort(key=lambda r: -r)
    return tuple(sorted(basis, reverse=True))


class Lagrangian:
    """An n-dimensional isotropic subspace in reduced row-echelon basis."""

    __slots__ = ("space", "basis")

    def __init__(self, space: SymplecticSpace, rows):
        basis = rref_rows(rows)
        if len(basis) != space.n:
            raise ValueError(
                f"expected an {space.n}-dimensional subspace, got {len(basis)}"
            )
        for i, u in enumerate(basis):
            for v in basis[i:]:
                if space.pairing(u, v):
                    raise ValueError("subspace is not isotropic")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("Lagrangian is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Lagrangian)
            and self.space == other.space
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.space, self.basis))

    def __repr__(self):
        return f"Lagrangian(n={self.space.n}, {[f'{r:#x}' for r in self.basis]})"


def coordinate_lagrangian(space: SymplecticSpace, keep: int) -> Lagrangian:
    """Span of {e_i : i in keep} plus {e*_j : j not in keep}."""
    n = space.n
    if keep < 0 or keep >= 1 << n:
        raise MaskOutOfRange(f"subset {keep:#x} does not fit n={n}")
    rows = []
    for i in range(n):
        rows.append(1 << i if keep >> i & 1 else 1 << (n + i))
    return Lagrangian(space, rows)


def graph_lagrangian(a: MatrixF2) -> Lagrangian:
    """Graph of the symmetric form ``a``: span of e_i + sum_j a_ij e*_j."""
    _require_symmetric(a)
    n = a.rows
    rows = [(1 << i) | (a.bits[i] << n) for i in range(n)]
    return Lagrangian(SymplecticSpace(n), rows)


def intersection_dim(l1: Lagrangian, l2: Lagrangian) -> int:
    """Dimension of the intersection: 2n minus the rank of the stacked bases."""
    if l1.space != l2.space:
        raise SpaceMismatch("Lagrangians live in different spaces")
    stacked = kernels.rank_bits(list(l1.basis) + list(l2.basis))
    return l1.space.dim - stacked


def lagrangian_delta_matroid(l: Lagrangian) -> SetSystem:
    """Feasible sets = subsets whose coordinate Lagrangian meets ``l`` trivially."""
    bitmap = kernels.transverse_bitmap(l.space.n, l.basis)
    if bitmap == 0:
        raise EmptyFamily("no coordinate Lagrangian is transverse")
    return from_bitmap(l.space.n, bitmap)


class MoveKind(Enum):
    T1 = "T1"
    T2 = "T2"


def apply_move(l: Lagrangian, kind: MoveKind, a: int, b: int) -> Lagrangian:
    """Image of ``l`` under a Vassiliev base change of the symplectic space.

    T2 (handle slide):   e_a -> e_a + e_b,    e*_b -> e*_a + e*_b.
    T1 (end exchange):   e_a -> e_a + e*_b,   e_b -> e_b + e*_a.
    Both substitutions fix the remaining basis vectors, are involutions,
    and preserve the symplectic form.  T1 here is the symplectic transpose
    of the more common dual-side formulation (e*_a -> e*_a + e_b, e*_b ->
    e*_b + e_a); on graph Lagrangians as built by ``graph_lagrangian`` it
    is this variant that induces the end-exchange move on the underlying
    delta-matroid, which is the behaviour the test suite pins down.
    """
    n = l.space.n
    if a == b:
        raise SameElement("move needs two distinct elements")
    if not (0 <= a < n and 0 <= b < n):
        raise MaskOutOfRange(f"elements {a},{b} out of range for n={n}")
    if kind is MoveKind.T2:
        sources = (1 << a, 1 << (n + b))
        additions = (1 << b, 1 << (n + a))
    else:
        sources = (1 << a, 1 << b)
        additions = (1 << (n + b), 1 << (n + a))
    rows = []
    for v in l.basis:
        w = v
        for src, add in zip(sources, additions):
            if v & src:
                w ^= add
        rows.append(w)
    return Lagrangian(l.space, rows)
