"""Graded Hopf algebras of binary delta-matroids with exact coefficients.

Bases are isomorphism classes (canonical codes) of set systems of one
degree, for the flavors

  S   all proper set systems          B    binary delta-matroids
  Be  even binary                     K    binary with the empty set feasible
  Ke  even binary with empty feasible

plus the quotient flavors FB, FBe, FK, FKe obtained by dividing out the
span of the 4-term combinations.  All coefficients are Fractions; every
rank is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import kernels
from .core import CanonicalCode, SetSystem, canonical_form, product, restrict
from .errors import CoidealViolation, DegreeTooLarge, NotBinary
from .graphs import is_binary, is_binary_bitmap
from .moves import four_term
from .ratlin import Echelon, vec_add

PLAIN_FLAVORS = ("S", "B", "Be", "K", "Ke")
QUOTIENT_FLAVORS = ("FB", "FBe", "FK", "FKe")
PLAIN_OF = {"FB": "B", "FBe": "Be", "FK": "K", "FKe": "Ke"}

#: Exhaustive enumeration cap: degree n filters 2**(2**n) - 1 candidate families.
ENUM_MAX_DEGREE = 4

#: Flavors on which coproduct-based operations are defined.
_COALGEBRA_FLAVORS = ("B", "Be", "K", "Ke")


def _check_plain(flavor: str):
    if flavor not in PLAIN_FLAVORS:
        raise ValueError(f"not a plain flavor: {flavor!r}")


def _check_degree(n: int):
    if n < 0 or n > ENUM_MAX_DEGREE:
        raise DegreeTooLarge(f"degree {n} outside 0..{ENUM_MAX_DEGREE}")


def _bitmap_even(n: int, bitmap: int) -> bool:
    parity = None
    m = bitmap
    while m:
        low = m & -m
        p = (low.bit_length() - 1).bit_count() & 1
        if parity is None:
            parity = p
        elif p != parity:
            return False
        m ^= low
    return True


@lru_cache(maxsize=None)
def _classes(flavor: str, n: int) -> tuple[int, ...]:
    """Sorted canonical bitmaps of the flavor's degree-n isomorphism classes."""
    if n == 0:
        return (1,)
    if flavor == "Be":
        return tuple(c for c in _classes("B", n) if _bitmap_even(n, c))
    if flavor == "K":
        return tuple(c for c in _classes("B", n) if c & 1)
    if flavor == "Ke":
        return tuple(c for c in _classes("Be", n) if c & 1)
    seen = set()
    binary_only = flavor == "B"
    for bmp in range(1, 1 << (1 << n)):
        if binary_only and not is_binary_bitmap(n, bmp):
            continue
        seen.add(kernels.canon_bitmap(n, bmp))
    return tuple(sorted(seen))


@dataclass(frozen=True)
class GradedBasis:
    flavor: str
    degree: int
    codes: tuple[CanonicalCode, ...]

    def __len__(self):
        return len(self.codes)


def enumerate_basis(flavor: str, n: int) -> GradedBasis:
    """All degree-n isomorphism classes of the plain flavor, in code order."""
    _check_plain(flavor)
    _check_degree(n)
    codes = tuple(CanonicalCode(n, c) for c in _classes(flavor, n))
    return GradedBasis(flavor, n, codes)


@dataclass(frozen=True)
class GradedVector:
    """Exact-rational combination of same-degree canonical codes."""

    degree: int
    terms: dict

    def __post_init__(self):
        for code, coeff in self.terms.items():
            if code.n != self.degree or coeff == 0:
                raise ValueError("terms must be nonzero and of the stated degree")


@dataclass(frozen=True)
class TensorVector:
    """Exact-rational combination of pairs of canonical codes."""

    terms: dict

    def bidegrees(self):
        return sorted({(l.n, r.n) for l, r in self.terms})


@lru_cache(maxsize=None)
def _coproduct_terms(code: CanonicalCode):
    """Coproduct of a canonical class as {(left code, right code): int}."""
    d = code.to_set_system()
    full = d.full_mask
    acc: dict = {}
    for sub in range(1 << d.n):
        left = canonical_form(restrict(d, sub))
        right = canonical_form(restrict(d, full ^ sub))
        key = (left, right)
        acc[key] = acc.get(key, 0) + 1
    return acc


def coproduct(d: SetSystem, require_binary: bool = True) -> TensorVector:
    """Sum of restriction tensor co-restriction over all 2**n subsets."""
    if require_binary and not is_binary(d):
        raise NotBinary("coproduct enforcement is on and the input is not binary")
    terms = {
        key: Fraction(v) for key, v in _coproduct_terms(canonical_form(d)).items()
    }
    return TensorVector(terms)


def _reduced_coproduct_vector(code: CanonicalCode) -> dict:
    """Middle-bidegree coproduct coordinates of one basis class."""
    out = {}
    for (left, right), coeff in _coproduct_terms(code).items():
        if 0 < left.n < code.n:
            out[(left, right)] = Fraction(coeff)
    return out


def _check_coalgebra(flavor: str):
    if flavor not in _COALGEBRA_FLAVORS:
        raise ValueError(f"coproduct operations are not defined on flavor {flavor!r}")


def primitive_dim(flavor: str, n: int) -> int:
    """Kernel dimension of the reduced coproduct on the degree-n span."""
    _check_coalgebra(flavor)
    _check_degree(n)
    if n == 0:
        return 0
    basis = enumerate_basis(flavor, n)
    ech = Echelon()
    for code in basis.codes:
        ech.add(_reduced_coproduct_vector(code))
    return len(basis) - ech.rank


def decomposable_dim(flavor: str, n: int) -> int:
    """Dimension of the span of products of lower positive degrees."""
    _check_plain(flavor)
    _check_degree(n)
    return len(_product_codes(flavor, n))


@lru_cache(maxsize=None)
def _product_codes(flavor: str, n: int) -> tuple[CanonicalCode, ...]:
    out = set()
    for k in range(1, n):
        for ci in enumerate_basis(flavor, k).codes:
            si = ci.to_set_system()
            for cj in enumerate_basis(flavor, n - k).codes:
                out.add(canonical_form(product(si, cj.to_set_system())))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _relations(plain: str, n: int):
    """4-term relation vectors of degree n, plus their echelon span."""
    vectors = []
    ech = Echelon()
    if n >= 2:
        basis_set = set(enumerate_basis(plain, n).codes)
        for code in sorted(basis_set):
            d = code.to_set_system()
            for a in range(n):
                for b in range(n):
                    if a == b:
                        continue
                    ft = four_term(d, a, b, require_binary=False)
                    vec: dict = {}
                    for coeff, term in ft.terms:
                        c = canonical_form(term)
                        assert c in basis_set, "moves left the flavor"
                        vec_add(vec, {c: Fraction(coeff)}, Fraction(1))
                    if vec:
                        vectors.append(vec)
                        ech.add(vec)
    return tuple(vectors), ech


def four_term_quotient(flavor: str, n: int) -> tuple[int, int]:
    """(quotient dimension, rank of the 4-term relation span) in degree n."""
    if flavor not in QUOTIENT_FLAVORS:
        raise ValueError(f"not a quotient flavor: {flavor!r}")
    _check_degree(n)
    plain = PLAIN_OF[flavor]
    _, ech = _relations(plain, n)
    return len(enumerate_basis(plain, n)) - ech.rank, ech.rank


def relation_vectors(flavor: str, n: int) -> list[GradedVector]:
    """The generating 4-term combinations of the quotient flavor, as vectors."""
    if flavor not in QUOTIENT_FLAVORS:
        raise ValueError(f"not a quotient flavor: {flavor!r}")
    _check_degree(n)
    vectors, _ = _relations(PLAIN_OF[flavor], n)
    return [GradedVector(n, dict(v)) for v in vectors]


def _tensor_subspace(plain: str, k: int, nk: int) -> Echelon:
    """Echelon of R_k (x) B_nk + B_k (x) R_nk in middle tensor coordinates."""
    ech = Echelon()
    _, rk = _relations(plain, k)
    _, rnk = _relations(plain, nk)
    for row in rk.rows.values():
        for e in enumerate_basis(plain, nk).codes:
            ech.add({(c, e): v for c, v in row.items()})
    for row in rnk.rows.values():
        for e in enumerate_basis(plain, k).codes:
            ech.add({(e, c): v for c, v in row.items()})
    return ech


def quotient_primitive_dim(flavor: str, n: int) -> int:
    """Primitive dimension of the 4-term quotient in degree n.

    Verifies degreewise that the relation span is a coideal before
    descending the reduced coproduct; a violation means the moves or the
    coproduct are broken, so it raises instead of reporting a number.
    """
    if flavor not in QUOTIENT_FLAVORS:
        raise ValueError(f"not a quotient flavor: {flavor!r}")
    _check_degree(n)
    if n == 0:
        return 0
    plain = PLAIN_OF[flavor]
    _check_coalgebra(plain)
    vectors, rel_ech = _relations(plain, n)
    subspaces = {k: _tensor_subspace(plain, k, n - k) for k in range(1, n)}

    def project(vec: dict) -> dict:
        out: dict = {}
        bucket: dict = {}
        for (l, r), v in vec.items():
            bucket.setdefault(l.n, {})[(l, r)] = v
        for k, part in bucket.items():
            vec_add(out, subspaces[k].reduce(part), Fraction(1))
        return out

    for rel in vectors:
        mu: dict = {}
        for code, coeff in rel.items():
            vec_add(mu, _reduced_coproduct_vector(code), coeff)
        if project(mu):
            raise CoidealViolation(
                f"4-term span of {plain} degree {n} is not a coideal"
            )
    basis = enumerate_basis(plain, n)
    ech = Echelon()
    for code in basis.codes:
        ech.add(project(_reduced_coproduct_vector(code)))
    return len(basis) - ech.rank - rel_ech.rank


#: Reference primitive-dimension table at degrees 1 and 2, in report order.
TABLE1_EXPECTED = {
    "B": (3, 5),
    "Be": (2, 2),
    "FB": (3, 4),
    "FBe": (2, 2),
    "K": (2, 3),
    "Ke": (1, 1),
    "FK": (2, 3),
    "FKe": (1, 1),
}


@dataclass(frozen=True)
class Table1Report:
    rows: tuple  # (flavor, computed pair, expected pair, ok)

    @property
    def passed(self) -> bool:
        return all(ok for _, _, _, ok in self.rows)

    def format(self) -> str:
        lines = ["flavor  n=1  n=2  expected  status"]
        for flavor, got, want, ok in self.rows:
            lines.append(
                f"{flavor:<6}  {got[0]:>3}  {got[1]:>3}  "
                f"({want[0]},{want[1]})     {'PASS' if ok else 'FAIL'}"
            )
        lines.append("table: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def table1_report() -> Table1Report:
    """Primitive dimensions at degrees 1 and 2 for all eight flavors."""
    rows = []
    for flavor, want in TABLE1_EXPECTED.items():
        if flavor in PLAIN_FLAVORS:
            got = (primitive_dim(flavor, 1), primitive_dim(flavor, 2))
        else:
            got = (quotient_primitive_dim(flavor, 1), quotient_primitive_dim(flavor, 2))
        rows.append((flavor, got, want, got == want))
    return Table1Report(tuple(rows))
