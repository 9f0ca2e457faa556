"""Tutte-style recursion invariants, the 4-term functional check, and the
full-set weight with its convolution logarithm.

The deletion/contraction recursion with weights (x, y, z, w) is order
dependent for generic parameters; ``tutte_eval_ordered`` therefore carries
an optional audit recomputing the value over every pivot choice, and
``tutte_solve`` treats the recursion as a linear system over the
isomorphism classes, whose solution space is empty exactly when the
parameters are inconsistent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    CanonicalCode,
    ElementRole,
    SetSystem,
    canonical_form,
    contract,
    delete,
    element_role,
    product,
)
from .errors import DegreeTooLarge, MissingValue, NotMultiplicative
from .hopf import _coproduct_terms, enumerate_basis
from .ratlin import Echelon, vec_add

AUDIT_MAX_N = 6


@dataclass(frozen=True)
class TutteParams:
    x: Fraction
    y: Fraction
    z: Fraction
    w: Fraction

    @classmethod
    def of(cls, x, y, z, w) -> "TutteParams":
        return cls(Fraction(x), Fraction(y), Fraction(z), Fraction(w))


@dataclass(frozen=True)
class TutteResult:
    value: Fraction
    order_independent: bool | None  # None when no audit was requested


def _branches(s: SetSystem, e: int, p: TutteParams):
    role = element_role(s, e)
    if role is ElementRole.ORDINARY:
        return ((p.x, delete(s, e)), (p.y, contract(s, e)))
    if role is ElementRole.LOOP:
        return ((p.z, delete(s, e)),)
    return ((p.w, contract(s, e)),)


def tutte_eval_ordered(
    s: SetSystem, p: TutteParams, pivot: str = "lowest", audit: bool = False
) -> TutteResult:
    """Evaluate the deletion/contraction recursion with a fixed pivot rule.

    ``pivot`` picks the lowest or highest remaining element at every step.
    With ``audit=True`` the value set over all pivot choices is computed
    as well (n <= AUDIT_MAX_N) and compared.
    """
    if pivot not in ("lowest", "highest"):
        raise ValueError(f"pivot must be 'lowest' or 'highest', got {pivot!r}")
    memo: dict = {}

    def rec(t: SetSystem) -> Fraction:
        if t.n == 0:
            return Fraction(1)
        key = (t.n, t.masks)
        got = memo.get(key)
        if got is None:
            e = 0 if pivot == "lowest" else t.n - 1
            got = sum(
                (c * rec(m) for c, m in _branches(t, e, p)), start=Fraction(0)
            )
            memo[key] = got
        return got

    value = rec(s)
    if not audit:
        return TutteResult(value, None)
    return TutteResult(value, audit_values(s, p) == {value})


def audit_values(s: SetSystem, p: TutteParams) -> set:
    """All values of the recursion over every pivot choice at every step."""
    if s.n > AUDIT_MAX_N:
        raise DegreeTooLarge(f"audit capped at n <= {AUDIT_MAX_N}")
    memo: dict = {}

    def rec(t: SetSystem) -> frozenset:
        if t.n == 0:
            return frozenset((Fraction(1),))
        key = (t.n, t.masks)
        got = memo.get(key)
        if got is None:
            vals = set()
            for e in range(t.n):
                branches = _branches(t, e, p)
                if len(branches) == 1:
                    c, m = branches[0]
                    vals.update(c * v for v in rec(m))
                else:
                    (cx, mx), (cy, my) = branches
                    for vx in rec(mx):
                        for vy in rec(my):
                            vals.add(cx * vx + cy * vy)
            got = frozenset(vals)
            memo[key] = got
        return got

    return set(rec(s))


@dataclass(frozen=True)
class Functional:
    """Values on canonical classes of one flavor, degrees 0..degree_max."""

    flavor: str
    degree_max: int
    values: dict
    multiplicative: bool = False

    def __call__(self, code: CanonicalCode) -> Fraction:
        try:
            return self.values[code]
        except KeyError:
            raise MissingValue(f"no value for class {code}") from None

    def on_system(self, s: SetSystem) -> Fraction:
        return self(canonical_form(s))


_UNIT_CODE = CanonicalCode(0, 1)


@dataclass(frozen=True)
class TutteSolutionSpace:
    """Affine solution space of the recursion constraints at fixed parameters."""

    params: TutteParams
    n_max: int
    particular: dict  # code -> Fraction, all free unknowns set to 0
    homogeneous: tuple  # tuple of code -> Fraction dicts spanning the kernel

    @property
    def dimension(self) -> int:
        return len(self.homogeneous)

    def functionals(self):
        """The particular solution plus particular + each kernel generator."""
        out = [self._functional(self.particular)]
        for h in self.homogeneous:
            shifted = dict(self.particular)
            vec_add(shifted, h, Fraction(1))
            out.append(self._functional(shifted))
        return out

    def _functional(self, values: dict) -> Functional:
        full = {
            code: values.get(code, Fraction(0))
            for d in range(self.n_max + 1)
            for code in enumerate_basis("B", d).codes
        }
        return Functional("B", self.n_max, full)


# Right-hand-side column for affine systems; sorts after every real class
# so elimination never pivots on it while unknowns remain.
_RHS = CanonicalCode(1 << 30, 0)


def tutte_solve(n_max: int, p: TutteParams) -> TutteSolutionSpace | None:
    """Solve the recursion constraints on all binary classes of degree <= n_max.

    One unknown per class; one equation per class and ground-set element,
    plus value 1 on the unit.  Returns None when the system is infeasible
    at these parameter values.
    """
    classes = [
        code for d in range(n_max + 1) for code in enumerate_basis("B", d).codes
    ]
    ech = Echelon()
    ech.add({_UNIT_CODE: Fraction(1), _RHS: Fraction(-1)})
    for code in classes:
        if code.n == 0:
            continue
        d = code.to_set_system()
        for e in range(code.n):
            row = {code: Fraction(1)}
            for coeff, minor in _branches(d, e, p):
                vec_add(row, {canonical_form(minor): -coeff}, Fraction(1))
            ech.add(row)
    if _RHS in ech.rows:
        return None
    pivots = set(ech.rows)
    free = [c for c in classes if c not in pivots]
    particular: dict = {}
    for pivot_code, row in ech.rows.items():
        v = -row.get(_RHS, Fraction(0))
        if v:
            particular[pivot_code] = v
    homogeneous = []
    for f in free:
        h = {f: Fraction(1)}
        for pivot_code, row in ech.rows.items():
            c = row.get(f)
            if c:
                h[pivot_code] = -c
        homogeneous.append(h)
    return TutteSolutionSpace(p, n_max, particular, tuple(homogeneous))


def feasible_count_functional(n_max: int) -> Functional:
    """f(D) = number of feasible sets; the unique solution at (1,1,1,1)."""
    values = {}
    for d in range(n_max + 1):
        for code in enumerate_basis("B", d).codes:
            values[code] = Fraction(code.code.bit_count())
    return Functional("B", n_max, values, multiplicative=True)


def functional_4T_check(f: Functional, n: int):
    """(True, None) if every 4-term combination vanishes under f, else a witness."""
    from .moves import four_term

    for code in enumerate_basis("B", n).codes:
        d = code.to_set_system()
        for a in range(n):
            for b in range(n):
                if a == b:
                    continue
                ft = four_term(d, a, b, require_binary=False)
                total = sum(
                    (c * f.on_system(t) for c, t in ft.terms), start=Fraction(0)
                )
                if total:
                    return False, (code, a, b, ft)
    return True, None


def conway_w(s: SetSystem) -> int:
    """1 iff the full ground set is feasible."""
    return 1 if s.member(s.full_mask) else 0


def conway_functional(n_max: int) -> Functional:
    values = {}
    for d in range(n_max + 1):
        for code in enumerate_basis("B", d).codes:
            values[code] = Fraction(conway_w(code.to_set_system()))
    return Functional("B", n_max, values, multiplicative=True)


def _check_multiplicative(f: Functional, n_max: int):
    if f(_UNIT_CODE) != 1:
        raise NotMultiplicative("value on the unit must be 1")
    for d1 in range(1, n_max):
        for c1 in enumerate_basis(f.flavor, d1).codes:
            s1 = c1.to_set_system()
            for d2 in range(1, n_max - d1 + 1):
                for c2 in enumerate_basis(f.flavor, d2).codes:
                    prod = canonical_form(product(s1, c2.to_set_system()))
                    if f(prod) != f(c1) * f(c2):
                        raise NotMultiplicative(
                            f"f({prod}) != f({c1}) * f({c2})"
                        )


def convolution_log(f: Functional, n_max: int) -> Functional:
    """Logarithm of a multiplicative functional in the convolution algebra.

    log f = sum_{k>=1} (-1)^(k-1) (f - u eps)^{*k} / k; the k-th power
    kills degrees below k, so the sum is finite in every degree.
    """
    _check_multiplicative(f, n_max)
    codes = [c for d in range(n_max + 1) for c in enumerate_basis(f.flavor, d).codes]
    g = {c: (f(c) if c.n > 0 else Fraction(0)) for c in codes}

    def convolve(h: dict) -> dict:
        out = {}
        for c in codes:
            acc = Fraction(0)
            for (left, right), mult in _coproduct_terms(c).items():
                gl = g.get(left)
                hr = h.get(right)
                if gl and hr:
                    acc += mult * gl * hr
            out[c] = acc
        return out

    log_values = {c: Fraction(0) for c in codes}
    power = dict(g)
    for k in range(1, n_max + 1):
        sign = Fraction((-1) ** (k - 1), k)
        for c in codes:
            log_values[c] += sign * power.get(c, Fraction(0))
        if k < n_max:
            power = convolve(power)
    return Functional(f.flavor, n_max, log_values)
