import random
from itertools import permutations

import pytest

from deltamatroids import core
from deltamatroids.core import (
    CanonicalCode,
    ElementRole,
    SetSystem,
    canonical_form,
    contract,
    delete,
    is_delta_matroid,
    is_even,
    lookup,
    make_set_system,
    named_catalog,
    product,
    restrict,
    sea_counterexample,
    twist,
    unit,
)
from deltamatroids.errors import (
    EmptyFamily,
    GroundSetTooLarge,
    IndexOutOfRange,
    MaskOutOfRange,
)


def test_make_set_system_examples():
    assert make_set_system(1, [0x0]) == lookup("s11")
    assert make_set_system(0, [0x0]) == unit()
    assert make_set_system(2, [0x3, 0x3, 0x0]) == lookup("s21")


def test_make_set_system_errors():
    with pytest.raises(EmptyFamily):
        make_set_system(2, [])
    with pytest.raises(MaskOutOfRange):
        make_set_system(2, [0x4])
    with pytest.raises(MaskOutOfRange):
        make_set_system(0, [0x1])


def test_set_system_is_immutable_and_hashable():
    s = lookup("s21")
    with pytest.raises(AttributeError):
        s.n = 3
    assert len({s, lookup("s21"), lookup("s22")}) == 2


def test_sea_examples():
    assert not is_delta_matroid(make_set_system(3, [0b000, 0b111]))
    assert is_delta_matroid(make_set_system(3, [0b101]))
    # a handle slide can leave the delta-matroid class (see test_moves)
    assert not is_delta_matroid(make_set_system(3, [0b000, 0b011, 0b110, 0b111]))


def test_sea_counterexample_witness():
    s = make_set_system(3, [0b000, 0b111])
    assert sea_counterexample(s) == (0b000, 0b111, 0)
    assert sea_counterexample(lookup("s23")) is None


def test_sea_matches_counterexample_search(delta_matroid_bitmaps):
    for n in range(4):
        for bmp in range(1, 1 << (1 << n)):
            s = core.from_bitmap(n, bmp)
            assert is_delta_matroid(s) == (sea_counterexample(s) is None)


def test_catalog_systems_are_delta_matroids():
    for name, s in named_catalog().items():
        assert is_delta_matroid(s), name


def test_catalog_contents():
    assert lookup("s23") == make_set_system(2, [0b00, 0b01, 0b10])
    assert lookup("s25") == make_set_system(2, [0b01, 0b10, 0b11])
    assert lookup("s21") == make_set_system(2, [0b00, 0b11])
    assert len(named_catalog()) == 14
    with pytest.raises(KeyError):
        lookup("s99")


def test_is_even():
    assert is_even(lookup("s11"))
    assert not is_even(lookup("s12"))
    assert is_even(lookup("s21"))


def test_twist():
    s = lookup("s23")
    assert twist(s, 0x0) == s
    assert twist(lookup("s13"), 0b1) == lookup("s11")
    for a in range(4):
        assert twist(twist(s, a), a) == s
    with pytest.raises(MaskOutOfRange):
        twist(s, 0x4)


def test_element_role():
    assert core.element_role(lookup("s11"), 0) is ElementRole.LOOP
    assert core.element_role(lookup("s13"), 0) is ElementRole.COLOOP
    assert core.element_role(lookup("s12"), 0) is ElementRole.ORDINARY
    with pytest.raises(IndexOutOfRange):
        core.element_role(lookup("s12"), 1)


def test_delete_examples():
    assert delete(lookup("s12"), 0) == unit()
    assert delete(lookup("s21"), 0) == lookup("s11")
    # coloop deletion falls through to contraction
    assert delete(lookup("s13"), 0) == unit()


def test_contract_examples():
    assert contract(lookup("s13"), 0) == unit()
    s22_alt = make_set_system(2, [0b00, 0b10, 0b11])
    assert contract(s22_alt, 0) == lookup("s13")
    # loop contraction falls through to deletion
    assert contract(lookup("s11"), 0) == unit()


def test_restrict_examples():
    s = lookup("s23")
    assert restrict(s, s.full_mask) == s
    assert restrict(lookup("s21"), 0b01) == lookup("s11")
    s12_s13 = product(lookup("s12"), lookup("s13"))
    assert restrict(s12_s13, 0b10) == lookup("s13")
    with pytest.raises(MaskOutOfRange):
        restrict(s, 0b100)


def test_product_examples():
    s11, s12, s13 = lookup("s11"), lookup("s12"), lookup("s13")
    assert product(s11, s12).masks == (0b00, 0b10)
    assert canonical_form(product(s11, s12)) == canonical_form(
        make_set_system(2, [0b00, 0b01])
    )
    assert product(s13, s13) == lookup("s13s13")
    s = lookup("s24")
    assert product(s, unit()) == s
    assert product(unit(), s) == s


def test_product_commutative_associative_up_to_iso():
    names = ["s11", "s12", "s13"]
    for a in names:
        for b in names:
            assert canonical_form(product(lookup(a), lookup(b))) == canonical_form(
                product(lookup(b), lookup(a))
            )
            for c in names:
                left = product(product(lookup(a), lookup(b)), lookup(c))
                right = product(lookup(a), product(lookup(b), lookup(c)))
                assert canonical_form(left) == canonical_form(right)


def test_canonical_form_examples():
    assert canonical_form(make_set_system(2, [0b01])) == canonical_form(
        make_set_system(2, [0b10])
    )
    s = lookup("s12")
    assert canonical_form(s).to_set_system() == s
    codes = {canonical_form(core.from_bitmap(2, b)) for b in range(1, 16)}
    assert len(codes) == 11


def test_canonical_form_bound():
    wide = make_set_system(9, [0])
    with pytest.raises(GroundSetTooLarge):
        canonical_form(wide)
    assert canonical_form(wide, max_n=9) == CanonicalCode(9, 1)


def _isomorphic_by_search(s1, s2):
    if s1.n != s2.n:
        return False
    target = set(s2.masks)
    for perm in permutations(range(s1.n)):
        image = set()
        for m in s1.masks:
            pm = 0
            for i in range(s1.n):
                if m >> i & 1:
                    pm |= 1 << perm[i]
            image.add(pm)
        if image == target:
            return True
    return False


def test_canonical_form_agrees_with_permutation_search():
    rng = random.Random(2024)
    for n in (1, 2):
        systems = [core.from_bitmap(n, b) for b in range(1, 1 << (1 << n))]
        for s1 in systems:
            for s2 in systems:
                assert (canonical_form(s1) == canonical_form(s2)) == (
                    _isomorphic_by_search(s1, s2)
                )
    for n in (3, 4):
        for _ in range(200):
            b1 = rng.getrandbits(1 << n) or 1
            b2 = rng.getrandbits(1 << n) or 1
            s1, s2 = core.from_bitmap(n, b1), core.from_bitmap(n, b2)
            assert (canonical_form(s1) == canonical_form(s2)) == (
                _isomorphic_by_search(s1, s2)
            )


def _minor(s, kind, e):
    return delete(s, e) if kind == "d" else contract(s, e)


def _minor_pair(s, kind1, e, kind2, f):
    shifted = f - 1 if f > e else f
    return _minor(_minor(s, kind1, e), kind2, shifted)


def test_minor_order_independence_exhaustive(delta_matroid_bitmaps):
    for n in range(2, 5):
        for bmp in delta_matroid_bitmaps[n]:
            s = core.from_bitmap(n, bmp)
            for e in range(n):
                for f in range(e + 1, n):
                    for k1 in "dc":
                        for k2 in "dc":
                            assert _minor_pair(s, k1, e, k2, f) == _minor_pair(
                                s, k2, f, k1, e
                            )


def test_minors_of_delta_matroids_are_delta_matroids(delta_matroid_bitmaps):
    for n in range(1, 5):
        for bmp in delta_matroid_bitmaps[n]:
            s = core.from_bitmap(n, bmp)
            for e in range(n):
                assert is_delta_matroid(delete(s, e))
                assert is_delta_matroid(contract(s, e))
    for bmp in delta_matroid_bitmaps[3]:
        s = core.from_bitmap(3, bmp)
        for keep in range(8):
            assert is_delta_matroid(restrict(s, keep))


def test_products_of_delta_matroids_are_delta_matroids(delta_matroid_bitmaps):
    for n1, n2 in ((1, 1), (1, 2), (2, 2)):
        for b1 in delta_matroid_bitmaps[n1]:
            for b2 in delta_matroid_bitmaps[n2]:
                assert is_delta_matroid(
                    product(core.from_bitmap(n1, b1), core.from_bitmap(n2, b2))
                )
