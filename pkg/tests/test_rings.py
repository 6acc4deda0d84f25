from fractions import Fraction

import pytest

from qpolar import (
    InfiniteRing,
    IntegersMod,
    InvalidElement,
    LocalizedIntegers,
    NotAUnit,
    PrimeField,
    RingMismatch,
    RingParseError,
    TruncatedSeriesRing,
    parse_ring,
)


def test_modular_arithmetic(z4):
    a = z4.element(3)
    b = z4.element(2)
    assert a + b == 1
    assert a - b == 1
    assert a * b == 2
    assert -b == 2
    assert a**2 == 1
    assert (a + 1) == 0


def test_modular_canonical_residue(z4):
    assert z4.element(-1) == 3
    assert z4.element(7).payload == 3
    assert z4.parse("-2") == 2


def test_modular_unit_radical_split(z4, z8):
    units = [x for x in z4.elements() if x.is_unit()]
    radicals = [x for x in z4.elements() if x.in_jacobson()]
    assert sorted(x.payload for x in units) == [1, 3]
    assert sorted(x.payload for x in radicals) == [0, 2]
    # local dichotomy: exactly one of the two, never both
    for x in z8.elements():
        assert x.is_unit() != x.in_jacobson()


def test_modular_inverse(z4, f3):
    assert z4.element(3).inverse() == 3
    assert f3.element(2).inverse() == 2
    with pytest.raises(NotAUnit):
        z4.element(2).inverse()


def test_prime_field_every_nonzero_is_unit(f3):
    for x in f3.elements():
        assert x.is_unit() == (x != 0)
    assert f3.cardinality() == 3


def test_prime_field_requires_prime():
    with pytest.raises(InvalidElement):
        PrimeField(4)
    with pytest.raises(InvalidElement):
        IntegersMod(6, 2)


def test_localized_arithmetic(zloc2):
    third = zloc2.element(Fraction(1, 3))
    fifth = zloc2.element(Fraction(1, 5))
    assert third + fifth == zloc2.element(Fraction(8, 15))
    assert third * 3 == 1
    assert zloc2.element(Fraction(3, 5)).inverse() == zloc2.element(Fraction(5, 3))


def test_localized_membership(zloc2):
    assert not zloc2.element(Fraction(2, 3)).is_unit()
    assert zloc2.element(Fraction(6, 5)).in_jacobson()
    assert zloc2.element(Fraction(7, 9)).is_unit()
    with pytest.raises(InvalidElement):
        zloc2.element(Fraction(1, 2))
    with pytest.raises(NotAUnit):
        zloc2.element(2).inverse()


def test_localized_canonical_payload(zloc2):
    x = zloc2.element(Fraction(2, 6))
    assert x.payload == Fraction(1, 3)
    assert zloc2.parse("4/6").payload == Fraction(2, 3)
    assert zloc2.parse("-3").payload == Fraction(-3)
    with pytest.raises(RingParseError):
        zloc2.parse("one half")


def test_localized_is_infinite(zloc2):
    assert not zloc2.is_finite
    with pytest.raises(InfiniteRing):
        list(zloc2.elements())
    with pytest.raises(InfiniteRing):
        zloc2.cardinality()


def test_series_construction(z4):
    ring = TruncatedSeriesRing(z4, 3)
    assert ring.element(3).payload == (z4.element(3), z4.zero, z4.zero)
    assert ring.element([1, 2]).payload == (z4.element(1), z4.element(2), z4.zero)
    # excess coefficients truncate away
    assert ring.element([1, 2, 3, 9, 9]) == ring.element([1, 2, 3])


def test_series_parse_and_format(z4):
    ring = TruncatedSeriesRing(z4, 4)
    s = ring.parse("3 + 2*x + x^3")
    assert s.payload == (z4.element(3), z4.element(2), z4.zero, z4.element(1))
    assert repr(s) == "3 + 2*x + x^3"
    assert repr(ring.parse("1 - 2*x")) == "1 + 2*x"
    assert repr(ring.zero) == "0"
    assert ring.parse("x") == ring.element([0, 1])
    with pytest.raises(RingParseError):
        ring.parse("x^-1")
    with pytest.raises(RingParseError):
        ring.parse("3y")


def test_series_multiplication_truncates(z4):
    ring = TruncatedSeriesRing(z4, 3)
    a = ring.parse("3 + 2*x")
    assert a * a == ring.one
    assert a.inverse() == a
    x = ring.parse("x")
    assert x * x * x == ring.zero


def test_series_units_match_brute_force(f2):
    ring = TruncatedSeriesRing(f2, 3)
    carrier = list(ring.elements())
    assert len(carrier) == ring.cardinality() == 8
    for a in carrier:
        by_scan = any(a * b == ring.one for b in carrier)
        assert a.is_unit() == by_scan
        assert a.in_jacobson() == (not by_scan)


def test_series_constant_not_unit_has_no_inverse(z4):
    ring = TruncatedSeriesRing(z4, 2)
    with pytest.raises(NotAUnit):
        ring.parse("2 + x").inverse()


def test_series_mixed_precision_is_an_error(z4):
    a = TruncatedSeriesRing(z4, 2).element(1)
    b = TruncatedSeriesRing(z4, 3).element(1)
    with pytest.raises(RingMismatch):
        a + b
    assert a != b


def test_cross_ring_equality_is_false_not_an_error(z4, f2):
    assert z4.element(1) != f2.element(1)
    with pytest.raises(RingMismatch):
        z4.element(1) + f2.element(1)


def test_element_dunders(z4):
    a = z4.element(3)
    assert 1 + a == 0
    assert 1 - a == 2
    assert 2 * a == 2
    assert a / a == 1
    assert a**-1 == a.inverse()
    assert bool(a) and not bool(z4.zero)
    assert hash(z4.element(3)) == hash(z4.element(-1))


def test_parse_ring_grammar():
    assert parse_ring("F2") == PrimeField(2)
    assert parse_ring("Z2^2") == IntegersMod(2, 2)
    assert parse_ring("Z3^2") == IntegersMod(3, 2)
    assert parse_ring("Zloc2") == LocalizedIntegers(2)
    assert parse_ring("series(Z2^2,8)") == TruncatedSeriesRing(IntegersMod(2, 2), 8)
    nested = parse_ring("series(series(F2,2),2)")
    assert nested == TruncatedSeriesRing(TruncatedSeriesRing(PrimeField(2), 2), 2)


def test_parse_ring_rejects_bad_spellings():
    for bad in ("", "F4", "Z6^1", "Zloc4", "Z2", "series(F2)", "series(F2,0)", "banana"):
        with pytest.raises(RingParseError):
            parse_ring(bad)


def test_parse_ring_round_trips_repr(z4, f2, f3, z8, zloc2):
    for ring in (z4, f2, f3, z8, zloc2, TruncatedSeriesRing(z4, 4)):
        assert parse_ring(repr(ring)) == ring
