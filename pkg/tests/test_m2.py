"""Trichotomy classification and decomposition of full 2x2 matrices."""

from fractions import Fraction

import pytest

from qpolar import (
    M2,
    M2Kind,
    NotQuasipolarError,
    PreconditionViolation,
    T2,
    UnsupportedShape,
    char_poly_2x2,
    classify_m2,
    find_root_split,
    get_view,
    quasipolar_witness_m2,
)
from qpolar.matrices import ShapedMatrix


def m2_of(ring, a, b, c, d):
    return ShapedMatrix.from_rows(ring, M2, [[a, b], [c, d]])


class TestClassification:
    def test_unit_determinant_is_invertible(self, z4):
        c = classify_m2(m2_of(z4, 1, 1, 0, 1))
        assert c.kind is M2Kind.INVERTIBLE
        assert c.roots is None
        assert c.to_dict() == {"kind": "invertible"}

    def test_radical_trace_and_determinant_is_quasinilpotent(self, z4):
        c = classify_m2(m2_of(z4, 2, 2, 2, 2))
        assert c.kind is M2Kind.QUASINILPOTENT
        assert c.to_dict() == {"kind": "quasinilpotent"}

    def test_split_case_pins_the_root_pair(self, z4):
        c = classify_m2(m2_of(z4, 1, 0, 0, 2))
        assert c.kind is M2Kind.SPLIT
        alpha, beta = c.roots
        assert (alpha, beta) == (z4.element(2), z4.element(1))
        assert not alpha.is_unit()
        assert beta.is_unit()
        assert c.to_dict() == {"kind": "split", "roots": ["2", "1"]}

    def test_rejects_other_shapes(self, z4):
        with pytest.raises(UnsupportedShape):
            classify_m2(ShapedMatrix.from_rows(z4, T2, [[1, 0], [0, 1]]))


class TestWitnesses:
    def test_split_witness_pinned(self, z4):
        a = m2_of(z4, 0, 0, 1, 3)
        w = quasipolar_witness_m2(a)
        assert w.p == m2_of(z4, 1, 0, 1, 0)
        assert a * w.p == w.p.scale(z4.element(0))
        assert w.checks().passed

    def test_quasinilpotent_witness_pinned(self, z4):
        a = m2_of(z4, 2, 2, 2, 2)
        w = quasipolar_witness_m2(a)
        assert w.p == ShapedMatrix.identity(z4, M2)
        assert w.u == m2_of(z4, 3, 2, 2, 3)
        assert w.checks().passed

    def test_invertible_witness_is_trivial(self, z4):
        a = m2_of(z4, 1, 1, 0, 1)
        w = quasipolar_witness_m2(a)
        assert w.p == ShapedMatrix.zero(z4, M2)
        assert w.u == a
        assert w.checks().passed

    def test_split_scaling_relation_holds(self, f3):
        a = m2_of(f3, 1, 0, 0, 0)
        c = classify_m2(a)
        assert c.kind is M2Kind.SPLIT
        alpha, _ = c.roots
        w = quasipolar_witness_m2(a)
        assert a * w.p == w.p.scale(alpha)

    def test_witnesses_verified_against_the_search(self, f2):
        view = get_view(f2, M2)
        for key in view.keys:
            a = view.value_of(key)
            if classify_m2(a).kind is M2Kind.NOT_QUASIPOLAR:
                assert not view.quasipolar_search_keys(key)
                continue
            w = quasipolar_witness_m2(a, view=view)
            assert view.key_of(w.p) in view.quasipolar_search_keys(key)


class TestLocalizedIntegers:
    def test_irrational_discriminant_is_obstructed(self, zloc2):
        a = m2_of(zloc2, 0, -2, 1, 1)
        c = classify_m2(a)
        assert c.kind is M2Kind.NOT_QUASIPOLAR
        assert "discriminant" in c.reason
        with pytest.raises(NotQuasipolarError):
            quasipolar_witness_m2(a)

    def test_rational_square_discriminant_splits(self, zloc2):
        a = m2_of(zloc2, 1, 0, 2, 2)
        c = classify_m2(a)
        assert c.kind is M2Kind.SPLIT
        assert c.roots == (zloc2.element(2), zloc2.element(1))
        w = quasipolar_witness_m2(a)
        assert w.p == m2_of(zloc2, 0, 0, 2, 1)
        assert w.u == m2_of(zloc2, 1, 0, 4, 3)
        assert w.checks().passed

    def test_fractional_entries_work(self, zloc2):
        a = m2_of(
            zloc2,
            Fraction(1, 3),
            0,
            Fraction(2, 5),
            Fraction(2, 7),
        )
        c = classify_m2(a)
        assert c.kind is M2Kind.SPLIT
        w = quasipolar_witness_m2(a)
        assert w.checks().passed

    def test_rational_split_without_radical_root_is_obstructed(self, zloc2):
        # t^2 - 2t + 1 = (t - 1)^2: splits over Q, but both roots are units.
        chi = char_poly_2x2(m2_of(zloc2, 1, 1, 0, 1))
        assert chi.det.is_unit()
        with pytest.raises(PreconditionViolation):
            find_root_split(chi, zloc2)


class TestFindRootSplit:
    def test_finite_scan_finds_the_known_pair(self, z4):
        chi = char_poly_2x2(m2_of(z4, 1, 0, 0, 2))
        alpha, beta = find_root_split(chi, z4)
        assert (alpha, beta) == (z4.element(2), z4.element(1))
        assert chi.evaluate(alpha) == z4.element(0)
        assert chi.evaluate(beta) == z4.element(0)

    def test_requires_radical_determinant(self, z4):
        chi = char_poly_2x2(m2_of(z4, 1, 1, 0, 1))
        with pytest.raises(PreconditionViolation):
            find_root_split(chi, z4)

    def test_requires_unit_trace(self, z4):
        chi = char_poly_2x2(m2_of(z4, 2, 2, 2, 2))
        with pytest.raises(PreconditionViolation):
            find_root_split(chi, z4)

    def test_obstructed_raises_for_zloc(self, zloc2):
        chi = char_poly_2x2(m2_of(zloc2, 0, -2, 1, 1))
        with pytest.raises(NotQuasipolarError):
            find_root_split(chi, zloc2)
