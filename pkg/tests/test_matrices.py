import random

import pytest

from qpolar import (
    L3,
    LOW3,
    M2,
    M3,
    S1,
    S2,
    SHAPES,
    T2,
    T3,
    TN,
    MatrixParseError,
    ShapedMatrix,
    ShapeMismatch,
    UnsupportedShape,
    char_poly_2x2,
    get_view,
    matrix_from_json,
    parse_matrix,
    parse_shape,
)
from qpolar.matrices import (
    ISO_LOW3_TO_T3,
    ISO_S1_TO_S2,
    ISO_T3_TO_LOW3,
    ISO_UP3_TO_T3,
    SPLIT_L3,
    SPLIT_S1,
    SPLIT_S2,
    UP3,
    corner_embed_t2,
    corner_extract_t2,
    corner_projector,
)

from conftest import random_matrix


def test_every_shape_is_closed_under_product():
    for shape in SHAPES.values():
        assert shape.closed_under_product(), shape.name


def test_tn_masks():
    assert TN(2) is T2
    t4 = TN(4)
    assert t4.n == 4
    assert (0, 2) in t4.mask and (2, 0) not in t4.mask
    assert t4.closed_under_product()


def test_parse_shape_names():
    assert parse_shape("t3") is T3
    assert parse_shape("M2") is M2
    assert parse_shape("TN4").n == 4
    with pytest.raises(MatrixParseError):
        parse_shape("T1")
    with pytest.raises(MatrixParseError):
        parse_shape("hexagon")


def test_from_rows_rejects_entries_off_the_mask(z4):
    with pytest.raises(ShapeMismatch):
        ShapedMatrix.from_rows(z4, T3, [[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(ShapeMismatch):
        ShapedMatrix.from_rows(z4, T3, [[1, 0], [0, 1]])


def test_matrix_ring_axioms_spot(z4):
    rng = random.Random(7)
    for _ in range(50):
        a = random_matrix(rng, z4, T3)
        b = random_matrix(rng, z4, T3)
        c = random_matrix(rng, z4, T3)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == ShapedMatrix.zero(z4, T3)
        e = ShapedMatrix.identity(z4, T3)
        assert a * e == e * a == a


def test_scale_is_entrywise(z4):
    a = parse_matrix(z4, M2, "[1,2; 3,0]")
    assert a.scale(z4.element(3)) == parse_matrix(z4, M2, "[3,2; 1,0]")


def test_triangular_unit_rule_matches_exhaustive_search(f2):
    view = get_view(f2, T3)
    units = view.units
    for key in view.keys:
        a = view.value_of(key)
        assert a.is_unit() == (key in units)
        assert a.in_jacobson() == (key in view.jacobson_keys)


def test_m2_unit_rule_matches_exhaustive_search(f2):
    view = get_view(f2, M2)
    units = view.units
    for key in view.keys:
        a = view.value_of(key)
        assert a.is_unit() == (key in units)
        assert a.in_jacobson() == (key in view.jacobson_keys)


def test_m3_has_no_unit_rule(z4):
    a = ShapedMatrix.identity(z4, M3)
    with pytest.raises(UnsupportedShape):
        a.is_unit()


def test_char_poly_frozen_examples(z4):
    chi = char_poly_2x2(parse_matrix(z4, M2, "[0,0; 1,3]"))
    assert (chi.tr, chi.det) == (z4.element(3), z4.zero)
    assert str(chi) == "t^2 - 3*t"
    chi = char_poly_2x2(parse_matrix(z4, M2, "[3,2; 2,2]"))
    assert (chi.tr, chi.det) == (z4.element(1), z4.element(2))
    assert str(chi) == "t^2 - t + 2"
    assert chi.evaluate(z4.element(3)) == 0
    assert chi.evaluate(z4.element(2)) == 0
    assert chi.evaluate(z4.element(1)) == 2


def test_cayley_hamilton_exhaustive_m2_z4(z4):
    view = get_view(z4, M2)
    eye = ShapedMatrix.identity(z4, M2)
    zero = ShapedMatrix.zero(z4, M2)
    for key in view.keys:
        a = view.value_of(key)
        chi = char_poly_2x2(a)
        assert a * a - a.scale(chi.tr) + eye.scale(chi.det) == zero


def test_det_is_multiplicative_on_m2(z4):
    rng = random.Random(11)
    for _ in range(100):
        a = random_matrix(rng, z4, M2)
        b = random_matrix(rng, z4, M2)
        assert (a * b).det2() == a.det2() * b.det2()


def test_low3_iso_is_a_ring_isomorphism(z4):
    rng = random.Random(3)
    for _ in range(200):
        a = random_matrix(rng, z4, T3)
        b = random_matrix(rng, z4, T3)
        fa, fb = ISO_T3_TO_LOW3.apply(a), ISO_T3_TO_LOW3.apply(b)
        assert ISO_T3_TO_LOW3.apply(a * b) == fa * fb
        assert ISO_T3_TO_LOW3.apply(a + b) == fa + fb
        assert ISO_LOW3_TO_T3.apply(fa) == a
    eye = ShapedMatrix.identity(z4, T3)
    assert ISO_T3_TO_LOW3.apply(eye) == ShapedMatrix.identity(z4, LOW3)


def test_up3_iso_reverses_products(z4):
    assert ISO_UP3_TO_T3.reverses_products
    rng = random.Random(5)
    for _ in range(200):
        a = random_matrix(rng, z4, UP3)
        b = random_matrix(rng, z4, UP3)
        fa, fb = ISO_UP3_TO_T3.apply(a), ISO_UP3_TO_T3.apply(b)
        assert ISO_UP3_TO_T3.apply(a * b) == fb * fa
        assert ISO_UP3_TO_T3.apply(a + b) == fa + fb
        assert ISO_UP3_TO_T3.inverse().apply(fa) == a


def test_s1_to_s2_iso(z4):
    rng = random.Random(9)
    for _ in range(200):
        a = random_matrix(rng, z4, S1)
        b = random_matrix(rng, z4, S1)
        fa, fb = ISO_S1_TO_S2.apply(a), ISO_S1_TO_S2.apply(b)
        assert ISO_S1_TO_S2.apply(a * b) == fa * fb
        assert fa.shape is S2


def test_split_isos_are_componentwise_ring_maps(z4):
    rng = random.Random(13)
    for split, shape in ((SPLIT_L3, L3), (SPLIT_S1, S1), (SPLIT_S2, S2)):
        for _ in range(100):
            a = random_matrix(rng, z4, shape)
            b = random_matrix(rng, z4, shape)
            ta, sa = split.apply(a)
            tb, sb = split.apply(b)
            tab, sab = split.apply(a * b)
            assert tab == ta * tb and sab == sa * sb
            assert split.build_source(ta, sa) == a


def test_corner_embedding_is_multiplicative(z4):
    rng = random.Random(17)
    for _ in range(100):
        a = random_matrix(rng, z4, T2)
        b = random_matrix(rng, z4, T2)
        assert corner_embed_t2(a * b) == corner_embed_t2(a) * corner_embed_t2(b)
        assert corner_embed_t2(a + b) == corner_embed_t2(a) + corner_embed_t2(b)
        assert corner_extract_t2(corner_embed_t2(a)) == a


def test_corner_projector_cuts_the_corner(z4):
    proj = corner_projector(z4)
    assert proj * proj == proj
    a = parse_matrix(z4, T3, "[1,0,0; 2,3,0; 0,0,2]")
    inside = proj * a * proj
    assert corner_extract_t2(inside).shape is T2
    with pytest.raises(ShapeMismatch):
        corner_extract_t2(a)  # (3,3) entry is outside the corner


def test_parse_matrix_accepts_expected_grammar(z4):
    a = parse_matrix(z4, T3, "[1,0,0; 1,2,0; 0,0,2]")
    assert a == parse_matrix(z4, T3, "1,0,0; 1,2,0; 0,0,2")
    assert repr(a) == "[1, 0, 0; 1, 2, 0; 0, 0, 2]"


def test_parse_matrix_rejects_bad_literals(z4):
    with pytest.raises(MatrixParseError):
        parse_matrix(z4, T3, "[1,0; 1,2]")
    with pytest.raises(MatrixParseError):
        parse_matrix(z4, T3, "[1,0,0; 1,2,0; 0,0")
    with pytest.raises(MatrixParseError):
        parse_matrix(z4, T3, "[1,1,0; 0,1,0; 0,0,1]")  # off-mask entry
    with pytest.raises(MatrixParseError):
        parse_matrix(z4, T3, "[1,0,0; 1,banana,0; 0,0,2]")


def test_json_round_trip(z4):
    a = parse_matrix(z4, T3, "[1,0,0; 1,2,0; 0,0,2]")
    assert matrix_from_json(a.to_json()) == a


def test_json_round_trip_series(z4):
    from qpolar import TruncatedSeriesRing

    ring = TruncatedSeriesRing(z4, 3)
    a = parse_matrix(ring, M2, "[3, 2 + 2*x; 2 + x, 2 + 3*x]")
    assert matrix_from_json(a.to_json()) == a
