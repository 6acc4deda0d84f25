"""Worked examples re-derived end to end."""

from qpolar import (
    all_examples,
    example_precision2,
    example_precision8,
    verify_example,
)
from qpolar.matrices import ShapedMatrix


def test_catalog_lists_both_examples():
    assert [ex.name for ex in all_examples()] == ["z4-precision8", "z4-precision2"]


def test_precision8_verifies_with_every_check():
    report = verify_example(example_precision8())
    assert report.passed
    names = [name for name, _ in report.entries]
    assert "constant_split" in names
    assert "alpha_root" in names
    assert "beta_unit" in names


def test_precision8_alpha_has_the_alternating_tail():
    ex = example_precision8()
    alpha, _ = ex.alpha, ex.beta
    assert alpha.payload == tuple(
        ex.ring.base.element(0 if n % 2 else 2) if n else ex.ring.base.element(0)
        for n in range(8)
    )


def test_precision2_pins_the_spectral_idempotent():
    ex = example_precision2()
    report = verify_example(ex)
    assert report.passed
    assert ex.spectral == ShapedMatrix.from_rows(
        ex.ring, ex.matrix.shape, [["2*x", "2"], ["2 + x", "1 + 2*x"]]
    )
    assert "spectral_matches" in [name for name, _ in report.entries]


def test_constant_splits_match_the_pinned_pairs():
    p8, p2 = example_precision8(), example_precision2()
    assert tuple(map(str, p8.constant_split)) == ("0", "3")
    assert tuple(map(str, p2.constant_split)) == ("2", "3")
