from pathlib import Path

import pytest

from algebra.builders import build_almost_stretched, build_R_mod_K, make_params
from algebra.io import load_algebra
from classification.hilbert_shapes import (
    MINIMAL_MULTIPLICITY,
    MULTIPLICITY_SEVEN,
    SMALL_EXCESS,
    classify,
    enumerate_candidate_hf,
    enumerate_possible_hf,
    hilbert_enumeration,
    is_stretched_shape,
    macaulay_bound,
    rationality_guarantee,
    remark2_shape_params,
)
from models.enums import GorensteinKind
from models.errors import ClassificationError
from models.params import HilbertFunction

DATA = Path(__file__).resolve().parents[1] / "data" / "algebras"


def hf(*values):
    return HilbertFunction(values=values)


# ----------------------------------------
# classify
@pytest.mark.parametrize("h,s,t", [(2, 3, 2), (3, 4, 2), (4, 5, 3)])
def test_almost_stretched_algebras_classify_as_such(h, s, t):
    result = classify(build_almost_stretched(make_params(h, s, t, 1)))
    assert result.kind == GorensteinKind.ALMOST_STRETCHED
    assert result.gorenstein
    assert remark2_shape_params(result.witness) == (s, t)


def test_stretched_and_degenerate_cases():
    stretched = classify(build_almost_stretched(make_params(3, 3, 1, stretched=True)))
    assert stretched.kind == GorensteinKind.STRETCHED
    assert is_stretched_shape(stretched.witness)

    field = classify(load_algebra(DATA / "field.json"))
    assert field.kind == GorensteinKind.STRETCHED and field.gorenstein

    kx3 = classify(load_algebra(DATA / "kx_mod_x3.json"))
    assert kx3.kind == GorensteinKind.STRETCHED
    assert kx3.witness == hf(1, 1, 1)


def test_socle_quotient_is_not_gorenstein():
    result = classify(build_R_mod_K(make_params(3, 4, 2)))
    assert result.kind == GorensteinKind.ALMOST_STRETCHED
    assert not result.gorenstein


# ----------------------------------------
# Shape recognizers
@pytest.mark.parametrize(
    "values,expected",
    [
        ((1, 3, 2, 1), (3, 2)),
        ((1, 4, 2, 2, 1, 1), (5, 3)),
        ((1, 2, 2, 1, 1), (4, 2)),
        ((1, 3, 1, 1), None),
        ((1, 3, 2, 2), None),
        ((1, 1, 2, 1), None),
        ((1, 3, 2, 1, 2), None),
    ],
)
def test_shape_params(values, expected):
    assert remark2_shape_params(hf(*values)) == expected


def test_stretched_shape():
    assert is_stretched_shape(hf(1, 4, 1))
    assert is_stretched_shape(hf(1, 2, 1, 1, 1))
    assert not is_stretched_shape(hf(1, 3, 2, 1))
    assert not is_stretched_shape(hf(1, 3))


@pytest.mark.parametrize("a,n,expected", [(0, 3, 0), (1, 4, 1), (2, 1, 3), (3, 1, 6), (2, 2, 2), (3, 2, 4), (4, 2, 5)])
def test_macaulay_bound(a, n, expected):
    bound = macaulay_bound(a, n)
    assert bound == expected
    assert type(bound) is int


# ----------------------------------------
# Enumeration
def test_enumeration_multiplicity_seven():
    assert enumerate_possible_hf(7, 3) == [hf(1, 3, 2, 1), hf(1, 3, 1, 1, 1)]
    assert enumerate_possible_hf(7, 2) == [hf(1, 2, 2, 1, 1), hf(1, 2, 1, 1, 1, 1)]
    assert hf(1, 2, 3, 1) not in enumerate_candidate_hf(7, 2)


def test_enumeration_buckets():
    seven = hilbert_enumeration(7, 2)
    assert seven.excluded == [hf(1, 2, 3, 1)]
    assert seven.other == []

    eight = hilbert_enumeration(8, 3)
    assert eight.possible == [hf(1, 3, 2, 1, 1), hf(1, 3, 1, 1, 1, 1)]
    assert eight.other == [hf(1, 3, 3, 1)]
    assert eight.excluded == []


@pytest.mark.parametrize("h", [2, 3, 4, 6])
def test_small_excess_shapes(h):
    assert enumerate_possible_hf(h + 2, h) == [hf(1, h, 1)]
    assert enumerate_possible_hf(h + 3, h) == [hf(1, h, 1, 1)]
    assert enumerate_possible_hf(h + 4, h) == [hf(1, h, 2, 1), hf(1, h, 1, 1, 1)]


@pytest.mark.parametrize("e,h", [(7, 2), (7, 3), (9, 4), (10, 3)])
def test_enumerated_shapes_are_consistent(e, h):
    for shape in enumerate_possible_hf(e, h):
        assert shape.total == e
        assert shape[1] == h
        assert is_stretched_shape(shape) or remark2_shape_params(shape) is not None


def test_minimal_multiplicity_enumerates_nothing():
    assert enumerate_possible_hf(6, 5) == []


@pytest.mark.parametrize("e,h", [(3, 3), (4, 1), (2, 2)])
def test_out_of_range(e, h):
    with pytest.raises(ClassificationError):
        enumerate_possible_hf(e, h)
    with pytest.raises(ClassificationError):
        rationality_guarantee(e, h)


# ----------------------------------------
# Rationality
@pytest.mark.parametrize(
    "e,h,guaranteed,reason",
    [
        (6, 5, True, MINIMAL_MULTIPLICITY),
        (3, 2, True, MINIMAL_MULTIPLICITY),
        (7, 2, True, MULTIPLICITY_SEVEN),
        (7, 3, True, MULTIPLICITY_SEVEN),
        (6, 2, True, MULTIPLICITY_SEVEN),
        (14, 10, True, SMALL_EXCESS),
        (9, 5, True, SMALL_EXCESS),
    ],
)
def test_rationality_guarantee_names_the_bound(e, h, guaranteed, reason):
    assert rationality_guarantee(e, h) == (guaranteed, reason)


@pytest.mark.parametrize("e,h", [(26, 20), (12, 2), (8, 3)])
def test_no_guarantee(e, h):
    ok, text = rationality_guarantee(e, h)
    assert not ok
    assert text == f"no guarantee for e={e}, h={h}"


def test_guarantee_holds_up_to_seven():
    for e in range(3, 8):
        for h in range(max(2, e - 5), e):
            assert rationality_guarantee(e, h)[0]
