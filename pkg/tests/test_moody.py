from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from braid3.errors import NotPureBraid, StructureViolation
from braid3.harness import iter_pure_words, random_braid
from braid3.laurent import ONE, T, LaurentPoly, laurent_eq_up_to_unit
from braid3.moody import (
    arc_word,
    format_arc_word,
    has_unit_coefficient,
    moody,
    moody_from_arc_word,
    moody_mod_p,
    to_arc_basis,
    validate_turning_points,
)
from braid3.words import BraidWord, free_reduce


def test_arc_words():
    assert arc_word("aa") == ()
    assert format_arc_word(arc_word("bb")) == "a^-1 b"
    with pytest.raises(NotPureBraid):
        arc_word("ab")


def test_moody_examples():
    r = moody("")
    assert r.crossings == 0 and r.polynomial.is_zero() and r.disjoint
    r = moody("bb")
    assert r.crossings == 1 and r.polynomial == ONE and r.cp_sequence == ()
    assert moody_mod_p("bb", 2) == ONE
    assert moody_mod_p("", 3).is_zero()


def test_one_plus_t_squared_fixture():
    # located by exhaustive search; the shortest such braids have length 4
    r = moody("bAAb")
    assert laurent_eq_up_to_unit(r.polynomial, ONE + T**2)
    assert r.exponents == (0, -2) and r.signs == (1, 1)
    assert not any(
        laurent_eq_up_to_unit(moody(w).polynomial, ONE + T**2) for w in iter_pure_words(3)
    )


def test_result_json():
    assert moody("bAAb").to_json() == {
        "m": 2,
        "exponents": [0, -2],
        "signs": [1, 1],
        "cp_sequence": [-2],
        "polynomial": [{"exp": -2, "coef": 1}, {"exp": 0, "coef": 1}],
    }


def test_normalization():
    for w in iter_pure_words(6):
        r = moody(w)
        if r.crossings:
            assert r.exponents[0] == 0 and r.signs[0] == 1
            assert r.polynomial == LaurentPoly(zip(r.exponents, r.signs))
            assert len(r.cp_sequence) == r.crossings - 1


def test_arc_basis_roundtrip():
    back = {1: (1,), -1: (-1,), 2: (1, 2), -2: (-2, -1), 3: (3,), -3: (-3,)}
    for w in iter_pure_words(6):
        arc = arc_word(w)
        x_word = free_reduce(tuple(c for a in arc for c in back[a]))
        assert to_arc_basis(x_word) == arc


def test_structure_violation_flagged():
    # a hand-made arc word with a jump of 4 in level between crossings
    with pytest.raises(StructureViolation):
        moody_from_arc_word((1, 2, 2, 1))
    with pytest.raises(StructureViolation):
        moody_from_arc_word((1, -1))  # two crossings at the same level


def test_unit_coefficient():
    assert has_unit_coefficient(ONE + T**2)
    assert not has_unit_coefficient(LaurentPoly({0: 2, 1: 2}))
    assert not has_unit_coefficient(LaurentPoly())


def test_turning_point_examples():
    assert validate_turning_points((1, -2, 3)).valid
    assert not validate_turning_points((1, -1)).valid
    assert not validate_turning_points((3, -1)).valid
    assert validate_turning_points((2, 3, 1)).valid
    assert validate_turning_points(()).valid


# cp sequences that break the turning-point constraints away from the ends of
# the sequence; the PL oracle (tests/test_plarc.py) reproduces them exactly
INTERIOR_COUNTEREXAMPLES = {
    "abAAbAbb": (1, -2, 3, -1, -3, 1, -2, 3),
    "abAbAAAb": (-2, -1, 2, 2, -3, -2),
}


@pytest.mark.parametrize("word, cp", sorted(INTERIOR_COUNTEREXAMPLES.items()))
def test_interior_turning_point_counterexamples(word, cp):
    r = moody(word)
    assert r.cp_sequence == cp
    report = validate_turning_points(cp)
    assert not report.valid
    assert any(0 < k < len(cp) - 2 for k, _ in report.violations)


@given(st.integers(0, 40), st.integers(0, 10_000))
def test_random_pure_braids_satisfy_structure(length, seed):
    w = random_braid(length, seed, pure_only=True)
    r = moody(w)
    assert all(c != 0 and abs(c) <= 3 for c in r.cp_sequence)
    if r.crossings:
        assert has_unit_coefficient(r.polynomial)
