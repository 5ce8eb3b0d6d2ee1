from __future__ import annotations

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from braid3.errors import BadModulus
from braid3.laurent import (
    INT_IDENTITY,
    LAURENT_IDENTITY,
    ONE,
    T,
    LaurentPoly,
    Mat2,
    laurent_eq_up_to_unit,
    laurent_mod_p,
    laurent_mul,
    mat2_det,
    mat2_mul,
    projective_canonical,
)

polys = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=6).map(LaurentPoly)

_t = sympy.Symbol("t")


def _to_sympy(p: LaurentPoly):
    return sum((c * _t**e for e, c in p.items()), sympy.Integer(0))


def _from_sympy(expr) -> LaurentPoly:
    expr = sympy.expand(expr)
    terms = {}
    for term in sympy.Add.make_args(expr):
        if term == 0:
            continue
        coef, rest = term.as_coeff_Mul()
        exp = 0 if rest == 1 else sympy.degree(rest, _t) if rest.is_polynomial(_t) else -sympy.degree(1 / rest, _t)
        terms[int(exp)] = terms.get(int(exp), 0) + int(coef)
    return LaurentPoly(terms)


def test_mul_examples():
    assert laurent_mul(ONE + T, ONE - T) == ONE - T * T
    assert laurent_mul(LaurentPoly({-1: 1}), T) == ONE
    assert (-T) * (-T) * (-T) == LaurentPoly({3: -1})


def test_zero_is_empty():
    p = LaurentPoly({0: 1, 2: 0}) - ONE
    assert p.is_zero() and p.terms == {}
    assert 0 not in LaurentPoly({1: 3, 2: -3, 0: 0}).terms


@given(polys, polys)
def test_mul_matches_sympy(p, q):
    assert laurent_mul(p, q) == _from_sympy(_to_sympy(p) * _to_sympy(q))


@given(polys, polys)
def test_add_matches_sympy(p, q):
    assert p + q == _from_sympy(_to_sympy(p) + _to_sympy(q))


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


def test_eq_up_to_unit():
    assert laurent_eq_up_to_unit(ONE + T**2, T**3 + T**5)
    assert laurent_eq_up_to_unit(ONE + T, LaurentPoly({-2: -1, -1: -1}))
    assert not laurent_eq_up_to_unit(ONE + T, ONE + T**2)


def test_mod_p():
    assert laurent_mod_p(LaurentPoly({0: 2, 1: 3}), 2) == T
    assert laurent_mod_p(LaurentPoly({-1: 4}), 2).is_zero()
    assert laurent_mod_p(LaurentPoly({0: 1, 2: 6}), 6) == ONE
    assert laurent_mod_p(LaurentPoly({0: -1}), 3) == LaurentPoly({0: 2})


@pytest.mark.parametrize("bad", [0, 1, -3, 2.5, "7"])
def test_bad_modulus(bad):
    with pytest.raises(BadModulus):
        laurent_mod_p(ONE, bad)


def test_matrix_basics():
    m = Mat2.laurent([[-T, 1], [0, 1]])
    assert mat2_mul(LAURENT_IDENTITY, m) == m
    assert mat2_det(LAURENT_IDENTITY) == ONE
    assert mat2_det(m) == -T
    assert m * m.inverse() == LAURENT_IDENTITY
    assert INT_IDENTITY.is_identity()


def test_projective_canonical():
    m = Mat2(0, -1, 1, 0)
    assert projective_canonical(m) == projective_canonical(-m)


def test_json_roundtrip():
    p = LaurentPoly({-2: 1, 0: -3})
    assert p.to_json() == [{"exp": -2, "coef": 1}, {"exp": 0, "coef": -3}]
    assert LaurentPoly.from_json(p.to_json()) == p
    assert Mat2.laurent([[T, 0], [0, 1]]).to_json() == [[[{"exp": 1, "coef": 1}], []], [[], [{"exp": 0, "coef": 1}]]]
