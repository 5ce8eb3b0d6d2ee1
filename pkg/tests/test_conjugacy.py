from __future__ import annotations

from hypothesis import given

from braid3.burau import burau
from braid3.conjugacy import (
    Branch2,
    Decision,
    SeparatingInvariant,
    are_conjugate,
    branch2_target,
    burau_dichotomy,
    element_key,
    word_problem_equal,
)
from braid3.words import BraidWord, delta, invert, is_identity, parse_braid

from conftest import braid_words


def _verifies(chi, psi, phi) -> bool:
    return is_identity(chi * psi * invert(chi) * invert(phi))


def test_word_problem_examples():
    assert word_problem_equal("aba", "bab")
    assert not word_problem_equal("a", "b")
    assert not word_problem_equal("", "abaaba")


@given(braid_words(), braid_words())
def test_word_problem_matches_artin_action(u, v):
    assert word_problem_equal(u, v) == is_identity(u * invert(v))


@given(braid_words())
def test_full_twist_central(w):
    d2 = delta(2)
    assert word_problem_equal(d2 * w, w * d2)


def test_conjugate_examples():
    v = are_conjugate("a", "b")
    assert v.decision is Decision.CONJUGATE
    assert str(v.witness) == "aba"
    assert _verifies(v.witness, parse_braid("b"), parse_braid("a"))

    v = are_conjugate("a", "A")
    assert v.decision is Decision.NOT_CONJUGATE
    assert v.separating_invariant is SeparatingInvariant.EXPONENT_SUM

    v = are_conjugate("ab", "aB")
    assert v.decision is Decision.NOT_CONJUGATE


def test_unknot_classes_distinct():
    reps = ["ab", "AB", "aB"]
    for x in reps:
        for y in reps:
            assert are_conjugate(x, y).conjugate == (x == y)


def test_same_exponent_separated_by_psl2():
    for k in range(2, 7):
        v = are_conjugate("a" * k + "b", "a" * k + "B")
        assert not v.conjugate
    # equal exponent sums, different classes
    v = are_conjugate("aaB", "aaaBB")
    assert not v.conjugate and v.separating_invariant is SeparatingInvariant.PSL2_CLASS


@given(braid_words(24), braid_words(10))
def test_conjugates_detected_with_valid_witness(w, g):
    phi = g * w * invert(g)
    v = are_conjugate(phi, w)
    assert v.conjugate
    assert _verifies(v.witness, w, phi)


@given(braid_words(12), braid_words(12))
def test_verdict_is_symmetric(u, v):
    assert are_conjugate(u, v).conjugate == are_conjugate(v, u).conjugate


def test_element_key():
    assert element_key("aba") == element_key("bab")
    assert element_key("") != element_key("abaaba")


def test_dichotomy_examples():
    r = burau_dichotomy("aba", "aba")
    assert r.branch1 and r.branch2 is Branch2.HOLDS and not r.gl_conjugacy_refuted
    r = burau_dichotomy("a", "b")
    assert r.branch1 and r.branch2 is Branch2.INAPPLICABLE
    assert branch2_target("a") is None
    assert word_problem_equal(branch2_target("aba"), "aba")


def test_dichotomy_regression_pair():
    # first psi (shortlex over reduced words, length <= 8, 3 | e) whose branch-2 target
    # is not conjugate to it
    psi = parse_braid("aaa")
    phi = branch2_target(psi)
    assert str(phi) == "abaabaAAA"
    r = burau_dichotomy(phi, psi)
    assert not r.branch1 and r.branch2 is Branch2.HOLDS and not r.gl_conjugacy_refuted
    # branch 2 is only a necessary condition; the determinants must still agree
    assert burau(phi).det() == burau(psi).det()


def test_refuted_exactly_when_both_branches_fail():
    r = burau_dichotomy("ab", "aB")
    assert not r.branch1 and r.branch2 is Branch2.FAILS and r.gl_conjugacy_refuted
    r = burau_dichotomy("ab", "aaB")
    assert not r.branch1 and r.branch2 is Branch2.INAPPLICABLE and r.gl_conjugacy_refuted
    r = burau_dichotomy("aaaaab", "abbbbb")  # e = 6
    assert r.gl_conjugacy_refuted == (not r.branch1 and r.branch2 is not Branch2.HOLDS)


def test_verdict_json():
    assert are_conjugate("a", "A").to_json() == {
        "decision": "NotConjugate",
        "witness": None,
        "separating_invariant": "ExponentSum",
    }
    assert are_conjugate(BraidWord(), BraidWord()).to_json()["witness"] == ""
