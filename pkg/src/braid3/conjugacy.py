"""Word and conjugacy problems in B_3 through PSL(2, Z).

B_3 maps onto PSL(2, Z) with kernel the center <Delta^2>, and Delta^2 has
exponent sum 6.  So a braid is pinned down by its PSL(2, Z) normal form
together with its exponent sum, and two braids are conjugate exactly when
their exponent sums agree (equivalently, their Burau determinants
``(-t)^e`` agree) and their images are conjugate in PSL(2, Z).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import WitnessVerificationFailed
from .modular import braid_to_modular, modular_to_braid_lift, psl2_conjugate
from .words import BraidWord, as_braid, delta, exponent_sum, invert, reverse_bar


class Decision(enum.Enum):
    CONJUGATE = "Conjugate"
    NOT_CONJUGATE = "NotConjugate"


class SeparatingInvariant(enum.Enum):
    EXPONENT_SUM = "ExponentSum"
    PSL2_CLASS = "Psl2Class"


class Branch2(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class ConjugacyVerdict:
    decision: Decision
    witness: BraidWord | None = None
    separating_invariant: SeparatingInvariant | None = None

    @property
    def conjugate(self) -> bool:
        return self.decision is Decision.CONJUGATE

    def to_json(self) -> dict:
        return {
            "decision": self.decision.value,
            "witness": None if self.witness is None else str(self.witness),
            "separating_invariant": (
                None if self.separating_invariant is None else self.separating_invariant.value
            ),
        }


@dataclass(frozen=True)
class DichotomyReport:
    branch1: bool
    branch2: Branch2
    gl_conjugacy_refuted: bool

    def to_json(self) -> dict:
        return {
            "branch1": self.branch1,
            "branch2": self.branch2.value,
            "gl_conjugacy_refuted": self.gl_conjugacy_refuted,
        }


def element_key(w) -> tuple[tuple[int, ...], int]:
    """Complete invariant of the braid element: (PSL(2,Z) normal form, exponent sum)."""
    w = as_braid(w)
    return braid_to_modular(w).syllables, exponent_sum(w)


def word_problem_equal(u, v) -> bool:
    """Equality in B_3, in time linear in ``len(u) + len(v)``."""
    u, v = as_braid(u), as_braid(v)
    return exponent_sum(u) == exponent_sum(v) and braid_to_modular(u) == braid_to_modular(v)


def are_conjugate(phi, psi) -> ConjugacyVerdict:
    """Decide whether ``phi`` and ``psi`` are conjugate in B_3.

    On a positive answer the returned witness ``chi`` satisfies
    ``chi * psi * chi^-1 == phi`` and has been checked through the word
    problem before returning.
    """
    phi, psi = as_braid(phi), as_braid(psi)
    if exponent_sum(phi) != exponent_sum(psi):
        return ConjugacyVerdict(Decision.NOT_CONJUGATE, None, SeparatingInvariant.EXPONENT_SUM)
    u = braid_to_modular(phi)
    v = braid_to_modular(psi)
    result = psl2_conjugate(u, v)
    if not result.conjugate:
        return ConjugacyVerdict(Decision.NOT_CONJUGATE, None, SeparatingInvariant.PSL2_CLASS)
    # The lift is right up to a central Delta^(2j); conjugating by a central
    # element changes nothing, so it is used as is.
    chi = modular_to_braid_lift(result.conjugator)
    # word_problem_equal(chi psi chi^-1, phi), reusing phi's invariants
    check = chi * psi * invert(chi)
    if exponent_sum(check) != exponent_sum(phi) or braid_to_modular(check) != u:
        raise WitnessVerificationFailed(
            f"lifted conjugator fails to conjugate {psi} to {phi}"
        )
    return ConjugacyVerdict(Decision.CONJUGATE, chi)


def branch2_target(psi) -> BraidWord | None:
    """``Delta^(2k) * reverse_bar(psi)^-1`` where ``e(psi) = 3k``; None if 3 does not divide e."""
    psi = as_braid(psi)
    e = exponent_sum(psi)
    if e % 3:
        return None
    return delta(2 * (e // 3)) * invert(reverse_bar(psi))


def burau_dichotomy(phi, psi) -> DichotomyReport:
    """Report both alternatives of the GL(2, Z[t, t^-1]) conjugacy dichotomy.

    If neither holds, the Burau images of ``phi`` and ``psi`` cannot be
    conjugate in GL(2, Z[t, t^-1]).
    """
    phi, psi = as_braid(phi), as_braid(psi)
    branch1 = are_conjugate(phi, psi).conjugate
    target = branch2_target(psi)
    if target is None:
        branch2 = Branch2.INAPPLICABLE
    else:
        branch2 = Branch2.HOLDS if are_conjugate(phi, target).conjugate else Branch2.FAILS
    refuted = not branch1 and branch2 is not Branch2.HOLDS
    return DichotomyReport(branch1, branch2, refuted)
