"""Moody polynomial and crossing-puncture sequence of a pure 3-braid.

The arc ``beta = phi(beta_0)`` is read off the Artin image of ``x3``: for a
pure braid it is ``w x3 w^-1`` and the loop ``w`` records how beta winds
before it reaches p3.  Rewriting ``w`` in the free basis

    a = x1,  b = x1 x2,  c = x3      (so x2 = a^-1 b)

makes ``a`` the only basis loop that meets the arc alpha from p1 to p2, and it
meets it exactly once.  In the reduced word, each ``a``-letter is one
crossing of beta with alpha.  The crossing's lift level is the epsilon
weight of the prefix before it (``eps(a) = 1, eps(b) = 2, eps(c) = 1``),
lowered by one on an ``a^-1`` letter, and its sign is the letter's sign.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import ConsistencyError, NotPureBraid, StructureViolation
from .laurent import LaurentPoly, laurent_mod_p
from .words import BraidWord, FreeAutomorphism, artin_image, as_braid, free_reduce, permutation

# x1 -> a, x2 -> a^-1 b, x3 -> c   (codes: 1 = a, 2 = b, 3 = c)
_TO_ARC = {1: (1,), -1: (-1,), 2: (-1, 2), -2: (-2, 1), 3: (3,), -3: (-3,)}
_ARC_EPS = {1: 1, 2: 2, 3: 1}
ARC_NAMES = {1: "a", 2: "b", 3: "c"}


def format_arc_word(word: Sequence[int]) -> str:
    if not word:
        return "1"
    return " ".join(ARC_NAMES[abs(c)] + ("" if c > 0 else "^-1") for c in word)


def conjugator_of_x3(u: tuple) -> tuple:
    """The reduced ``w`` with ``u = w x3 w^-1``."""
    k, r = divmod(len(u), 2)
    if r != 1 or u[k] != 3 or u[:k] != tuple(-c for c in reversed(u[k + 1 :])):
        raise ConsistencyError(f"image of x3 is not a conjugate of x3: {u}")
    return u[:k]


def to_arc_basis(word: Sequence[int]) -> tuple:
    out: list[int] = []
    for c in word:
        out.extend(_TO_ARC[c])
    return free_reduce(out)


def arc_word_from_images(images: FreeAutomorphism) -> tuple:
    return to_arc_basis(conjugator_of_x3(images.x3))


def arc_word(phi) -> tuple:
    phi = as_braid(phi)
    if permutation(phi) != (1, 2, 3):
        raise NotPureBraid(f"{phi} does not fix the punctures")
    return arc_word_from_images(artin_image(phi))


def raw_crossings(arc: Sequence[int]) -> list[tuple[int, int]]:
    """``(level, sign)`` of each crossing with alpha, before normalization."""
    out = []
    level = 0
    for c in arc:
        g = abs(c)
        if c > 0:
            if g == 1:
                out.append((level, 1))
            level += _ARC_EPS[g]
        else:
            level -= _ARC_EPS[g]
            if g == 1:
                out.append((level, -1))
    return out


@dataclass(frozen=True)
class MoodyResult:
    crossings: int
    exponents: tuple[int, ...]
    signs: tuple[int, ...]
    cp_sequence: tuple[int, ...]
    polynomial: LaurentPoly = field(compare=True)

    @property
    def disjoint(self) -> bool:
        return self.crossings == 0

    def to_json(self) -> dict:
        return {
            "m": self.crossings,
            "exponents": list(self.exponents),
            "signs": list(self.signs),
            "cp_sequence": list(self.cp_sequence),
            "polynomial": self.polynomial.to_json(),
        }


def moody_from_arc_word(arc: Sequence[int], check: bool = True) -> MoodyResult:
    raw = raw_crossings(arc)
    if not raw:
        return MoodyResult(0, (), (), (), LaurentPoly())
    base, first_sign = raw[0]
    exponents = tuple(level - base for level, _ in raw)
    signs = tuple(s * first_sign for _, s in raw)
    cp = tuple(exponents[i + 1] - exponents[i] for i in range(len(exponents) - 1))
    if check:
        for i, ci in enumerate(cp):
            if ci == 0 or abs(ci) > 3:
                raise StructureViolation(
                    f"crossing-puncture number C_{i + 1} = {ci} in arc word "
                    f"{format_arc_word(arc)}"
                )
    poly = LaurentPoly((k, s) for k, s in zip(exponents, signs))
    return MoodyResult(len(raw), exponents, signs, cp, poly)


def moody(phi) -> MoodyResult:
    return moody_from_arc_word(arc_word(phi))


def moody_mod_p(phi, modulus: int) -> LaurentPoly:
    return laurent_mod_p(moody(phi).polynomial, modulus)


def has_unit_coefficient(p: LaurentPoly) -> bool:
    return any(abs(c) == 1 for _, c in p.items())


@dataclass(frozen=True)
class TurningPointReport:
    valid: bool
    violations: tuple[tuple[int, str], ...]


_ALLOWED_RUNS = {(3, -2, 1), (-3, 2, -1), (1, -2, 3), (-1, 2, -3)}


def validate_turning_points(cp: Sequence[int]) -> TurningPointReport:
    """Check a crossing-puncture sequence against the turning-point constraints.

    Indices in the report are 0-based positions in ``cp``; a turning point at
    ``k`` means ``cp[k]`` and ``cp[k + 1]`` have opposite signs.
    """
    cp = list(cp)
    violations: list[tuple[int, str]] = []
    turns = [k for k in range(len(cp) - 1) if cp[k] * cp[k + 1] < 0]
    turn_set = set(turns)
    for k in turns:
        if k - 1 not in turn_set and k + 1 not in turn_set:
            violations.append((k, "isolated turning point"))
        pair = {abs(cp[k]), abs(cp[k + 1])}
        if len(pair) == 1:
            violations.append((k, "equal magnitudes at a turning point"))
        elif pair == {1, 3}:
            violations.append((k, "turning point with magnitudes {1, 3}"))
    # maximal alternating runs
    k = 0
    while k < len(turns):
        start = turns[k]
        end = start
        while k + 1 < len(turns) and turns[k + 1] == end + 1:
            k += 1
            end = turns[k]
        run = tuple(cp[start : end + 2])
        if run not in _ALLOWED_RUNS:
            violations.append((start, f"alternating run {run} is not ±(3,-2,1) or ±(1,-2,3)"))
        k += 1
    return TurningPointReport(not violations, tuple(violations))
