"""PSL(2, Z) as the free product Z/2 * Z/3.

A ``ModularWord`` is a normal form in the order-2 generator ``A`` and the
order-3 generator ``B``: an alternating tuple of syllables, where syllable
``0`` is ``A``, ``1`` is ``B`` and ``2`` is ``B^2``.  Realized as matrices

    A = [[0, -1], [1, 0]],  B = [[0, -1], [1, 1]]

so that ``AB = -S`` and ``BA = -T`` (the integral Burau images of sigma_1,
sigma_2, up to sign).

Everything here runs on syllable sequences, never on matrices, so the
conjugacy test is linear in the input length.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import MalformedSyllables
from .laurent import INT_IDENTITY, Mat2, projective_canonical
from .words import BraidWord, as_braid

A_SYL, B_SYL, B2_SYL = 0, 1, 2

A_MATRIX = Mat2(0, -1, 1, 0)
B_MATRIX = Mat2(0, -1, 1, 1)
_SYLLABLE_MATRICES = {0: A_MATRIX, 1: B_MATRIX, 2: B_MATRIX * B_MATRIX}

# sigma_1 -> AB, sigma_1^-1 -> B^2 A, sigma_2 -> BA, sigma_2^-1 -> A B^2
BRAID_TO_SYLLABLES = {1: (0, 1), -1: (2, 0), 2: (1, 0), -2: (0, 2)}
# A = STS lifts to sigma1 sigma2 sigma1; B = STS^2 lifts to sigma1 sigma2 sigma1^2;
# B^2 = B^-1 lifts to the inverse of that.
SYLLABLE_LIFTS = {0: (1, 2, 1), 1: (1, 2, 1, 1), 2: (-1, -1, -2, -1)}


def _reduce_into(stack: list, syllables) -> list:
    """Push syllables onto a normal-form stack, merging as we go."""
    push = stack.append
    pop = stack.pop
    for s in syllables:
        if stack:
            top = stack[-1]
            if s == 0:
                if top == 0:
                    pop()
                    continue
            elif top:
                m = (top + s) % 3
                if m:
                    stack[-1] = m
                else:
                    pop()
                continue
        push(s)
    return stack


class ModularWord:
    """Element of PSL(2, Z) in free-product normal form (immutable)."""

    __slots__ = ("syllables",)

    def __init__(self, syllables: Sequence[int] = ()):
        for s in syllables:
            if s not in (0, 1, 2):
                raise ValueError(f"bad syllable {s!r}")
        object.__setattr__(self, "syllables", tuple(_reduce_into([], syllables)))

    @classmethod
    def _trusted(cls, syllables: tuple) -> "ModularWord":
        m = object.__new__(cls)
        object.__setattr__(m, "syllables", syllables)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("ModularWord is immutable")

    @classmethod
    def parse(cls, text: str) -> "ModularWord":
        """Parse strings like ``"A B^2 A"``, ``"AB2A"`` or ``"AB²A"``."""
        text = text.replace("²", "2").replace("^", "").replace(" ", "").replace("·", "")
        syl = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch == "A":
                syl.append(0)
            elif ch == "B":
                if i + 1 < len(text) and text[i + 1] == "2":
                    syl.append(2)
                    i += 1
                else:
                    syl.append(1)
            elif ch == "1" and len(text) == 1:
                pass
            else:
                raise ValueError(f"bad modular word {text!r}")
            i += 1
        return cls(syl)

    def __len__(self) -> int:
        return len(self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __mul__(self, other: "ModularWord") -> "ModularWord":
        # both sides are reduced, so merging stops at the seam
        return ModularWord._trusted(tuple(_reduce_into(list(self.syllables), other.syllables)))

    def inverse(self) -> "ModularWord":
        inv = {0: 0, 1: 2, 2: 1}
        return ModularWord._trusted(tuple(inv[s] for s in reversed(self.syllables)))

    def __eq__(self, other) -> bool:
        return isinstance(other, ModularWord) and self.syllables == other.syllables

    def __hash__(self) -> int:
        return hash(("ModularWord", self.syllables))

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return "".join(("A", "B", "B^2")[s] for s in self.syllables)

    def __repr__(self) -> str:
        return f"ModularWord.parse({str(self)!r})"


IDENTITY = ModularWord._trusted(())


def braid_to_modular(w) -> ModularWord:
    """Image in PSL(2, Z), by one stack pass over the letters.

    Each letter contributes an ``A`` and a ``B``-power (``sigma_1 = AB``,
    ``sigma_2^-1 = AB^2``, ``sigma_2 = BA``, ``sigma_1^-1 = B^2 A``); both
    are merged into the normal form in the same step.  Gives the same result
    as reducing the syllable substitution with ``ModularWord``.
    """
    st = [-1]  # sentinel below the normal form
    push = st.append
    pop = st.pop
    for c in as_braid(w).codes:
        top = st[-1]
        if c == 1 or c == -2:
            # A, then B^k
            k = 1 if c == 1 else 2
            if top == 0:
                pop()
                top = st[-1]
                if top > 0:
                    m = (top + k) % 3
                    if m:
                        st[-1] = m
                    else:
                        pop()
                else:
                    push(k)
            else:
                push(0)
                push(k)
        else:
            # B^k, then A
            k = 1 if c == 2 else 2
            if top > 0:
                m = (top + k) % 3
                if m:
                    st[-1] = m
                    push(0)
                else:
                    pop()
                    if st[-1] == 0:
                        pop()
                    else:
                        push(0)
            else:
                push(k)
                push(0)
    del st[0]
    return ModularWord._trusted(tuple(st))


def braid_to_modular_by_substitution(w) -> ModularWord:
    """Reference version: substitute syllables, then reduce."""
    syl: list[int] = []
    for c in as_braid(w).codes:
        syl.extend(BRAID_TO_SYLLABLES[c])
    return ModularWord(syl)


def modular_to_matrix(m: ModularWord) -> Mat2:
    """Matrix of ``m``, canonicalized up to sign."""
    out = INT_IDENTITY
    for s in m.syllables:
        out = out * _SYLLABLE_MATRICES[s]
    return projective_canonical(out)


def modular_to_braid_lift(m: ModularWord) -> BraidWord:
    codes: list[int] = []
    for s in m.syllables:
        codes.extend(SYLLABLE_LIFTS[s])
    return BraidWord._trusted(tuple(codes))


def cyclic_reduce(m: ModularWord) -> tuple[ModularWord, ModularWord]:
    """Split ``m = prefix * core * prefix^-1`` with ``core`` cyclically reduced."""
    s = m.syllables
    i, j = 0, len(s) - 1
    while j - i >= 1:
        a, b = s[i], s[j]
        if (a == 0) != (b == 0):
            break
        if a == 0 or (a + b) % 3 == 0:
            i += 1
            j -= 1
            continue
        # B^a x B^b  =  B^a (x B^(a+b)) B^-a
        core = s[i + 1 : j] + ((a + b) % 3,)
        return ModularWord._trusted(core), ModularWord._trusted(s[: i + 1])
    return ModularWord._trusted(s[i : j + 1]), ModularWord._trusted(s[:i])


def kmp_find(text: Sequence[int], pattern: Sequence[int]) -> int:
    """Index of the first occurrence of ``pattern`` in ``text``, or -1."""
    n = len(pattern)
    if n == 0:
        return 0
    fail = [0] * n
    k = 0
    for q in range(1, n):
        while k and pattern[q] != pattern[k]:
            k = fail[k - 1]
        if pattern[q] == pattern[k]:
            k += 1
        fail[q] = k
    k = 0
    for i, ch in enumerate(text):
        while k and ch != pattern[k]:
            k = fail[k - 1]
        if ch == pattern[k]:
            k += 1
            if k == n:
                return i - n + 1
    return -1


def find_rotation(u: Sequence[int], v: Sequence[int]) -> int | None:
    """Smallest ``r`` with ``v == u[r:] + u[:r]``, or None.

    Searches ``v`` in ``u + u[:-1]`` with ``bytes.find`` (CPython's two-way
    search, linear in the worst case); ``kmp_find`` is the pure-Python
    reference for the same search.
    """
    if len(u) != len(v):
        return None
    if not u:
        return 0
    text = bytes(u)
    r = (text + text[:-1]).find(bytes(v))
    return None if r < 0 else r


@dataclass(frozen=True)
class Psl2Conjugacy:
    """Outcome of a PSL(2, Z) conjugacy test.

    When ``conjugate`` is true, ``conjugator`` is a ``g`` with ``u = g v g^-1``
    and ``rotation`` is the syllable rotation taking u's core to v's core.
    """

    conjugate: bool
    conjugator: ModularWord | None = None
    rotation: int | None = None

    def __bool__(self) -> bool:
        return self.conjugate


def psl2_conjugate(u: ModularWord, v: ModularWord) -> Psl2Conjugacy:
    cu, p = cyclic_reduce(u)
    cv, q = cyclic_reduce(v)
    if len(cu) <= 1 or len(cv) <= 1:
        # torsion (or trivial) cores live in one abelian factor
        if cu != cv:
            return Psl2Conjugacy(False)
        return Psl2Conjugacy(True, p * q.inverse(), 0)
    r = find_rotation(cu.syllables, cv.syllables)
    if r is None:
        return Psl2Conjugacy(False)
    # cu = x y and cv = y x, so cu = x cv x^-1 = y^-1 cv y; take the shorter
    if 2 * r <= len(cu):
        x = ModularWord._trusted(cu.syllables[:r])
    else:
        x = ModularWord._trusted(cu.syllables[r:]).inverse()
    return Psl2Conjugacy(True, p * x * q.inverse(), r)


# -- the continued-fraction invariant ---------------------------------------

class _Infinity:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()
ExtendedRational = Fraction | _Infinity


def ext_reciprocal(x: ExtendedRational) -> ExtendedRational:
    if x is INFINITY:
        return Fraction(0)
    if x == 0:
        return INFINITY
    return 1 / Fraction(x)


def ext_add(x: ExtendedRational, n: int | Fraction) -> ExtendedRational:
    return INFINITY if x is INFINITY else Fraction(x) + n


def continued_fraction(terms: Sequence[int]) -> ExtendedRational:
    """``[c0, c1, ..., cn] = c0 + 1/(c1 + 1/(... + 1/cn))`` over Q u {inf}."""
    if not terms:
        raise ValueError("empty continued fraction")
    value: ExtendedRational = Fraction(terms[-1])
    for c in reversed(terms[:-1]):
        value = ext_add(ext_reciprocal(value), c)
    return value


def syllable_exponents(w) -> list[int]:
    """Exponents ``[a1, b1, a2, b2, ..., an]`` of ``s1^a1 s2^b1 ... s1^an``.

    A word starting with sigma_2 gets ``a1 = 0``; one ending with sigma_2
    gets a trailing ``an = 0``.
    """
    codes = as_braid(w).codes
    exps: list[int] = []
    expect = 1
    i = 0
    while i < len(codes):
        gen = abs(codes[i])
        sign = codes[i]
        j = i
        while j < len(codes) and abs(codes[j]) == gen:
            if codes[j] != sign:
                raise MalformedSyllables(
                    f"syllable at letter {i} mixes sigma_{gen} and its inverse"
                )
            j += 1
        if gen != expect:
            exps.append(0)
            expect = 3 - expect
        exps.append((j - i) * (1 if sign > 0 else -1))
        expect = 3 - expect
        i = j
    if expect == 1:
        exps.append(0)
    return exps


def pi_invariant(w) -> ExtendedRational:
    """The continued fraction ``[a1, -b1, a2, ..., -b_{n-1}, an]``."""
    exps = syllable_exponents(w)
    terms = [e if k % 2 == 0 else -e for k, e in enumerate(exps)]
    return continued_fraction(terms)


def mobius(m: Mat2, z: ExtendedRational) -> ExtendedRational:
    """Action of an integer matrix on Q u {inf} by z -> (az + b)/(cz + d)."""
    if z is INFINITY:
        num, den = m.a, m.c
    else:
        z = Fraction(z)
        num, den = m.a * z + m.b, m.c * z + m.d
    if den == 0:
        return INFINITY
    return Fraction(num) / Fraction(den)
