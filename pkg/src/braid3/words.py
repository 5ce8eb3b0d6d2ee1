"""Braid words in B_3 and the Artin action on the free group F(x1, x2, x3).

A braid word is stored as a tuple of signed generator codes: ``1`` is sigma_1,
``-1`` its inverse, ``2`` and ``-2`` likewise for sigma_2.  Free words use the
same trick with codes in ``{±1, ±2, ±3}`` standing for ``x_k^{±1}``.

Conventions (fixed once, everything else is checked against them):

* A word acts left to right.  ``artin_image(u * v)`` applies u's automorphism
  first, then v's; concretely the image of ``x_i`` under ``uv`` is the image
  under ``u`` with every letter ``x_k`` replaced by its image under ``v``.
* ``sigma_i``: ``x_i -> x_i x_{i+1} x_i^-1``, ``x_{i+1} -> x_i``, other
  generators fixed.  With these choices ``x1 x2 x3`` is fixed by every braid.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple, Sequence

from .errors import MalformedWord

FreeWord = tuple  # tuple[int, ...], always freely reduced

_LETTER_CODES = {"a": 1, "A": -1, "b": 2, "B": -2}
_CODE_LETTERS = {v: k for k, v in _LETTER_CODES.items()}
_NUMERIC_CODES = {"1": 1, "+1": 1, "-1": -1, "2": 2, "+2": 2, "-2": -2}


class BraidWord:
    """An (unreduced) word in sigma_1, sigma_2 and their inverses.

    Equality is literal spelling equality; use
    :func:`braid3.conjugacy.word_problem_equal` for equality in B_3.
    """

    __slots__ = ("codes",)

    def __init__(self, codes: Iterable[int] = ()):
        codes = tuple(codes)
        for c in codes:
            if c not in _CODE_LETTERS:
                raise ValueError(f"bad generator code {c!r}")
        object.__setattr__(self, "codes", codes)

    @classmethod
    def _trusted(cls, codes: tuple) -> "BraidWord":
        w = object.__new__(cls)
        object.__setattr__(w, "codes", codes)
        return w

    def __setattr__(self, name, value):
        raise AttributeError("BraidWord is immutable")

    @property
    def letters(self) -> tuple[tuple[int, int], ...]:
        """The word as ``(generator index, sign)`` pairs."""
        return tuple((abs(c), 1 if c > 0 else -1) for c in self.codes)

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self):
        return iter(self.codes)

    def __bool__(self) -> bool:
        return bool(self.codes)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        return BraidWord._trusted(self.codes + other.codes)

    def __pow__(self, n: int) -> "BraidWord":
        if n < 0:
            return invert(self) ** (-n)
        return BraidWord._trusted(self.codes * n)

    def __eq__(self, other) -> bool:
        return isinstance(other, BraidWord) and self.codes == other.codes

    def __hash__(self) -> int:
        return hash(("BraidWord", self.codes))

    def __str__(self) -> str:
        return format_braid(self)

    def __repr__(self) -> str:
        return f"BraidWord({format_braid(self)!r})"


def as_braid(w) -> BraidWord:
    """Coerce a string or code sequence to a BraidWord."""
    if isinstance(w, BraidWord):
        return w
    if isinstance(w, str):
        return parse_braid(w)
    return BraidWord(w)


def parse_braid(text: str) -> BraidWord:
    """Parse the letter form (``aAbB``) or the numeric form (``1,-2 2``).

    Whitespace is ignored.  The numeric form is chosen as soon as the text
    contains a digit.
    """
    if any(ch.isdigit() for ch in text):
        return _parse_numeric(text)
    codes = []
    for offset, ch in enumerate(text):
        if ch.isspace():
            continue
        code = _LETTER_CODES.get(ch)
        if code is None:
            raise MalformedWord(text, len(text[:offset].encode()))
        codes.append(code)
    return BraidWord._trusted(tuple(codes))


def _parse_numeric(text: str) -> BraidWord:
    codes = []
    expect_token = True
    for m in re.finditer(r"[^\s,]+|,", text):
        tok = m.group()
        offset = len(text[: m.start()].encode())
        if tok == ",":
            if expect_token:
                raise MalformedWord(text, offset, "empty numeric token")
            expect_token = True
            continue
        code = _NUMERIC_CODES.get(tok.replace("−", "-"))
        if code is None:
            raise MalformedWord(text, offset)
        codes.append(code)
        expect_token = False
    if codes and expect_token:
        raise MalformedWord(text, len(text.encode()), "trailing comma")
    return BraidWord._trusted(tuple(codes))


def format_braid(w: BraidWord) -> str:
    return "".join(_CODE_LETTERS[c] for c in as_braid(w).codes)


def invert(w: BraidWord) -> BraidWord:
    return BraidWord._trusted(tuple(-c for c in reversed(as_braid(w).codes)))


def reverse_bar(w: BraidWord) -> BraidWord:
    """The word read backwards, signs kept (the braid psi-bar)."""
    return BraidWord._trusted(as_braid(w).codes[::-1])


def exponent_sum(w: BraidWord) -> int:
    codes = as_braid(w).codes
    return len(codes) - 2 * (codes.count(-1) + codes.count(-2))


def free_reduce_braid(w: BraidWord) -> BraidWord:
    """Cancel adjacent ``g g^-1`` pairs in a braid word."""
    return BraidWord._trusted(free_reduce(as_braid(w).codes))


def delta(power: int = 1) -> BraidWord:
    """``Delta^power`` with Delta = sigma1 sigma2 sigma1."""
    return BraidWord._trusted((1, 2, 1)) ** power


def permutation(w: BraidWord) -> tuple[int, int, int]:
    """Strand permutation, as the tuple ``(pi(1), pi(2), pi(3))``.

    Letters are read left to right; strand ``s`` ends in position ``pi(s)``.
    """
    arr = [1, 2, 3]  # arr[p] = strand currently in position p + 1
    for c in as_braid(w).codes:
        i = abs(c) - 1
        arr[i], arr[i + 1] = arr[i + 1], arr[i]
    pi = [0, 0, 0]
    for pos, strand in enumerate(arr, start=1):
        pi[strand - 1] = pos
    return tuple(pi)


def is_pure(w: BraidWord) -> bool:
    return permutation(w) == (1, 2, 3)


# -- free group ------------------------------------------------------------

def free_reduce(word: Sequence[int]) -> tuple:
    out: list[int] = []
    for c in word:
        if out and out[-1] == -c:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


def free_inverse(word: tuple) -> tuple:
    return tuple(-c for c in reversed(word))


def free_join(u: tuple, v: tuple) -> tuple:
    """Product of two reduced words; cancellation only happens at the seam."""
    n = min(len(u), len(v))
    i = 0
    while i < n and u[-1 - i] == -v[i]:
        i += 1
    if i == 0:
        return u + v
    return u[: len(u) - i] + v[i:]


def epsilon(word: Iterable[int]) -> int:
    """Exponent sum of a free word."""
    return sum(1 if c > 0 else -1 for c in word)


def format_free(word: Sequence[int], names: str = "x") -> str:
    if not word:
        return "1"
    parts = []
    for c in word:
        parts.append(f"{names}{abs(c)}" + ("" if c > 0 else "^-1"))
    return " ".join(parts)


class FreeAutomorphism(NamedTuple):
    """Images of x1, x2, x3, each a freely reduced tuple of codes."""

    x1: tuple
    x2: tuple
    x3: tuple

    def image(self, k: int) -> tuple:
        return self[k - 1]

    def apply(self, word: Sequence[int]) -> tuple:
        """Substitute this automorphism into a free word."""
        out: tuple = ()
        for c in word:
            img = self[abs(c) - 1]
            out = free_join(out, img if c > 0 else free_inverse(img))
        return out

    def then(self, other: "FreeAutomorphism") -> "FreeAutomorphism":
        """Apply ``self`` first, then ``other``: the image of ``uv``."""
        return FreeAutomorphism(*(other.apply(img) for img in self))

    def is_identity(self) -> bool:
        return self == IDENTITY_AUTOMORPHISM


IDENTITY_AUTOMORPHISM = FreeAutomorphism((1,), (2,), (3,))


def prepend_generator(code: int, images: FreeAutomorphism) -> FreeAutomorphism:
    """Image of ``g w`` from the image of ``w``, for a single letter ``g``.

    Only seam cancellations happen, so the cost is linear in the output.
    """
    y1, y2, y3 = images
    if code == 1:
        return FreeAutomorphism(free_join(free_join(y1, y2), free_inverse(y1)), y1, y3)
    if code == -1:
        return FreeAutomorphism(y2, free_join(free_join(free_inverse(y2), y1), y2), y3)
    if code == 2:
        return FreeAutomorphism(y1, free_join(free_join(y2, y3), free_inverse(y2)), y2)
    if code == -2:
        return FreeAutomorphism(y1, y3, free_join(free_join(free_inverse(y3), y2), y3))
    raise ValueError(f"bad generator code {code!r}")


def artin_image(w: BraidWord) -> FreeAutomorphism:
    images = IDENTITY_AUTOMORPHISM
    for c in reversed(as_braid(w).codes):
        images = prepend_generator(c, images)
    return images


def is_identity(w: BraidWord) -> bool:
    """Word problem via the (faithful) Artin action."""
    return artin_image(w) == IDENTITY_AUTOMORPHISM
