"""The reduced Burau representation of B_3.

Generators go to

    sigma_1 -> [[-t, 1], [0, 1]]        sigma_2 -> [[1, 0], [t, -t]]

and words multiply left to right, so ``burau(u * v) == burau(u) * burau(v)``
and ``det burau(w) == (-t)^exponent_sum(w)``.

The unreduced 3x3 matrix is built independently from the Artin action by
free differential (Fox) calculus.  Its columns preserve the submodule
``{c : c1 + t c2 + t^2 c3 = 0}``; in the basis

    k1 = (t, -1, 0),  k2 = (0, 1, -t^-1)

the induced action is exactly the reduced matrix above.  ``REDUCTION_LEFT``
and ``REDUCTION_RIGHT`` hold that basis change.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ReductionMismatch
from .laurent import (
    INT_IDENTITY,
    LAURENT_IDENTITY,
    ONE,
    ZERO,
    LaurentPoly,
    Mat2,
    check_modulus,
    mat2_mod_p,
)
from .words import BraidWord, FreeAutomorphism, artin_image, as_braid

_t = LaurentPoly.monomial(1, 1)
_tinv = LaurentPoly.monomial(1, -1)

GENERATORS: dict[int, Mat2] = {
    1: Mat2(-_t, ONE, ZERO, ONE),
    -1: Mat2(-_tinv, _tinv, ZERO, ONE),
    2: Mat2(ONE, ZERO, _t, -_t),
    -2: Mat2(ONE, ZERO, ONE, -_tinv),
}

# Values at t = -1.
S = Mat2(1, 1, 0, 1)
T = Mat2(1, 0, -1, 1)
INTEGRAL_GENERATORS: dict[int, Mat2] = {
    1: S,
    -1: Mat2(1, -1, 0, 1),
    2: T,
    -2: Mat2(1, 0, 1, 1),
}


def burau(w) -> Mat2:
    m = LAURENT_IDENTITY
    for c in as_braid(w).codes:
        m = m * GENERATORS[c]
    return m


def burau_mod_p(w, modulus: int) -> Mat2:
    """Burau matrix with coefficients reduced into ``{0..modulus-1}``."""
    check_modulus(modulus)
    m = LAURENT_IDENTITY
    for c in as_braid(w).codes:
        m = mat2_mod_p(m * GENERATORS[c], modulus)
    return m


def integral_burau(w) -> Mat2:
    """The specialization t = -1, as an integer matrix of determinant ±1."""
    m = INT_IDENTITY
    for c in as_braid(w).codes:
        m = m * INTEGRAL_GENERATORS[c]
    return m


def burau_inverse(m: Mat2) -> Mat2:
    return m.inverse()


# -- Fox calculus ------------------------------------------------------------
#
# A "Fox datum" for a free word y is (eps(y), [D_1 y, D_2 y, D_3 y]) with the
# derivatives abelianized (every x_k -> t).  The product and inverse rules
#
#     D(uv)   = D(u) + t^eps(u) D(v)
#     D(u^-1) = -t^-eps(u) D(u)
#
# let us differentiate Artin images without ever writing them out, which
# matters because those images grow exponentially with word length.

FoxDatum = tuple  # (int, tuple[LaurentPoly, LaurentPoly, LaurentPoly])


def _fox_mul(u: FoxDatum, v: FoxDatum) -> FoxDatum:
    eu, du = u
    ev, dv = v
    return eu + ev, tuple(a + b.shift(eu) for a, b in zip(du, dv))


def _fox_inv(u: FoxDatum) -> FoxDatum:
    eu, du = u
    return -eu, tuple(-a.shift(-eu) for a in du)


def _fox_generator(k: int) -> FoxDatum:
    return 1, tuple(ONE if j == k else ZERO for j in (1, 2, 3))


def fox_derivative(word: Sequence[int], j: int) -> LaurentPoly:
    """Abelianized Fox derivative of a literal free word with respect to x_j."""
    terms: dict[int, int] = {}
    level = 0
    for c in word:
        if c == j:
            terms[level] = terms.get(level, 0) + 1
            level += 1
        elif c == -j:
            level -= 1
            terms[level] = terms.get(level, 0) - 1
        else:
            level += 1 if c > 0 else -1
    return LaurentPoly(terms)


def fox_matrix_of_automorphism(phi: FreeAutomorphism):
    """Jacobian rows ``(D_1 phi(x_i), D_2 phi(x_i), D_3 phi(x_i))``."""
    return tuple(tuple(fox_derivative(img, j) for j in (1, 2, 3)) for img in phi)


def fox_unreduced_burau(w):
    """3x3 unreduced Burau matrix via Fox calculus on the Artin action.

    Entry ``(i, j)`` is ``D_j`` of the image of ``x_i``, abelianized.
    """
    y1, y2, y3 = (_fox_generator(k) for k in (1, 2, 3))
    for c in reversed(as_braid(w).codes):
        # same substitutions as words.prepend_generator
        if c == 1:
            y1, y2 = _fox_mul(_fox_mul(y1, y2), _fox_inv(y1)), y1
        elif c == -1:
            y1, y2 = y2, _fox_mul(_fox_mul(_fox_inv(y2), y1), y2)
        elif c == 2:
            y2, y3 = _fox_mul(_fox_mul(y2, y3), _fox_inv(y2)), y2
        else:
            y2, y3 = y3, _fox_mul(_fox_mul(_fox_inv(y3), y2), y3)
    return (y1[1], y2[1], y3[1])


def fox_unreduced_burau_literal(w):
    """Same matrix, differentiating the written-out Artin images (short words only)."""
    return fox_matrix_of_automorphism(artin_image(w))


def mat_mul(x, y):
    """Product of small dense matrices given as tuples of rows."""
    cols = list(zip(*y))
    return tuple(
        tuple(sum((a * b for a, b in zip(row, col)), ZERO) for col in cols)
        for row in x
    )


def unreduced_identity():
    return tuple(tuple(ONE if i == j else ZERO for j in range(3)) for i in range(3))


REDUCTION_LEFT = ((_tinv, ZERO, ZERO), (ZERO, ZERO, -_t))
REDUCTION_RIGHT = ((_t, ZERO), (-ONE, ONE), (ZERO, -_tinv))


def reduce_unreduced(m) -> Mat2:
    """Restrict an unreduced Burau matrix to the rank-2 invariant submodule."""
    mk = mat_mul(m, REDUCTION_RIGHT)
    reduced = mat_mul(REDUCTION_LEFT, mk)
    residual = mat_mul(REDUCTION_RIGHT, reduced)
    if residual != mk:
        raise ReductionMismatch("matrix does not preserve the reduced submodule")
    return Mat2.from_rows(reduced)
