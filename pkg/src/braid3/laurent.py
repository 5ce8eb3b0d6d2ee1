"""Exact arithmetic in Z[t, t^-1] and 2x2 matrices over it.

Polynomials are sparse maps ``exponent -> nonzero int``.  Coefficients are
Python ints, so nothing ever overflows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import BadModulus


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: acc[e] for e in sorted(acc) if acc[e]}
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: dict[int, int]) -> "LaurentPoly":
        p = object.__new__(cls)
        p._terms = {e: terms[e] for e in sorted(terms)}
        p._hash = None
        return p

    @classmethod
    def monomial(cls, coef: int = 1, exp: int = 0) -> "LaurentPoly":
        return cls._from_clean({exp: coef} if coef else {})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.monomial(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- views ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    @property
    def min_exp(self) -> int | None:
        return next(iter(self._terms), None)

    @property
    def max_exp(self) -> int | None:
        return next(reversed(self._terms), None) if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        """True for the units ``±t^k`` of Z[t, t^-1]."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return LaurentPoly._from_clean(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._from_clean({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._from_clean({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        acc: dict[int, int] = {}
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly._from_clean({e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_unit():
                raise ValueError("only units have negative powers in Z[t, t^-1]")
            (e, c), = self._terms.items()
            return LaurentPoly.monomial(c ** -n, e * n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t^k``."""
        return LaurentPoly._from_clean({e + k: c for e, c in self._terms.items()})

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise ValueError(f"{self} is not a unit")
        (e, c), = self._terms.items()
        return LaurentPoly.monomial(c, -e)

    def mod(self, modulus: int) -> "LaurentPoly":
        return laurent_mod_p(self, modulus)

    def evaluate(self, x):
        """Value at ``t = x`` (int or Fraction; negative exponents need x != 0)."""
        total = 0
        for e, c in self._terms.items():
            if e >= 0:
                total += c * x ** e
            else:
                total += c / Fraction(x) ** (-e)
        if isinstance(total, Fraction) and total.denominator == 1:
            return total.numerator
        return total

    def at_minus_one(self) -> int:
        return sum(c if e % 2 == 0 else -c for e, c in self._terms.items())

    def substitute_inverse(self) -> "LaurentPoly":
        """The image under ``t -> t^-1``."""
        return LaurentPoly._from_clean({-e: c for e, c in self._terms.items()})

    # -- comparison / display ------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def to_json(self) -> list[dict[str, int]]:
        return [{"exp": e, "coef": c} for e, c in self._terms.items()]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        return cls((d["exp"], d["coef"]) for d in data)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for e, c in self._terms.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            out.append((sign, body))
        first_sign, first_body = out[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly.monomial(1, 0)
T = LaurentPoly.monomial(1, 1)


def laurent_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def laurent_eq_up_to_unit(p: LaurentPoly, q: LaurentPoly) -> bool:
    """True iff ``q = ±t^k p`` for some integer k."""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    if len(p) != len(q):
        return False
    shifted = p.shift(q.min_exp - p.min_exp)
    return shifted == q or -shifted == q


def check_modulus(modulus) -> int:
    if isinstance(modulus, bool) or not isinstance(modulus, int) or modulus <= 1:
        raise BadModulus(modulus)
    return modulus


def laurent_mod_p(p: LaurentPoly, modulus: int) -> LaurentPoly:
    """Coefficientwise reduction into ``{0, ..., modulus - 1}``; any modulus > 1."""
    check_modulus(modulus)
    return LaurentPoly._from_clean(
        {e: c % modulus for e, c in p.items() if c % modulus}
    )


class Mat2:
    """Immutable 2x2 matrix ``[[a, b], [c, d]]`` over ints or LaurentPoly."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Mat2 is immutable")

    @classmethod
    def from_rows(cls, rows) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def laurent(cls, rows) -> "Mat2":
        """Build a Laurent matrix from rows of ints / LaurentPoly."""
        (a, b), (c, d) = rows
        co = LaurentPoly.coerce
        return cls(co(a), co(b), co(c), co(d))

    @property
    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other):
        if isinstance(other, Mat2):
            a, b, c, d = self.a, self.b, self.c, self.d
            e, f, g, h = other.a, other.b, other.c, other.d
            return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
        return Mat2(self.a * other, self.b * other, self.c * other, self.d * other)

    def __rmul__(self, other):
        return Mat2(other * self.a, other * self.b, other * self.c, other * self.d)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def adjugate(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def inverse(self) -> "Mat2":
        """Exact inverse; the determinant must be a unit (±1 or ±t^k)."""
        det = self.det()
        if isinstance(det, LaurentPoly):
            return self.adjugate() * det.unit_inverse()
        if det not in (1, -1):
            raise ValueError(f"determinant {det} is not a unit")
        return self.adjugate() * det

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d)

    def map(self, f) -> "Mat2":
        return Mat2(f(self.a), f(self.b), f(self.c), f(self.d))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def is_identity(self) -> bool:
        return self.a == 1 and self.d == 1 and self.b == 0 and self.c == 0

    def to_json(self):
        def enc(x):
            return x.to_json() if isinstance(x, LaurentPoly) else x
        return [[enc(self.a), enc(self.b)], [enc(self.c), enc(self.d)]]

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"

    def __repr__(self) -> str:
        return f"Mat2({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


BurauMatrix = Mat2
IntMatrix2 = Mat2

LAURENT_IDENTITY = Mat2(ONE, ZERO, ZERO, ONE)
INT_IDENTITY = Mat2(1, 0, 0, 1)


def mat2_mul(m: Mat2, n: Mat2) -> Mat2:
    return m * n


def mat2_det(m: Mat2):
    return m.det()


def mat2_mod_p(m: Mat2, modulus: int) -> Mat2:
    check_modulus(modulus)
    return m.map(lambda e: laurent_mod_p(e, modulus))


def projective_canonical(m: Mat2) -> Mat2:
    """Representative of ``±m``: first nonzero of (a, b, c) made positive."""
    for x in (m.a, m.b, m.c):
        if x:
            return -m if x < 0 else m
    return -m if m.d < 0 else m
