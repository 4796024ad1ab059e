"""Exact cyclotomic arithmetic.

``cyclotomic_poly`` builds Phi_b over the integers, ``reduce_mod_phi`` and
friends test divisibility of zeta-Laurent polynomials by Phi_b, and
``CycloElem`` is an element of Q(zeta_b) written in the power basis
1, x, ..., x^{phi(b)-1} with exact rational coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

from .series import ZetaPoly


class CyclotomicError(ValueError):
    pass


class NotDivisibleError(CyclotomicError):
    """Phi_b does not divide the given Laurent polynomial."""


class IntPoly:
    """Dense integer polynomial, index = degree, leading coefficient nonzero."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def divmod_monic(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Long division of integer polynomials by a monic divisor."""
    if not den or den[-1] != 1:
        raise CyclotomicError("divisor must be monic")
    rem = list(num)
    dd = len(den) - 1
    if len(rem) <= dd:
        return [], rem
    quo = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            quo[i - dd] = c
            base = i - dd
            for t in range(dd + 1):
                rem[base + t] -= c * den[t]
    return quo, rem[:dd]


@lru_cache(maxsize=None)
def cyclotomic_poly(b: int) -> IntPoly:
    """Phi_b, by dividing x^b - 1 by Phi_d for every proper divisor d of b."""
    if b < 1:
        raise CyclotomicError("cyclotomic index must be positive")
    num = [-1] + [0] * (b - 1) + [1]
    for d in range(1, b):
        if b % d == 0:
            quo, rem = divmod_monic(num, cyclotomic_poly(d).coeffs)
            assert not any(rem)
            num = quo
    return IntPoly(num)


def totient(b: int) -> int:
    return cyclotomic_poly(b).degree


class CycloElem:
    """Element of Q(zeta_b) as a coordinate vector modulo Phi_b.

    Coordinates are Python ints or Fractions; integer inputs stay integers
    until something divides them.
    """

    __slots__ = ("b", "coords")

    def __init__(self, b: int, coords: Sequence[Rational]):
        n = totient(b)
        if len(coords) != n:
            raise CyclotomicError(f"need {n} coordinates for b={b}, got {len(coords)}")
        self.b = b
        self.coords = tuple(_tidy(c) for c in coords)

    @classmethod
    def from_poly(cls, b: int, coeffs: Sequence[Rational]) -> "CycloElem":
        """Reduce a polynomial in x (index = degree) modulo Phi_b."""
        phi = cyclotomic_poly(b).coeffs
        n = len(phi) - 1
        rem = list(coeffs)
        for i in range(len(rem) - 1, n - 1, -1):
            c = rem[i]
            if c:
                base = i - n
                for t in range(n + 1):
                    rem[base + t] -= c * phi[t]
        rem = (rem + [0] * n)[:n]
        return cls(b, rem)

    @classmethod
    def constant(cls, b: int, c: Rational) -> "CycloElem":
        return cls(b, [c] + [0] * (totient(b) - 1))

    @classmethod
    def root_power(cls, b: int, e: int) -> "CycloElem":
        """zeta_b^e."""
        e %= b
        return cls.from_poly(b, [0] * e + [1])

    def _same_field(self, other: "CycloElem") -> None:
        if self.b != other.b:
            raise CyclotomicError(f"field mismatch: Q(zeta_{self.b}) vs Q(zeta_{other.b})")

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise CyclotomicError("element is not rational")
        return Fraction(self.coords[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self.b == other.b and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.b, self.coords))

    def __repr__(self) -> str:
        return f"CycloElem(b={self.b}, {[str(c) for c in self.coords]})"

    def __add__(self, other: "CycloElem") -> "CycloElem":
        self._same_field(other)
        return CycloElem(self.b, [x + y for x, y in zip(self.coords, other.coords)])

    def __sub__(self, other: "CycloElem") -> "CycloElem":
        self._same_field(other)
        return CycloElem(self.b, [x - y for x, y in zip(self.coords, other.coords)])

    def __neg__(self) -> "CycloElem":
        return CycloElem(self.b, [-x for x in self.coords])

    def __mul__(self, other) -> "CycloElem":
        if isinstance(other, Rational):
            return CycloElem(self.b, [x * other for x in self.coords])
        self._same_field(other)
        prod = [0] * (2 * len(self.coords) - 1)
        for i, x in enumerate(self.coords):
            if x:
                for j, y in enumerate(other.coords):
                    if y:
                        prod[i + j] += x * y
        return CycloElem.from_poly(self.b, prod)

    __rmul__ = __mul__

    def __truediv__(self, other: Rational) -> "CycloElem":
        if not isinstance(other, Rational):
            raise CyclotomicError("only division by rationals is supported")
        return CycloElem(self.b, [Fraction(x) / other for x in self.coords])


def _tidy(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    if isinstance(c, (int, Fraction)):
        return c
    return Fraction(c)


def _lift(p: ZetaPoly, b: int) -> tuple[int, list[int]]:
    """Shift p by zeta^s, s the least multiple of b with p.lo + s >= 0."""
    s = 0
    if p.lo < 0:
        s = -(p.lo // b) * b  # -p.lo rounded up to a multiple of b
    offset = p.lo + s
    return s, [0] * offset + list(p.coeffs)


def reduce_mod_phi(p: ZetaPoly, b: int) -> CycloElem:
    """Remainder of the Laurent polynomial p modulo Phi_b, as a CycloElem."""
    if b < 1:
        raise CyclotomicError("modulus must be positive")
    if p.is_zero():
        return CycloElem.constant(b, 0)
    _, poly = _lift(p, b)
    _, rem = divmod_monic(poly, cyclotomic_poly(b).coeffs)
    n = totient(b)
    return CycloElem(b, (rem + [0] * n)[:n])


def divides_exactly(p: ZetaPoly, b: int) -> bool:
    """True iff Phi_b divides p as Laurent polynomials."""
    return reduce_mod_phi(p, b).is_zero()


def laurent_quotient(p: ZetaPoly, b: int) -> ZetaPoly:
    """Exact quotient p / Phi_b; raises NotDivisibleError if there is a remainder."""
    if b < 1:
        raise CyclotomicError("modulus must be positive")
    if p.is_zero():
        return ZetaPoly()
    s, poly = _lift(p, b)
    quo, rem = divmod_monic(poly, cyclotomic_poly(b).coeffs)
    if any(rem):
        raise NotDivisibleError(f"Phi_{b} does not divide {p!r}")
    return ZetaPoly(-s, quo)


def evaluate_at_root(p: ZetaPoly, b: int, k: int) -> CycloElem:
    """Exact value of p at zeta_b^k, i.e. substitute zeta -> x^k modulo Phi_b."""
    if b < 1:
        raise CyclotomicError("modulus must be positive")
    folded = [0] * b
    for m, c in p.terms().items():
        folded[(m * k) % b] += c
    return CycloElem.from_poly(b, folded)
