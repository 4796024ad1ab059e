"""Truncated power series in q with exact integer coefficients.

Two coefficient rings are supported: plain Python integers (``BigSeries``)
and Laurent polynomials in a second variable zeta (``ZetaSeries`` over
``ZetaPoly``).  Every series carries a fixed truncation order N and never
stores or produces a coefficient of q^n with n > N.

Product expansions are built by applying one factor (1 - q^m) or
(1 + q^m) at a time to a mutable coefficient list; division by (1 - q^m)
is multiplication by the truncated geometric series, which reduces to the
recurrence c[n] += c[n - m].
"""

from __future__ import annotations

import operator
from functools import lru_cache
from typing import Iterable, Sequence


class SeriesError(ValueError):
    """Raised on incompatible series operands."""


# ---------------------------------------------------------------------------
# In-place single-factor kernels on plain coefficient lists.
# ---------------------------------------------------------------------------

def mul_one_plus(c: list, m: int) -> None:
    """c <- c * (1 + q^m), truncated to len(c)."""
    size = len(c)
    if m < size:
        c[m:] = list(map(operator.add, c[m:], c[: size - m]))


def mul_one_minus(c: list, m: int) -> None:
    """c <- c * (1 - q^m), truncated to len(c)."""
    size = len(c)
    if m < size:
        c[m:] = list(map(operator.sub, c[m:], c[: size - m]))


def div_one_minus(c: list, m: int) -> None:
    """c <- c / (1 - q^m), truncated to len(c).

    The recurrence c[n] += c[n-m] has to run in increasing n; blocks of
    length m only read the previous, already updated block, so each block
    is a single vectorised add.
    """
    size = len(c)
    for start in range(m, size, m):
        stop = min(start + m, size)
        c[start:stop] = list(map(operator.add, c[start:stop], c[start - m : stop - m]))


# ---------------------------------------------------------------------------
# BigSeries
# ---------------------------------------------------------------------------

class BigSeries:
    """Power series sum_{n<=N} a_n q^n with arbitrary-precision integers."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int], trunc_order: int | None = None):
        coeffs = [int(x) for x in coeffs]
        if trunc_order is not None:
            if trunc_order < 0:
                raise SeriesError("truncation order must be non-negative")
            coeffs = (coeffs + [0] * (trunc_order + 1))[: trunc_order + 1]
        if not coeffs:
            raise SeriesError("a series needs at least the constant coefficient")
        self._coeffs = tuple(coeffs)

    @classmethod
    def one(cls, trunc_order: int) -> "BigSeries":
        return cls([1], trunc_order)

    @classmethod
    def from_poly(cls, coeffs: Sequence[int], trunc_order: int) -> "BigSeries":
        """Truncate a finite polynomial (index = exponent) to order N."""
        return cls(coeffs, trunc_order)

    @property
    def trunc_order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, n):
        return self._coeffs[n]

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BigSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(x) for x in self._coeffs[:8])
        tail = ", ..." if len(self._coeffs) > 8 else ""
        return f"BigSeries([{head}{tail}], N={self.trunc_order})"

    def __add__(self, other: "BigSeries") -> "BigSeries":
        _check_orders(self, other)
        return BigSeries(map(operator.add, self._coeffs, other._coeffs))

    def __sub__(self, other: "BigSeries") -> "BigSeries":
        _check_orders(self, other)
        return BigSeries(map(operator.sub, self._coeffs, other._coeffs))

    def __mul__(self, other: "BigSeries") -> "BigSeries":
        return series_mul(self, other)


def _check_orders(a, b) -> None:
    if a.trunc_order != b.trunc_order:
        raise SeriesError(
            f"mismatched truncation orders {a.trunc_order} and {b.trunc_order}"
        )


def series_mul(a: BigSeries, b: BigSeries) -> BigSeries:
    """Cauchy product of two series at the same truncation order."""
    _check_orders(a, b)
    N = a.trunc_order
    x, y = a.coeffs, b.coeffs
    # skip the zero tail of either operand; common for polynomial factors
    nx = max((i for i, v in enumerate(x) if v), default=-1)
    ny = max((i for i, v in enumerate(y) if v), default=-1)
    out = [0] * (N + 1)
    if nx < 0 or ny < 0:
        return BigSeries(out)
    if nx > ny:
        x, y, nx, ny = y, x, ny, nx
    for i in range(nx + 1):
        xi = x[i]
        if not xi:
            continue
        stop = min(N - i, ny) + 1
        out[i : i + stop] = list(
            map(operator.add, out[i : i + stop], (xi * v for v in y[:stop]))
        )
    return BigSeries(out)


@lru_cache(maxsize=64)
def expand_inverse_pochhammer(a: int, e: int, N: int) -> BigSeries:
    """Expand (q^a; q^a)_inf^{-e} = prod_{m>=1} (1 - q^{am})^{-e} to order N.

    Negative ``e`` gives the direct product prod (1 - q^{am})^{|e|}.
    """
    if a < 1:
        raise SeriesError("step a must be a positive integer")
    if N < 0:
        raise SeriesError("truncation order must be non-negative")
    c = [0] * (N + 1)
    c[0] = 1
    kernel = div_one_minus if e > 0 else mul_one_minus
    for m in range(a, N + 1, a):
        for _ in range(abs(e)):
            kernel(c, m)
    return BigSeries(c)


@lru_cache(maxsize=64)
def expand_overline_factor(j: int, N: int) -> BigSeries:
    """Expand prod_{n>=1} (1 + q^n)^j to order N."""
    if j < 0:
        raise SeriesError("exponent j must be non-negative")
    if N < 0:
        raise SeriesError("truncation order must be non-negative")
    c = [0] * (N + 1)
    c[0] = 1
    for m in range(1, N + 1):
        for _ in range(j):
            mul_one_plus(c, m)
    return BigSeries(c)


# ---------------------------------------------------------------------------
# Laurent polynomials in zeta
# ---------------------------------------------------------------------------

class ZetaPoly:
    """Laurent polynomial sum_m c_m zeta^m, stored densely over [lo, hi].

    The stored range is trimmed so that both end coefficients are nonzero;
    the zero polynomial has ``lo == 0`` and no coefficients.
    """

    __slots__ = ("lo", "coeffs")

    def __init__(self, lo: int = 0, coeffs: Iterable[int] = ()):
        coeffs = [int(x) for x in coeffs]
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        stop = len(coeffs)
        while stop > start and coeffs[stop - 1] == 0:
            stop -= 1
        if start == stop:
            self.lo, self.coeffs = 0, ()
        else:
            self.lo, self.coeffs = lo + start, tuple(coeffs[start:stop])

    @classmethod
    def monomial(cls, m: int, c: int = 1) -> "ZetaPoly":
        return cls(m, [c])

    @classmethod
    def constant(cls, c: int) -> "ZetaPoly":
        return cls(0, [c])

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> "ZetaPoly":
        terms = {m: c for m, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(m, 0) for m in range(lo, hi + 1)])

    @property
    def hi(self) -> int:
        """Highest exponent; equals lo - 1 for the zero polynomial."""
        return self.lo + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, m: int) -> int:
        i = m - self.lo
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def terms(self) -> dict[int, int]:
        return {self.lo + i: c for i, c in enumerate(self.coeffs) if c}

    def at_one(self) -> int:
        return sum(self.coeffs)

    def shift(self, s: int) -> "ZetaPoly":
        """Multiply by zeta^s."""
        return ZetaPoly(self.lo + s, self.coeffs)

    def reflect(self) -> "ZetaPoly":
        """Substitute zeta -> zeta^{-1}."""
        if self.is_zero():
            return self
        return ZetaPoly(-self.hi, self.coeffs[::-1])

    def normalized(self) -> "ZetaPoly":
        return ZetaPoly(self.lo, self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = ZetaPoly.constant(other)
        if not isinstance(other, ZetaPoly):
            return NotImplemented
        return self.lo == other.lo and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.lo, self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero():
            return "ZetaPoly(0)"
        parts = [f"{c}*z^{m}" for m, c in self.terms().items()]
        return "ZetaPoly(" + " + ".join(parts) + ")"

    def __add__(self, other: "ZetaPoly") -> "ZetaPoly":
        if isinstance(other, int):
            other = ZetaPoly.constant(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = [0] * (hi - lo + 1)
        for p in (self, other):
            off = p.lo - lo
            for i, c in enumerate(p.coeffs):
                out[off + i] += c
        return ZetaPoly(lo, out)

    __radd__ = __add__

    def __neg__(self) -> "ZetaPoly":
        return ZetaPoly(self.lo, [-c for c in self.coeffs])

    def __sub__(self, other: "ZetaPoly") -> "ZetaPoly":
        if isinstance(other, int):
            other = ZetaPoly.constant(other)
        return self + (-other)

    def __mul__(self, other: "ZetaPoly") -> "ZetaPoly":
        if isinstance(other, int):
            return ZetaPoly(self.lo, [other * c for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return ZetaPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ZetaPoly(self.lo + other.lo, out)

    __rmul__ = __mul__


def normalize(p: ZetaPoly) -> ZetaPoly:
    return p.normalized()


# ---------------------------------------------------------------------------
# ZetaSeries
# ---------------------------------------------------------------------------

class ZetaSeries:
    """Truncated power series in q whose coefficients are ``ZetaPoly``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[ZetaPoly], trunc_order: int | None = None):
        coeffs = [c if isinstance(c, ZetaPoly) else ZetaPoly.constant(c) for c in coeffs]
        if trunc_order is not None:
            coeffs = (coeffs + [ZetaPoly()] * (trunc_order + 1))[: trunc_order + 1]
        if not coeffs:
            raise SeriesError("a series needs at least the constant coefficient")
        self._coeffs = tuple(coeffs)

    @classmethod
    def one(cls, trunc_order: int) -> "ZetaSeries":
        return cls([ZetaPoly.constant(1)], trunc_order)

    @property
    def trunc_order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[ZetaPoly, ...]:
        return self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, n):
        return self._coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZetaSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"ZetaSeries(N={self.trunc_order}, {list(self._coeffs[:4])}...)"

    def __mul__(self, other: "ZetaSeries") -> "ZetaSeries":
        return zeta_series_mul(self, other)

    def at_one(self) -> BigSeries:
        """Specialize zeta = 1."""
        return BigSeries(c.at_one() for c in self._coeffs)


def zeta_series_mul(a: ZetaSeries, b: ZetaSeries) -> ZetaSeries:
    _check_orders(a, b)
    N = a.trunc_order
    out = [ZetaPoly()] * (N + 1)
    for i, x in enumerate(a.coeffs):
        if x.is_zero():
            continue
        for j in range(N - i + 1):
            y = b.coeffs[j]
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return ZetaSeries(out)
