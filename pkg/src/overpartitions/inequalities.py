"""Inequality checks on exact coefficient sequences.

All decisions are made with integer or rational arithmetic:

* log-concavity a(n)^2 > a(n-1) a(n+1);
* higher-order Turan inequalities through hyperbolicity of the Jensen
  polynomials J^{d,n}(x) = sum_i binom(d, i) a(n+i) x^i;
* Bessenrodt-Ono type products a(n1) a(n2) vs a(n1 + n2);
* Laguerre type inequalities for the entire function sum a(n) x^n / n!,
  truncated at a validated order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence


class InequalityError(ValueError):
    pass


@dataclass(frozen=True)
class CoeffSequence:
    values: tuple[int, ...]
    label: str = ""

    def __init__(self, values: Iterable[int], label: str = ""):
        values = tuple(int(v) for v in values)
        if not values:
            raise InequalityError("coefficient sequence is empty")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "label", label)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]


def _as_sequence(seq) -> CoeffSequence:
    return seq if isinstance(seq, CoeffSequence) else CoeffSequence(seq)


def log_concavity_front(seq) -> int | None:
    """Smallest n0 >= 1 with a(n)^2 > a(n+1) a(n-1) for all n0 <= n <= len-2.

    None when the inequality fails at the last testable index.
    """
    a = _as_sequence(seq).values
    if len(a) < 3:
        raise InequalityError("need at least three terms")
    n0 = None
    for n in range(len(a) - 2, 0, -1):
        if a[n] * a[n] > a[n + 1] * a[n - 1]:
            n0 = n
        else:
            break
    return n0


# ---------------------------------------------------------------------------
# Polynomials with exact coefficients (index = degree)
# ---------------------------------------------------------------------------

def _trim(p: Sequence) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _derivative(p: Sequence) -> list:
    return [i * c for i, c in enumerate(p)][1:]


def _poly_rem(num: Sequence, den: Sequence) -> list:
    num = [Fraction(c) for c in num]
    den = _trim(den)
    lead = Fraction(den[-1])
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            f = c / lead
            for t in range(dd + 1):
                num[i - dd + t] -= f * den[t]
    return _trim(num[:dd])


def _poly_gcd(a: Sequence, b: Sequence) -> list:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _poly_rem(a, b)
    return a


def _poly_quo(num: Sequence, den: Sequence) -> list:
    num = [Fraction(c) for c in num]
    den = _trim(den)
    lead = Fraction(den[-1])
    dd = len(den) - 1
    quo = [Fraction(0)] * max(len(num) - dd, 1)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            f = c / lead
            quo[i - dd] = f
            for t in range(dd + 1):
                num[i - dd + t] -= f * den[t]
    return _trim(quo)


def sturm_sequence(p: Sequence) -> list[list]:
    p = _trim(p)
    if not p:
        raise InequalityError("zero polynomial has no Sturm sequence")
    seq = [[Fraction(c) for c in p]]
    d = _derivative(p)
    if _trim(d):
        seq.append([Fraction(c) for c in _trim(d)])
    while len(seq) > 1 and len(seq[-1]) > 1:
        r = _poly_rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return seq


def _sign_changes(values: Iterable) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def _eval(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def count_real_roots(p: Sequence, lo=None, hi=None) -> int:
    """Number of distinct real roots in (lo, hi]; None means +-infinity."""
    seq = sturm_sequence(p)

    def changes_at(x, side):
        if x is None:
            # sign of each polynomial as x -> side * infinity
            return _sign_changes(q[-1] * (side ** (len(q) - 1)) for q in seq)
        return _sign_changes(_eval(q, x) for q in seq)

    return changes_at(lo, -1) - changes_at(hi, 1)


def _discriminant(p: Sequence):
    if len(p) == 3:
        c, b, a = p
        return b * b - 4 * a * c
    d, c, b, a = p
    return 18 * a * b * c * d - 4 * b**3 * d + b * b * c * c - 4 * a * c**3 - 27 * a * a * d * d


def real_rooted(p: Sequence, strict: bool = False) -> bool:
    """True iff every complex root of p is real (and simple, with ``strict``)."""
    p = _trim(p)
    deg = len(p) - 1
    if deg < 1:
        raise InequalityError("hyperbolicity needs degree >= 1")
    if deg == 1:
        return True
    if deg <= 3:
        disc = _discriminant(p)
        return disc > 0 if strict else disc >= 0
    distinct = count_real_roots(p)
    if strict:
        return distinct == deg
    square_free = _poly_quo(p, _poly_gcd(p, _derivative(p)))
    return distinct == len(square_free) - 1


# ---------------------------------------------------------------------------
# Jensen polynomials and Turan thresholds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class JensenPoly:
    degree: int
    shift: int
    coeffs: tuple[int, ...]


def jensen_poly(seq, d: int, n: int) -> JensenPoly:
    """J^{d,n}(x) = sum_{i=0}^{d} binom(d, i) a(n+i) x^i."""
    a = _as_sequence(seq).values
    if d < 1 or n < 0 or n + d >= len(a):
        raise InequalityError(f"J^({d},{n}) needs a(0..{n + d}), have {len(a)} terms")
    return JensenPoly(d, n, tuple(comb(d, i) * a[n + i] for i in range(d + 1)))


def is_hyperbolic(p: JensenPoly | Sequence, strict: bool = False) -> bool:
    coeffs = p.coeffs if isinstance(p, JensenPoly) else p
    return real_rooted(coeffs, strict=strict)


def turan_threshold(seq, d: int) -> int | None:
    """Smallest n0 such that J^{d, n-1} has d distinct real roots for all n0 <= n <= len-d.

    Indexing by n (not the shift n-1) makes order 2 coincide with
    ``log_concavity_front``; distinct roots make the order-2 case strict.
    None when the last testable n fails.
    """
    a = _as_sequence(seq)
    if d < 2:
        raise InequalityError("Turan order must be >= 2")
    if len(a) < d + 2:
        raise InequalityError("sequence too short for this order")
    n0 = None
    for n in range(len(a) - d, 0, -1):
        if is_hyperbolic(jensen_poly(a, d, n - 1), strict=True):
            n0 = n
        else:
            break
    return n0


# ---------------------------------------------------------------------------
# Bessenrodt-Ono
# ---------------------------------------------------------------------------

def bessenrodt_ono_scan(seq, cap: int, strict: bool = True, min_part: int = 1) -> list[tuple[int, int]]:
    """Pairs n1 <= n2 with min_part <= n1 and n1 + n2 <= cap where
    a(n1) a(n2) > a(n1 + n2) fails (``>=`` when ``strict`` is False)."""
    a = _as_sequence(seq).values
    if cap >= len(a):
        raise InequalityError(f"cap {cap} needs {cap + 1} terms, have {len(a)}")
    bad = []
    for total in range(2 * min_part, cap + 1):
        for n1 in range(min_part, total // 2 + 1):
            lhs, rhs = a[n1] * a[total - n1], a[total]
            if not (lhs > rhs if strict else lhs >= rhs):
                bad.append((n1, total - n1))
    return bad


# ---------------------------------------------------------------------------
# Laguerre
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LaguerreResult:
    ok: bool
    witness: object = None
    value: Fraction | None = None

    def __bool__(self) -> bool:
        return self.ok


TAIL_TOLERANCE = Fraction(1, 10**20)


def laguerre_check(seq, m: int, grid: Sequence, T: int) -> LaguerreResult:
    """Check (E^{(m+1)})^2 - E^{(m)} E^{(m+2)} >= 0 on ``grid`` for
    E(x) = sum_{n<=T} a(n) x^n / n!.

    Evaluation is exact at the rational value of each grid point.  A point
    where the last retained term a(T) x^T / T! exceeds 1e-20 of the partial
    sum is outside the validated radius and raises.
    """
    a = _as_sequence(seq).values
    if m < 0:
        raise InequalityError("Laguerre order must be >= 0")
    if T + 2 > len(a):
        raise InequalityError(f"truncation T={T} needs {T + 2} terms, have {len(a)}")
    if m + 2 > T:
        raise InequalityError("truncation order too small for this derivative order")
    weights = [Fraction(1, factorial(i)) for i in range(T + 1)]

    def derivative(i: int, x: Fraction) -> Fraction:
        return sum((a[n] * weights[n - i] * x ** (n - i) for n in range(i, T + 1)), Fraction(0))

    for point in grid:
        x = Fraction(point)
        partial = derivative(0, x)
        last = abs(a[T] * weights[T] * x**T)
        if last > TAIL_TOLERANCE * abs(partial) and last != 0:
            raise InequalityError(f"grid point {point} outside the validated radius for T={T}")
        e0, e1, e2 = derivative(m, x), derivative(m + 1, x), derivative(m + 2, x)
        value = e1 * e1 - e0 * e2
        if value < 0:
            return LaguerreResult(False, point, value)
    return LaguerreResult(True)
