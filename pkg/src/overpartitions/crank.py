"""Two-variable crank generating functions and their multisections.

A crank spec describes, after cancellation, a product

    H(zeta; q) = prod_i F1(1; q^{b_i})^{c_i} / prod_i F1(zeta^{+-d_i}; q)^{f_i},

with F1(zeta; q) = prod_{n>=1} (1 - zeta q^n).  A denominator entry with
d = 0 is the single zeta-free factor F1(1; q); d >= 1 stands for the pair
F1(zeta^d; q) F1(zeta^-d; q).

Expansion works on a dense 2-D table ``T[n, e]`` of integers, one row per
power of q and one column per zeta exponent.  Columns are either the full
exponent range (exact Laurent coefficients) or exponents folded modulo a
fixed b (enough for residue counting at larger N).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import mpmath
import numpy as np

from .cyclotomic import (
    CycloElem,
    divides_exactly,
    evaluate_at_root,
    laurent_quotient,
)
from .partitions import ColourParams, coloured_overpartition_series, is_prime
from .series import BigSeries, ZetaPoly, ZetaSeries, div_one_minus, mul_one_minus

SPEC_FIELDS = ("k", "j", "numerators", "denominators")
BUNDLED_CRANKS = Path(__file__).parent / "data" / "cranks"


class CrankSpecError(ValueError):
    """A crank spec violates one of its invariants."""

    def __init__(self, invariant: str, message: str):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


class MultisectionError(ArithmeticError):
    """Root-of-unity multisection produced a non-integer count."""


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    first_failure: int | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class CrankSpec:
    params: ColourParams
    numerators: tuple[tuple[int, int], ...]
    denominators: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for b, c in self.numerators:
            if b < 1 or c < 0:
                raise CrankSpecError("numerator", f"need b >= 1 and c >= 0, got ({b}, {c})")
        for d, f in self.denominators:
            if d < 0 or f < 0:
                raise CrankSpecError("denominator", f"need d >= 0 and f >= 0, got ({d}, {f})")
        active = [d for d, f in self.denominators if d >= 1 and f >= 1]
        if not active:
            raise CrankSpecError(
                "zeta-dependence",
                "no denominator with d >= 1 and f >= 1; the numerator cancels the whole denominator",
            )
        g = math.gcd(*[d for d, f in self.denominators if d >= 1])
        if g != 1:
            raise CrankSpecError(
                "gcd(d_j) != 1",
                f"gcd is {g}: essentially-equidistributed regime unsupported",
            )

    @classmethod
    def from_dict(cls, data: dict) -> "CrankSpec":
        if not isinstance(data, dict):
            raise CrankSpecError("format", "crank spec must be a mapping")
        unknown = sorted(set(data) - set(SPEC_FIELDS))
        if unknown:
            raise CrankSpecError("format", f"unknown fields {unknown}")
        missing = [f for f in SPEC_FIELDS if f not in data]
        if missing:
            raise CrankSpecError("format", f"missing fields {missing}")
        k, j = _integer(data["k"], "k"), _integer(data["j"], "j")
        try:
            params = ColourParams(k, j)
        except ValueError as exc:
            raise CrankSpecError("0 < j <= k", str(exc)) from None
        return cls(
            params,
            _pairs(data["numerators"], "numerators"),
            _pairs(data["denominators"], "denominators"),
        )

    def to_dict(self) -> dict:
        return {
            "k": self.params.k,
            "j": self.params.j,
            "numerators": [list(p) for p in self.numerators],
            "denominators": [list(p) for p in self.denominators],
        }

    @property
    def max_shift(self) -> int:
        """Largest |zeta exponent| contributed per unit of q-degree."""
        return max(d for d, f in self.denominators if f)


def _integer(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise CrankSpecError("format", f"{name} must be an integer, got {value!r}")
    return value


def _pairs(value, name: str) -> tuple[tuple[int, int], ...]:
    if not isinstance(value, list):
        raise CrankSpecError("format", f"{name} must be a list of [int, int] pairs")
    out = []
    for item in value:
        if not isinstance(item, list) or len(item) != 2:
            raise CrankSpecError("format", f"{name} entry {item!r} is not an [int, int] pair")
        out.append((_integer(item[0], name), _integer(item[1], name)))
    return tuple(out)


def load_crank_spec(path) -> CrankSpec:
    """Read a crank spec file (JSON object with fields k, j, numerators, denominators).

    A bare name such as ``wagner_3_2_mod7`` that does not exist as a path is
    looked up among the bundled specs.
    """
    path = Path(path)
    if not path.exists() and (BUNDLED_CRANKS / path.name).exists():
        path = BUNDLED_CRANKS / path.name
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise CrankSpecError("format", f"{path}: {exc}") from None
    return CrankSpec.from_dict(data)


# ---------------------------------------------------------------------------
# Expansion
# ---------------------------------------------------------------------------

def _zeta_free_part(spec: CrankSpec, N: int) -> list[int]:
    c = [0] * (N + 1)
    c[0] = 1
    for b, mult in spec.numerators:
        for m in range(b, N + 1, b):
            for _ in range(mult):
                mul_one_minus(c, m)
    for d, f in spec.denominators:
        if d == 0:
            for m in range(1, N + 1):
                for _ in range(f):
                    div_one_minus(c, m)
    return c


def _expand_table(spec: CrankSpec, N: int, fold: int | None) -> np.ndarray:
    """Coefficient table of H(zeta; q) up to q^N.

    ``fold=None``: column e holds zeta^(e - D*N), D = spec.max_shift.
    ``fold=b``: column e holds the sum over exponents congruent to e mod b.
    """
    D = spec.max_shift
    width = (2 * D * N + 1) if fold is None else fold
    centre = D * N if fold is None else 0
    table = np.zeros((N + 1, width), dtype=object)
    table[:, centre] = _zeta_free_part(spec, N)
    shifts = []
    for d, f in spec.denominators:
        if d >= 1:
            shifts += [d, -d] * f
    for m in range(1, N + 1):
        for e in shifts:
            for start in range(m, N + 1, m):
                stop = min(start + m, N + 1)
                src = table[start - m : stop - m]
                dst = table[start:stop]
                if fold is not None:
                    dst += np.roll(src, e, axis=1)
                    continue
                # rows < stop carry exponents in [-D*(stop-1), D*(stop-1)]
                reach = D * (stop - 1)
                lo, hi = centre - reach, centre + reach + 1
                if e > 0:
                    dst[:, lo + e : hi] += src[:, lo : hi - e]
                else:
                    dst[:, lo : hi + e] += src[:, lo - e : hi]
    return table


@lru_cache(maxsize=16)
def _laurent_cached(spec: CrankSpec, N: int) -> ZetaSeries:
    table = _expand_table(spec, N, None)
    lo = -spec.max_shift * N
    return ZetaSeries(ZetaPoly(lo, [int(x) for x in row]) for row in table)


@lru_cache(maxsize=32)
def _folded_cached(spec: CrankSpec, b: int, N: int) -> tuple[tuple[int, ...], ...]:
    table = _expand_table(spec, N, b)
    # transpose to one tuple per residue
    return tuple(tuple(int(x) for x in table[:, a]) for a in range(b))


def crank_series_laurent(spec: CrankSpec, N: int) -> ZetaSeries:
    """Exact expansion of H(zeta; q) to order N; coefficient n is H_n(zeta)."""
    if N < 0:
        raise ValueError("N must be non-negative")
    return _laurent_cached(spec, N)


def validate_crank(spec: CrankSpec, N: int) -> CheckResult:
    """Check H(1; q) against the (k, j) generating function up to q^N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    at_one = _folded_cached(spec, 1, N)[0]
    target = coloured_overpartition_series(spec.params, N).coeffs
    for n, (x, y) in enumerate(zip(at_one, target)):
        if x != y:
            return CheckResult(False, n)
    return CheckResult(True)


# ---------------------------------------------------------------------------
# Multisection
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultisectionRow:
    """Counts of overpartitions of n with crank congruent to a mod b."""

    a: int
    b: int
    counts: BigSeries


def multisect_bucket(spec: CrankSpec, b: int, N: int) -> list[MultisectionRow]:
    """Residue-class counts by summing Laurent coefficients in each class mod b."""
    if b < 1:
        raise ValueError("modulus b must be >= 1")
    cols = _folded_cached(spec, b, N)
    return [MultisectionRow(a, b, BigSeries(cols[a])) for a in range(b)]


def multisect_bucket_laurent(spec: CrankSpec, b: int, N: int) -> list[MultisectionRow]:
    """Same counts as ``multisect_bucket`` but bucketed from the full Laurent expansion."""
    if b < 1:
        raise ValueError("modulus b must be >= 1")
    H = crank_series_laurent(spec, N)
    rows = [[0] * (N + 1) for _ in range(b)]
    for n, poly in enumerate(H.coeffs):
        for m, c in poly.terms().items():
            rows[m % b][n] += c
    return [MultisectionRow(a, b, BigSeries(rows[a])) for a in range(b)]


def multisect_roots(spec: CrankSpec, b: int, N: int) -> list[MultisectionRow]:
    """Residue-class counts from the root-of-unity filter.

    For each n, b * count(a) = H_n(1) + sum_{k=1}^{b-1} zeta_b^{-ak} H_n(zeta_b^k),
    evaluated exactly in Q(zeta_b); the result must be a rational integer.
    """
    if b < 2:
        raise ValueError("modulus b must be >= 2")
    H = crank_series_laurent(spec, N)
    inverse_powers = [CycloElem.root_power(b, -e) for e in range(b)]
    rows = [[0] * (N + 1) for _ in range(b)]
    for n, poly in enumerate(H.coeffs):
        # k = 0 term is H_n(1), which is pbar(n) for a valid crank
        values = [evaluate_at_root(poly, b, k) for k in range(b)]
        for a in range(b):
            total = values[0]
            for k, value in enumerate(values[1:], start=1):
                total = total + inverse_powers[(a * k) % b] * value
            if not total.is_rational():
                raise MultisectionError(f"irrational bucket at n={n}, a={a}, b={b}")
            count = total.rational_value() / b
            if count.denominator != 1:
                raise MultisectionError(f"non-integer bucket {count} at n={n}, a={a}, b={b}")
            rows[a][n] = int(count)
    return [MultisectionRow(a, b, BigSeries(rows[a])) for a in range(b)]


def equidistribution_deviation(spec: CrankSpec, b: int, n: int, dps: int = 50):
    """max_a |b * count(a, b; n) / pbar(n) - 1| as an mpmath real."""
    if b == 1:
        return mpmath.mpf(0)
    rows = multisect_bucket(spec, b, n)
    total = sum(row.counts[n] for row in rows)
    if total <= 0:
        raise ValueError(f"pbar({n}) must be positive")
    worst = max(abs(Fraction(b * row.counts[n], total) - 1) for row in rows)
    with mpmath.workdps(dps):
        return mpmath.mpf(worst.numerator) / worst.denominator


# ---------------------------------------------------------------------------
# Cyclotomic divisibility
# ---------------------------------------------------------------------------

def certify_phi_divisibility(spec: CrankSpec, ell: int, delta: int, N: int) -> CheckResult:
    """Check Phi_ell | H_{ell*n + delta}(zeta) for every ell*n + delta <= N."""
    if not is_prime(ell):
        raise ValueError(f"ell = {ell} is not prime")
    if not 0 <= delta < ell:
        raise ValueError(f"delta must lie in [0, {ell})")
    H = crank_series_laurent(spec, N)
    for n in range(delta, N + 1, ell):
        if not divides_exactly(H[n], ell):
            return CheckResult(False, n)
    return CheckResult(True)


def quotient_coefficients(spec: CrankSpec, ell: int, delta: int, n: int) -> ZetaPoly:
    """H_{ell*n + delta}(zeta) / Phi_ell(zeta) as an exact Laurent polynomial."""
    index = ell * n + delta
    H = crank_series_laurent(spec, index)
    return laurent_quotient(H[index], ell)
