"""Counting (k, j)-coloured overpartitions.

A (k, j)-coloured overpartition of n is a partition of n whose parts each
carry one of k colours, where for j designated colours the first
occurrence of a part size in that colour may be overlined.  The counts
have generating function

    prod_{n>=1} (1 + q^n)^j / (1 - q^n)^k  =  (q^2; q^2)^j / (q; q)^{k+j}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .series import BigSeries, div_one_minus, mul_one_minus, mul_one_plus


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class ColourParams:
    k: int
    j: int

    def __post_init__(self):
        if not (isinstance(self.k, int) and isinstance(self.j, int)):
            raise ParameterError("k and j must be integers")
        if not 0 < self.j <= self.k:
            raise ParameterError(
                f"(k, j) = ({self.k}, {self.j}) violates 0 < j <= k"
            )

    def __str__(self) -> str:
        return f"({self.k},{self.j})"


@dataclass(frozen=True)
class CongruenceClaim:
    """Candidate congruence pbar_{k,j}(ell*n + delta) = 0 mod ell, checked up to N."""

    params: ColourParams
    ell: int
    delta: int
    verified_up_to: int

    def __post_init__(self):
        if not is_prime(self.ell):
            raise ParameterError(f"ell = {self.ell} is not prime")
        if not 0 <= self.delta < self.ell:
            raise ParameterError(f"delta = {self.delta} not in [0, {self.ell})")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _as_params(params) -> ColourParams:
    if isinstance(params, ColourParams):
        return params
    k, j = params
    return ColourParams(k, j)


def _overline_form(k: int, j: int, N: int) -> list[int]:
    c = [0] * (N + 1)
    c[0] = 1
    for m in range(1, N + 1):
        for _ in range(j):
            mul_one_plus(c, m)
        for _ in range(k):
            div_one_minus(c, m)
    return c


def _eta_quotient_form(k: int, j: int, N: int) -> list[int]:
    c = [0] * (N + 1)
    c[0] = 1
    for m in range(1, N + 1):
        if 2 * m <= N:
            for _ in range(j):
                mul_one_minus(c, 2 * m)
        for _ in range(k + j):
            div_one_minus(c, m)
    return c


@lru_cache(maxsize=32)
def _series_cached(k: int, j: int, N: int, check: bool) -> BigSeries:
    coeffs = _overline_form(k, j, N)
    if check:
        other = _eta_quotient_form(k, j, N)
        if coeffs != other:
            n = next(i for i, (x, y) in enumerate(zip(coeffs, other)) if x != y)
            raise AssertionError(f"product forms disagree at n={n} for ({k},{j})")
    return BigSeries(coeffs)


def coloured_overpartition_series(params, N: int, check: bool = True) -> BigSeries:
    """pbar_{k,j}(0..N) as an exact series.

    With ``check`` the expansion is done twice, once from each product form
    of the generating function, and the two must agree.
    """
    params = _as_params(params)
    if N < 0:
        raise ParameterError("N must be non-negative")
    return _series_cached(params.k, params.j, N, check)


def _multiplicity_vectors(k: int, budget: int):
    """All length-k non-negative integer vectors with sum <= budget."""
    if k == 0:
        yield ()
        return
    for m in range(budget + 1):
        for rest in _multiplicity_vectors(k - 1, budget - m):
            yield (m,) + rest


@lru_cache(maxsize=32)
def _size_weights(k: int, j: int, t_max: int) -> tuple[int, ...]:
    """w[t]: ways to give one part size total multiplicity t across the colours.

    Colours 0..j-1 are overlinable: each one with multiplicity >= 1 doubles
    the count (its first occurrence plain or overlined).
    """
    w = [0] * (t_max + 1)
    for mults in _multiplicity_vectors(k, t_max):
        w[sum(mults)] += 2 ** sum(1 for m in mults[:j] if m)
    return tuple(w)


def enumerate_coloured_overpartitions(params, n: int) -> int:
    """Count (k, j)-coloured overpartitions of n combinatorially.

    Runs over part sizes from largest to smallest, choosing for each size a
    multiplicity vector over the k colours; no series arithmetic is used.
    """
    params = _as_params(params)
    if n < 0:
        raise ParameterError("n must be non-negative")
    w = _size_weights(params.k, params.j, n)

    @lru_cache(maxsize=None)
    def count(rest: int, size: int) -> int:
        if rest == 0:
            return 1
        if size == 0:
            return 0
        return sum(w[t] * count(rest - t * size, size - 1) for t in range(rest // size + 1))

    return count(n, n)


def scan_congruences(params, ell: int, N: int, series: BigSeries | None = None) -> list[CongruenceClaim]:
    """All delta with pbar(ell*n + delta) = 0 mod ell for every ell*n + delta <= N.

    These are candidates verified up to N, not theorems.
    """
    params = _as_params(params)
    if not is_prime(ell) or ell < 5:
        raise ParameterError(f"ell must be a prime >= 5, got {ell}")
    if N < ell:
        raise ParameterError(f"N = {N} < ell = {ell}: no progression has a test case")
    if series is None:
        series = coloured_overpartition_series(params, N)
    c = series.coeffs
    if len(c) <= N:
        raise ParameterError("supplied series is shorter than N")
    return [
        CongruenceClaim(params, ell, delta, N)
        for delta in range(ell)
        if all(c[n] % ell == 0 for n in range(delta, N + 1, ell))
    ]
