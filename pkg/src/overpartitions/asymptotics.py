"""Asymptotics of pbar_{k,j}(n) and the major-arc building blocks.

Everything here is computed with mpmath at an explicit working precision
(``dps`` significant decimal digits).  Exponentially large quantities are
formed as logarithms and exponentiated last; mpmath floats have unbounded
exponent range so e^{pi sqrt((2k+j) n / 3)} at n = 5000 is representable.

Wright's circle method: if F(e^{-z}) = z^B e^{A/z} (sum_s alpha_s z^s + ...)
on the major arc, the coefficients of F satisfy

    c(n) ~ n^{-(2B+3)/4} e^{2 sqrt(A n)} sum_r p_r n^{-r/2},
    p_r = sum_{s<=r} alpha_s c_{s, r-s},
    c_{s,r} = (-1/(4 sqrt A))^r sqrt(A)^{s+B+1/2} / (2 sqrt pi)
              * Gamma(s+B+3/2+r) / (r! Gamma(s+B+3/2-r)).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import mpmath

from .partitions import ColourParams, _as_params, coloured_overpartition_series

DEFAULT_DPS = 50
MIN_ACCEPTANCE_DPS = 30


class AsymptoticsError(ValueError):
    pass


def _require_right_half_plane(z) -> None:
    if mpmath.re(z) <= 0:
        raise AsymptoticsError(f"need Re(z) > 0, got z = {z}")


# ---------------------------------------------------------------------------
# Main term and Table-1 style ratios
# ---------------------------------------------------------------------------

def log_main_term(params, n: int, dps: int = DEFAULT_DPS):
    """log C(k, j; n)."""
    params = _as_params(params)
    if n < 1:
        raise AsymptoticsError("n must be >= 1")
    k, j = params.k, params.j
    with mpmath.workdps(dps + 10):
        s = mpmath.mpf(2 * k + j)
        val = (
            mpmath.mpf(k + 1) / 4 * mpmath.log(s)
            - mpmath.mpf(2 * k + j + 3) / 2 * mpmath.log(2)
            - mpmath.mpf(k + 1) / 4 * mpmath.log(3)
            - mpmath.mpf(k + 3) / 4 * mpmath.log(n)
            + mpmath.pi * mpmath.sqrt(s * n / 3)
        )
    with mpmath.workdps(dps):
        return +val


def main_term(params, n: int, dps: int = DEFAULT_DPS):
    """C(k, j; n) = (2k+j)^{(k+1)/4} e^{pi sqrt((2k+j)n/3)} / (2^{(2k+j+3)/2} 3^{(k+1)/4} n^{(k+3)/4})."""
    lg = log_main_term(params, n, dps)
    with mpmath.workdps(dps):
        return mpmath.exp(lg)


def _log_int(x: int, dps: int):
    # mpf(int) rounds once to the working precision; fine at dps >= 30
    with mpmath.workdps(dps + 10):
        return mpmath.log(mpmath.mpf(x))


@dataclass(frozen=True)
class RatioRow:
    params: ColourParams
    n: int
    pbar: int
    ratio: mpmath.mpf

    def truncated(self, places: int = 3) -> str:
        """Ratio truncated (not rounded) to ``places`` decimals."""
        scale = 10**places
        return _fixed(int(mpmath.floor(self.ratio * scale)), places)

    def rounded(self, places: int = 3) -> str:
        scale = 10**places
        return _fixed(int(mpmath.nint(self.ratio * scale)), places)


def _fixed(scaled: int, places: int) -> str:
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


def ratio_report(params, ns: Sequence[int], dps: int = DEFAULT_DPS, index_shift: int = 0) -> list[RatioRow]:
    """pbar_{k,j}(n + index_shift) / C(k, j; n) for each n.

    ``index_shift=-1`` reproduces the convention of the published sample
    table, whose entries match pbar(n-1)/C(n) rather than pbar(n)/C(n).
    """
    params = _as_params(params)
    dps = max(dps, MIN_ACCEPTANCE_DPS)
    top = max(ns) + max(index_shift, 0)
    series = coloured_overpartition_series(params, top)
    rows = []
    for n in ns:
        value = series[n + index_shift]
        lg = _log_int(value, dps) - log_main_term(params, n, dps + 10)
        with mpmath.workdps(dps):
            rows.append(RatioRow(params, n, value, mpmath.exp(lg)))
    return rows


# ---------------------------------------------------------------------------
# Wright's circle method
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WrightParams:
    A: object
    B: object
    alphas: tuple = field(default_factory=tuple)
    depth: int | None = None

    def __post_init__(self):
        if not self.alphas:
            raise AsymptoticsError("need at least alpha_0")
        if mpmath.mpmathify(self.A) <= 0:
            raise AsymptoticsError("A must be positive")
        depth = len(self.alphas) if self.depth is None else self.depth
        if depth < 1:
            raise AsymptoticsError("depth must be >= 1")
        if depth > len(self.alphas):
            raise AsymptoticsError(
                f"depth {depth} needs alpha_0..alpha_{depth - 1}, only {len(self.alphas)} supplied"
            )
        object.__setattr__(self, "alphas", tuple(self.alphas))
        object.__setattr__(self, "depth", depth)

    @classmethod
    def for_params(cls, params, dps: int = DEFAULT_DPS) -> "WrightParams":
        """Major-arc data of prod (1+q^n)^j / (1-q^n)^k: A = (2k+j) pi^2/12, B = k/2."""
        params = _as_params(params)
        k, j = params.k, params.j
        with mpmath.workdps(dps + 10):
            A = (2 * k + j) * mpmath.pi**2 / 12
            B = mpmath.mpf(k) / 2
            alpha0 = mpmath.power(2, -mpmath.mpf(j) / 2) * mpmath.power(2 * mpmath.pi, -mpmath.mpf(k) / 2)
        return cls(A, B, (alpha0,))


def wright_c(A, B, s: int, r: int, dps: int = DEFAULT_DPS):
    """c_{s,r}; a pole of the Gamma in the denominator makes the term vanish."""
    with mpmath.workdps(dps + 10):
        A = mpmath.mpf(A)
        B = mpmath.mpf(B)
        top = s + B + mpmath.mpf(3) / 2 + r
        if top <= 0 and top == mpmath.floor(top):
            raise AsymptoticsError(f"Gamma pole in numerator at {top} (s={s}, r={r})")
        sqA = mpmath.sqrt(A)
        pref = (-1 / (4 * sqA)) ** r * sqA ** (s + B + mpmath.mpf(1) / 2) / (2 * mpmath.sqrt(mpmath.pi))
        ratio = mpmath.gamma(top) * mpmath.rgamma(s + B + mpmath.mpf(3) / 2 - r) / mpmath.factorial(r)
        return pref * ratio


def wright_p_coefficients(wp: WrightParams, dps: int = DEFAULT_DPS) -> list:
    """p_0 .. p_{depth-1}."""
    out = []
    with mpmath.workdps(dps + 10):
        for r in range(wp.depth):
            out.append(mpmath.fsum(mpmath.mpmathify(wp.alphas[s]) * wright_c(wp.A, wp.B, s, r - s, dps) for s in range(r + 1)))
    return out


def log_wright_prefactor(wp: WrightParams, n: int, dps: int = DEFAULT_DPS):
    """log of n^{-(2B+3)/4} e^{2 sqrt(A n)}."""
    with mpmath.workdps(dps + 10):
        B = mpmath.mpf(wp.B)
        return -(2 * B + 3) / 4 * mpmath.log(n) + 2 * mpmath.sqrt(mpmath.mpf(wp.A) * n)


def wright_expansion(wp: WrightParams, n: int, dps: int = DEFAULT_DPS):
    """n^{-(2B+3)/4} e^{2 sqrt(A n)} sum_{r<depth} p_r n^{-r/2}."""
    if n < 1:
        raise AsymptoticsError("n must be >= 1")
    p = wright_p_coefficients(wp, dps)
    with mpmath.workdps(dps + 10):
        tail = mpmath.fsum(pr * mpmath.power(n, -mpmath.mpf(r) / 2) for r, pr in enumerate(p))
        val = mpmath.exp(log_wright_prefactor(wp, n, dps)) * tail
    with mpmath.workdps(dps):
        return +val


# ---------------------------------------------------------------------------
# Major and minor arcs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConeDomain:
    """|arg z| <= theta together with the major-arc aperture |y| <= M x."""

    M: float
    theta: float = 0.0

    def __post_init__(self):
        if self.M <= 0:
            raise AsymptoticsError("aperture M must be positive")
        if not 0 <= self.theta < math.pi / 2:
            raise AsymptoticsError("theta must lie in [0, pi/2)")

    def in_cone(self, z) -> bool:
        z = mpmath.mpmathify(z)
        return mpmath.re(z) > 0 and abs(mpmath.arg(z)) <= self.theta

    def on_major_arc(self, z) -> bool:
        z = mpmath.mpmathify(z)
        return mpmath.re(z) > 0 and abs(mpmath.im(z)) <= self.M * mpmath.re(z)


def eta_major(z, dps: int = DEFAULT_DPS):
    """sqrt(z / 2 pi) e^{pi^2 / (6 z)}, the major-arc value of 1/(e^-z; e^-z)_inf."""
    with mpmath.workdps(dps):
        z = mpmath.mpmathify(z)
        _require_right_half_plane(z)
        return mpmath.sqrt(z / (2 * mpmath.pi)) * mpmath.exp(mpmath.pi**2 / (6 * z))


def major_arc_value(params, z, dps: int = DEFAULT_DPS):
    """2^{-j/2} (z / 2 pi)^{k/2} exp(pi^2 (2k+j) / (12 z))."""
    params = _as_params(params)
    k, j = params.k, params.j
    with mpmath.workdps(dps):
        z = mpmath.mpmathify(z)
        _require_right_half_plane(z)
        return (
            mpmath.power(2, -mpmath.mpf(j) / 2)
            * mpmath.power(z / (2 * mpmath.pi), mpmath.mpf(k) / 2)
            * mpmath.exp(mpmath.pi**2 * (2 * k + j) / (12 * z))
        )


def minor_arc_bound(z, C_const, dps: int = DEFAULT_DPS):
    """x^{1/2} e^{pi^2/(6x) - C/x} with x = Re z."""
    with mpmath.workdps(dps):
        x = mpmath.re(mpmath.mpmathify(z))
        _require_right_half_plane(x)
        return mpmath.sqrt(x) * mpmath.exp(mpmath.pi**2 / (6 * x) - mpmath.mpf(C_const) / x)


def minor_arc_constant_search(x, ys: Sequence, dps: int = 30):
    """Largest C with |1/(e^-z; e^-z)| <= minor_arc_bound(z, C) at every z = x + i y.

    A positive return value means the bound holds on the sample with some C > 0.
    """
    with mpmath.workdps(dps):
        x = mpmath.mpf(x)
        best = mpmath.inf
        for y in ys:
            lg = mpmath.re(log_truncated_product([(1, 1, -1)], mpmath.mpc(x, y), dps))
            allowed = mpmath.pi**2 / 6 + x * mpmath.log(x) / 2 - x * lg
            best = min(best, allowed)
        return best


# ---------------------------------------------------------------------------
# Dilogarithm / Lerch transcendent at roots of unity
# ---------------------------------------------------------------------------

def li2_unit(theta, dps: int = DEFAULT_DPS):
    """Re Li_2(e^{i theta}) = pi^2/6 - theta (2 pi - theta) / 4 for 0 <= theta <= 2 pi."""
    with mpmath.workdps(dps):
        theta = mpmath.mpf(theta)
        if theta < 0 or theta > 2 * mpmath.pi:
            raise AsymptoticsError(f"theta = {theta} outside [0, 2 pi]")
        return mpmath.pi**2 / 6 - theta * (2 * mpmath.pi - theta) / 4


def _reduced_root(num: int, den: int) -> tuple[int, int]:
    if den < 1:
        raise AsymptoticsError("root of unity denominator must be >= 1")
    num %= den
    g = math.gcd(num, den)
    return num // g, den // g


def root_of_unity(num: int, den: int, dps: int = DEFAULT_DPS):
    with mpmath.workdps(dps):
        return mpmath.expjpi(2 * mpmath.mpf(num) / den)


def lerch_weight2(num: int, den: int, dps: int = DEFAULT_DPS):
    """zeta * Phi(zeta, 2, 1) = Li_2(zeta) for zeta = e^{2 pi i num/den}.

    The series sum_{n>=1} zeta^n / n^2 is regrouped by n mod b (b the exact
    order of zeta) into

        b^{-2} sum_{r=1}^{b} zeta^r hurwitz_zeta(2, r/b),

    which is the same absolutely convergent sum reordered.
    """
    num, b = _reduced_root(num, den)
    with mpmath.workdps(dps + 10):
        if num == 0:
            return +(mpmath.pi**2 / 6)
        total = mpmath.fsum(
            root_of_unity(num * r, b, dps + 10) * mpmath.zeta(2, mpmath.mpf(r) / b)
            for r in range(1, b + 1)
        )
        val = total / b**2
    with mpmath.workdps(dps):
        return +val


def lerch_partial_sum(num: int, den: int, terms: int, dps: int = DEFAULT_DPS):
    """Direct partial sum of zeta^n/n^2 for n <= terms, with the tail bound 1/terms."""
    with mpmath.workdps(dps):
        zeta = root_of_unity(num, den, dps)
        acc = mpmath.mpc(0)
        power = mpmath.mpc(1)
        for n in range(1, terms + 1):
            power *= zeta
            acc += power / (n * n)
        return acc, mpmath.mpf(1) / terms


def f1_major_arc(num: int, den: int, z, dps: int = DEFAULT_DPS):
    """(1 - zeta)^{-1/2} e^{-Li_2(zeta)/z}, major-arc value of F1(zeta; e^{-z})."""
    r, b = _reduced_root(num, den)
    if b < 2:
        raise AsymptoticsError("zeta = 1 excluded; need a primitive b-th root with b >= 2")
    li2 = lerch_weight2(r, b, dps)
    with mpmath.workdps(dps):
        z = mpmath.mpmathify(z)
        _require_right_half_plane(z)
        zeta = root_of_unity(r, b, dps)
        return mpmath.exp(-li2 / z) / mpmath.sqrt(1 - zeta)


# ---------------------------------------------------------------------------
# Truncated-product oracles
# ---------------------------------------------------------------------------

def log_truncated_product(factors, z, dps: int = DEFAULT_DPS):
    """log of prod_{n>=1} prod_f (1 - w_f e^{-s_f n z})^{e_f}.

    ``factors`` is a list of (w, s, e) triples.  The product is cut where
    |e^{-n z}| < 10^{-(dps+5)}.
    """
    with mpmath.workdps(dps + 10):
        z = mpmath.mpmathify(z)
        x = mpmath.re(z)
        _require_right_half_plane(z)
        cutoff = int(mpmath.ceil((dps + 5) * mpmath.log(10) / x)) + 1
        total = mpmath.mpc(0)
        for w, step, expo in factors:
            w = mpmath.mpmathify(w)
            q = mpmath.exp(-step * z)
            qn = mpmath.mpc(1)
            part = mpmath.mpc(0)
            for _ in range(1, cutoff // step + 2):
                qn *= q
                part += mpmath.log(1 - w * qn)
            total += expo * part
        return total


def product_eta(z, dps: int = DEFAULT_DPS):
    """1 / (e^-z; e^-z)_inf by direct multiplication."""
    with mpmath.workdps(dps):
        return mpmath.exp(log_truncated_product([(1, 1, -1)], z, dps))


def product_kj(params, z, dps: int = DEFAULT_DPS):
    """prod (1 + e^{-nz})^j / (1 - e^{-nz})^k by direct multiplication."""
    params = _as_params(params)
    with mpmath.workdps(dps):
        return mpmath.exp(log_truncated_product([(-1, 1, params.j), (1, 1, -params.k)], z, dps))


def product_f1(num: int, den: int, z, dps: int = DEFAULT_DPS):
    """F1(zeta; e^{-z}) = prod (1 - zeta e^{-nz}) by direct multiplication."""
    zeta = root_of_unity(num, den, dps + 10)
    with mpmath.workdps(dps):
        return mpmath.exp(log_truncated_product([(zeta, 1, 1)], z, dps))


def relative_error(approx, exact):
    return abs(approx / exact - 1)


# ---------------------------------------------------------------------------
# Published sample table
# ---------------------------------------------------------------------------

TABLE1_PATH = Path(__file__).parent / "data" / "table1.json"


@dataclass(frozen=True)
class TableEntry:
    k: int
    j: int
    n: int
    printed: str


def load_published_table(path=TABLE1_PATH) -> list[TableEntry]:
    data = json.loads(Path(path).read_text())
    return [
        TableEntry(row["k"], row["j"], n, value)
        for row in data["rows"]
        for n, value in zip(data["columns"], row["values"])
    ]
