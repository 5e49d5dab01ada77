"""High-precision machinery behind the large-alphabet Hamming-bound threshold.

The boundary value ``delta = 2e / q^2`` is irrational, so decisions about
which side of it a parameter set falls on are made with 100-bit interval
arithmetic.  A comparison the enclosure cannot resolve is reported as
indeterminate (``None``) rather than guessed.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

import mpmath
from mpmath.ctx_iv import MPIntervalContext

from .bounds import binom, hamming_sphere

PRECISION_BITS = 100

mp = mpmath.MPContext()
mp.prec = PRECISION_BITS
iv = MPIntervalContext()
iv.prec = PRECISION_BITS


def delta_threshold(q: int) -> mpmath.mpf:
    """2e / q^2 at the working precision."""
    if q < 2:
        raise ValueError("q must be >= 2")
    return 2 * mp.e / mp.mpf(q) ** 2


@functools.lru_cache(maxsize=None)
def delta_interval(q: int):
    """Rigorous enclosure of 2e / q^2."""
    return 2 * iv.e / iv.mpf(q) ** 2


def endpoints(x) -> tuple[Fraction, Fraction]:
    """Exact rational endpoints of an interval."""
    lo, hi = x._mpi_
    return to_fraction(mp.make_mpf(lo)), to_fraction(mp.make_mpf(hi))


def _decide_nonneg(x) -> bool | None:
    """Sign test on an interval: True if >= 0, False if < 0, None if unresolved."""
    lo, hi = endpoints(x)
    if lo >= 0:
        return True
    if hi < 0:
        return False
    return None


@dataclass(frozen=True)
class TableRow:
    q: int
    delta: Decimal
    one_minus_delta: Decimal


def ceil_decimals(x, places: int = 3) -> Decimal:
    """Ceiling of an interval value at ``places`` decimals; fails if ambiguous."""
    scale = 10**places
    lo, hi = (e * scale for e in endpoints(x))
    c_lo, c_hi = -(-lo // 1), -(-hi // 1)
    if c_lo != c_hi:
        raise ArithmeticError("enclosure straddles a rounding boundary")
    return Decimal(int(c_lo)).scaleb(-places)


def table1(qs=range(3, 12)) -> list[TableRow]:
    """delta (rounded up at the third decimal) and 1 - delta for each q."""
    rows = []
    for q in qs:
        d = ceil_decimals(delta_interval(q))
        rows.append(TableRow(q, d, Decimal(1) - d))
    return rows


def table1_tsv(rows: list[TableRow]) -> str:
    lines = [
        "\t".join(["q"] + [str(r.q) for r in rows]),
        "\t".join(["delta"] + [f"{r.delta:.3f}" for r in rows]),
        "\t".join(["1-delta"] + [f"{r.one_minus_delta:.3f}" for r in rows]),
    ]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ThresholdReport:
    q: int
    delta: mpmath.mpf
    one_minus_delta: mpmath.mpf
    applies: bool | None  # None: indeterminate at the working precision
    margin: mpmath.mpf  # (1 - delta) n - (log_q K + d)
    precision_bits: int = PRECISION_BITS

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "delta": mpmath.nstr(self.delta, 30),
            "one_minus_delta": mpmath.nstr(self.one_minus_delta, 30),
            "applies": self.applies,
            "margin": mpmath.nstr(self.margin, 30),
            "precision_bits": self.precision_bits,
        }


def thm1_applies(n: int, K: int, d: int, q: int) -> ThresholdReport:
    """Is log_q K + d <= (1 - 2e/q^2) n, decided with interval arithmetic?"""
    if q < 3:
        raise ValueError("the threshold theorem needs q >= 3")
    delta = delta_interval(q)
    k = _int_log(K, q)
    if k is not None:
        margin = (n - k - d) - n * delta
    else:
        margin = n * (1 - delta) - d - iv.log(iv.mpf(K)) / iv.log(iv.mpf(q))
    return ThresholdReport(
        q=q,
        delta=delta_threshold(q),
        one_minus_delta=1 - delta_threshold(q),
        applies=_decide_nonneg(margin),
        margin=mp.make_mpf(margin.mid._mpi_[0]),
    )


def _int_log(K: int, q: int) -> int | None:
    k, r = 0, K
    while r > 1 and r % q == 0:
        r //= q
        k += 1
    return k if r == 1 else None


def binary_entropy(x, ctx=mp):
    """h(x) = -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0."""
    if x == 0 or x == 1:
        return ctx.mpf(0)
    x = ctx.mpf(x)
    return -x * ctx.log(x, 2) - (1 - x) * ctx.log(1 - x, 2)


def entropy_bound(n: int, t: int) -> tuple[int, object, bool]:
    """Check sum_{j<=t} C(n, j) <= 2^(n h(t/n)) rigorously.

    Returns the exact left side, the interval right side and the verdict.
    """
    lhs = sum(binom(n, j) for j in range(t + 1))
    if t == 0:
        rhs = iv.mpf(1)
    else:
        x = iv.mpf(t) / n
        h = -x * iv.log(x) / iv.log(2) - (1 - x) * iv.log(1 - x) / iv.log(2)
        rhs = iv.power(2, n * h)
    return lhs, rhs, lhs <= endpoints(rhs)[0]


def capacity_T(n: int, d: int, q: int, delta):
    """q^(delta n + d) / sum_{j<=t} C(n, j)(q^2 - 1)^j"""
    delta = mp.mpf(delta)
    if not 0 < delta <= 1:
        raise ValueError("delta must lie in (0, 1]")
    t = (d - 1) // 2
    return mp.power(q, delta * n + d) / hamming_sphere(n, t, q)


def qhbcond_lhs(n: int, t: int, q: int):
    """h(t/n) log_q 2 + (t/n) log_q(1 - q^-2) - 1/n"""
    if not 0 <= t <= n:
        raise ValueError("need 0 <= t <= n")
    x = mp.mpf(t) / n
    return (
        binary_entropy(x) * mp.log(2, q)
        + x * mp.log(1 - mp.mpf(q) ** -2, q)
        - mp.mpf(1) / n
    )


def f_function(x, q: int):
    """x - h(x/2) log_q 2, for x in (0, 2)."""
    x = mp.mpf(x)
    if not 0 < x < 2:
        raise ValueError("f is defined on (0, 2)")
    h = x / 2
    return x + h * mp.log(h, q) + (1 - h) * mp.log(1 - h, q)


def f_derivative(x, q: int):
    """Closed form (1/2) log_q(q^2 x / (2 - x))."""
    x = mp.mpf(x)
    return mp.log(q * q * x / (2 - x), q) / 2


def to_fraction(x) -> Fraction:
    """Exact rational value of an mpf."""
    sign, man, exp, _ = mp.mpf(x)._mpf_
    if not man:
        return Fraction(0)
    value = Fraction(int(man)) * Fraction(2) ** int(exp)
    return -value if sign else value
