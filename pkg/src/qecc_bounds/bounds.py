"""Exact evaluation of quantum and classical code-parameter bounds.

Every comparison here is carried out on Python integers or ``Fraction``s.
Verdicts keep both sides of the inequality so that callers can print or
serialize them without loss.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Union

Exact = Union[int, Fraction]


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def integer_log(K: int, q: int) -> int | None:
    """k with q**k == K, or None when K is not a power of q."""
    k, r = 0, K
    while r > 1 and r % q == 0:
        r //= q
        k += 1
    return k if r == 1 else None


@dataclass(frozen=True)
class QuantumParams:
    """((n, K, d))_q parameters; ``k`` is set whenever K is a power of q."""

    n: int
    K: int
    d: int
    q: int
    css: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.d < 1:
            raise ValueError("d must be >= 1")
        if self.q < 2:
            raise ValueError("q must be >= 2")
        if self.K < 2:
            raise ValueError("K must be >= 2")

    @classmethod
    def from_k(cls, n: int, k: int, d: int, q: int, css: bool = False) -> "QuantumParams":
        return cls(n, q**k, d, q, css)

    @property
    def k(self) -> int | None:
        return integer_log(self.K, self.q)

    @property
    def t(self) -> int:
        return (self.d - 1) // 2

    def label(self) -> str:
        k = self.k
        body = f"[[{self.n},{k},{self.d}]]" if k is not None else f"(({self.n},{self.K},{self.d}))"
        return f"{body}_{self.q}"

    def to_dict(self) -> dict:
        return {"n": self.n, "K": str(self.K), "k": self.k, "d": self.d, "q": self.q, "css": self.css}

    @classmethod
    def from_dict(cls, data: dict) -> "QuantumParams":
        return cls(data["n"], int(data["K"]), data["d"], data["q"], data["css"])


@dataclass(frozen=True)
class BoundVerdict:
    name: str
    applicable: bool
    satisfied: bool
    lhs: Exact | None = None
    rhs: Exact | None = None
    meets: bool = False  # equality
    relation: str = "<="
    note: str = ""
    extra: dict = field(default_factory=dict, compare=True)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "applicable": self.applicable,
            "satisfied": self.satisfied,
            "lhs": _exact_str(self.lhs),
            "rhs": _exact_str(self.rhs),
            "meets": self.meets,
            "relation": self.relation,
            "note": self.note,
            "extra": dict(self.extra),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BoundVerdict":
        return cls(
            data["name"], data["applicable"], data["satisfied"],
            _parse_exact(data["lhs"]), _parse_exact(data["rhs"]),
            data["meets"], data["relation"], data["note"], dict(data["extra"]),
        )

    def human(self) -> str:
        if not self.applicable:
            return f"{self.name}: not applicable ({self.note})" if self.note else f"{self.name}: not applicable"
        status = "OK" if self.satisfied else "FAIL"
        line = f"{self.name}: {_exact_str(self.lhs)} {self.relation} {_exact_str(self.rhs)} : {status}"
        return line + (" (meets)" if self.meets else "")


def _exact_str(x: Exact | None) -> str | None:
    if x is None:
        return None
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return str(x)


def _parse_exact(s: str | None) -> Exact | None:
    if s is None:
        return None
    if "/" in s:
        return Fraction(s)
    return int(s)


def _verdict_le(name: str, lhs: Exact, rhs: Exact, **kw) -> BoundVerdict:
    return BoundVerdict(name, True, lhs <= rhs, lhs, rhs, meets=lhs == rhs, **kw)


def _verdict_ge(name: str, lhs: Exact, rhs: Exact, **kw) -> BoundVerdict:
    return BoundVerdict(name, True, lhs >= rhs, lhs, rhs, meets=lhs == rhs, relation=">=", **kw)


def _not_applicable(name: str, note: str) -> BoundVerdict:
    return BoundVerdict(name, False, False, note=note)


# --- quantum bounds ----------------------------------------------------------


def hamming_sphere(n: int, t: int, q: int) -> int:
    """sum_{j<=t} C(n, j) (q^2 - 1)^j"""
    return sum(binom(n, j) * (q * q - 1) ** j for j in range(t + 1))


def qhb_check(p: QuantumParams) -> BoundVerdict:
    """Quantum Hamming bound K * S <= q^n."""
    S = hamming_sphere(p.n, p.t, p.q)
    return _verdict_le("quantum_hamming", p.K * S, p.q**p.n, extra={"sphere": str(S)})


def quantum_singleton_check(p: QuantumParams) -> BoundVerdict:
    """K <= q^(n - 2d + 2); equality marks a quantum MDS code."""
    e = p.n - 2 * p.d + 2
    rhs: Exact = p.q**e if e >= 0 else Fraction(1, p.q ** (-e))
    v = _verdict_le("quantum_singleton", p.K, rhs)
    return BoundVerdict(**{**v.__dict__, "extra": {"mds": v.meets}})


# --- classical bounds --------------------------------------------------------


def classical_singleton(n: int, k: int, d: int) -> BoundVerdict:
    return _verdict_le("classical_singleton", k + d, n + 1)


def classical_hamming(n: int, k: int, d: int, q: int) -> BoundVerdict:
    t = (d - 1) // 2
    S = sum(binom(n, j) * (q - 1) ** j for j in range(t + 1))
    return _verdict_le("classical_hamming", q**k * S, q**n)


def griesmer_sum(k: int, d: int, q: int) -> int:
    """sum_{i<k} ceil(d / q^i)"""
    return sum(-(-d // q**i) for i in range(k))


def classical_griesmer(n: int, k: int, d: int, q: int) -> BoundVerdict:
    return _verdict_ge("classical_griesmer", n, griesmer_sum(k, d, q))


def classical_bounds(n: int, k: int, d: int, q: int) -> tuple[BoundVerdict, BoundVerdict, BoundVerdict]:
    if k < 1:
        raise ValueError("k must be >= 1")
    return (
        classical_singleton(n, k, d),
        classical_hamming(n, k, d, q),
        classical_griesmer(n, k, d, q),
    )


# --- CSS bounds --------------------------------------------------------------


def quantum_griesmer_css(n: int, k: int, d: int, q: int) -> BoundVerdict:
    """(n + k)/2 >= sum_{i<k} ceil(d / q^i), compared as n + k >= 2 * sum."""
    if k < 1:
        raise ValueError("k must be an integer >= 1")
    s = griesmer_sum(k, d, q)
    ok = n + k >= 2 * s
    return BoundVerdict(
        "quantum_griesmer_css", True, ok, Fraction(n + k, 2), s,
        meets=n + k == 2 * s, relation=">=",
    )


def cor_tight_singleton(n: int, k: int, d: int, q: int) -> BoundVerdict:
    """(n - k)/2 >= d(1 + 1/q) - 2 for d >= q, compared as q(n-k) >= 2d(q+1) - 4q."""
    name = "css_tight_singleton"
    if d < q:
        return _not_applicable(name, "requires d >= q")
    lhs = q * (n - k)
    rhs = 2 * d * (q + 1) - 4 * q
    return _verdict_ge(name, lhs, rhs)


def rains_css_max_t(n: int, k: int) -> int:
    """Largest t a binary [[n, k]] CSS code can correct."""
    return (n - k + 1) // 6


def rains_css_check(n: int, k: int, d: int, q: int) -> BoundVerdict:
    name = "css_rains"
    if q != 2:
        return _not_applicable(name, "binary codes only")
    t = (d - 1) // 2
    return _verdict_le(name, t, rains_css_max_t(n, k))


def k1_feasible_range(n: int, k: int, d: int) -> range:
    """Admissible inner dimensions k1; empty range means no CSS code."""
    lo = max(d - 1, 0)
    hi = min(n - k - d + 1, n - k)
    return range(lo, hi + 1) if lo <= hi else range(lo, lo)


def combined_css_hamming(n: int, k: int, d: int, q: int, k1: int) -> BoundVerdict:
    """q^k * A * B <= q^n with A, B the classical spheres of the two derived codes."""
    t = (d - 1) // 2
    a = sum(binom(n - k1, i) * (q - 1) ** i for i in range(t + 1))
    b = sum(binom(k1 + k, j) * (q - 1) ** j for j in range(t + 1))
    return _verdict_le("combined_css_hamming", q**k * a * b, q**n, extra={"k1": k1})


@dataclass(frozen=True)
class CssFeasibility:
    verdicts: tuple[BoundVerdict, ...]
    k1_range: tuple[int, int]  # inclusive; empty when lo > hi
    passing_k1: tuple[int, ...]
    css_possible: bool

    def to_dict(self) -> dict:
        return {
            "verdicts": [v.to_dict() for v in self.verdicts],
            "k1_range": list(self.k1_range),
            "passing_k1": list(self.passing_k1),
            "css_possible": self.css_possible,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CssFeasibility":
        return cls(
            tuple(BoundVerdict.from_dict(v) for v in data["verdicts"]),
            tuple(data["k1_range"]),
            tuple(data["passing_k1"]),
            data["css_possible"],
        )


def css_feasibility(n: int, k: int, d: int, q: int) -> CssFeasibility:
    """Run every necessary condition for an [[n, k, d]]_q CSS code."""
    if k < 1:
        raise ValueError("k must be an integer >= 1")
    p = QuantumParams.from_k(n, k, d, q, css=True)
    unconditional = [
        quantum_singleton_check(p),
        quantum_griesmer_css(n, k, d, q),
        cor_tight_singleton(n, k, d, q),
        rains_css_check(n, k, d, q),
    ]
    rng = k1_feasible_range(n, k, d)
    lo, hi = d - 1, n - k - d + 1
    range_v = BoundVerdict(
        "k1_range", True, len(rng) > 0, lo, min(hi, n - k),
        relation="<=", note="inner dimension window", meets=lo == hi,
    )
    combined = [combined_css_hamming(n, k, d, q, k1) for k1 in rng]
    passing = tuple(v.extra["k1"] for v in combined if v.satisfied)
    possible = (
        all(v.satisfied for v in unconditional if v.applicable)
        and len(rng) > 0
        and bool(passing)
    )
    verdicts = tuple(unconditional + [range_v] + combined)
    return CssFeasibility(verdicts, (lo, min(hi, n - k)), passing, possible)
