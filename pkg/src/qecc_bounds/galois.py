"""Finite fields GF(p^m) and dense matrices over them.

Elements are stored as integers in ``[0, q)``: the base-p digits of the
integer are the polynomial-basis coefficients, lowest degree first.  Every
field carries precomputed addition/multiplication tables so that the
brute-force code routines can work on whole numpy arrays at once.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

import numpy as np

MAX_ORDER = 256


class FieldError(ValueError):
    """Invalid field construction or mixed-field arithmetic."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


# --- polynomials over GF(p), coefficient lists low-to-high -----------------


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` divided by ``mod`` over GF(p)."""
    r = _trim([x % p for x in a])
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(r) - 1 >= dm and r:
        shift = len(r) - 1 - dm
        factor = (r[-1] * inv_lead) % p
        for i, c in enumerate(mod):
            r[shift + i] = (r[shift + i] - factor * c) % p
        _trim(r)
    return r


def _monic_polys(p: int, deg: int) -> Iterable[list[int]]:
    """All monic polynomials of the given degree, in increasing integer order."""
    for low in range(p**deg):
        coeffs = [(low // p**i) % p for i in range(deg)]
        yield coeffs + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Exhaustive irreducibility test: no monic factor of degree 1..deg/2."""
    poly = _trim(list(poly))
    deg = len(poly) - 1
    if deg < 1:
        return False
    for fd in range(1, deg // 2 + 1):
        for f in _monic_polys(p, fd):
            if not _poly_mod(poly, f, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible degree-m polynomial (ordered by integer encoding)."""
    for poly in _monic_polys(p, m):
        if is_irreducible(poly, p):
            return tuple(poly)
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")


# --- fields ----------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) with a fixed monic irreducible modulus (coefficients low-to-high)."""

    p: int
    m: int
    modulus: tuple[int, ...]
    add_table: np.ndarray = field(init=False, repr=False, compare=False)
    mul_table: np.ndarray = field(init=False, repr=False, compare=False)
    neg_table: np.ndarray = field(init=False, repr=False, compare=False)
    inv_table: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p, m, modulus = self.p, self.m, tuple(int(c) for c in self.modulus)
        if not is_prime(p):
            raise FieldError(f"p not prime: {p}")
        if m < 1:
            raise FieldError(f"m must be >= 1, got {m}")
        if p**m > MAX_ORDER:
            raise FieldError(f"field order {p}^{m} exceeds {MAX_ORDER}")
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {m}")
        if any(not 0 <= c < p for c in modulus):
            raise FieldError("modulus coefficients must lie in [0, p)")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        object.__setattr__(self, "modulus", modulus)
        add, mul = _build_tables(p, m, modulus)
        q = p**m
        neg = np.array([int(np.flatnonzero(add[a] == 0)[0]) for a in range(q)])
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.flatnonzero(mul[a] == 1)[0])
        for name, arr in (("add_table", add), ("mul_table", mul), ("neg_table", neg), ("inv_table", inv)):
            arr = np.asarray(arr, dtype=np.int64)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def q(self) -> int:
        return self.p**self.m

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, v) for v in range(self.q)]

    def coeffs(self, value: int) -> tuple[int, ...]:
        return tuple((value // self.p**i) % self.p for i in range(self.m))

    def encode(self, coeffs: Sequence[int]) -> int:
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    # scalar helpers on integer encodings
    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero")
        return int(self.inv_table[a])

    def header(self) -> str:
        return f"q={self.p}^{self.m} modulus={','.join(map(str, self.modulus))}"

    def __str__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"


def _build_tables(p: int, m: int, modulus: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray]:
    q = p**m
    digits = [[(v // p**i) % p for i in range(m)] for v in range(q)]
    weights = [p**i for i in range(m)]
    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        da = digits[a]
        for b in range(a, q):
            db = digits[b]
            s = sum(((x + y) % p) * w for x, y, w in zip(da, db, weights))
            prod = [0] * (2 * m - 1)
            for i, x in enumerate(da):
                if x:
                    for j, y in enumerate(db):
                        prod[i + j] += x * y
            r = _poly_mod(prod, modulus, p)
            v = sum(c * w for c, w in zip(r, weights))
            add[a, b] = add[b, a] = s
            mul[a, b] = mul[b, a] = v
    return add, mul


@functools.lru_cache(maxsize=None)
def field_make(p: int, m: int = 1) -> FieldSpec:
    """GF(p^m) with the smallest monic irreducible modulus of degree m."""
    if not is_prime(p):
        raise FieldError(f"p not prime: {p}")
    if m < 1:
        raise FieldError(f"m must be >= 1, got {m}")
    if p**m > MAX_ORDER:
        raise FieldError(f"field order {p}^{m} exceeds {MAX_ORDER}")
    return FieldSpec(p, m, smallest_irreducible(p, m))


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, m) with q = p^m, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                return None
            m, r = 0, q
            while r % p == 0:
                r //= p
                m += 1
            return (p, m) if r == 1 else None
    return None


def field_of_order(q: int) -> FieldSpec:
    pm = prime_power(q)
    if pm is None:
        raise FieldError(f"q={q} is not a prime power")
    return field_make(*pm)


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise FieldError(f"{self.value} is not an element of {self.field}")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, other: "FieldElement") -> int:
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldError("mixed fields")
        return other.value

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(b)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.field}({self.value})"


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def field_arith(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    """Apply ``op`` in {add, sub, mul, div, inv, neg}; unary ops ignore ``b``."""
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    if op not in _OPS:
        raise ValueError(f"unknown field operation {op!r}")
    if b is None or b.field != a.field:
        raise FieldError("mixed fields")
    return _OPS[op](a, b)


# --- matrices --------------------------------------------------------------


@dataclass(frozen=True)
class CodeMatrix:
    """Immutable r x n matrix of integer-encoded field elements."""

    field: FieldSpec
    entries: tuple[tuple[int, ...], ...]
    ncols: int = -1

    def __post_init__(self):
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        widths = {len(r) for r in entries}
        if len(widths) > 1:
            raise FieldError("matrix rows have different lengths")
        ncols = widths.pop() if widths else max(self.ncols, 0)
        if entries and self.ncols not in (-1, ncols):
            raise FieldError("ncols disagrees with row length")
        q = self.field.q
        if any(not 0 <= x < q for row in entries for x in row):
            raise FieldError(f"matrix entry outside {self.field}")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def from_array(cls, field: FieldSpec, arr, ncols: int | None = None) -> "CodeMatrix":
        arr = np.asarray(arr, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(0 if arr.size == 0 else 1, -1)
        if ncols is None:
            ncols = arr.shape[1] if arr.ndim == 2 else 0
        return cls(field, tuple(tuple(r) for r in arr.tolist()), ncols)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return self.ncols

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)

    def transpose(self) -> "CodeMatrix":
        return CodeMatrix.from_array(self.field, self.to_array().T, self.rows)

    def take_columns(self, cols: Sequence[int]) -> "CodeMatrix":
        return CodeMatrix.from_array(self.field, self.to_array()[:, list(cols)], len(cols))

    def to_text(self) -> str:
        lines = [self.field.header()]
        lines += [" ".join(map(str, row)) for row in self.entries]
        return "\n".join(lines) + "\n"


def matmul(field: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of integer-encoded arrays over ``field`` (shapes (r, s) @ (s, c))."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    add, mul = field.add_table, field.mul_table
    for i in range(a.shape[1]):
        out = add[out, mul[a[:, i][:, None], b[i][None, :]]]
    return out


def rref(M: CodeMatrix) -> tuple[CodeMatrix, int, list[int]]:
    """Reduced row-echelon form; returns (R, rank, pivot columns).

    R keeps the row count of M, with the zero rows at the bottom.
    """
    f = M.field
    R = M.to_array().copy()
    add, mul, neg, inv = f.add_table, f.mul_table, f.neg_table, f.inv_table
    nrows, ncols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        s = r + int(nz[0])
        if s != r:
            R[[r, s]] = R[[s, r]]
        R[r] = mul[inv[R[r, c]], R[r]]
        for i in range(nrows):
            if i != r and R[i, c]:
                R[i] = add[R[i], mul[neg[R[i, c]], R[r]]]
        pivots.append(c)
        r += 1
    return CodeMatrix.from_array(f, R, ncols), r, pivots


def rank(M: CodeMatrix) -> int:
    return rref(M)[1]


def parse_matrix(text: str) -> CodeMatrix:
    """Parse the ``q=p^m modulus=...`` text format."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FieldError("empty matrix file")
    tokens = dict(tok.split("=", 1) for tok in lines[0].split() if "=" in tok)
    if "q" not in tokens or "modulus" not in tokens:
        raise FieldError("header must read 'q=p^m modulus=c0,c1,...'")
    try:
        if "^" in tokens["q"]:
            p, m = (int(x) for x in tokens["q"].split("^"))
        else:
            p, m = int(tokens["q"]), 1
        modulus = tuple(int(c) for c in tokens["modulus"].split(","))
        f = FieldSpec(p, m, modulus)
        rows = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise FieldError(f"malformed matrix file: {exc}") from exc
    return CodeMatrix(f, tuple(rows))


def read_matrix(path) -> CodeMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def write_matrix(M: CodeMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(M.to_text())


def all_vectors(field: FieldSpec, length: int) -> Iterable[tuple[int, ...]]:
    return product(range(field.q), repeat=length)
