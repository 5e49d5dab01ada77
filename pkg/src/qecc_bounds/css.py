"""CSS codes from nested classical codes, and the two auxiliary codes they imply.

For ``C1 ⊂ C2`` of dimensions ``k1`` and ``k1 + k`` the CSS code has
parameters ``[[n, k, d]]_q`` with ``d`` the smaller of the minimum weights of
``C2 \\ C1`` and ``C1^⊥ \\ C2^⊥``.  ``lemma1_derive`` brings the generator of
``C2`` to the block form ``[[I, P], [0, I, A']]`` (with an explicit column
permutation) and reads off a ``[n - k1, k, >= d]`` code; the same procedure on
the dual pair gives a ``[k + k1, k, >= d]`` code.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bounds import QuantumParams
from .codes import (
    LinearCode,
    code_from_rows,
    coset_min_weight,
    dual,
    is_subcode,
    min_weight,
    zero_code,
)
from .galois import CodeMatrix, FieldSpec, matmul


@dataclass(frozen=True)
class CssPair:
    C1: LinearCode
    C2: LinearCode

    def __post_init__(self):
        if self.C1.field != self.C2.field or self.C1.n != self.C2.n:
            raise ValueError("C1 and C2 differ in length or field")
        if not is_subcode(self.C1, self.C2):
            raise ValueError("C1 is not a subcode of C2")
        if self.C1.k >= self.C2.k:
            raise ValueError("C1 is not a strict subcode of C2")

    @property
    def field(self) -> FieldSpec:
        return self.C2.field

    @property
    def n(self) -> int:
        return self.C2.n

    @property
    def k1(self) -> int:
        return self.C1.k

    @property
    def k(self) -> int:
        return self.C2.k - self.C1.k

    def dual_pair(self) -> "CssPair":
        return CssPair(dual(self.C2), dual(self.C1))


def css_distance(pair: CssPair, budget: int | None = None) -> int:
    dp = pair.dual_pair()
    return min(
        coset_min_weight(pair.C2, pair.C1, budget),
        coset_min_weight(dp.C2, dp.C1, budget),
    )


def css_params(pair: CssPair, budget: int | None = None) -> QuantumParams:
    d = css_distance(pair, budget)
    return QuantumParams.from_k(pair.n, pair.k, d, pair.field.q, css=True)


@dataclass(frozen=True)
class BlockForm:
    """Generator of the outer code in block form, with its column permutation.

    ``block`` equals ``[[I_k1, P], [0, I_k, A']]``; column ``j`` of ``block``
    is column ``perm[j]`` of the original coordinates.
    """

    perm: tuple[int, ...]
    block: CodeMatrix
    inner_dim: int

    def unpermuted(self) -> CodeMatrix:
        B = self.block.to_array()
        out = np.zeros_like(B)
        out[:, list(self.perm)] = B
        return CodeMatrix.from_array(self.block.field, out, B.shape[1])

    def bottom(self) -> np.ndarray:
        return self.block.to_array()[self.inner_dim:, self.inner_dim:]


def block_form(inner: LinearCode, outer: LinearCode) -> BlockForm:
    """Bring the generator of ``outer`` to block form relative to ``inner``."""
    f = outer.field
    add, mul, neg = f.add_table, f.mul_table, f.neg_table
    top = inner.generator()
    piv1 = inner.pivots()
    rows = outer.generator().copy()
    for i, p in enumerate(piv1):
        rows = add[rows, mul[neg[rows[:, p]][:, None], top[i][None, :]]]
    rest = code_from_rows(f, rows, outer.n)
    bottom = rest.generator()
    piv2 = rest.pivots()
    if rest.k != outer.k - inner.k or set(piv1) & set(piv2):
        raise ValueError("inner code is not a subcode of the outer code")
    others = [j for j in range(outer.n) if j not in set(piv1) | set(piv2)]
    perm = tuple(piv1 + piv2 + others)
    G = np.vstack([top.reshape(-1, outer.n), bottom.reshape(-1, outer.n)])
    block = CodeMatrix.from_array(f, G[:, list(perm)], outer.n)
    return BlockForm(perm, block, inner.k)


@dataclass(frozen=True)
class DerivedCodes:
    D: LinearCode
    Dprime: LinearCode
    primal: BlockForm = field(repr=False)
    dual: BlockForm = field(repr=False)


def lemma1_derive(pair: CssPair) -> DerivedCodes:
    """The ``[n-k1, k]`` and ``[k+k1, k]`` codes read off the block forms."""
    f = pair.field
    primal = block_form(pair.C1, pair.C2)
    dp = pair.dual_pair()
    dualf = block_form(dp.C1, dp.C2)
    D = code_from_rows(f, primal.bottom(), pair.n - pair.k1)
    Dprime = code_from_rows(f, dualf.bottom(), pair.n - dp.k1)
    return DerivedCodes(D, Dprime, primal, dualf)


@dataclass(frozen=True)
class VerifyReport:
    n: int
    k: int
    k1: int
    d: int
    q: int
    D_length: int
    D_dim: int
    D_min_weight: int
    Dprime_length: int
    Dprime_dim: int
    Dprime_min_weight: int
    lemma1_holds: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)

    @classmethod
    def from_dict(cls, data: dict) -> "VerifyReport":
        return cls(**data)


def verify_derived(
    pair: CssPair, derived: DerivedCodes, budget: int | None = None, d: int | None = None
) -> VerifyReport:
    """Brute-force check that both derived codes have dimension k and weight >= d."""
    if d is None:
        d = css_distance(pair, budget)
    D, Dp = derived.D, derived.Dprime
    wD = min_weight(D, budget) if D.k else 0
    wDp = min_weight(Dp, budget) if Dp.k else 0
    holds = D.k == pair.k and Dp.k == pair.k and wD >= d and wDp >= d
    return VerifyReport(
        n=pair.n, k=pair.k, k1=pair.k1, d=d, q=pair.field.q,
        D_length=D.n, D_dim=D.k, D_min_weight=wD,
        Dprime_length=Dp.n, Dprime_dim=Dp.k, Dprime_min_weight=wDp,
        lemma1_holds=bool(holds),
    )


def random_nested_pair(
    field: FieldSpec, n: int, rng: np.random.Generator, max_tries: int = 1000
) -> CssPair:
    """C2 from random generator rows; C1 spanned by a random subset of C2 codewords."""
    q = field.q
    for _ in range(max_tries):
        k2 = int(rng.integers(1, n + 1))
        C2 = code_from_rows(field, rng.integers(0, q, size=(k2, n)), n)
        if C2.k == 0:
            continue
        m = int(rng.integers(0, C2.k + 1))
        if m == 0:
            C1 = zero_code(field, n)
        else:
            coeffs = rng.integers(0, q, size=(m, C2.k))
            C1 = code_from_rows(field, matmul(field, coeffs, C2.generator()), n)
        if C1.k < C2.k:
            return CssPair(C1, C2)
    raise RuntimeError("could not draw a strict nested pair")
