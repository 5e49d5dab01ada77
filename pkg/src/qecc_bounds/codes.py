"""Classical linear codes over GF(q).

A code is identified by the RREF of its generator matrix, so two generator
matrices with the same row space give equal ``LinearCode`` values.  Minimum
weights are found by exhaustive enumeration under an explicit work budget.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

import numpy as np

from .galois import CodeMatrix, FieldSpec, matmul, rref

DEFAULT_BUDGET = 2**24
_CHUNK = 2**15


class WorkLimitExceeded(RuntimeError):
    """Raised when a brute-force scan would exceed its work limit."""


def default_budget() -> int:
    env = os.environ.get("QECC_BOUNDS_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class LinearCode:
    field: FieldSpec
    n: int
    gen: CodeMatrix  # RREF, exactly k nonzero rows

    @property
    def k(self) -> int:
        return self.gen.rows

    @property
    def q(self) -> int:
        return self.field.q

    def generator(self) -> np.ndarray:
        return self.gen.to_array()

    def pivots(self) -> list[int]:
        G = self.generator()
        return [int(np.flatnonzero(row)[0]) for row in G]

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}]_{self.q})"


def code_from_generator(M: CodeMatrix) -> LinearCode:
    """Canonical code spanned by the rows of ``M``."""
    if M.cols < 1:
        raise ValueError("generator must have at least one column")
    R, r, _ = rref(M)
    gen = CodeMatrix.from_array(M.field, R.to_array()[:r], M.cols)
    return LinearCode(M.field, M.cols, gen)


def code_from_rows(field: FieldSpec, rows, n: int | None = None) -> LinearCode:
    rows = np.asarray(rows, dtype=np.int64)
    if n is None:
        n = rows.shape[-1]
    return code_from_generator(CodeMatrix.from_array(field, rows.reshape(-1, n), n))


def zero_code(field: FieldSpec, n: int) -> LinearCode:
    return LinearCode(field, n, CodeMatrix(field, (), n))


def full_space(field: FieldSpec, n: int) -> LinearCode:
    return code_from_rows(field, np.eye(n, dtype=np.int64), n)


def dual(C: LinearCode) -> LinearCode:
    """Orthogonal complement under the standard inner product."""
    f, n = C.field, C.n
    G = C.generator()
    piv = C.pivots()
    free = [j for j in range(n) if j not in set(piv)]
    H = np.zeros((len(free), n), dtype=np.int64)
    for r, j in enumerate(free):
        H[r, j] = 1
        for i, pc in enumerate(piv):
            H[r, pc] = f.neg_table[G[i, j]]
    if not free:
        return zero_code(f, n)
    return code_from_rows(f, H, n)


def parity_check(C: LinearCode) -> np.ndarray:
    return dual(C).generator()


def syndromes(C: LinearCode, words: np.ndarray) -> np.ndarray:
    H = parity_check(C)
    if H.shape[0] == 0:
        return np.zeros((len(words), 0), dtype=np.int64)
    return matmul(C.field, words, H.T)


def contains(C: LinearCode, word) -> bool:
    word = np.asarray(word, dtype=np.int64).reshape(1, -1)
    return not syndromes(C, word).any()


def is_subcode(C1: LinearCode, C2: LinearCode) -> bool:
    """True iff every generator row of C1 lies in C2."""
    if C1.field != C2.field or C1.n != C2.n:
        raise ValueError("codes differ in length or field")
    if C1.k == 0:
        return True
    return not syndromes(C2, C1.generator()).any()


def _messages(q: int, k: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, k), dtype=np.int64)
    for i in range(k - 1, -1, -1):
        out[:, i] = idx % q
        idx //= q
    return out


def codeword_chunks(C: LinearCode, chunk: int = _CHUNK) -> Iterator[np.ndarray]:
    """All q^k codewords, in message order, as arrays of at most ``chunk`` rows."""
    f, G = C.field, C.generator()
    total = C.q**C.k
    for start in range(0, total, chunk):
        msgs = _messages(C.q, C.k, start, min(total, start + chunk))
        yield matmul(f, msgs, G)


def _check_budget(C: LinearCode, budget: int | None) -> None:
    budget = default_budget() if budget is None else budget
    if C.q**C.k > budget:
        raise WorkLimitExceeded(
            f"work limit: {C.q}^{C.k} codewords exceed budget {budget}"
        )


def min_weight(C: LinearCode, budget: int | None = None) -> int:
    """Exact minimum Hamming weight over all nonzero codewords."""
    if C.k < 1:
        raise ValueError("minimum weight of the zero code is undefined")
    _check_budget(C, budget)
    best = C.n
    for words in codeword_chunks(C):
        w = np.count_nonzero(words, axis=1)
        w = w[w > 0]
        if w.size:
            best = min(best, int(w.min()))
    return best


def coset_min_weight(C2: LinearCode, C1: LinearCode, budget: int | None = None) -> int:
    """Minimum weight of the codewords of C2 that are not in C1."""
    if not is_subcode(C1, C2) or C1.k >= C2.k:
        raise ValueError("C1 is not a strict subcode of C2")
    _check_budget(C2, budget)
    best = None
    H = parity_check(C1)
    for words in codeword_chunks(C2):
        if H.shape[0]:
            outside = matmul(C2.field, words, H.T).any(axis=1)
        else:
            outside = np.zeros(len(words), dtype=bool)
        if outside.any():
            w = int(np.count_nonzero(words[outside], axis=1).min())
            best = w if best is None else min(best, w)
    return best


def subspaces(field: FieldSpec, n: int, k: int) -> Iterator[np.ndarray]:
    """Every k-dimensional subspace of GF(q)^n, as its k x n RREF generator."""
    q = field.q
    for piv in combinations(range(n), k):
        slots = [(i, j) for i, p in enumerate(piv) for j in range(p + 1, n) if j not in piv]
        for values in product(range(q), repeat=len(slots)):
            G = np.zeros((k, n), dtype=np.int64)
            for i, p in enumerate(piv):
                G[i, p] = 1
            for (i, j), v in zip(slots, values):
                G[i, j] = v
            yield G


def subcodes(C: LinearCode, dim: int) -> Iterator[LinearCode]:
    """Every subcode of C of the given dimension."""
    G = C.generator()
    for coeffs in subspaces(C.field, C.k, dim):
        if dim == 0:
            yield zero_code(C.field, C.n)
        else:
            yield code_from_rows(C.field, matmul(C.field, coeffs, G), C.n)
