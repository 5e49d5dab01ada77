import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import NaiveField, monic_irreducibles, naive_rank
from qecc_bounds.galois import (
    CodeMatrix,
    FieldError,
    FieldSpec,
    field_arith,
    field_make,
    field_of_order,
    parse_matrix,
    rank,
    rref,
)

SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)]


def test_prime_field_modulus_is_x():
    f = field_make(2, 1)
    assert f.q == 2
    assert f.modulus == (0, 1)


def test_gf4_modulus():
    assert field_make(2, 2).modulus == (1, 1, 1)
    assert [tuple(f) for f in monic_irreducibles(2, 2)] == [(1, 1, 1)]


@pytest.mark.parametrize("p,m", [(2, 3), (3, 2), (2, 4), (5, 2)])
def test_default_modulus_is_smallest_irreducible(p, m):
    cands = monic_irreducibles(p, m)
    # smallest by integer encoding = lexicographic on coefficients high-to-low
    expected = min(cands, key=lambda c: sum(x * p**i for i, x in enumerate(c)))
    assert field_make(p, m).modulus == tuple(expected)


@pytest.mark.parametrize("p,m", [(6, 1), (1, 1), (9, 1), (2, 0), (2, 9)])
def test_field_make_rejects(p, m):
    with pytest.raises(FieldError):
        field_make(p, m)


def test_reducible_modulus_rejected():
    with pytest.raises(FieldError):
        FieldSpec(2, 2, (1, 0, 1))  # x^2 + 1 = (x + 1)^2


def test_examples_arith():
    f2 = field_make(2)
    assert field_arith(f2(1), f2(1), "add") == f2(0)
    f4 = field_make(2, 2)
    alpha = f4.encode([0, 1])
    assert field_arith(f4(alpha), f4(alpha), "mul").coeffs == (1, 1)
    f5 = field_make(5)
    assert field_arith(f5(2), None, "inv") == f5(3)


def test_mixed_fields_and_zero_inverse():
    f2, f3 = field_make(2), field_make(3)
    with pytest.raises(FieldError):
        field_arith(f2(1), f3(1), "add")
    with pytest.raises(ZeroDivisionError):
        f3(0).inverse()
    with pytest.raises(ZeroDivisionError):
        field_arith(f3(1), f3(0), "div")


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_tables_match_schoolbook_arithmetic(p, m):
    f = field_make(p, m)
    ref = NaiveField(p, f.modulus)
    for a in range(f.q):
        for b in range(f.q):
            assert f.add(a, b) == ref.add(a, b)
            assert f.mul(a, b) == ref.mul(a, b)


@pytest.mark.parametrize("p,m", [pm for pm in SMALL_FIELDS if pm[0] ** pm[1] <= 16])
def test_field_axioms_exhaustive(p, m):
    f = field_make(p, m)
    q = f.q
    A, M = f.add_table, f.mul_table
    idx = np.arange(q)
    assert (A[0] == idx).all() and (M[1] == idx).all()
    assert (A == A.T).all() and (M == M.T).all()
    for a, b, c in itertools.product(range(q), repeat=3):
        assert A[A[a, b], c] == A[a, A[b, c]]
        assert M[M[a, b], c] == M[a, M[b, c]]
        assert M[a, A[b, c]] == A[M[a, b], M[a, c]]
    for a in range(q):
        assert A[a, f.neg_table[a]] == 0
        if a:
            assert M[a, f.inv_table[a]] == 1


def test_rref_examples():
    for p in (2, 3, 5):
        f = field_make(p)
        I = CodeMatrix.from_array(f, np.eye(4, dtype=int))
        R, r, piv = rref(I)
        assert R == I and r == 4 and piv == [0, 1, 2, 3]
    f2 = field_make(2)
    R, r, piv = rref(CodeMatrix(f2, ((1, 1), (1, 1))))
    assert R.entries == ((1, 1), (0, 0)) and r == 1 and piv == [0]
    # det = 1 - 4 = -3 = 0 mod 3: singular, second row = 2 * first
    f3 = field_make(3)
    M = CodeMatrix(f3, ((1, 2), (2, 1)))
    R, r, piv = rref(M)
    assert r == naive_rank(NaiveField(3, f3.modulus), M.entries) == 1
    assert R.entries == ((1, 2), (0, 0)) and piv == [0]


def test_rref_empty():
    f = field_make(2)
    R, r, piv = rref(CodeMatrix(f, (), 3))
    assert r == 0 and piv == [] and R.cols == 3


@settings(max_examples=60, deadline=None)
@given(
    pm=st.sampled_from([(2, 1), (3, 1), (2, 2), (5, 1), (2, 3)]),
    shape=st.tuples(st.integers(1, 6), st.integers(1, 6)),
    seed=st.integers(0, 2**32 - 1),
)
def test_rref_properties(pm, shape, seed):
    f = field_make(*pm)
    arr = np.random.default_rng(seed).integers(0, f.q, size=shape)
    M = CodeMatrix.from_array(f, arr)
    R, r, piv = rref(M)
    assert rref(R)[0] == R
    assert r == rank(M.transpose())
    assert r == naive_rank(NaiveField(f.p, f.modulus), M.entries)
    assert piv == sorted(set(piv))
    Ra = R.to_array()
    assert not Ra[r:].any()
    for i, c in enumerate(piv):
        assert Ra[i, c] == 1 and np.count_nonzero(Ra[:, c]) == 1
        assert not Ra[i, :c].any()


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), pm=st.sampled_from([(3, 1), (2, 2), (5, 1)]))
def test_rref_square_idempotent(seed, pm):
    f = field_make(*pm)
    n = 5
    M = CodeMatrix.from_array(f, np.random.default_rng(seed).integers(0, f.q, size=(n, n)))
    R = rref(M)[0]
    assert rref(R) == rref(M)


def test_matrix_text_roundtrip():
    f = field_make(2, 3)
    M = CodeMatrix(f, ((1, 7, 3), (0, 2, 5)))
    text = M.to_text()
    assert text.splitlines()[0] == "q=2^3 modulus=1,1,0,1"
    assert parse_matrix(text) == M


def test_matrix_text_errors():
    with pytest.raises(FieldError):
        parse_matrix("")
    with pytest.raises(FieldError):
        parse_matrix("q=2^1\n1 0\n")
    with pytest.raises(FieldError):
        parse_matrix("q=2^1 modulus=0,1\n1 0\n1\n")
    with pytest.raises(FieldError):
        parse_matrix("q=2^1 modulus=0,1\n1 2\n")
    with pytest.raises(FieldError):
        parse_matrix("q=2^1 modulus=0,1\n1 x\n")


def test_field_of_order():
    assert field_of_order(9) == field_make(3, 2)
    with pytest.raises(FieldError):
        field_of_order(6)
