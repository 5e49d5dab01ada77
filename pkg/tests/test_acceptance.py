"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line."""

import time
from decimal import Decimal

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from qecc_bounds.bounds import (
    QuantumParams, griesmer_sum, qhb_check, quantum_griesmer_css, quantum_singleton_check,
)
from qecc_bounds.css import lemma1_derive, random_nested_pair, verify_derived
from qecc_bounds.galois import field_of_order
from qecc_bounds.scan import Category, classify, oracle_exhaustive_css, scan_range, steane_pair
from qecc_bounds.threshold import endpoints, entropy_bound, table1, thm1_applies

PRINTED_DELTA = ["0.605", "0.340", "0.218", "0.152", "0.111", "0.085", "0.068", "0.055", "0.045"]
PRINTED_ONE_MINUS = ["0.395", "0.660", "0.782", "0.848", "0.889", "0.915", "0.932", "0.945", "0.955"]


class Criterion:
    """Times a criterion body and records its summary line, including on failure."""

    def __init__(self, num: int, title: str):
        self.num, self.title, self.detail = num, title, ""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        self.elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        line = f"[{status}] {self.num}. {self.title}: {self.detail} ({self.elapsed:.2f} s)"
        if exc is not None:
            line += f" -- {type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
        ACCEPTANCE_LINES[self.num] = line
        print(line)
        return False


def test_1_table1():
    with Criterion(1, "threshold table q=3..11") as c:
        rows = table1()
        got_d = [f"{r.delta:.3f}" for r in rows]
        got_o = [f"{r.one_minus_delta:.3f}" for r in rows]
        exact = sum(a == b for a, b in zip(got_d + got_o, PRINTED_DELTA + PRINTED_ONE_MINUS))
        close = all(
            abs(Decimal(a) - Decimal(b)) <= Decimal("0.001")
            for a, b in zip(got_d + got_o, PRINTED_DELTA + PRINTED_ONE_MINUS)
        )
        c.detail = f"{exact}/18 exact"
        assert [r.q for r in rows] == list(range(3, 12))
        assert close
        assert exact == 18
    assert c.elapsed < 1.0


def test_2_griesmer_equality():
    with Criterion(2, "quantum Griesmer equality [[4,2,2]]_2") as c:
        v = quantum_griesmer_css(4, 2, 2, 2)
        c.detail = f"{v.lhs} = {v.rhs}"
        assert v.satisfied and v.meets
        assert v.lhs == 3 and v.rhs == 3


def test_3_griesmer_implies_singleton():
    with Criterion(3, "Griesmer implies Singleton") as c:
        checked = bad = 0
        for q in (2, 3, 4, 5, 7, 8, 9):
            for n in range(1, 31):
                for k in range(1, n + 1):
                    for d in range(1, n + 1):
                        if n + k >= 2 * griesmer_sum(k, d, q):
                            checked += 1
                            if n - k < 2 * d - 2:
                                bad += 1
        c.detail = f"{checked} tuples satisfy Griesmer, {bad} counterexamples"
        assert bad == 0
    assert c.elapsed < 30.0


def test_4_threshold_cross_check():
    # Tuples are drawn with k + d - 1 <= n - d + 1 so that the quantum Singleton
    # bound holds; outside it the threshold condition alone does not imply the
    # Hamming bound (e.g. [[20,1,18]]_11).
    with Criterion(4, "threshold theorem vs exact Hamming bound") as c:
        rng = np.random.default_rng(4)
        target, accepted, drawn, failures = 100_000, 0, 0, []
        while accepted < target:
            drawn += 1
            q = int(rng.integers(3, 12))
            n = int(rng.integers(2, 61))
            d = int(rng.integers(1, (n + 2) // 2 + 1))
            kmax = n - 2 * d + 2
            if kmax < 1:
                continue
            k = int(rng.integers(1, kmax + 1))
            p = QuantumParams.from_k(n, k, d, q)
            if thm1_applies(n, p.K, d, q).applies is not True:
                continue
            accepted += 1
            if not qhb_check(p).satisfied:
                failures.append(p.label())
        c.detail = f"{accepted} applicable of {drawn} drawn, {len(failures)} failures"
        assert not failures, failures[:5]
    assert c.elapsed < 60.0


def test_5_large_alphabet_scan():
    with Criterion(5, "CSS scan n<=12, q in {5,7,8,9}") as c:
        rep = scan_range(12, [5, 7, 8, 9], css=True)
        c.detail = f"{rep.total} parameter sets, {len(rep.open_entries)} OPEN"
        assert rep.open_entries == []
        assert rep.counts[Category.OPEN_DEGENERATE_CANDIDATE.value] == 0
    assert c.elapsed < 60.0


def test_6_derived_codes():
    with Criterion(6, "derived codes on random nested pairs") as c:
        steane = steane_pair()
        rep = verify_derived(steane, lemma1_derive(steane))
        assert rep.d == 3 and rep.lemma1_holds
        assert (rep.D_length, rep.D_dim) == (4, 1) and rep.D_min_weight >= 3
        assert (rep.Dprime_length, rep.Dprime_dim) == (4, 1) and rep.Dprime_min_weight >= 3

        rng = np.random.default_rng(6)
        total, bad = 0, []
        for q in (2, 3, 4, 5):
            f = field_of_order(q)
            for _ in range(200):
                n = int(rng.integers(2, 9))
                pair = random_nested_pair(f, n, rng)
                r = verify_derived(pair, lemma1_derive(pair))
                total += 1
                if not r.lemma1_holds:
                    bad.append(r.to_dict())
        c.detail = f"{total - len(bad)}/{total} pass, Steane gives two [4,1,{rep.D_min_weight}]_2 codes"
        assert not bad, bad[:3]
    assert c.elapsed < 120.0


def test_7_exhaustive_oracle():
    with Criterion(7, "exhaustive CSS oracle q=2, n<=5") as c:
        rep = oracle_exhaustive_css(2, 5)
        c.detail = f"{rep.pairs_checked} pairs, {len(rep.failures)} failures"
        assert rep.exhaustive_lengths == [1, 2, 3, 4, 5]
        assert rep.pairs_checked > 0
        assert rep.ok, [f.__dict__ for f in rep.failures[:5]]
    assert c.elapsed < 600.0


def test_8_open_region():
    with Criterion(8, "open region [[5,2,3]]_2") as c:
        p = QuantumParams.from_k(5, 2, 3, 2)
        first, second = classify(p), classify(p)
        assert first.to_dict() == second.to_dict()
        qhb = first.reasons[0]
        c.detail = f"{first.category.value}, Hamming {qhb.lhs} > {qhb.rhs}"
        assert first.category is Category.OPEN_DEGENERATE_CANDIDATE
        assert qhb.name == "quantum_hamming" and not qhb.satisfied
        assert (qhb.lhs, qhb.rhs) == (64, 32)
        assert not any(v.applicable and v.satisfied for v in first.reasons if v.name == "threshold_theorem")
        assert not quantum_singleton_check(p).extra["mds"]
        assert first.chain()[-1] == "OPEN_DEGENERATE_CANDIDATE"


def test_9_entropy_bound():
    with Criterion(9, "entropy bound n<=40, t<=n/2") as c:
        checked, bad = 0, []
        for n in range(1, 41):
            for t in range(0, n // 2 + 1):
                lhs, rhs, ok = entropy_bound(n, t)
                checked += 1
                if not ok:
                    bad.append((n, t, lhs, endpoints(rhs)[0]))
        c.detail = f"{checked} cases, {len(bad)} failures"
        assert not bad, bad[:5]
