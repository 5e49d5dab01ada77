"""Classify quantum code parameters and cross-check bounds against real CSS codes.

``classify`` walks a fixed rule order and stops at the first rule that
decides.  Parameter sets that violate the quantum Hamming bound but are not
excluded by any implemented rule come out as ``OPEN_DEGENERATE_CANDIDATE``;
those are the interesting output, not an error.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable

import numpy as np

from . import bounds
from .bounds import BoundVerdict, QuantumParams
from .codes import WorkLimitExceeded, code_from_rows, dual, subcodes, subspaces
from .css import CssPair, css_distance, lemma1_derive, random_nested_pair, verify_derived
from .galois import field_of_order, prime_power
from .threshold import thm1_applies

SCHEMA_VERSION = 1
N_MAX_CEILING = 64


class Category(str, Enum):
    SATISFIES_HAMMING = "SATISFIES_HAMMING"
    IMPOSSIBLE_MDS_NONDEGENERATE = "IMPOSSIBLE_MDS_NONDEGENERATE"
    IMPOSSIBLE_THM1 = "IMPOSSIBLE_THM1"
    IMPOSSIBLE_CSS_Q5 = "IMPOSSIBLE_CSS_Q5"
    IMPOSSIBLE_CSS_STRUCTURAL = "IMPOSSIBLE_CSS_STRUCTURAL"
    OPEN_DEGENERATE_CANDIDATE = "OPEN_DEGENERATE_CANDIDATE"

    @property
    def impossible(self) -> bool:
        return self.value.startswith("IMPOSSIBLE")


@dataclass(frozen=True)
class Classification:
    params: QuantumParams
    category: Category
    reasons: tuple[BoundVerdict, ...]

    def chain(self) -> list[str]:
        return [v.human() for v in self.reasons] + [self.category.value]

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict(),
            "category": self.category.value,
            "reasons": [v.to_dict() for v in self.reasons],
            "chain": self.chain(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Classification":
        return cls(
            QuantumParams.from_dict(data["params"]),
            Category(data["category"]),
            tuple(BoundVerdict.from_dict(v) for v in data["reasons"]),
        )


def _thm1_verdict(p: QuantumParams) -> BoundVerdict:
    name = "threshold_theorem"
    if p.q < 3:
        return BoundVerdict(name, False, False, note="requires q >= 3")
    rep = thm1_applies(p.n, p.K, p.d, p.q)
    if rep.applies is None:
        return BoundVerdict(name, False, False, note="indeterminate at working precision")
    return BoundVerdict(
        name, rep.applies, rep.applies, note="log_q K + d <= (1 - 2e/q^2) n",
        extra={"margin": str(rep.margin)[:40]},
    )


def classify(p: QuantumParams) -> Classification:
    """Sort a parameter set into exactly one category, keeping the verdicts consulted."""
    reasons: list[BoundVerdict] = []

    qhb = bounds.qhb_check(p)
    reasons.append(qhb)
    if qhb.satisfied:
        return Classification(p, Category.SATISFIES_HAMMING, tuple(reasons))

    sing = bounds.quantum_singleton_check(p)
    reasons.append(sing)
    if sing.extra["mds"]:
        return Classification(p, Category.IMPOSSIBLE_MDS_NONDEGENERATE, tuple(reasons))

    th = _thm1_verdict(p)
    reasons.append(th)
    if th.applicable and th.satisfied:
        return Classification(p, Category.IMPOSSIBLE_THM1, tuple(reasons))

    k = p.k
    if p.css and k is not None:
        if p.q >= 5 and prime_power(p.q) is not None:
            reasons.append(BoundVerdict(
                "css_large_alphabet", True, True, p.q, 5, relation=">=",
                note="CSS codes with q >= 5 obey the quantum Hamming bound",
            ))
            return Classification(p, Category.IMPOSSIBLE_CSS_Q5, tuple(reasons))
        feas = bounds.css_feasibility(p.n, k, p.d, p.q)
        reasons.extend(feas.verdicts)
        if not feas.css_possible:
            return Classification(p, Category.IMPOSSIBLE_CSS_STRUCTURAL, tuple(reasons))
    return Classification(p, Category.OPEN_DEGENERATE_CANDIDATE, tuple(reasons))


# --- parameter scan ----------------------------------------------------------


@dataclass
class ScanReport:
    n_max: int
    q_list: tuple[int, ...]
    css: bool
    counts: dict[str, int]
    open_entries: list[QuantumParams]
    total: int
    by_length: dict[str, dict[str, int]] = field(default_factory=dict)  # "q,n" -> counts
    seed: int | None = None
    runtime: float = 0.0
    schema_version: int = SCHEMA_VERSION

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "schema_version": self.schema_version,
            "n_max": self.n_max,
            "q_list": list(self.q_list),
            "css": self.css,
            "total": self.total,
            "counts": dict(self.counts),
            "by_length": {key: dict(c) for key, c in self.by_length.items()},
            "open": [p.to_dict() for p in self.open_entries],
            "seed": self.seed,
        }
        if timing:
            out["runtime"] = self.runtime
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "ScanReport":
        return cls(
            data["n_max"], tuple(data["q_list"]), data["css"], dict(data["counts"]),
            [QuantumParams.from_dict(p) for p in data["open"]], data["total"],
            {key: dict(c) for key, c in data["by_length"].items()},
            data["seed"], data.get("runtime", 0.0), data["schema_version"],
        )


def iter_params(n_max: int, q_list: Iterable[int], css: bool, d_max: int | None = None):
    for q in sorted(set(q_list)):
        for n in range(2, n_max + 1):
            for k in range(1, n):
                for d in range(2, (n if d_max is None else min(n, d_max)) + 1):
                    yield QuantumParams.from_k(n, k, d, q, css)


def scan_range(
    n_max: int,
    q_list: Iterable[int],
    css: bool = False,
    output: Callable[[QuantumParams], None] | None = None,
    d_max: int | None = None,
) -> ScanReport:
    """Classify every [[n, k, d]]_q with n <= n_max, 1 <= k < n, 2 <= d <= n."""
    if n_max > N_MAX_CEILING:
        raise ValueError(f"n_max {n_max} exceeds the ceiling {N_MAX_CEILING}")
    q_list = tuple(sorted(set(q_list)))
    start = time.perf_counter()
    counts = Counter({c.value: 0 for c in Category})
    by_length: dict[str, Counter] = {}
    open_entries = []
    total = 0
    for p in iter_params(n_max, q_list, css, d_max):
        c = classify(p)
        counts[c.category.value] += 1
        by_length.setdefault(f"{p.q},{p.n}", Counter())[c.category.value] += 1
        total += 1
        if c.category is Category.OPEN_DEGENERATE_CANDIDATE:
            open_entries.append(p)
            if output is not None:
                output(p)
    open_entries.sort(key=lambda p: (p.n, p.k, p.d, p.q))
    return ScanReport(
        n_max, q_list, css, dict(counts), open_entries, total,
        {key: dict(c) for key, c in by_length.items()},
        runtime=time.perf_counter() - start,
    )


# --- exhaustive / sampled CSS oracle -------------------------------------------

EXHAUSTIVE_LIMIT = {2: 6, 3: 4}


@dataclass(frozen=True)
class OracleFailure:
    check: str
    n: int
    k: int
    d: int
    k1: int
    detail: str = ""


@dataclass
class OracleReport:
    q: int
    n_max: int
    seed: int
    samples: int
    pairs_checked: int = 0
    pairs_skipped: int = 0  # work limit hit
    exhaustive_lengths: list[int] = field(default_factory=list)
    sampled_lengths: list[int] = field(default_factory=list)
    realized: dict[str, int] = field(default_factory=dict)
    failures: list[OracleFailure] = field(default_factory=list)
    distance_offset: int = 0
    runtime: float = 0.0
    schema_version: int = SCHEMA_VERSION

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "schema_version": self.schema_version,
            "q": self.q,
            "n_max": self.n_max,
            "seed": self.seed,
            "samples": self.samples,
            "pairs_checked": self.pairs_checked,
            "pairs_skipped": self.pairs_skipped,
            "exhaustive_lengths": list(self.exhaustive_lengths),
            "sampled_lengths": list(self.sampled_lengths),
            "realized": dict(sorted(self.realized.items())),
            "failures": [f.__dict__ for f in self.failures],
            "distance_offset": self.distance_offset,
            "ok": self.ok,
        }
        if timing:
            out["runtime"] = self.runtime
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "OracleReport":
        return cls(
            q=data["q"], n_max=data["n_max"], seed=data["seed"], samples=data["samples"],
            pairs_checked=data["pairs_checked"], pairs_skipped=data["pairs_skipped"],
            exhaustive_lengths=list(data["exhaustive_lengths"]),
            sampled_lengths=list(data["sampled_lengths"]),
            realized=dict(data["realized"]),
            failures=[OracleFailure(**f) for f in data["failures"]],
            distance_offset=data["distance_offset"],
            runtime=data.get("runtime", 0.0),
            schema_version=data["schema_version"],
        )


def check_pair(pair: CssPair, budget: int | None = None, distance_offset: int = 0) -> tuple[str, list[OracleFailure]]:
    """Realize one pair and run every assertion on it.

    Returns the parameter label and the list of failed checks.
    """
    n, k, k1, q = pair.n, pair.k, pair.k1, pair.field.q
    d = css_distance(pair, budget) + distance_offset
    label = f"[[{n},{k},{d}]]_{q}"
    fails = []

    def fail(check, detail=""):
        fails.append(OracleFailure(check, n, k, d, k1, detail))

    p = QuantumParams.from_k(n, k, d, q, css=True)
    if not bounds.qhb_check(p).satisfied:
        fail("quantum_hamming")
    if not bounds.quantum_griesmer_css(n, k, d, q).satisfied:
        fail("quantum_griesmer_css")
    if q == 2 and (d - 1) // 2 > bounds.rains_css_max_t(n, k):
        fail("css_rains")
    rep = verify_derived(pair, lemma1_derive(pair), budget, d=d)
    if not rep.lemma1_holds:
        fail("lemma1", f"D weight {rep.D_min_weight}, D' weight {rep.Dprime_min_weight}")
    cat = classify(p).category
    if cat.impossible:
        fail("classify", cat.value)
    return label, fails


def _nested_pairs(q: int, n: int):
    f = field_of_order(q)
    seen = set()
    for k2 in range(1, n + 1):
        for G in subspaces(f, n, k2):
            C2 = code_from_rows(f, G, n)
            for k1 in range(0, k2):
                for C1 in subcodes(C2, k1):
                    key = (C1.gen.entries, C2.gen.entries)
                    if key in seen:
                        continue
                    seen.add(key)
                    yield CssPair(C1, C2)


def _run_pairs(pairs, budget, distance_offset):
    realized: Counter = Counter()
    failures = []
    checked = skipped = 0
    for pair in pairs:
        try:
            label, fails = check_pair(pair, budget, distance_offset)
        except WorkLimitExceeded:
            skipped += 1
            continue
        checked += 1
        realized[label] += 1
        failures.extend(fails)
    return checked, skipped, realized, failures


def _exhaustive_length(args):
    q, n, budget, distance_offset = args
    return _run_pairs(_nested_pairs(q, n), budget, distance_offset)


def _sampled_length(args):
    q, n, samples, seed, budget, distance_offset = args
    f = field_of_order(q)
    rng = np.random.default_rng([seed, n])
    pairs = (random_nested_pair(f, n, rng) for _ in range(samples))
    return _run_pairs(pairs, budget, distance_offset)


def steane_pair() -> CssPair:
    """The [[7,1,3]]_2 Steane code: C1 = simplex code inside the Hamming code."""
    f = field_of_order(2)
    hamming = code_from_rows(f, [
        [1, 0, 0, 0, 0, 1, 1],
        [0, 1, 0, 0, 1, 0, 1],
        [0, 0, 1, 0, 1, 1, 0],
        [0, 0, 0, 1, 1, 1, 1],
    ])
    return CssPair(dual(hamming), hamming)


def oracle_exhaustive_css(
    q: int,
    n_max: int,
    budget: int | None = None,
    seed: int = 0,
    samples: int = 10_000,
    distance_offset: int = 0,
    workers: int = 1,
) -> OracleReport:
    """Build real CSS codes and confirm every bound and classification agrees.

    Lengths up to the exhaustive limit for ``q`` enumerate every nested pair;
    longer lengths draw ``samples`` seeded random pairs each.
    """
    if q not in EXHAUSTIVE_LIMIT:
        raise ValueError("oracle supports q in {2, 3}")
    start = time.perf_counter()
    report = OracleReport(q=q, n_max=n_max, seed=seed, samples=samples, distance_offset=distance_offset)
    jobs = []
    for n in range(1, n_max + 1):
        if n <= EXHAUSTIVE_LIMIT[q]:
            report.exhaustive_lengths.append(n)
            jobs.append((_exhaustive_length, (q, n, budget, distance_offset)))
        else:
            report.sampled_lengths.append(n)
            jobs.append((_sampled_length, (q, n, samples, seed, budget, distance_offset)))

    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_call, jobs))
    else:
        results = [fn(args) for fn, args in jobs]

    realized: Counter = Counter()
    for checked, skipped, real, fails in results:
        report.pairs_checked += checked
        report.pairs_skipped += skipped
        realized.update(real)
        report.failures.extend(fails)
    if q == 2 and n_max >= 7:
        checked, skipped, real, fails = _run_pairs([steane_pair()], budget, distance_offset)
        report.pairs_checked += checked
        realized.update(real)
        report.failures.extend(fails)
    report.realized = dict(sorted(realized.items()))
    report.failures.sort(key=lambda f: (f.n, f.k, f.d, f.k1, f.check))
    report.runtime = time.perf_counter() - start
    return report


def _call(job):
    fn, args = job
    return fn(args)
