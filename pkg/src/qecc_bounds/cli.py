"""Command-line front end.

Exit status: 0 when every checked bound holds or a verification passes,
1 when a bound is violated or a verification fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds
from .bounds import QuantumParams
from .codes import WorkLimitExceeded, code_from_generator, default_budget
from .css import CssPair, css_distance, lemma1_derive, verify_derived
from .galois import FieldError, read_matrix
from .scan import classify, oracle_exhaustive_css, scan_range
from .threshold import table1, table1_tsv, thm1_applies

FORMATS = ("json", "tsv", "human")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _tsv(rows: list[list]) -> str:
    return "".join("\t".join("" if x is None else str(x) for x in r) + "\n" for r in rows)


def _verdict_rows(verdicts) -> list[list]:
    rows = [["name", "applicable", "satisfied", "lhs", "relation", "rhs", "meets", "note"]]
    for v in verdicts:
        d = v.to_dict()
        rows.append([d["name"], d["applicable"], d["satisfied"], d["lhs"], d["relation"], d["rhs"], d["meets"], d["note"]])
    return rows


# --- subcommands -----------------------------------------------------------


def cmd_check(args) -> tuple[int, str]:
    if (args.k is None) == (args.K is None):
        raise UsageError("give exactly one of --k or --K")
    try:
        if args.k is not None:
            p = QuantumParams.from_k(args.n, args.k, args.d, args.q, args.css)
        else:
            p = QuantumParams(args.n, int(args.K), args.d, args.q, args.css)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.css and p.k is None:
        raise UsageError("CSS bounds need K to be a power of q")

    verdicts = [bounds.qhb_check(p), bounds.quantum_singleton_check(p)]
    feas = None
    if args.css:
        feas = bounds.css_feasibility(p.n, p.k, p.d, p.q)
        verdicts += [v for v in feas.verdicts if v.name != "quantum_singleton"]
    cls = classify(p)
    ok = verdicts[0].satisfied and verdicts[1].satisfied and (feas is None or feas.css_possible)

    if args.format == "json":
        out = {
            "params": p.to_dict(),
            "verdicts": [v.to_dict() for v in verdicts],
            "css_possible": feas.css_possible if feas else None,
            "threshold": thm1_applies(p.n, p.K, p.d, p.q).to_dict() if p.q >= 3 else None,
            "classification": cls.to_dict(),
            "status": "pass" if ok else "fail",
        }
        text = _dump(out)
    elif args.format == "tsv":
        text = _tsv(_verdict_rows(verdicts) + [["classification", cls.category.value]])
    else:
        lines = [p.label()] + [v.human() for v in verdicts]
        if feas is not None:
            lines.append(f"css_possible: {feas.css_possible}")
        lines.append(f"classification: {cls.category.value}")
        text = "\n".join(lines) + "\n"
    return (0 if ok else 1), text


def _read_pair(args) -> CssPair:
    M1, M2 = read_matrix(args.c1), read_matrix(args.c2)
    try:
        return CssPair(code_from_generator(M1), code_from_generator(M2))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_css_verify(args) -> tuple[int, str]:
    pair = _read_pair(args)
    d = css_distance(pair, args.budget)
    p = QuantumParams.from_k(pair.n, pair.k, d, pair.field.q, css=True)
    rep = verify_derived(pair, lemma1_derive(pair), args.budget, d=d)
    verdicts = [
        bounds.qhb_check(p),
        bounds.quantum_singleton_check(p),
        bounds.quantum_griesmer_css(p.n, pair.k, d, p.q),
        bounds.cor_tight_singleton(p.n, pair.k, d, p.q),
        bounds.rains_css_check(p.n, pair.k, d, p.q),
    ]
    cls = classify(p)
    ok = rep.lemma1_holds and all(v.satisfied for v in verdicts if v.applicable) and not cls.category.impossible
    if args.format == "json":
        text = _dump({
            "params": p.to_dict(), "k1": pair.k1,
            "verdicts": [v.to_dict() for v in verdicts],
            "lemma1": rep.to_dict(),
            "classification": cls.to_dict(),
            "status": "pass" if ok else "fail",
        })
    elif args.format == "tsv":
        text = _tsv(_verdict_rows(verdicts) + [["lemma1_holds", rep.lemma1_holds]])
    else:
        text = "\n".join([p.label()] + [v.human() for v in verdicts] + [f"lemma1_holds: {rep.lemma1_holds}"]) + "\n"
    return (0 if ok else 1), text


def cmd_derive(args) -> tuple[int, str]:
    pair = _read_pair(args)
    derived = lemma1_derive(pair)
    rep = verify_derived(pair, derived, args.budget)
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "D.txt").write_text(derived.D.gen.to_text(), encoding="utf-8")
        (out / "Dprime.txt").write_text(derived.Dprime.gen.to_text(), encoding="utf-8")
    if args.format == "json":
        text = _dump({
            "D": {"generator": derived.D.gen.to_text(), "permutation": list(derived.primal.perm)},
            "Dprime": {"generator": derived.Dprime.gen.to_text(), "permutation": list(derived.dual.perm)},
            "report": rep.to_dict(),
        })
    elif args.format == "tsv":
        d = rep.to_dict()
        text = _tsv([list(d), list(d.values())])
    else:
        text = (
            f"# D  [{rep.D_length},{rep.D_dim},{rep.D_min_weight}]\n{derived.D.gen.to_text()}"
            f"# D' [{rep.Dprime_length},{rep.Dprime_dim},{rep.Dprime_min_weight}]\n{derived.Dprime.gen.to_text()}"
            f"# lemma1_holds: {rep.lemma1_holds}\n"
        )
    return (0 if rep.lemma1_holds else 1), text


def cmd_scan(args) -> tuple[int, str]:
    try:
        report = scan_range(args.n_max, args.q, args.css, d_max=args.d_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.figure:
        from .plotting import plot_scan

        plot_scan(report, args.figure)
    if args.format == "json":
        text = _dump(report.to_dict(timing=args.timing))
    elif args.format == "tsv":
        text = _tsv([["n", "k", "d", "q", "css"]] + [[p.n, p.k, p.d, p.q, p.css] for p in report.open_entries])
    else:
        lines = [f"{cat}: {cnt}" for cat, cnt in report.counts.items()]
        lines += [f"OPEN {p.label()}" for p in report.open_entries]
        text = "\n".join(lines) + "\n"
    return 0, text


def cmd_oracle(args) -> tuple[int, str]:
    try:
        report = oracle_exhaustive_css(
            args.q, args.n_max, args.budget, args.seed, args.samples,
            distance_offset=args.distance_offset, workers=args.workers,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        text = _dump(report.to_dict(timing=args.timing))
    elif args.format == "tsv":
        text = _tsv([["params", "count"]] + [[k, v] for k, v in report.realized.items()])
    else:
        text = (
            f"pairs checked: {report.pairs_checked}, skipped: {report.pairs_skipped}, "
            f"failures: {len(report.failures)}\n"
        )
    return (0 if report.ok else 1), text


def cmd_table1(args) -> tuple[int, str]:
    rows = table1()
    if args.figure:
        from .plotting import plot_table1

        plot_table1(rows, args.figure)
    if args.format == "json":
        text = _dump([{"q": r.q, "delta": str(r.delta), "one_minus_delta": str(r.one_minus_delta)} for r in rows])
    elif args.format == "tsv":
        text = table1_tsv(rows)
    else:
        text = "".join(f"q={r.q}  delta={r.delta}  1-delta={r.one_minus_delta}\n" for r in rows)
    return 0, text


# --- parser ----------------------------------------------------------------


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _pos(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qecc-bounds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_common(sp, default_format="json", budget=False):
        sp.add_argument("--format", choices=FORMATS, default=default_format)
        if budget:
            sp.add_argument("--budget", type=_pos, default=default_budget(),
                            help="brute-force work limit (codewords); env QECC_BOUNDS_BUDGET")

    sp = sub.add_parser("check", help="evaluate every bound for one parameter set")
    sp.add_argument("--n", type=_pos, required=True)
    sp.add_argument("--k", type=_nonneg)
    sp.add_argument("--K", help="code dimension as a (big) integer")
    sp.add_argument("--d", type=_pos, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--css", action="store_true")
    add_common(sp)
    sp.set_defaults(func=cmd_check)

    for name, func, helptext in (
        ("css-verify", cmd_css_verify, "realize a CSS code from two matrix files and check it"),
        ("derive", cmd_derive, "derive the two auxiliary classical codes"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("c1", help="generator matrix file of the inner code C1")
        sp.add_argument("c2", help="generator matrix file of the outer code C2")
        if name == "derive":
            sp.add_argument("--out-dir", help="also write D.txt and Dprime.txt here")
        add_common(sp, budget=True)
        sp.set_defaults(func=func)

    sp = sub.add_parser("scan", help="classify a range of parameters")
    sp.add_argument("--n-max", type=_pos, required=True)
    sp.add_argument("--q", type=int, nargs="+", required=True)
    sp.add_argument("--css", action="store_true")
    sp.add_argument("--d-max", type=_pos)
    sp.add_argument("--figure", help="write a PNG summary to this path")
    sp.add_argument("--timing", action="store_true", help="include runtime in JSON")
    add_common(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("oracle", help="exhaustive/sampled CSS construction oracle")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n-max", type=_pos, default=5)
    sp.add_argument("--seed", type=_nonneg, default=0)
    sp.add_argument("--samples", type=_pos, default=10_000)
    sp.add_argument("--workers", type=_pos, default=1)
    sp.add_argument("--distance-offset", type=int, default=0, help="corrupt d (harness self-test)")
    sp.add_argument("--timing", action="store_true")
    add_common(sp, budget=True)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("table1", help="threshold table for q = 3..11")
    sp.add_argument("--figure", help="write a PNG plot to this path")
    add_common(sp, default_format="tsv")
    sp.set_defaults(func=cmd_table1)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        code, text = args.func(args)
    except UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except (FieldError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except WorkLimitExceeded as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
