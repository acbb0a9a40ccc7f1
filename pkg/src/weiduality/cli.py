"""Command-line entry point.

Exit codes: 0 computed and every applicable theorem verified; 1 the input was
valid but a verification failed; 2 the input could not be read or validated.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from typing import Callable

import numpy as np

from .bits import MAX_N
from .core import (
    DemiMatroid,
    audit,
    feature_sets,
    profiles,
    singleton_check,
    verify_wei,
)
from .documents import Document, demimatroid_document, load_document
from .errors import InputError, InternalError, WeiDualityError

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2

COMMANDS = ("validate", "profile", "sets", "verify", "weights", "graph-bc", "plugs", "pmd", "corpus")
MATROID_TYPES = ("matroid-bases", "uniform", "graph", "setsystem", "code")


class Report(dict):
    """Ordered report body plus the theorem verdicts that decide the exit code."""

    def verdict(self, name: str, ok: bool) -> None:
        self.setdefault("verdicts", {})[name] = bool(ok)

    def warn(self, text: str) -> None:
        self.setdefault("warnings", []).append(text)

    @property
    def ok(self) -> bool:
        return all(self.get("verdicts", {}).values())


def _lists(x):
    return [int(v) for v in x]


def _wei_block(report: Report, D: DemiMatroid) -> None:
    r = verify_wei(D)
    fs = r.feature_sets
    report["feature_sets"] = {"S": _lists(fs.S), "T": _lists(fs.T), "U": _lists(fs.U), "V": _lists(fs.V)}
    report["violations"] = [[tag, x] for tag, x in r.violations]
    report.verdict("S_D+T_D partition", r.partition_equ_ok)
    report.verdict("U_D+V_D partition", r.partition_ok)


def _profile_block(report: Report, D: DemiMatroid) -> None:
    p = profiles(D)
    report["profiles"] = {name: list(getattr(p, name)) for name in
                          ("sigma", "tau", "smax", "tmax", "sigma_bar", "tau_bar", "smax_bar", "tmax_bar")}


def _matroid_block(report: Report, doc: Document, args) -> None:
    from .matroid import INDEXING_NOTE, cocircuit_sequence_from_profile, cocircuits, f_coefficients, \
        st_sets, union_sequence

    M = doc.matroid
    fp = f_coefficients(M)
    st = st_sets(M)
    report["f"] = list(fp.f)
    report["fstar"] = list(fp.fstar)
    report["S_M"] = list(st.first)
    report["T_M"] = list(st.second)
    report.verdict("S_M+T_M partition", st.ok)
    if args.oracle:
        seq = union_sequence(cocircuits(M), M.k)
        report["cocircuit_unions"] = list(seq)
        report.verdict("cocircuit unions = n - f_{k-i}",
                       seq == cocircuit_sequence_from_profile(fp, M.n, M.k))
        report.warn(INDEXING_NOTE)


def _type_specific(report: Report, doc: Document, args) -> None:
    if doc.type == "code":
        from .codes import ghw

        h = ghw(doc.code, oracle=True if args.oracle else None, max_n=args.max_n)
        report["d"] = list(h.d)
        report["d_perp"] = list(h.d_perp)
        report["U_C"] = list(h.U)
        report["V_C"] = list(h.V)
        if h.oracle:
            report["direct_enumeration"] = h.oracle
        from .core import check_partition

        report.verdict("U_C+V_C partition", check_partition("UV_C", h.U, h.V, doc.n).ok)
    elif doc.type == "graph":
        _graph_block(report, doc, args)
    elif doc.type == "setsystem":
        _plugs_block(report, doc, args)
    if doc.type in MATROID_TYPES and doc.type != "code":
        _matroid_block(report, doc, args)


def _graph_block(report: Report, doc: Document, args) -> None:
    from .graphs import bc_sequences, max_subgraph_check
    from .matroid import INDEXING_NOTE

    seq = bc_sequences(doc.graph, args.max_n)
    report["b"] = list(seq.b)
    report["c"] = list(seq.c)
    report["U_G"] = list(seq.U)
    report["V_G"] = list(seq.V)
    report.verdict("U_G+V_G partition", seq.partition.ok)
    report.verdict("f-profile route = irredundant-union route", True)
    if args.oracle:
        sub = max_subgraph_check(doc.graph, args.max_n)
        report["max_subgraph"] = {k: v for k, v in sub.items() if k not in ("b", "c")}
        report.verdict("maximal subgraph characterizations", sub["ok"])
    if INDEXING_NOTE not in report.get("warnings", []):
        report.warn(INDEXING_NOTE)


def _plugs_block(report: Report, doc: Document, args) -> None:
    from .transversal import exhaustive_matching_ranks, mp_sequences, plugs
    from .matroid import INDEXING_NOTE

    A = doc.setsystem
    fam = plugs(A, args.max_n)
    g = A.ground
    report["plugs"] = [g.format(x) for x in fam]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        seq = mp_sequences(A, args.max_n)
    report["m"] = list(seq.m)
    report["p"] = list(seq.p)
    report["U_A"] = list(seq.U)
    report["V_A"] = list(seq.V)
    report.verdict("U_A+V_A partition", seq.partition.ok)
    for note in seq.warnings:
        report.warn(note)
    if args.oracle:
        same = np.array_equal(exhaustive_matching_ranks(A), doc.matroid.table)
        report.verdict("matching rank = exhaustive matching", same)
    if INDEXING_NOTE not in report.get("warnings", []):
        report.warn(INDEXING_NOTE)


def cmd_validate(doc: Document, args) -> Report:
    doc.to_demimatroid(args.max_n)
    return Report(valid=True)


def cmd_profile(doc: Document, args) -> Report:
    D = doc.to_demimatroid(args.max_n)
    report = Report()
    _profile_block(report, D)
    report["demimatroid"] = demimatroid_document(D)
    return report


def cmd_sets(doc: Document, args) -> Report:
    report = Report()
    _wei_block(report, doc.to_demimatroid(args.max_n))
    return report


def cmd_verify(doc: Document, args) -> Report:
    D = doc.to_demimatroid(args.max_n)
    report = Report()
    _profile_block(report, D)
    _wei_block(report, D)
    report["singleton"] = [[r.name, r.index, r.value, r.bound] for r in singleton_check(D) if not r.satisfied]
    for name, ok in audit(D).items():
        report.verdict(name, ok)
    _type_specific(report, doc, args)
    return report


def cmd_weights(doc: Document, args) -> Report:
    report = Report()
    if doc.type == "code":
        _type_specific(report, doc, args)
    elif doc.type in MATROID_TYPES:
        _matroid_block(report, doc, args)
    else:
        raise InputError("weights needs a code or matroid document")
    return report


def cmd_graph_bc(doc: Document, args) -> Report:
    if doc.type != "graph":
        raise InputError("graph-bc needs a graph document")
    report = Report()
    _graph_block(report, doc, args)
    return report


def cmd_plugs(doc: Document, args) -> Report:
    if doc.type != "setsystem":
        raise InputError("plugs needs a setsystem document")
    report = Report()
    _plugs_block(report, doc, args)
    return report


def cmd_pmd(doc: Document, args) -> Report:
    from .matroid import is_pmd, pmd_dual_profile_check

    if doc.matroid is None:
        raise InputError("pmd needs a matroid, graph, setsystem or code document")
    ok, sizes = is_pmd(doc.matroid)
    report = Report(pmd=ok)
    if ok:
        check = pmd_dual_profile_check(doc.matroid)
        report["flat_sizes"] = list(sizes)
        report["S_M"] = list(check.S)
        report["T_M"] = list(check.actual_T)
        report["predicted_fstar"] = list(check.predicted_fstar)
        report["fstar"] = list(check.actual_fstar)
        report.verdict("dual f-profile determined by flat sizes", check.ok)
    return report


def cmd_corpus(args) -> Report:
    from .corpus import demimatroid_corpus

    instances = demimatroid_corpus(args.seed)
    failures = []
    for inst in instances:
        bad = [name for name, ok in audit(inst.demimatroid).items() if not ok]
        if bad:
            failures.append({"instance": inst.name, "failed": bad})
    report = Report(seed=args.seed, instances=len(instances), failures=failures)
    report.verdict("all corpus instances satisfy every law", not failures)
    return report


HANDLERS: dict[str, Callable[[Document, argparse.Namespace], Report]] = {
    "validate": cmd_validate,
    "profile": cmd_profile,
    "sets": cmd_sets,
    "verify": cmd_verify,
    "weights": cmd_weights,
    "graph-bc": cmd_graph_bc,
    "plugs": cmd_plugs,
    "pmd": cmd_pmd,
}


def render_text(command: str, report: Report, elapsed: float) -> str:
    head = f"{command}:"
    if "type" in report:
        head += f" {report['type']} n={report['n']} k={report['k']}"
    lines = [head]
    fs = report.get("feature_sets")
    if fs:
        # side by side, as S|U over T|V
        fmt = lambda xs: "{" + ",".join(map(str, xs)) + "}"
        lines.append(f"  S = {fmt(fs['S']):<20} U = {fmt(fs['U'])}")
        lines.append(f"  T = {fmt(fs['T']):<20} V = {fmt(fs['V'])}")
    skip = {"type", "n", "k", "feature_sets", "verdicts", "warnings", "demimatroid"}
    for key, value in report.items():
        if key not in skip and value not in ([], None):
            lines.append(f"  {key}: {json.dumps(value, sort_keys=True)}")
    for name, ok in report.get("verdicts", {}).items():
        lines.append(f"  [{'ok' if ok else 'FAIL'}] {name}")
    for w in report.get("warnings", []):
        lines.append(f"  warning: {w}")
    lines.append(f"  ({elapsed * 1000:.1f} ms)")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weiduality",
        description="Weight profiles, feature sets and Wei-type duality checks for demi-matroids.",
        epilog=__doc__.split("\n\n", 1)[1].strip(),
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("document", nargs="?", help="JSON input document, or - for standard input")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--max-n", type=int, default=None,
                        help=f"raise the 20-element exhaustive cap (hard maximum {MAX_N})")
    parser.add_argument("--seed", type=int, default=0, help="seed for the corpus command")
    parser.add_argument("--oracle", action="store_true", help="force brute-force cross-checks on")
    return parser


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_intermixed_args(argv)
    if args.max_n is not None and not 0 <= args.max_n <= MAX_N:
        print(f"error: --max-n must lie in [0, {MAX_N}]", file=err)
        return EXIT_INPUT
    start = time.perf_counter()
    try:
        if args.command == "corpus":
            report = cmd_corpus(args)
        else:
            if args.document is None:
                print(f"error: {args.command} needs a document path", file=err)
                return EXIT_INPUT
            doc = load_document(args.document, args.max_n)
            body = HANDLERS[args.command](doc, args)
            D_k = _k_of(doc, args)
            report = Report(type=doc.type, n=doc.n, k=D_k)
            report.update(body)
    except InternalError as exc:
        print(f"verification failed: {exc}", file=err)
        return EXIT_FAILED
    except (InputError, RecursionError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_INPUT
    except WeiDualityError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_FAILED
    elapsed = time.perf_counter() - start
    if args.json:
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        out.write(render_text(args.command, report, elapsed) + "\n")
    return EXIT_OK if report.ok else EXIT_FAILED


def _k_of(doc: Document, args) -> int:
    if doc.demimatroid is not None:
        return doc.demimatroid.k
    if doc.code is not None:
        return doc.code.k
    return doc.matroid.k


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
