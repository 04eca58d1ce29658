"""Command-line drivers.

Subcommands:
  classify    exhaustive bent classification for (p, n) with golden checks
  analyze     full dossier for a single function (table or polynomial)
  search-bent randomized DFS for a Boolean bent function
  lemma34     the (3,2) regular <=> weighted-SRG-shape equivalence
  conjectures observations on the two open statements (never asserted)

Exit codes: 0 all checks pass, 2 golden mismatch, 1 usage/parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Optional

warnings.filterwarnings("ignore", message=".*TBB.*")

from .classify import classify, conjecture_report, lemma34_check
from .combinatorics import (
    LevelCurves,
    intersection_numbers_trace,
    is_weighted_pds,
)
from .core import (
    PAryFunction,
    format_function_literal,
    function_from_anf_text,
    is_even,
    signature,
    support,
    to_anf,
)
from .graph import (
    build_cayley_graph,
    connected_components,
    distance_regularity_check,
    emit_dot,
    is_strongly_regular_unweighted,
    spectrum_via_fourier,
    weighted_srg_verdict,
)
from .search import is_boolean_bent, search_bent
from .transforms import classify_regularity, walsh_transform

USAGE_ERROR, MISMATCH = 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse default exits 2; we use 1
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(USAGE_ERROR)


def _build_parser() -> _Parser:
    parser = _Parser(prog="parybent")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="exhaustive classification")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--jobs", type=int, default=None)
    c.add_argument("--resume", metavar="CKPT", default=None,
                   help="checkpoint file for the long scans")
    c.add_argument("--method", choices=("auto", "full", "incremental"),
                   default="auto")
    c.add_argument("--degree-bound", type=int, default=None,
                   help="also scan the even degree<=D polynomial subspace")
    c.add_argument("--json", metavar="FILE", default=None)
    c.add_argument("--csv", metavar="FILE", default=None)
    c.add_argument("--unsafe-scale", action="store_true")
    c.add_argument("--progress", action="store_true")

    a = sub.add_parser("analyze", help="single-function dossier")
    a.add_argument("--p", type=int, required=True)
    a.add_argument("--n", type=int, required=True)
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--values", help="comma-separated table in index order")
    src.add_argument("--anf", help="polynomial, e.g. 'x0^2+x0*x1'")
    a.add_argument("--emit-dot", metavar="FILE", default=None)
    a.add_argument("--json", metavar="FILE", default=None)

    s = sub.add_parser("search-bent", help="randomized Boolean bent search")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--trace", metavar="FILE", default=None)

    sub.add_parser("lemma34", help="(3,2) weighted-SRG/regularity equivalence")

    j = sub.add_parser("conjectures", help="conjecture observations")
    j.add_argument("--jobs", type=int, default=None)
    j.add_argument("--json", metavar="FILE", default=None)
    return parser


def _cmd_classify(args) -> int:
    try:
        result = classify(
            args.p,
            args.n,
            jobs=args.jobs,
            method=args.method,
            checkpoint_path=args.resume,
            unsafe_scale=args.unsafe_scale,
            degree_bound=args.degree_bound,
            progress=args.progress,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    for line in result.summary_lines():
        print(line)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(result.to_json(), fh, indent=2, sort_keys=True)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(result.orbit_report.to_csv())
    return 0 if result.golden_ok else MISMATCH


def _parse_function(args) -> PAryFunction:
    if args.values is not None:
        vals = [int(tok) for tok in args.values.split(",")]
        return PAryFunction.from_values(args.p, args.n, vals)
    return function_from_anf_text(args.anf, args.p, args.n)


def _dossier(f: PAryFunction) -> tuple[list[str], dict]:
    lines: list[str] = []
    data: dict = {"function": format_function_literal(f)}
    anf = to_anf(f)
    even = is_even(f)
    lines.append(f"function: {format_function_literal(f)}")
    lines.append(f"anf: {anf}  (degree {anf.degree()}, "
                 f"{'' if anf.is_homogeneous() else 'non-'}homogeneous)")
    lines.append(f"signature: {signature(f)}  support size: {len(support(f))}")
    lines.append(f"even: {even}")
    data.update(
        anf=str(anf), degree=anf.degree(), homogeneous=anf.is_homogeneous(),
        signature=signature(f), support=sorted(support(f)), even=even,
    )

    spec = walsh_transform(f)
    profile = classify_regularity(f)
    lines.append(
        f"bent: {profile.is_bent}  weakly regular: {profile.is_weakly_regular}"
        f"  regular: {profile.is_regular}"
    )
    data.update(
        bent=profile.is_bent,
        weakly_regular=profile.is_weakly_regular,
        regular=profile.is_regular,
    )
    if profile.is_weakly_regular:
        lines.append(f"dual: {format_function_literal(profile.dual)}  "
                     f"({profile.mu_text()})")
        data["dual"] = format_function_literal(profile.dual)
        data["mu"] = profile.mu_text()
    lines.append("walsh spectrum:")
    spectrum_lines = [
        f"u={u} W={w.json_coeffs()} |W|^2={w.norm_sq().is_rational()}"
        for u, w in enumerate(spec.values)
    ]
    lines.extend("  " + s for s in spectrum_lines)
    data["walsh"] = [w.json_coeffs() for w in spec.values]

    g = build_cayley_graph(f)
    ncomp, _ = connected_components(g)
    srg = is_strongly_regular_unweighted(g)
    lines.append(f"cayley graph: {ncomp} component(s), "
                 f"degree {g.omega()} (weighted degree {g.sigma()})")
    lines.append(f"unweighted strongly regular: {srg if srg else 'no'}")
    data.update(components=ncomp, unweighted_srg=list(srg) if srg else None)
    if even:
        eig = spectrum_via_fourier(g, weighted=True)
        data["weighted_spectrum"] = [e.json_coeffs() for e in eig]
        rationals = [e.is_rational() for e in eig]
        if all(r is not None for r in rationals):
            lines.append(f"weighted spectrum: {sorted(rationals, reverse=True)}")
        wv = weighted_srg_verdict(g)
        lines.append(f"edge-weighted strongly regular: {wv.is_edge_weighted_srg}")
        for key in sorted(wv.mu):
            lines.append(
                f"  weights {key}: k={_cell(wv.k[key])} mu={_cell(wv.mu[key])} "
                + " ".join(
                    f"lambda{key + (a3,)}={_cell(wv.lam[key + (a3,)])}"
                    for a3 in range(1, f.p)
                )
            )
        data["edge_weighted_srg"] = wv.is_edge_weighted_srg
        dr = distance_regularity_check(g)
        lines.append(
            "distance regular per component: "
            + ", ".join(str(v.is_distance_regular) for v in dr)
        )
        data["distance_regular"] = [v.is_distance_regular for v in dr]
        if f.values[0] == 0:
            curves = LevelCurves.from_function(f)
            report = is_weighted_pds(curves)
            lines.append(f"weighted PDS: {report.is_weighted_pds}")
            data["weighted_pds"] = report.to_json()
            trace = intersection_numbers_trace(curves, g)
            data["p_tables_trace"] = trace.to_json()
            lines.append(
                "trace-formula intersection numbers integral and constant: "
                f"{trace.all_integral_and_constant()}"
            )
    else:
        lines.append("odd function: weighted graph verdicts skipped")
    lines.append("weighted adjacency matrix:")
    lines.extend("  " + row for row in g.matrix_rows())
    data["matrix"] = [[int(x) for x in row] for row in g.weight_matrix]
    return lines, data


def _cell(values: tuple[int, ...]) -> str:
    if len(values) == 1:
        return str(values[0])
    return "{" + ", ".join(str(v) for v in values) + "}"


def _cmd_analyze(args) -> int:
    try:
        f = _parse_function(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    lines, data = _dossier(f)
    for line in lines:
        print(line)
    if args.emit_dot:
        with open(args.emit_dot, "w") as fh:
            fh.write(emit_dot(build_cayley_graph(f)))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(data, fh, indent=2, sort_keys=True)
    return 0


def _cmd_search_bent(args) -> int:
    try:
        f, trace = search_bent(args.n, seed=args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    verified = is_boolean_bent(f.values, args.n)
    print(f"found: {format_function_literal(f)}")
    print(f"verified bent: {verified}  weight: {sum(f.values)}  "
          f"steps: {len(trace)}")
    if args.trace:
        with open(args.trace, "w") as fh:
            json.dump([t.to_json() for t in trace], fh, indent=2)
    return 0 if verified else MISMATCH


def _cmd_lemma34() -> int:
    out = lemma34_check()
    for row in out["rows"]:
        print(
            f"b{row['b']:>2}: weighted SRG={row['weighted_srg']} "
            f"complete={row['complete']} regular={row['regular']} "
            f"weakly_regular={row['weakly_regular']} -> {row['equivalence']}"
        )
    print(f"equivalence holds for all 18: {out['holds']}")
    return 0 if out["holds"] else MISMATCH


def _cmd_conjectures(args) -> int:
    report = conjecture_report(jobs=args.jobs)
    main = report["main_conjecture"]
    print("weighted-PDS bent orbits (homogeneous, weakly regular):")
    for row in main["observations"]:
        print(f"  p={row['p']} n={row['n']} orbit {row['orbit']}: "
              f"homogeneous={row['homogeneous']} "
              f"weakly_regular={row['weakly_regular']}")
    print(f"counterexamples to 'weighted PDS => homogeneous and weakly "
          f"regular': {main['counterexamples'] or 'none'}")
    walsh = report["mu_diagonal_conjecture"]
    print(f"mu_ii all zero on weakly regular weighted-PDS orbits (n even): "
          f"{walsh['all_mu_ii_zero']}")
    w = walsh["hypothesis_witness"]
    print(
        "hypothesis witness (drop weak regularity): function "
        f"{w['function']} is not bent, has an edge-weighted SRG, "
        f"and mu_11={w['mu_11']}"
    )
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "classify":
        return _cmd_classify(args)
    if args.command == "analyze":
        return _cmd_analyze(args)
    if args.command == "search-bent":
        return _cmd_search_bent(args)
    if args.command == "lemma34":
        return _cmd_lemma34()
    if args.command == "conjectures":
        return _cmd_conjectures(args)
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
