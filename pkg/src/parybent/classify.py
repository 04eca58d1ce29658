"""Classification pipelines for the three complete suites.

classify() enumerates every even function with f(0) = 0 (one free value per
{v, -v} pair), keeps the bent ones, partitions them under GL(n, p), attaches
per-orbit attribute records and weighted-PDS tables, and compares the whole
result against the frozen golden data.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import golden
from .combinatorics import (
    LevelCurves,
    intersection_numbers_direct,
    intersection_numbers_trace,
    is_weighted_pds,
)
from .core import (
    PAryFunction,
    all_vectors,
    function_from_anf_text,
    signature,
    support,
)
from .fastscan import bent_candidate_indices, candidate_count, candidate_tables
from .graph import (
    build_cayley_graph,
    is_strongly_regular_unweighted,
    weighted_srg_verdict,
)
from .orbits import OrbitReport, orbit_partition
from .transforms import classify_regularity

SCOPE = {(3, 2), (3, 3), (5, 2)}


@dataclass
class ClassificationResult:
    p: int
    n: int
    candidate_total: int
    bent_count: int
    orbit_report: OrbitReport
    functions: list[PAryFunction]
    golden_failures: list[str] = field(default_factory=list)
    degree_bound: Optional[int] = None
    degree_bound_total: Optional[int] = None
    elapsed: float = 0.0

    @property
    def golden_ok(self) -> bool:
        return not self.golden_failures

    def summary_lines(self) -> list[str]:
        lines = [
            f"p={self.p} n={self.n}: {self.bent_count} bent among "
            f"{self.candidate_total} even candidates with f(0)=0"
            + (
                f" (degree<= {self.degree_bound} subspace: "
                f"{self.degree_bound_total} candidates)"
                if self.degree_bound
                else ""
            ),
            f"orbits: {self.orbit_report.sizes()}",
        ]
        for o in self.orbit_report.orbits:
            a = o.attributes
            kind = (
                "regular"
                if a["regular"]
                else ("weakly regular" if a["weakly_regular"] else "not weakly regular")
            )
            lines.append(
                f"  orbit {o.orbit_id}: size {o.size}, signature {a['signature']}, "
                f"{kind}, {'' if a['homogeneous'] else 'non-'}homogeneous, "
                f"weighted PDS: {a['weighted_pds']}"
            )
        status = "PASS" if self.golden_ok else "MISMATCH"
        lines.append(f"golden check: {status}")
        lines.extend(f"  !! {msg}" for msg in self.golden_failures)
        return lines

    def to_json(self) -> dict:
        data = self.orbit_report.to_json()
        data.update(
            candidate_total=self.candidate_total,
            bent_count=self.bent_count,
            golden_ok=self.golden_ok,
            golden_failures=self.golden_failures,
            elapsed_seconds=round(self.elapsed, 3),
        )
        for entry, o in zip(data["orbits"], self.orbit_report.orbits):
            if o.attributes["weighted_pds"]:
                rep = is_weighted_pds(LevelCurves.from_function(o.representative))
                entry["weighted_pds_report"] = rep.to_json()
        return data


# --------------------------------------------------------------------------
# Degree-bounded even candidates (the fast (5,2) sub-run)
# --------------------------------------------------------------------------


def even_monomials(p: int, n: int, bound: int) -> list[tuple[int, ...]]:
    """Exponent tuples of even total degree in [2, bound], entries <= p-1."""
    out = []

    def rec(prefix, rest):
        if not rest:
            total = sum(prefix)
            if 0 < total <= bound and total % 2 == 0:
                out.append(tuple(prefix))
            return
        for e in range(min(p - 1, bound) + 1):
            rec(prefix + [e], rest - 1)

    rec([], n)
    return sorted(out)


def degree_bound_bent_tables(p: int, n: int, bound: int) -> tuple[int, np.ndarray]:
    """(candidates scanned, bent value tables) for the even degree<=bound space.

    Over odd p, an even polynomial in reduced form uses exactly the
    monomials of even total degree, so the space is enumerated by free
    coefficients on those monomials.
    """
    monos = even_monomials(p, n, bound)
    vecs = np.array(all_vectors(p, n), dtype=np.int64)
    basis = np.empty((len(monos), p**n), dtype=np.int64)
    for r, exp in enumerate(monos):
        vals = np.ones(p**n, dtype=np.int64)
        for i, e in enumerate(exp):
            if e:
                vals = vals * pow_mod_column(vecs[:, i], e, p)
        basis[r] = vals % p
    total = p ** len(monos)
    found = []
    chunk = 4096
    coeffs = np.empty((chunk, len(monos)), dtype=np.int64)
    for lo in range(0, total, chunk):
        hi = min(lo + chunk, total)
        idx = np.arange(lo, hi, dtype=np.int64)
        rest = idx.copy()
        for j in range(len(monos) - 1, -1, -1):
            coeffs[: hi - lo, j] = rest % p
            rest //= p
        tables = (coeffs[: hi - lo] @ basis) % p
        mask = _tables_bent_mask(p, n, tables)
        found.append(tables[mask])
    return total, np.concatenate(found) if found else np.empty((0, p**n))


def pow_mod_column(col: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.ones_like(col)
    for _ in range(e):
        out = (out * col) % p
    return out


def _tables_bent_mask(p: int, n: int, tables: np.ndarray) -> np.ndarray:
    from .core import dot_table

    dots = dot_table(p, n)
    target = p**n
    T = (tables[:, None, :] - dots[None, :, :]) % p
    counts = np.stack([(T == k).sum(axis=2) for k in range(p)], axis=2)
    A = [(counts * np.roll(counts, -d, axis=2)).sum(axis=2) for d in range(p)]
    ok = A[0] - A[1] == target
    for d in range(2, p):
        ok &= A[d] == A[1]
    return ok.all(axis=1)


# --------------------------------------------------------------------------
# Orbit invariance spot checks
# --------------------------------------------------------------------------


def verify_orbit_invariants(
    result: ClassificationResult, per_orbit: int = 100, seed: int = 0
) -> None:
    """Signature, bentness, regularity class, support size, and unweighted
    SRG parameters must be constant across each orbit (exhaustive for small
    orbits, sampled otherwise)."""
    rng = random.Random(seed)
    report = result.orbit_report
    members: dict[int, list[int]] = {o.orbit_id: [] for o in report.orbits}
    for row, oid in enumerate(report.membership):
        members[oid].append(row)
    for o in report.orbits:
        rows = members[o.orbit_id]
        if len(rows) > per_orbit:
            rows = rng.sample(rows, per_orbit)
        ref = o.attributes
        for row in rows:
            f = result.functions[row]
            profile = classify_regularity(f)
            assert signature(f) == ref["signature"]
            assert profile.is_bent == ref["bent"]
            assert profile.is_weakly_regular == ref["weakly_regular"]
            assert profile.is_regular == ref["regular"]
            assert len(support(f)) == ref["support_size"]
            srg = is_strongly_regular_unweighted(build_cayley_graph(f))
            assert (list(srg) if srg else None) == ref["unweighted_srg"]


# --------------------------------------------------------------------------
# Golden comparisons
# --------------------------------------------------------------------------


def _direct_tables_match(f: PAryFunction, expected: dict, classes: int) -> bool:
    t = intersection_numbers_direct(LevelCurves.from_function(f))
    for k, rows in expected.items():
        for i in range(classes):
            for j in range(classes):
                if t.entry(i, j, k) != rows[i][j]:
                    return False
    return True


def _check_golden(result: ClassificationResult) -> list[str]:
    p, n = result.p, result.n
    fails: list[str] = []
    report = result.orbit_report

    def expect(cond: bool, msg: str) -> None:
        if not cond:
            fails.append(msg)

    if (p, n) == (3, 2):
        expect(result.candidate_total == golden.GF3_2_CANDIDATES, "candidate count")
        expect(result.bent_count == golden.GF3_2_BENT_COUNT, "bent count")
        tables = {f.values for f in result.functions}
        expect(
            tables == set(golden.GF3_2_BENT_TABLES.values()),
            "bent set differs from the 18 stored tables",
        )
        expect(set(report.sizes()) == golden.GF3_2_ORBIT_SIZES, "orbit sizes")
        for o in report.orbits:
            a = o.attributes
            if o.size == 12:
                expect(a["regular"] and a["weighted_pds"], "12-orbit attributes")
                expect(
                    _direct_tables_match(o.representative, golden.GF3_2_TABLES_CASE1, 4),
                    "12-orbit intersection tables",
                )
            else:
                expect(
                    a["weakly_regular"] and not a["regular"] and a["weighted_pds"],
                    "6-orbit attributes",
                )
                expect(
                    _direct_tables_match(o.representative, golden.GF3_2_TABLES_CASE2, 3),
                    "6-orbit intersection tables",
                )
        regular = {
            name
            for name, vals in golden.GF3_2_BENT_TABLES.items()
            if classify_regularity(PAryFunction(3, 2, vals)).is_regular
        }
        expect(regular == golden.GF3_2_REGULAR, "regular member set")

    elif (p, n) == (3, 3):
        expect(result.candidate_total == golden.GF3_3_CANDIDATES, "candidate count")
        expect(result.bent_count == golden.GF3_3_BENT_COUNT, "bent count")
        expect(report.sizes() == golden.GF3_3_ORBIT_SIZES, "orbit sizes")
        wpds = {o.orbit_id for o in report.orbits if o.attributes["weighted_pds"]}
        expect(wpds == golden.GF3_3_WPDS_ORBITS, "weighted-PDS orbits")
        b1 = function_from_anf_text(golden.GF3_3_REP_B1, 3, 3)
        b2 = function_from_anf_text(golden.GF3_3_REP_B2, 3, 3)
        expect(report.orbit_of(b1) == 1, "B1 representative lands in orbit 1")
        expect(report.orbit_of(b2) == 2, "B2 representative lands in orbit 2")
        expect(report.orbit_of(b1.scale_output(2)) == 3, "B3 = -B1")
        expect(report.orbit_of(b2.scale_output(2)) == 4, "B4 = -B2")
        for oid, expected in ((1, golden.GF3_3_TABLES_CASE1), (3, golden.GF3_3_TABLES_CASE2)):
            rep = report.orbits[oid - 1].representative
            expect(
                _direct_tables_match(rep, expected, 4),
                f"orbit {oid} intersection tables",
            )
        for o in report.orbits:
            a = o.attributes
            if o.orbit_id in (1, 3):
                expect(
                    a["weakly_regular"] and not a["regular"] and a["homogeneous"],
                    f"orbit {o.orbit_id} attributes",
                )
            else:
                expect(not a["weakly_regular"], f"orbit {o.orbit_id} attributes")

    elif (p, n) == (5, 2):
        expect(result.candidate_total == golden.GF5_2_CANDIDATES, "candidate count")
        expect(result.bent_count == golden.GF5_2_BENT_COUNT, "bent count")
        expect(
            sorted(report.sizes()) == golden.GF5_2_ORBIT_SIZES_SORTED, "orbit sizes"
        )
        rep_orbit = {
            name: report.orbit_of(function_from_anf_text(text, 5, 2))
            for name, text in golden.GF5_2_REPS.items()
        }
        expect(
            len(set(rep_orbit.values())) == 11 and None not in rep_orbit.values(),
            "representatives land in 11 distinct orbits",
        )
        size_of = {o.orbit_id: o.size for o in report.orbits}
        for name, oid in rep_orbit.items():
            expect(
                size_of[oid] == golden.GF5_2_ORBIT_SIZE_OF_REP[name],
                f"orbit size of {name}",
            )
        wpds = {o.orbit_id for o in report.orbits if o.attributes["weighted_pds"]}
        expect(
            wpds == {rep_orbit[k] for k in golden.GF5_2_WPDS_REPS},
            "weighted-PDS orbits are exactly f1, f2, f5, f6, f9",
        )
        for o in report.orbits:
            a = o.attributes
            if o.orbit_id == rep_orbit["f1"]:
                expect(a["weakly_regular"] and not a["regular"], "f1 orbit regularity")
            else:
                expect(a["regular"], f"orbit {o.orbit_id} regular")
        for name, expected in (
            ("f1", golden.GF5_2_TABLES_F1),
            ("f2", golden.GF5_2_TABLES_F2),
            ("f5", golden.GF5_2_TABLES_F5),
            ("f6", golden.GF5_2_TABLES_F5),
            ("f9", golden.GF5_2_TABLES_F5),
        ):
            f = function_from_anf_text(golden.GF5_2_REPS[name], 5, 2)
            expect(
                _direct_tables_match(f, expected, 6),
                f"{name} intersection tables",
            )
        f3 = function_from_anf_text(golden.GF5_2_REPS["f3"], 5, 2)
        trace = intersection_numbers_trace(LevelCurves.from_function(f3))
        for (i, j, k), val in golden.GF5_2_F3_FRACTIONAL_CELLS.items():
            expect(trace.entry(i, j, k) == val, f"f3 trace cell ({i},{j},{k})")
        expect(not trace.all_integral_and_constant(), "f3 trace non-integrality")
    else:
        fails.append("no golden data for this (p, n)")
    return fails


# --------------------------------------------------------------------------
# Main entry points
# --------------------------------------------------------------------------


def classify(
    p: int,
    n: int,
    jobs: Optional[int] = None,
    method: str = "auto",
    checkpoint_path: Optional[str] = None,
    unsafe_scale: bool = False,
    degree_bound: Optional[int] = None,
    verify_invariants: bool = True,
    progress: bool = False,
) -> ClassificationResult:
    if (p, n) not in SCOPE and not unsafe_scale:
        raise ValueError(
            f"(p, n) = ({p}, {n}) is outside the classified scope; the even "
            f"candidate space has {candidate_count(p, n)} functions "
            "(pass unsafe_scale to proceed anyway)"
        )
    t0 = time.time()
    cb = None
    if progress:
        cb = lambda done, total: print(f"  blocks {done}/{total}", flush=True)
    indices = bent_candidate_indices(
        p, n, method=method, jobs=jobs, checkpoint_path=checkpoint_path, progress=cb
    )
    tables = candidate_tables(p, n, np.array(indices, dtype=np.int64))
    functions = [PAryFunction(p, n, tuple(int(v) for v in t)) for t in tables]
    report = orbit_partition(functions, p, n)
    result = ClassificationResult(
        p=p,
        n=n,
        candidate_total=candidate_count(p, n),
        bent_count=len(functions),
        orbit_report=report,
        functions=functions,
    )
    if degree_bound is not None:
        sub_total, sub_tables = degree_bound_bent_tables(p, n, degree_bound)
        result.degree_bound = degree_bound
        result.degree_bound_total = sub_total
        sub_set = {tuple(int(v) for v in t) for t in sub_tables}
        if sub_set != {f.values for f in functions}:
            result.golden_failures.append(
                "degree-bounded scan found a different bent set"
            )
    if (p, n) in SCOPE:
        result.golden_failures.extend(_check_golden(result))
    if verify_invariants:
        verify_orbit_invariants(result)
    result.elapsed = time.time() - t0
    return result


def lemma34_check() -> dict:
    """The (3,2) equivalence: edge-weighted SRG + non-complete <=> regular,
    edge-weighted SRG + complete <=> weakly regular but not regular,
    over all 18 bent functions."""
    rows = []
    ok = True
    for name, vals in sorted(golden.GF3_2_BENT_TABLES.items()):
        f = PAryFunction(3, 2, vals)
        profile = classify_regularity(f)
        g = build_cayley_graph(f)
        wsrg = weighted_srg_verdict(g).is_edge_weighted_srg
        complete = g.is_complete_unweighted()
        regular_side = wsrg and not complete
        weakly_side = wsrg and complete
        holds = (regular_side == profile.is_regular) and (
            weakly_side == (profile.is_weakly_regular and not profile.is_regular)
        )
        ok &= holds and wsrg
        rows.append(
            {
                "b": name,
                "weighted_srg": wsrg,
                "complete": complete,
                "regular": profile.is_regular,
                "weakly_regular": profile.is_weakly_regular,
                "equivalence": holds,
            }
        )
    return {"holds": ok, "rows": rows}


def conjecture_report(
    results: Optional[dict[tuple[int, int], ClassificationResult]] = None,
    jobs: Optional[int] = None,
) -> dict:
    """Observations on the two open statements; nothing here is asserted.

    * every bent function whose level curves give a weighted PDS should be
      homogeneous and weakly regular;
    * (n even) a weakly regular bent function with an edge-weighted SRG
      should have mu_ii = 0 for every weight i.

    The second statement needs its weak-regularity hypothesis: a non-bent
    even function whose Cayley graph is edge-weighted strongly regular can
    have mu_ii != 0, and the report carries such a witness.
    """
    if results is None:
        results = {}
        for p, n in sorted(SCOPE):
            results[(p, n)] = classify(p, n, jobs=jobs, verify_invariants=False)
    main: list[dict] = []
    walsh: list[dict] = []
    counterexamples: list[dict] = []
    for (p, n), result in sorted(results.items()):
        for o in result.orbit_report.orbits:
            a = o.attributes
            if not a["weighted_pds"]:
                continue
            entry = {
                "p": p,
                "n": n,
                "orbit": o.orbit_id,
                "homogeneous": a["homogeneous"],
                "weakly_regular": a["weakly_regular"],
            }
            main.append(entry)
            if not (a["homogeneous"] and a["weakly_regular"]):
                counterexamples.append(entry)
            if n % 2 == 0 and a["weakly_regular"]:
                rep = is_weighted_pds(LevelCurves.from_function(o.representative))
                mu_ii = {i: rep.mu[(i, i)] for i in range(1, p)}
                walsh.append(
                    {
                        "p": p,
                        "n": n,
                        "orbit": o.orbit_id,
                        "mu_ii": {k: list(v) for k, v in mu_ii.items()},
                        "all_zero": all(v == (0,) or v == () for v in mu_ii.values()),
                    }
                )
    witness_f = PAryFunction(3, 2, (0, 1, 1, 2, 0, 1, 2, 1, 0))
    wv = weighted_srg_verdict(build_cayley_graph(witness_f))
    witness = {
        "function": list(witness_f.values),
        "bent": classify_regularity(witness_f).is_bent,
        "edge_weighted_srg": wv.is_edge_weighted_srg,
        "mu_11": list(wv.cell("mu", (1, 1))),
    }
    return {
        "main_conjecture": {
            "observations": main,
            "counterexamples": counterexamples,
        },
        "mu_diagonal_conjecture": {
            "observations": walsh,
            "all_mu_ii_zero": all(w["all_zero"] for w in walsh),
            "hypothesis_witness": witness,
        },
    }
