"""Partial difference sets, weighted PDSs, intersection numbers, schemes.

All sets live in the additive group GF(p)^n and are stored as sets of vector
indices; the multiplicative d1 * d2^(-1) of the classical definitions is the
difference d1 - d2 here.  Non-constant counts are reported as the set of
observed values rather than as failures, so reports can print them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .core import PAryFunction, difference_table, negation_table
from .graph import WeightedCayleyGraph


Cell = tuple[int, ...]  # sorted observed values; len 1 = constant, len 0 = vacuous


def _constant(cell: Cell) -> bool:
    return len(cell) <= 1


@dataclass(frozen=True)
class LevelCurves:
    """D_0 = {0}, D_i = f^(-1)(i) for i = 1..p-1, D_p = the complement."""

    p: int
    n: int
    classes: tuple[frozenset[int], ...]  # indices 0..p

    def __post_init__(self) -> None:
        N = self.p**self.n
        seen: set[int] = set()
        for c in self.classes:
            if seen & c:
                raise ValueError("classes must be disjoint")
            seen |= c
        if seen != set(range(N)) or self.classes[0] != frozenset({0}):
            raise ValueError("classes must partition GF(p)^n with D_0 = {0}")

    @classmethod
    def from_function(cls, f: PAryFunction) -> "LevelCurves":
        if f.values[0] != 0:
            raise ValueError("level curves assume f(0) = 0")
        p = f.p
        parts = [set() for _ in range(p + 1)]
        parts[0].add(0)
        for idx in range(1, p**f.n):
            v = f.values[idx]
            parts[v if v != 0 else p].add(idx)
        return cls(p, f.n, tuple(frozenset(s) for s in parts))

    @classmethod
    def from_parts(
        cls, p: int, n: int, parts: dict[int, set[int]]
    ) -> "LevelCurves":
        """Build curves from explicit weight classes {i: D_i}, i in 1..p-1."""
        classes = [frozenset({0})]
        used = {0}
        for i in range(1, p):
            d = frozenset(parts.get(i, set()))
            classes.append(d)
            used |= d
        classes.append(frozenset(range(p**n)) - frozenset(used))
        return cls(p, n, tuple(classes))

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def is_symmetric(self) -> bool:
        neg = negation_table(self.p, self.n)
        return all(frozenset(neg[i] for i in c) == c for c in self.classes)

    def inverse_class_map(self) -> Optional[list[int]]:
        """j with D_i^(-1) = D_j per class, or None if some inverse is no class."""
        neg = negation_table(self.p, self.n)
        out = []
        for c in self.classes:
            inv = frozenset(neg[i] for i in c)
            match = next((j for j, d in enumerate(self.classes) if d == inv), None)
            if match is None:
                return None
            out.append(match)
        return out


def _difference_counts(
    p: int, n: int, d1: frozenset[int], d2: frozenset[int]
) -> np.ndarray:
    """counts[x] = #{(a, b) in D1 x D2 : a - b = x}."""
    diff = difference_table(p, n)
    counts = np.zeros(p**n, dtype=np.int64)
    for a in d1:
        for b in d2:
            counts[diff[a, b]] += 1
    return counts


# --------------------------------------------------------------------------
# Classical PDS
# --------------------------------------------------------------------------


def is_pds(
    p: int, n: int, D: set[int]
) -> Optional[tuple[int, int, int, Optional[int]]]:
    """(v, k, lambda, mu) when D is a partial difference set, else None.

    When D is all of GF(p)^n \\ {0} there are no outside elements, so mu is
    undefined and reported as None (the complete case).
    """
    if 0 in D:
        raise ValueError("a PDS must not contain the identity")
    v = p**n
    k = len(D)
    Dset = frozenset(D)
    counts = _difference_counts(p, n, Dset, Dset)
    assert counts[0] == k  # the k * identity term of D.D = k.1 + lam.D + mu.D'
    lam_vals = {int(counts[x]) for x in Dset}
    outside = set(range(1, v)) - Dset
    mu_vals = {int(counts[x]) for x in outside}
    if len(lam_vals) > 1 or len(mu_vals) > 1:
        return None
    lam = lam_vals.pop() if lam_vals else 0
    mu = mu_vals.pop() if mu_vals else None
    if mu is not None:
        assert k * k - k == k * lam + (v - k - 1) * mu
    return v, k, lam, mu


def complement_pds_params(
    params: tuple[int, int, int, int]
) -> tuple[int, int, int, int]:
    """Parameters of the complement D' = G \\ (D u {0})."""
    v, k, lam, mu = params
    kp = v - k - 1
    lamp = v - 2 * k - 2 + mu
    mup = v - 2 * k + lam
    if mu and (kp * (k - mu)) % k == 0:
        assert mup == kp * (k - mu) // k
    return v, kp, lamp, mup


def latin_square_type(
    v: int, k: int, lam: int, mu: int
) -> list[dict[str, int | str]]:
    """All signed integer (N, R) with (v,k,lam,mu) = (N^2, R(N-1), N+R^2-3R, R^2-R)."""
    out = []
    root = int(round(v**0.5))
    if root * root != v:
        return out
    for N in (root, -root):
        if N == 1:
            continue
        if k % (N - 1) != 0:
            continue
        R = k // (N - 1)
        if lam == N + R * R - 3 * R and mu == R * R - R:
            if N > 0 and R > 0:
                out.append({"N": N, "R": R, "type": "latin"})
            elif N < 0 and R < 0:
                out.append({"N": N, "R": R, "type": "negative-latin"})
    return out


# --------------------------------------------------------------------------
# Weighted PDS
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class WpdsReport:
    sizes: list[int]  # |D_0| .. |D_p|
    lam: dict  # (i, j, l) -> Cell, weights 1..p-1
    mu: dict  # (i, j) -> Cell
    alpha: dict  # (i, j) -> identity-coefficient |D_i ∩ (-D_j)|
    is_symmetric: bool
    is_inverse_closed: bool
    is_weighted_pds: bool
    tables: "IntersectionNumbers"

    def to_json(self) -> dict:
        return {
            "sizes": self.sizes,
            "lambda": {",".join(map(str, k)): list(v) for k, v in self.lam.items()},
            "mu": {",".join(map(str, k)): list(v) for k, v in self.mu.items()},
            "is_weighted_pds": self.is_weighted_pds,
            "p_tables": self.tables.to_json(),
            "integrality": self.tables.constancy_flags(),
        }


def is_weighted_pds(curves: LevelCurves) -> WpdsReport:
    """Difference-count tables for the level-curve partition.

    The verdict is true iff every lambda/mu count is constant on its class
    and every class is closed under negation up to relabeling.  Symmetry
    violations (an odd source function) are reported in the flags, never
    raised.
    """
    p, n = curves.p, curves.n
    r = p - 1
    lam: dict = {}
    mu: dict = {}
    alpha: dict = {}
    neg = negation_table(p, n)
    complement = curves.classes[p]
    for i in range(1, p):
        for j in range(1, p):
            counts = _difference_counts(p, n, curves.classes[i], curves.classes[j])
            alpha[(i, j)] = int(counts[0])
            for l in range(1, p):
                vals = {int(counts[x]) for x in curves.classes[l]}
                lam[(i, j, l)] = tuple(sorted(vals))
            mu[(i, j)] = tuple(sorted({int(counts[x]) for x in complement}))
    symmetric = curves.is_symmetric()
    inverse_closed = curves.inverse_class_map() is not None
    if symmetric:
        for i in range(1, p):
            for j in range(1, p):
                assert alpha[(i, j)] == (len(curves.classes[i]) if i == j else 0)
    constant = all(_constant(c) for c in lam.values()) and all(
        _constant(c) for c in mu.values()
    )
    nonempty = any(curves.classes[i] for i in range(1, p))
    tables = intersection_numbers_direct(curves)
    return WpdsReport(
        sizes=curves.sizes(),
        lam=lam,
        mu=mu,
        alpha=alpha,
        is_symmetric=symmetric,
        is_inverse_closed=inverse_closed,
        is_weighted_pds=constant and inverse_closed and nonempty,
        tables=tables,
    )


def unweighted_collapse(report: WpdsReport) -> Optional[tuple[int, int, int]]:
    """(k, lambda, mu) of the flattened PDS when sum_ij lam[i,j,l] is
    l-independent (and all cells are constant); None otherwise."""
    p = len(report.sizes) - 1
    if not report.is_weighted_pds:
        return None
    lam_sums = {
        l: sum(report.lam[(i, j, l)][0] for i in range(1, p) for j in range(1, p))
        for l in range(1, p)
    }
    if len(set(lam_sums.values())) != 1:
        return None
    mu_sum = sum(report.mu[(i, j)][0] if report.mu[(i, j)] else 0
                 for i in range(1, p) for j in range(1, p))
    k = sum(report.sizes[1:p])
    return k, lam_sums[1], mu_sum


# --------------------------------------------------------------------------
# Intersection numbers
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class IntersectionNumbers:
    """Structure constants p_ij^k for classes 0..p (0 = identity, p = rest).

    tables[k][i][j] is an int when the count is constant on D_k, a sorted
    tuple of observed values otherwise, and 0 when D_k is empty (nothing to
    count; also the printed convention).  Fractional entries only appear in
    trace-formula results, where a non-integer certifies that the source
    graph is not edge-weighted strongly regular.
    """

    num_classes: int  # p + 1
    sizes: list[int]
    tables: dict  # k -> list of rows; entries int | Fraction | Cell | None

    def entry(self, i: int, j: int, k: int):
        return self.tables[k][i][j]

    def all_integral_and_constant(self) -> bool:
        for t in self.tables.values():
            if t is None:
                continue
            for row in t:
                for e in row:
                    if isinstance(e, tuple) or (
                        isinstance(e, Fraction) and e.denominator != 1
                    ):
                        return False
        return True

    def constancy_flags(self) -> list[dict]:
        bad = []
        for k, t in sorted(self.tables.items()):
            if t is None:
                bad.append({"k": k, "issue": "empty class"})
                continue
            for i, row in enumerate(t):
                for j, e in enumerate(row):
                    if isinstance(e, tuple):
                        bad.append({"k": k, "i": i, "j": j, "observed": list(e)})
                    elif isinstance(e, Fraction) and e.denominator != 1:
                        bad.append({"k": k, "i": i, "j": j, "value": str(e)})
        return bad

    def to_json(self) -> dict:
        def enc(e):
            if e is None:
                return None
            if isinstance(e, Fraction):
                return int(e) if e.denominator == 1 else str(e)
            if isinstance(e, tuple):
                return list(e)
            return int(e)

        return {
            str(k): None if t is None else [[enc(e) for e in row] for row in t]
            for k, t in sorted(self.tables.items())
        }

    def check_sum_laws(self) -> None:
        """Row i sums to |D_i| and column j sums to |D_j| in every table.

        Rows or columns touching a non-constant (tuple) cell carry no single
        value to sum and are skipped.
        """
        for k, t in self.tables.items():
            if t is None or self.sizes[k] == 0:
                continue
            m = len(t)
            for i in range(m):
                if any(isinstance(t[i][j], tuple) for j in range(m)):
                    continue
                assert sum(t[i][j] for j in range(m)) == self.sizes[i]
            for j in range(m):
                if any(isinstance(t[i][j], tuple) for i in range(m)):
                    continue
                assert sum(t[i][j] for i in range(m)) == self.sizes[j]


def intersection_numbers_direct(curves: LevelCurves) -> IntersectionNumbers:
    """p_ij^k by raw difference counting over every class pair."""
    p, n = curves.p, curves.n
    m = p + 1
    sizes = curves.sizes()
    tables: dict = {}
    counts_cache = {}
    for i in range(m):
        for j in range(m):
            counts_cache[(i, j)] = _difference_counts(
                p, n, curves.classes[i], curves.classes[j]
            )
    for k in range(m):
        rows = []
        for i in range(m):
            row = []
            for j in range(m):
                dk = curves.classes[k]
                if not dk:
                    row.append(0)
                    continue
                vals = {int(counts_cache[(i, j)][x]) for x in dk}
                row.append(vals.pop() if len(vals) == 1 else tuple(sorted(vals)))
            rows.append(row)
        tables[k] = rows
    return IntersectionNumbers(m, sizes, tables)


def intersection_numbers_trace(
    curves: LevelCurves, graph: WeightedCayleyGraph | None = None
) -> IntersectionNumbers:
    """p_ij^k = Tr(A_i A_j A_k) / (p^n |D_k|) as exact fractions.

    Non-integer entries are kept (see constancy_flags); a class with
    |D_k| = 0 has no table (None), since the formula divides by |D_k|.
    """
    p, n = curves.p, curves.n
    N = p**n
    m = p + 1
    if graph is not None:
        slices = [np.asarray(s, dtype=np.int64) for s in graph.slices]
    else:
        diff = difference_table(p, n)
        membership = np.zeros(N, dtype=np.int64)
        for k in range(m):
            for idx in curves.classes[k]:
                membership[idx] = k
        slices = [(membership[diff] == k).astype(np.int64) for k in range(m)]
    sizes = curves.sizes()
    tables: dict = {}
    for k in range(m):
        if sizes[k] == 0:
            tables[k] = None
            continue
        rows = []
        for i in range(m):
            row = []
            prod_ik = None
            for j in range(m):
                tr = int(np.trace(slices[i] @ slices[j] @ slices[k]))
                row.append(Fraction(tr, N * sizes[k]))
            rows.append(row)
        tables[k] = rows
    return IntersectionNumbers(m, sizes, tables)


def trace_symmetry_holds(t: IntersectionNumbers) -> bool:
    """|D_k| p_ij^k = |D_i| p_kj^i wherever both sides are defined."""
    m = t.num_classes
    for i in range(m):
        for j in range(m):
            for k in range(m):
                if t.tables.get(k) is None or t.tables.get(i) is None:
                    continue
                a, b = t.entry(i, j, k), t.entry(k, j, i)
                if isinstance(a, tuple) or isinstance(b, tuple):
                    continue
                if t.sizes[k] * a != t.sizes[i] * b:
                    return False
    return True


# --------------------------------------------------------------------------
# Association schemes
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class AssociationScheme:
    p: int
    n: int
    class_indices: list[int]  # surviving curve classes, in order
    relations: tuple[np.ndarray, ...]
    intersection_numbers: IntersectionNumbers


def build_association_scheme(curves: LevelCurves) -> AssociationScheme:
    """Relations R_i = {(x,y) : x - y in D_i} with verified parameters.

    Requires the weighted-PDS verdict; an empty complement class is dropped,
    giving a reduced-class scheme.  The path-count constants are recomputed
    from the relation matrices and must equal the direct intersection
    numbers, including the identities tying the complement class to the
    k/lambda/mu data.
    """
    report = is_weighted_pds(curves)
    if not report.is_weighted_pds:
        raise ValueError("level curves do not form a weighted PDS")
    p, n = curves.p, curves.n
    N = p**n
    diff = difference_table(p, n)
    live = [k for k in range(p + 1) if curves.classes[k]]
    membership = np.zeros(N, dtype=np.int64)
    for k in range(p + 1):
        for idx in curves.classes[k]:
            membership[idx] = k
    relations = tuple(
        (membership[diff] == k).astype(np.int64) for k in live
    )
    total = sum(relations)
    assert (total == 1).all()  # partition of S x S
    direct = intersection_numbers_direct(curves)
    # path-count constancy, checked through the matrix products
    for a, i in enumerate(live):
        for b, j in enumerate(live):
            prod = relations[a] @ relations[b]
            for c, k in enumerate(live):
                cells = {int(v) for v in prod[relations[c].astype(bool)]}
                assert len(cells) == 1
                assert cells.pop() == direct.entry(i, j, k)
    _check_scheme_identities(curves, report, direct)
    return AssociationScheme(p, n, live, relations, direct)


def _check_scheme_identities(
    curves: LevelCurves, report: WpdsReport, t: IntersectionNumbers
) -> None:
    p = curves.p
    sizes = curves.sizes()
    r = p - 1
    comp = p  # complement class index
    for i in range(0, p + 1):
        for j in range(0, p + 1):
            assert t.entry(i, j, 0) == (sizes[i] if i == j else 0)
    for j in range(0, p + 1):
        for l in range(0, p + 1):
            if sizes[l] == 0:
                continue  # empty class: nothing to represent
            assert t.entry(0, j, l) == (1 if j == l else 0)
    if sizes[comp] == 0:
        return

    def val(cell: Cell) -> int:
        return cell[0] if cell else 0

    for i in range(1, p):
        for l in range(1, p):
            if sizes[l] == 0:
                continue
            lam_sum = sum(val(report.lam[(i, j, l)]) for j in range(1, p))
            expect = sizes[i] - (1 if i == l else 0) - lam_sum
            assert t.entry(i, comp, l) == expect
        mu_sum = sum(val(report.mu[(i, j)]) for j in range(1, p))
        assert t.entry(i, comp, comp) == sizes[i] - mu_sum
    mu_total = sum(
        val(report.mu[(i, j)]) for i in range(1, p) for j in range(1, p)
    )
    assert t.entry(comp, comp, comp) == sizes[comp] - 1 - sum(sizes[1:p]) + mu_total
