"""GL(n, GF(p)) enumeration and orbit classification of function sets.

The canonical form of a function under the group action is the
lexicographically minimal value table over its orbit, found by applying
every group element; tables are packed into base-p integers (most
significant digit first) so the minimum is a single vectorized reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .core import (
    PAryFunction,
    all_vectors,
    format_function_literal,
    is_even,
    signature,
    support,
    to_anf,
)

_GL_GUARD = 100_000  # matrices scanned; covers GL(3,3) and GL(2,5)


def gl_order(n: int, p: int) -> int:
    """prod_{i=0}^{n-1} (p^n - p^i)."""
    out = 1
    for i in range(n):
        out *= p**n - p**i
    return out


def _det_mod(mat: Sequence[Sequence[int]], p: int) -> int:
    m = [list(row) for row in mat]
    n = len(m)
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] % p), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = (det * m[col][col]) % p
        inv = pow(m[col][col], -1, p)
        for r in range(col + 1, n):
            c = (m[r][col] * inv) % p
            if c:
                m[r] = [(a - c * b) % p for a, b in zip(m[r], m[col])]
    return det % p


@lru_cache(maxsize=None)
def enumerate_gl(n: int, p: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All invertible n x n matrices over GF(p), row-major tuples."""
    if p ** (n * n) > _GL_GUARD:
        raise ValueError(
            f"GL({n}, GF({p})) enumeration would scan {p ** (n * n)} matrices"
        )
    out = []
    for idx in range(p ** (n * n)):
        entries = []
        rest = idx
        for _ in range(n * n):
            entries.append(rest % p)
            rest //= p
        mat = tuple(
            tuple(entries[r * n : (r + 1) * n]) for r in range(n)
        )
        if _det_mod(mat, p) != 0:
            out.append(mat)
    assert len(out) == gl_order(n, p)
    return tuple(out)


@lru_cache(maxsize=None)
def gl_table_permutations(n: int, p: int) -> np.ndarray:
    """(|GL|, p^n) array: row g maps table index i to index of phi_g(eta(i))."""
    vecs = np.array(all_vectors(p, n), dtype=np.int64)
    powers = p ** np.arange(n, dtype=np.int64)
    perms = []
    for mat in enumerate_gl(n, p):
        M = np.array(mat, dtype=np.int64)
        images = (vecs @ M.T) % p
        perms.append(images @ powers)
    return np.array(perms, dtype=np.int64)


def act(phi: Sequence[Sequence[int]], f: PAryFunction) -> PAryFunction:
    """Value table of x -> f(phi(x)); phi must be invertible."""
    if len(phi) != f.n or any(len(row) != f.n for row in phi):
        raise ValueError("matrix arity mismatch")
    if _det_mod(phi, f.p) == 0:
        raise ValueError("matrix is singular mod p")
    p, n = f.p, f.n
    M = np.array(phi, dtype=np.int64)
    vecs = np.array(all_vectors(p, n), dtype=np.int64)
    powers = p ** np.arange(n, dtype=np.int64)
    perm = ((vecs @ M.T) % p) @ powers
    vals = f.as_array()[perm]
    return PAryFunction(p, n, tuple(int(v) for v in vals))


# --------------------------------------------------------------------------
# Packing and canonical forms
# --------------------------------------------------------------------------


def pack_tables(tables: np.ndarray, p: int) -> np.ndarray:
    # most significant digit first: packed order == lexicographic table order
    N = tables.shape[-1]
    if p**N >= 2**62:
        raise ValueError("table too wide to pack into int64")
    powers = p ** np.arange(N - 1, -1, -1, dtype=np.int64)
    if p**N < 2**52:
        return (tables.astype(np.float64) @ powers.astype(np.float64)).astype(np.int64)
    return tables.astype(np.int64) @ powers


def unpack_table(packed: int, p: int, N: int) -> tuple[int, ...]:
    digits = []
    for _ in range(N):
        digits.append(int(packed % p))
        packed //= p
    return tuple(reversed(digits))


def canonical_packed(tables: np.ndarray, p: int, n: int) -> np.ndarray:
    """Per row: minimum packed value of table[perm_g] over all g in GL(n,p)."""
    perms = gl_table_permutations(n, p)
    best = None
    for perm in perms:
        packed = pack_tables(tables[:, perm], p)
        best = packed if best is None else np.minimum(best, packed)
    return best


# --------------------------------------------------------------------------
# Orbit reports
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitRecord:
    orbit_id: int
    size: int
    representative: PAryFunction  # the canonical (lex-min) member
    attributes: dict

    def literal(self) -> str:
        return format_function_literal(self.representative)


@dataclass(frozen=True)
class OrbitReport:
    p: int
    n: int
    orbits: list[OrbitRecord]
    membership: Optional[list[int]] = None  # orbit_id per input function

    def total(self) -> int:
        return sum(o.size for o in self.orbits)

    def sizes(self) -> list[int]:
        return [o.size for o in self.orbits]

    def orbit_of(self, f: PAryFunction) -> Optional[int]:
        packed = int(
            canonical_packed(f.as_array()[None, :], self.p, self.n)[0]
        )
        for o in self.orbits:
            if pack_tables(o.representative.as_array()[None, :], self.p)[0] == packed:
                return o.orbit_id
        return None

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "total": self.total(),
            "orbits": [
                {"orbit_id": o.orbit_id, "size": o.size,
                 "representative": o.literal(), **o.attributes}
                for o in self.orbits
            ],
        }

    def to_csv(self) -> str:
        cols = [
            "orbit_id", "size", "signature", "bent", "regular",
            "weakly_regular", "homogeneous", "weighted_pds",
        ]
        lines = [",".join(cols)]
        for o in self.orbits:
            a = o.attributes
            sig = "|".join(str(s) for s in a["signature"])
            lines.append(
                f"{o.orbit_id},{o.size},{sig},{a['bent']},{a['regular']},"
                f"{a['weakly_regular']},{a['homogeneous']},{a['weighted_pds']}"
            )
        return "\n".join(lines) + "\n"


def orbit_attributes(f: PAryFunction) -> dict:
    from .combinatorics import LevelCurves, is_weighted_pds
    from .graph import build_cayley_graph, is_strongly_regular_unweighted
    from .transforms import classify_regularity

    profile = classify_regularity(f)
    anf = to_anf(f)
    wpds = (
        is_weighted_pds(LevelCurves.from_function(f)).is_weighted_pds
        if is_even(f) and f.values[0] == 0
        else False
    )
    srg = is_strongly_regular_unweighted(build_cayley_graph(f))
    return {
        "signature": signature(f),
        "bent": profile.is_bent,
        "regular": profile.is_regular,
        "weakly_regular": profile.is_weakly_regular,
        "homogeneous": anf.is_homogeneous(),
        "degree": anf.degree(),
        "weighted_pds": wpds,
        "support_size": len(support(f)),
        "unweighted_srg": list(srg) if srg else None,
        "mu": profile.mu_text() if profile.is_weakly_regular else None,
    }


def orbit_partition(
    functions: Sequence[PAryFunction], p: int, n: int
) -> OrbitReport:
    """Partition a GL(n,p)-closed set of functions into orbits.

    Closure is verified, not assumed: the full orbit of each canonical
    representative must land inside the input set, otherwise the offending
    image is reported.
    """
    if not functions:
        return OrbitReport(p, n, [])
    N = p**n
    tables = np.array([f.values for f in functions], dtype=np.int64)
    packed_all = pack_tables(tables, p)
    if len(set(packed_all.tolist())) != len(functions):
        raise ValueError("input set contains duplicate functions")
    packed_set = set(packed_all.tolist())
    canon = canonical_packed(tables, p, n)
    groups: dict[int, list[int]] = {}
    for row, c in enumerate(canon.tolist()):
        groups.setdefault(c, []).append(row)

    perms = gl_table_permutations(n, p)
    records = []
    for c, rows in groups.items():
        rep = PAryFunction(p, n, unpack_table(c, p, N))
        orbit_packed = set(pack_tables(rep.as_array()[perms], p).tolist())
        missing = orbit_packed - packed_set
        if missing:
            witness = PAryFunction(p, n, unpack_table(missing.pop(), p, N))
            raise ValueError(
                "input set is not closed under the group action; "
                f"missing {format_function_literal(witness)}"
            )
        if len(orbit_packed) != len(rows):
            raise ValueError("orbit size does not match grouped member count")
        records.append((c, rep, len(rows)))

    # deterministic order: signature, then size, then canonical table
    records.sort(key=lambda t: (signature(t[1]), t[2], t[0]))
    orbits = [
        OrbitRecord(i + 1, size, rep, orbit_attributes(rep))
        for i, (c, rep, size) in enumerate(records)
    ]
    id_of_canon = {c: i + 1 for i, (c, rep, size) in enumerate(records)}
    membership = [id_of_canon[c] for c in canon.tolist()]
    report = OrbitReport(p, n, orbits, membership)
    assert report.total() == len(functions)
    return report


def scalar_relations(report: OrbitReport) -> dict[tuple[int, int], int]:
    """Map (scalar a, orbit_id) -> orbit_id containing a*f for f in the orbit."""
    out = {}
    for o in report.orbits:
        for a in range(1, report.p):
            target = report.orbit_of(o.representative.scale_output(a))
            if target is None:
                raise ValueError("scalar multiple escapes the classified set")
            out[(a, o.orbit_id)] = target
    return out
