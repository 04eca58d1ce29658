"""Vectors over GF(p), p-ary function tables, and algebraic normal forms.

A function f: GF(p)^n -> GF(p) is stored as its full value table in a fixed
vector ordering: the vector v = (v_0, ..., v_{n-1}) sits at index
sum(v_i * p^i), so coordinate 0 varies fastest.  All printed matrices and
golden tables in this package assume that ordering.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

_SMALL_PRIMES = {2, 3, 5, 7, 11, 13}


def check_prime(p: int) -> None:
    if p not in _SMALL_PRIMES:
        # large p is out of scope; trial division keeps the check honest
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"p={p} is not prime")


def vector_index(v: Sequence[int], p: int) -> int:
    """Index of v in the coordinate-0-fastest listing of GF(p)^n."""
    idx = 0
    for i in reversed(range(len(v))):
        c = v[i]
        if not 0 <= c < p:
            raise ValueError(f"coordinate {c} out of range for GF({p})")
        idx = idx * p + c
    return idx


def index_vector(idx: int, p: int, n: int) -> tuple[int, ...]:
    """Inverse of vector_index."""
    if not 0 <= idx < p**n:
        raise ValueError(f"index {idx} out of range for GF({p})^{n}")
    v = []
    for _ in range(n):
        v.append(idx % p)
        idx //= p
    return tuple(v)


@lru_cache(maxsize=None)
def all_vectors(p: int, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(index_vector(i, p, n) for i in range(p**n))


@lru_cache(maxsize=None)
def negation_table(p: int, n: int) -> tuple[int, ...]:
    """negation_table[i] = index of -v where v = index_vector(i)."""
    return tuple(
        vector_index(tuple((-c) % p for c in v), p) for v in all_vectors(p, n)
    )


@lru_cache(maxsize=None)
def difference_table(p: int, n: int) -> np.ndarray:
    """N x N array with entry [i, j] = index of eta(i) - eta(j)."""
    N = p**n
    vecs = np.array(all_vectors(p, n), dtype=np.int64)
    diff = (vecs[:, None, :] - vecs[None, :, :]) % p
    powers = p ** np.arange(n, dtype=np.int64)
    return (diff * powers).sum(axis=2)


@lru_cache(maxsize=None)
def dot_table(p: int, n: int) -> np.ndarray:
    """N x N array with entry [i, j] = <eta(i), eta(j)> mod p."""
    vecs = np.array(all_vectors(p, n), dtype=np.int64)
    return (vecs @ vecs.T) % p


@dataclass(frozen=True)
class PAryFunction:
    """Value table of f: GF(p)^n -> GF(p), indexed by vector_index."""

    p: int
    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        check_prime(self.p)
        if len(self.values) != self.p**self.n:
            raise ValueError(
                f"table length {len(self.values)} != {self.p}^{self.n}"
            )
        if any(not 0 <= v < self.p for v in self.values):
            raise ValueError("table entry out of range")

    @classmethod
    def from_values(cls, p: int, n: int, values: Iterable[int]) -> "PAryFunction":
        return cls(p, n, tuple(int(v) for v in values))

    @classmethod
    def zero(cls, p: int, n: int) -> "PAryFunction":
        return cls(p, n, (0,) * p**n)

    def __call__(self, v: Sequence[int]) -> int:
        return self.values[vector_index(v, self.p)]

    def value_at_index(self, i: int) -> int:
        return self.values[i]

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64)

    def negate_argument(self) -> "PAryFunction":
        """Table of x -> f(-x)."""
        neg = negation_table(self.p, self.n)
        return PAryFunction(self.p, self.n, tuple(self.values[i] for i in neg))

    def scale_output(self, a: int) -> "PAryFunction":
        """Table of a*f mod p."""
        a %= self.p
        return PAryFunction(self.p, self.n, tuple((a * v) % self.p for v in self.values))

    def translate(self, b: Sequence[int]) -> "PAryFunction":
        """Table of x -> f(x + b)."""
        p, n = self.p, self.n
        vals = [
            self.values[vector_index(tuple((x[i] + b[i]) % p for i in range(n)), p)]
            for x in all_vectors(p, n)
        ]
        return PAryFunction(p, n, tuple(vals))


def is_even(f: PAryFunction) -> bool:
    """True iff f(-v) = f(v) for every v."""
    neg = negation_table(f.p, f.n)
    return all(f.values[i] == f.values[neg[i]] for i in range(len(f.values)))


def signature(f: PAryFunction) -> list[int]:
    """Level-curve sizes [|f^-1(0)|, ..., |f^-1(p-1)|]."""
    sig = [0] * f.p
    for v in f.values:
        sig[v] += 1
    return sig


def support(f: PAryFunction) -> set[int]:
    """Indices of the vectors where f does not vanish."""
    return {i for i, v in enumerate(f.values) if v != 0}


# --------------------------------------------------------------------------
# Algebraic normal form
# --------------------------------------------------------------------------
#
# Every f: GF(p)^n -> GF(p) is a polynomial with per-variable exponents
# <= p-1 (Fermat: x^p = x).  The single-point indicator at v factors over the
# coordinates, and its coordinate factor is the Lagrange basis polynomial
# ell_v(x) = inv((p-1)!) * prod_{j=1..p-1} (j + v - x)  mod p,
# so table <-> coefficient conversion is a separable per-axis linear map.


@dataclass(frozen=True)
class Anf:
    """Multivariate polynomial mod p, exponents reduced by x^p = x.

    monomials maps exponent tuples (e_0, ..., e_{n-1}) to nonzero
    coefficients in {1, ..., p-1}.  The zero polynomial has no monomials,
    degree 0, and counts as homogeneous.
    """

    p: int
    n: int
    monomials: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for exp, c in self.monomials.items():
            if len(exp) != self.n or any(not 0 <= e < self.p for e in exp):
                raise ValueError(f"bad exponent tuple {exp}")
            if not 1 <= c < self.p:
                raise ValueError(f"coefficient {c} not reduced/nonzero")

    def degree(self) -> int:
        return max((sum(e) for e in self.monomials), default=0)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.monomials}
        return len(degs) <= 1

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        parts = []
        for exp in sorted(self.monomials, key=lambda e: (-sum(e), e)):
            c = self.monomials[exp]
            factors: list[str] = []
            if c > 1 or all(e == 0 for e in exp):
                factors.append(str(c))
            for i, e in enumerate(exp):
                if e == 1:
                    factors.append(f"x{i}")
                elif e > 1:
                    factors.append(f"x{i}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)


@lru_cache(maxsize=None)
def _lagrange_matrix(p: int) -> tuple[np.ndarray, np.ndarray]:
    """(L, E): L[e, v] = coeff of x^e in ell_v; E[x, e] = x^e mod p."""
    L = np.zeros((p, p), dtype=np.int64)
    inv_fact = pow(math.factorial(p - 1) % p, -1, p)
    for v in range(p):
        # expand prod_{j=1..p-1} (j + v - x) as a polynomial in x
        poly = [1]  # coefficients, degree ascending
        for j in range(1, p):
            const = (j + v) % p
            new = [0] * (len(poly) + 1)
            for d, c in enumerate(poly):
                new[d] = (new[d] + c * const) % p
                new[d + 1] = (new[d + 1] - c) % p
            poly = new
        for e, c in enumerate(poly):
            L[e, v] = (c * inv_fact) % p
    E = np.array([[pow(x, e, p) for e in range(p)] for x in range(p)], dtype=np.int64)
    assert ((E @ L) % p == np.eye(p, dtype=np.int64)).all()
    return L, E


def _table_to_tensor(values: np.ndarray, p: int, n: int) -> np.ndarray:
    # coordinate 0 varies fastest -> Fortran order puts axis i = variable x_i
    return values.reshape((p,) * n, order="F")


def _tensor_to_table(tensor: np.ndarray) -> np.ndarray:
    return tensor.reshape(-1, order="F")


def _apply_axiswise(tensor: np.ndarray, M: np.ndarray, p: int) -> np.ndarray:
    out = tensor
    for axis in range(out.ndim):
        out = np.tensordot(M, out, axes=([1], [axis]))
        out = np.moveaxis(out, 0, axis) % p
    return out


def to_anf(f: PAryFunction) -> Anf:
    """Polynomial (exponents < p per variable) whose table is f."""
    p, n = f.p, f.n
    L, _ = _lagrange_matrix(p)
    coeffs = _apply_axiswise(_table_to_tensor(f.as_array(), p, n), L, p)
    monomials = {
        tuple(int(e) for e in exp): int(coeffs[exp])
        for exp in zip(*np.nonzero(coeffs))
    }
    return Anf(p, n, monomials)


def evaluate_anf(a: Anf) -> PAryFunction:
    """Value table of the polynomial; inverse of to_anf."""
    p, n = a.p, a.n
    _, E = _lagrange_matrix(p)
    coeffs = np.zeros((p,) * n if n else (1,), dtype=np.int64)
    for exp, c in a.monomials.items():
        coeffs[exp] = c
    tensor = _apply_axiswise(coeffs, E, p)
    return PAryFunction(p, n, tuple(int(v) for v in _tensor_to_table(tensor)))


def atomic_function(v: Sequence[int], p: int, n: int) -> PAryFunction:
    """Indicator table: 1 at v, 0 elsewhere."""
    vals = [0] * p**n
    vals[vector_index(v, p)] = 1
    return PAryFunction(p, n, tuple(vals))


# --------------------------------------------------------------------------
# Text formats
# --------------------------------------------------------------------------

_TERM_RE = re.compile(r"^(\d*)((?:\*?x\d+(?:\^\d+)?)*)$")
_VAR_RE = re.compile(r"x(\d+)(?:\^(\d+))?")


def format_function_literal(f: PAryFunction) -> str:
    return f"p={f.p},n={f.n}:" + ",".join(str(v) for v in f.values)


def parse_function_literal(text: str) -> PAryFunction:
    """Parse 'p=3,n=2:0,2,2,1,0,0,1,0,0'."""
    m = re.match(r"^p=(\d+),n=(\d+):(.*)$", text.strip())
    if not m:
        raise ValueError(f"bad function literal: {text!r}")
    p, n = int(m.group(1)), int(m.group(2))
    values = [int(tok) for tok in m.group(3).split(",")]
    return PAryFunction.from_values(p, n, values)


def parse_anf(text: str, p: int, n: int) -> Anf:
    """Parse polynomial text like 'x0^2+x0*x1' or '-2x0^4 + 2x0^2 + 2x0x1'.

    Accepts optional integer coefficients (negatives reduced mod p), '*'
    between factors or plain juxtaposition, and '^' exponents.
    """
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty polynomial")
    # split into signed terms
    terms: list[tuple[int, str]] = []
    sign, buf = 1, ""
    for ch in compact:
        if ch in "+-":
            if buf:
                terms.append((sign, buf))
                buf, sign = "", 1
            sign *= 1 if ch == "+" else -1
        else:
            buf += ch
    if not buf:
        raise ValueError(f"trailing operator in {text!r}")
    terms.append((sign, buf))

    monomials: dict[tuple[int, ...], int] = {}
    for sign, term in terms:
        m = _TERM_RE.match(term)
        if not m:
            raise ValueError(f"bad term {term!r} in {text!r}")
        coeff = int(m.group(1)) if m.group(1) else 1
        coeff = (sign * coeff) % p
        exps = [0] * n
        for vm in _VAR_RE.finditer(m.group(2)):
            i = int(vm.group(1))
            if i >= n:
                raise ValueError(f"variable x{i} out of range for n={n}")
            exps[i] += int(vm.group(2)) if vm.group(2) else 1
        key = tuple(_reduce_exponent(e, p) for e in exps)
        monomials[key] = (monomials.get(key, 0) + coeff) % p
    monomials = {e: c for e, c in monomials.items() if c}
    return Anf(p, n, monomials)


def _reduce_exponent(e: int, p: int) -> int:
    # x^p = x over GF(p): reduce e > p-1 to range [1, p-1]
    if e == 0:
        return 0
    while e > p - 1:
        e -= p - 1
    return e


def function_from_anf_text(text: str, p: int, n: int) -> PAryFunction:
    return evaluate_anf(parse_anf(text, p, n))


def random_function(p: int, n: int, rng) -> PAryFunction:
    return PAryFunction(p, n, tuple(int(rng.randrange(p)) for _ in range(p**n)))


def even_function_pairs(p: int, n: int) -> list[tuple[int, int]]:
    """The (p^n - 1) / 2 index pairs {i, -i} of nonzero vectors.

    Even functions with f(0) = 0 assign one free value per pair, which is
    the enumeration behind the candidate-space sizes p^((p^n - 1)/2).
    """
    neg = negation_table(p, n)
    pairs = []
    for i in range(1, p**n):
        j = neg[i]
        if i <= j:
            pairs.append((i, j))
    return pairs


def even_function_from_pair_values(
    p: int, n: int, pair_values: Sequence[int]
) -> PAryFunction:
    pairs = even_function_pairs(p, n)
    if len(pair_values) != len(pairs):
        raise ValueError("one value per {v, -v} pair required")
    vals = [0] * p**n
    for (i, j), c in zip(pairs, pair_values):
        vals[i] = vals[j] = int(c)
    return PAryFunction(p, n, tuple(vals))
