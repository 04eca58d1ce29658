"""Exact arithmetic in Z[zeta_p], zeta_p = e^(2*pi*i/p).

Elements are stored in the power basis 1, zeta, ..., zeta^(p-2), which is a
free Z-basis, so equality and rationality are coefficient tests.  The single
reduction rule zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)) is applied eagerly
after every product.  Coefficients are Python ints (arbitrary precision), so
no overflow is possible.

No division is provided.  Every quotient test (is a/c a root of unity?) is
recast as an exact multiplication test.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import check_prime


@dataclass(frozen=True)
class CycInt:
    """Sum a_0 + a_1*zeta + ... + a_(p-2)*zeta^(p-2) with integer a_k."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        check_prime(self.p)
        if len(self.coeffs) != self.p - 1:
            raise ValueError(
                f"need {self.p - 1} coefficients for Z[zeta_{self.p}]"
            )

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "CycInt":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def integer(cls, p: int, a: int) -> "CycInt":
        return cls(p, (int(a),) + (0,) * (p - 2))

    @classmethod
    def zeta_power(cls, p: int, k: int) -> "CycInt":
        k %= p
        if k == p - 1:
            return cls(p, (-1,) * (p - 1))
        c = [0] * (p - 1)
        c[k] = 1
        return cls(p, tuple(c))

    @classmethod
    def from_exponent_counts(cls, p: int, counts: Sequence[int]) -> "CycInt":
        """sum counts[k] * zeta^k from a redundant length-p count vector."""
        if len(counts) != p:
            raise ValueError("need one count per exponent 0..p-1")
        top = counts[p - 1]
        return cls(p, tuple(int(counts[k] - top) for k in range(p - 1)))

    # -- ring operations ---------------------------------------------------

    def _check_same_p(self, other: "CycInt") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed moduli {self.p} and {other.p}")

    def __add__(self, other: "CycInt") -> "CycInt":
        self._check_same_p(other)
        return CycInt(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycInt") -> "CycInt":
        self._check_same_p(other)
        return CycInt(self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycInt":
        return CycInt(self.p, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "CycInt | int") -> "CycInt":
        if isinstance(other, int):
            return CycInt(self.p, tuple(a * other for a in self.coeffs))
        self._check_same_p(other)
        p = self.p
        prod = [0] * p  # redundant basis, exponents mod p
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    prod[(i + j) % p] += a * b
        return CycInt.from_exponent_counts(p, prod)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    # -- Galois action -----------------------------------------------------

    def galois(self, k: int) -> "CycInt":
        """Image under the automorphism zeta -> zeta^k, gcd(k, p) = 1."""
        p = self.p
        if k % p == 0:
            raise ValueError("k must be a unit mod p")
        out = [0] * p
        for i, a in enumerate(self.coeffs):
            out[(i * k) % p] += a
        return CycInt.from_exponent_counts(p, out)

    def conj(self) -> "CycInt":
        """Complex conjugation, zeta -> zeta^(p-1)."""
        if self.p == 2:
            return self
        return self.galois(self.p - 1)

    def norm_sq(self) -> "CycInt":
        """self * conj(self); rational exactly when |self| is."""
        return self * self.conj()

    def is_rational(self) -> Optional[int]:
        """The integer value when the element is rational, else None."""
        if all(a == 0 for a in self.coeffs[1:]):
            return self.coeffs[0]
        return None

    # -- presentation ------------------------------------------------------

    def to_complex(self) -> complex:
        """Float shadow for cross-checks only, never for decisions."""
        z = cmath.exp(2j * cmath.pi / self.p)
        return sum(a * z**k for k, a in enumerate(self.coeffs))

    def json_coeffs(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        parts = [str(self.coeffs[0])]
        for k, a in enumerate(self.coeffs[1:], start=1):
            parts.append(f"{a}*z" if k == 1 else f"{a}*z^{k}")
        return " + ".join(parts)


def as_root_of_unity_multiple(a: CycInt, c: CycInt) -> Optional[int]:
    """Exponent j with a = zeta^j * c, or None; decided by p exact products."""
    if c.is_zero():
        raise ValueError("c must be nonzero")
    a._check_same_p(c)
    for j in range(a.p):
        if CycInt.zeta_power(a.p, j) * c == a:
            return j
    return None


def gauss_sum(p: int) -> CycInt:
    """g = sum over t in GF(p) of zeta^(t^2); satisfies g^2 = (-1)^((p-1)/2) * p."""
    check_prime(p)
    if p == 2:
        raise ValueError("Gauss sum needs odd p")
    counts = [0] * p
    for t in range(p):
        counts[(t * t) % p] += 1
    return CycInt.from_exponent_counts(p, counts)
