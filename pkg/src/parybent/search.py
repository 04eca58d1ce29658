"""Randomized depth-first search for Boolean bent functions on GF(2)^n.

The search assigns bits to vectors in a shuffled order, maintaining running
Walsh accumulators W[u] = sum over assigned v of (-1)^(A[v] + <u,v>).  A
branch dies as soon as some accumulator can no longer reach +-2^(n/2)
within the number of unassigned vectors, or when the count of assigned ones
exceeds 2^(n-1) - 2^(n/2-1) (which restricts completions to the lighter of
the two bent weight classes).  Each branch tries a coin-flipped bit first,
then its complement, so a fixed seed replays the identical trace.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .core import PAryFunction, all_vectors


class NoBentFunction(Exception):
    """Raised by a branch whose subtree cannot contain a bent completion."""


@dataclass(frozen=True)
class TraceStep:
    vector: tuple[int, ...]
    bit: int
    walsh: tuple[int, ...]  # accumulator snapshot in vector-index order

    def to_json(self) -> dict:
        return {"vector": list(self.vector), "bit": self.bit,
                "walsh": list(self.walsh)}


class BentSearch:
    def __init__(self, n: int, seed: Optional[int] = None):
        if n < 2 or n % 2:
            raise ValueError("bent functions need even n >= 2")
        self.n = n
        self.vectors = all_vectors(2, n)
        self.rng = random.Random(seed)
        self.trace: list[TraceStep] = []

    def run(self) -> tuple[PAryFunction, list[TraceStep]]:
        self.trace = []
        order = list(self.vectors)
        self.rng.shuffle(order)
        W = {v: 0 for v in self.vectors}
        assignment = self._search({}, order, W, 0)
        self.trace.reverse()
        table = tuple(assignment[v] for v in self.vectors)
        return PAryFunction(2, self.n, table), list(self.trace)

    def _search(self, A: dict, B: list, W: dict, wgt: int) -> dict:
        n = self.n
        if len(A) == 2**n:
            return A
        if wgt > 2 ** (n - 1) - 2 ** (n // 2 - 1):
            raise NoBentFunction
        B = list(B)
        v = B.pop()
        cf = 1 if self.rng.random() > 0.5 else 0
        for bit in (cf, (1 + cf) % 2):
            A_new = dict(A)
            A_new[v] = bit
            try:
                W_new = self._apply_update(W, v, bit, 2**n - len(A_new))
                result = self._search(A_new, B, W_new, wgt + bit)
                self.trace.append(
                    TraceStep(v, bit, tuple(W_new[u] for u in self.vectors))
                )
                return result
            except NoBentFunction:
                pass
        raise NoBentFunction

    def _apply_update(self, W: dict, v, bit: int, left_to_fill: int) -> dict:
        n = self.n
        flat = 2 ** (n // 2)
        W = dict(W)
        for u in self.vectors:
            dot = sum(a * b for a, b in zip(u, v)) % 2
            W[u] += (-1) ** (bit + dot)
            wmin = W[u] - left_to_fill
            wmax = W[u] + left_to_fill
            if not (wmin <= flat <= wmax or wmin <= -flat <= wmax):
                raise NoBentFunction
        return W


def search_bent(n: int, seed: Optional[int] = None) -> tuple[PAryFunction, list[TraceStep]]:
    """One bent function of n variables plus the search trace."""
    return BentSearch(n, seed).run()


def walsh_window_prunes(n: int, table: tuple[int, ...]) -> bool:
    """Would the accumulator-window rule cut some prefix of this assignment?

    Uses the fixed vector-index assignment order; exposed so the pruning
    rule can be checked exhaustively against brute force at small n.
    """
    vectors = all_vectors(2, n)
    flat = 2 ** (n // 2)
    W = [0] * 2**n
    for step, v in enumerate(vectors):
        bit = table[step]
        for ui, u in enumerate(vectors):
            dot = sum(a * b for a, b in zip(u, v)) % 2
            W[ui] += (-1) ** (bit + dot)
        left = 2**n - (step + 1)
        for w in W:
            if not (w - left <= flat <= w + left or w - left <= -flat <= w + left):
                return True
    return False


def boolean_walsh_spectrum(table: tuple[int, ...], n: int) -> list[int]:
    """W(u) = sum_x (-1)^(f(x) + <u,x>) by the fast butterfly."""
    W = [1 - 2 * b for b in table]
    h = 1
    while h < len(W):
        for i in range(0, len(W), 2 * h):
            for j in range(i, i + h):
                a, b = W[j], W[j + h]
                W[j], W[j + h] = a + b, a - b
        h *= 2
    return W


def is_boolean_bent(table: tuple[int, ...], n: int) -> bool:
    flat = 2 ** (n // 2)
    return all(abs(w) == flat for w in boolean_walsh_spectrum(table, n))
