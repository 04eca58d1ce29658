"""Exhaustive bent scans over even functions with f(0) = 0.

Candidates are indexed by assigning one value in GF(p) to each {v, -v} pair
of nonzero vectors (digit 0 most significant), giving the candidate-space
sizes p^((p^n-1)/2).  Two independent deciders are provided:

* an incremental odometer scan (numba-compiled, parallel over prefix
  blocks) that keeps per-candidate value counts and aborts on the first
  Walsh value of wrong modulus — integer arithmetic throughout;
* a vectorized full-spectrum check straight from the definition, used for
  small spaces and as the cross-validation oracle for the fast path.

Bentness of W = sum_k m_k zeta^k is decided by the autocorrelations
A_d = sum_k m_k m_(k+d): |W|^2 = p^n exactly iff A_1 = ... = A_(p-1) and
A_0 - A_1 = p^n.
"""

from __future__ import annotations

import json
import os
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .core import (
    PAryFunction,
    all_vectors,
    dot_table,
    even_function_pairs,
)

_FULL_SCAN_LIMIT = 200_000  # above this the incremental scan is used


@lru_cache(maxsize=None)
def _pair_data(p: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """(pair_idx (m,2), pair_dot (m,N)): indices of {v,-v} and <u, v_j> mod p."""
    pairs = even_function_pairs(p, n)
    pair_idx = np.array(pairs, dtype=np.int64)
    vecs = np.array(all_vectors(p, n), dtype=np.int64)
    reps = vecs[pair_idx[:, 0]]
    pair_dot = (reps @ vecs.T) % p
    return pair_idx, pair_dot


def candidate_count(p: int, n: int) -> int:
    return p ** len(even_function_pairs(p, n))


def candidate_digits(p: int, n: int, indices: np.ndarray) -> np.ndarray:
    """(B, m) digit matrix, digit 0 most significant."""
    m = len(even_function_pairs(p, n))
    idx = np.asarray(indices, dtype=np.int64)
    digits = np.empty((len(idx), m), dtype=np.int64)
    rest = idx.copy()
    for j in range(m - 1, -1, -1):
        digits[:, j] = rest % p
        rest //= p
    return digits


def candidate_tables(p: int, n: int, indices: np.ndarray) -> np.ndarray:
    """(B, p^n) value tables of the candidates."""
    pair_idx, _ = _pair_data(p, n)
    digits = candidate_digits(p, n, indices)
    tables = np.zeros((len(digits), p**n), dtype=np.int64)
    tables[:, pair_idx[:, 0]] = digits
    tables[:, pair_idx[:, 1]] = digits
    return tables


def candidate_function(p: int, n: int, index: int) -> PAryFunction:
    table = candidate_tables(p, n, np.array([index]))[0]
    return PAryFunction(p, n, tuple(int(v) for v in table))


def candidate_index_of(f: PAryFunction) -> int:
    pair_idx, _ = _pair_data(f.p, f.n)
    idx = 0
    for i, j in pair_idx:
        if f.values[i] != f.values[j] or f.values[0] != 0:
            raise ValueError("not an even function with f(0) = 0")
        idx = idx * f.p + f.values[i]
    return idx


# --------------------------------------------------------------------------
# Independent full-spectrum decider (vectorized, no incremental state)
# --------------------------------------------------------------------------


def full_spectrum_bent_mask(
    p: int, n: int, indices: np.ndarray, chunk: int = 4096
) -> np.ndarray:
    """Bent verdict per candidate from the complete Walsh spectrum."""
    indices = np.asarray(indices, dtype=np.int64)
    N = p**n
    target = p**n
    dots = dot_table(p, n)
    out = np.zeros(len(indices), dtype=bool)
    for lo in range(0, len(indices), chunk):
        hi = min(lo + chunk, len(indices))
        tables = candidate_tables(p, n, indices[lo:hi])
        # T[c, u, x] = f_c(x) - <u, x> mod p
        T = (tables[:, None, :] - dots[None, :, :]) % p
        counts = np.stack([(T == k).sum(axis=2) for k in range(p)], axis=2)
        # autocorrelations over the exponent axis
        A = [
            (counts * np.roll(counts, -d, axis=2)).sum(axis=2)
            for d in range(p)
        ]
        ok = A[0] - A[1] == target
        for d in range(2, p):
            ok &= A[d] == A[1]
        out[lo:hi] = ok.all(axis=1)
    return out


# --------------------------------------------------------------------------
# Incremental odometer scan (numba)
# --------------------------------------------------------------------------


@lru_cache(maxsize=1)
def _compiled_kernel() -> Callable:
    import numba

    @numba.njit(parallel=True, nogil=True, cache=True)
    def kernel(p, mpairs, d0, dot, block_ids, out, out_counts, err, target):
        N = dot.shape[1]
        nsuffix = p ** (mpairs - d0)
        cap = out.shape[1]
        for bi in numba.prange(len(block_ids)):
            b = block_ids[bi]
            dig = np.zeros(mpairs, np.int64)
            bb = b
            for j in range(d0 - 1, -1, -1):
                dig[j] = bb % p
                bb //= p
            t = np.zeros(p, np.int64)
            for j in range(mpairs):
                t[dig[j]] += 1
            m0 = np.zeros(p, np.int64)
            w = np.zeros(p, np.int64)
            base = b * nsuffix
            cnt = 0
            for s in range(nsuffix):
                if s > 0:
                    j = mpairs - 1
                    while True:
                        old = dig[j]
                        t[old] -= 1
                        if old == p - 1:
                            dig[j] = 0
                            t[0] += 1
                            j -= 1
                        else:
                            dig[j] = old + 1
                            t[old + 1] += 1
                            break
                # u = 0: counts are the signature 2*t + e_0
                for k in range(p):
                    m0[k] = 2 * t[k]
                m0[0] += 1
                a0 = np.int64(0)
                a1 = np.int64(0)
                for k in range(p):
                    a0 += m0[k] * m0[k]
                    kk = k + 1
                    if kk == p:
                        kk = 0
                    a1 += m0[k] * m0[kk]
                if a0 - a1 != target:
                    continue
                ok = True
                if p > 3:
                    a2 = np.int64(0)
                    for k in range(p):
                        kk = k + 2
                        if kk >= p:
                            kk -= p
                        a2 += m0[k] * m0[kk]
                    if a2 != a1:
                        continue
                # remaining u, early abort on first failure
                for u in range(1, N):
                    for k in range(p):
                        w[k] = 0
                    w[0] = 1
                    for j in range(mpairs):
                        c = dig[j]
                        d = dot[j, u]
                        k1 = c + d
                        if k1 >= p:
                            k1 -= p
                        k2 = c - d
                        if k2 < 0:
                            k2 += p
                        w[k1] += 1
                        w[k2] += 1
                    a0 = np.int64(0)
                    a1 = np.int64(0)
                    for k in range(p):
                        a0 += w[k] * w[k]
                        kk = k + 1
                        if kk == p:
                            kk = 0
                        a1 += w[k] * w[kk]
                    if a0 - a1 != target:
                        ok = False
                        break
                    if p > 3:
                        a2 = np.int64(0)
                        for k in range(p):
                            kk = k + 2
                            if kk >= p:
                                kk -= p
                            a2 += w[k] * w[kk]
                        if a2 != a1:
                            ok = False
                            break
                if ok:
                    if cnt >= cap:
                        err[bi] = 1
                        break
                    out[bi, cnt] = base + s
                    cnt += 1
            out_counts[bi] = cnt

    return kernel


def incremental_bent_scan(
    p: int,
    n: int,
    jobs: Optional[int] = None,
    checkpoint_path: Optional[str] = None,
    block_digits: int = 4,
    chunk_blocks: int = 64,
    cap_per_block: int = 8192,
    progress: Optional[Callable[[int, int], None]] = None,
) -> list[int]:
    """Candidate indices of all bent functions, by parallel odometer scan.

    The block id fixes the first block_digits pair values; blocks already
    listed in the checkpoint file are skipped on resume, and results are
    reported sorted so output never depends on thread scheduling.
    """
    _, pair_dot = _pair_data(p, n)
    m = pair_dot.shape[0]
    d0 = min(block_digits, m - 1)
    nblocks = p**d0
    done: set[int] = set()
    found: list[int] = []
    if checkpoint_path and os.path.exists(checkpoint_path):
        with open(checkpoint_path) as fh:
            state = json.load(fh)
        if state.get("p") == p and state.get("n") == n and state.get("d0") == d0:
            done = set(state["blocks_done"])
            found = list(state["found"])
    if jobs:
        import numba

        numba.set_num_threads(min(max(1, jobs), numba.config.NUMBA_NUM_THREADS))
    kernel = _compiled_kernel()
    todo = [b for b in range(nblocks) if b not in done]
    target = p**n
    for lo in range(0, len(todo), chunk_blocks):
        ids = np.array(todo[lo : lo + chunk_blocks], dtype=np.int64)
        out = np.zeros((len(ids), cap_per_block), dtype=np.int64)
        out_counts = np.zeros(len(ids), dtype=np.int64)
        err = np.zeros(len(ids), dtype=np.int64)
        kernel(p, m, d0, pair_dot, ids, out, out_counts, err, target)
        if err.any():
            raise RuntimeError("per-block result capacity exceeded")
        for row, b in enumerate(ids):
            found.extend(int(x) for x in out[row, : out_counts[row]])
            done.add(int(b))
        if checkpoint_path:
            tmp = checkpoint_path + ".tmp"
            with open(tmp, "w") as fh:
                json.dump(
                    {"p": p, "n": n, "d0": d0,
                     "blocks_done": sorted(done), "found": sorted(found)},
                    fh,
                )
            os.replace(tmp, checkpoint_path)
        if progress:
            progress(len(done), nblocks)
    return sorted(found)


def bent_candidate_indices(
    p: int,
    n: int,
    method: str = "auto",
    jobs: Optional[int] = None,
    checkpoint_path: Optional[str] = None,
    progress: Optional[Callable[[int, int], None]] = None,
) -> list[int]:
    """All bent candidate indices in the even/f(0)=0 space, sorted."""
    total = candidate_count(p, n)
    if method == "auto":
        method = "incremental" if total > _FULL_SCAN_LIMIT else "full"
    if method == "full":
        mask = full_spectrum_bent_mask(p, n, np.arange(total))
        return [int(i) for i in np.nonzero(mask)[0]]
    if method == "incremental":
        return incremental_bent_scan(
            p, n, jobs=jobs, checkpoint_path=checkpoint_path, progress=progress
        )
    raise ValueError(f"unknown method {method!r}")
