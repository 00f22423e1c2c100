"""Rank of matrices over GF(p).

Two independent routes: sparse incremental echelon form on dict-vectors
(used by the Koszul engine) and dense row reduction with numpy (used as a
cross-check and for small dense inputs).
"""

from __future__ import annotations

import numpy as np

SparseVec = dict[int, int]


def sparse_rank(vectors, p: int) -> int:
    """Rank of the span of sparse vectors ``{index: value}`` mod ``p``."""
    pivots: dict[int, SparseVec] = {}
    rank = 0
    for vec in vectors:
        v = {k: c % p for k, c in vec.items() if c % p}
        while v:
            k = min(v)
            piv = pivots.get(k)
            if piv is None:
                inv = pow(v[k], -1, p)
                pivots[k] = {j: c * inv % p for j, c in v.items()}
                rank += 1
                break
            f = v[k]
            for j, c in piv.items():
                val = (v.get(j, 0) - f * c) % p
                if val:
                    v[j] = val
                else:
                    v.pop(j, None)
    return rank


def dense_rank(mat, p: int) -> int:
    """Rank by Gaussian elimination on a dense integer matrix mod ``p``."""
    a = np.array(mat, dtype=np.int64) % p
    if a.size == 0:
        return 0
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = a[rank] * inv % p
        below = a[rank + 1:, col].copy()
        mask = below != 0
        if mask.any():
            idx = np.nonzero(mask)[0] + rank + 1
            a[idx] = (a[idx] - np.outer(below[mask], a[rank])) % p
        rank += 1
    return rank


def to_dense(vectors, nrows: int) -> np.ndarray:
    """Columns given as sparse vectors -> dense ``nrows x len(vectors)`` array."""
    out = np.zeros((nrows, len(vectors)), dtype=np.int64)
    for j, vec in enumerate(vectors):
        for i, c in vec.items():
            out[i, j] = c
    return out
