"""Pure-Python GF(p) kernel: in-place Gauss-Jordan elimination.

Fallback backend used when the compiled extension is unavailable. Row
operations are numpy-vectorized; the pivot loop runs in Python. Output is
bit-identical to the Cython backend (deterministic first-nonzero pivoting).
"""

import numpy as np

BACKEND = "python"


def rref_ip(a: np.ndarray, p: int) -> tuple[int, list[int]]:
    """Reduce `a` (int64, C-contiguous, entries in [0, p)) in place.

    Returns (rank, pivot column indices). Rows below the rank are zeroed.
    """
    rows, cols = a.shape
    rank = 0
    pivots: list[int] = []
    for c in range(cols):
        if rank == rows:
            break
        sub = a[rank:, c]
        nz = np.nonzero(sub)[0]
        if nz.size == 0:
            continue
        i = rank + int(nz[0])
        if i != rank:
            a[[rank, i]] = a[[i, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        if inv != 1:
            a[rank] = (a[rank] * inv) % p
        col = a[:, c].copy()
        col[rank] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - np.outer(col[mask], a[rank])) % p
        pivots.append(c)
        rank += 1
    if rank < rows:
        a[rank:] = 0
    return rank, pivots
