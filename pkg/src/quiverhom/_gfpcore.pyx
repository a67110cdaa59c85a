# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(p) kernel: in-place Gauss-Jordan elimination.

Same contract and pivoting order as the pure backend `_gfpcore_py`.
"""

BACKEND = "cython"


cdef long long _modinv(long long x, long long p):
    # Fermat: x^(p-2) mod p, p prime.
    cdef long long result = 1
    cdef long long base = x % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def rref_ip(long long[:, ::1] a, long long p):
    """Reduce `a` in place; return (rank, pivot column list)."""
    cdef Py_ssize_t rows = a.shape[0]
    cdef Py_ssize_t cols = a.shape[1]
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t c, i, j, k
    cdef long long inv, factor, tmp
    pivots = []
    for c in range(cols):
        if rank == rows:
            break
        i = -1
        for j in range(rank, rows):
            if a[j, c] != 0:
                i = j
                break
        if i < 0:
            continue
        if i != rank:
            for k in range(cols):
                tmp = a[rank, k]
                a[rank, k] = a[i, k]
                a[i, k] = tmp
        inv = _modinv(a[rank, c], p)
        if inv != 1:
            for k in range(cols):
                a[rank, k] = (a[rank, k] * inv) % p
        for j in range(rows):
            if j == rank:
                continue
            factor = a[j, c]
            if factor != 0:
                for k in range(cols):
                    a[j, k] = (a[j, k] - factor * a[rank, k]) % p
                    if a[j, k] < 0:
                        a[j, k] += p
        pivots.append(c)
        rank += 1
    for j in range(rank, rows):
        for k in range(cols):
            a[j, k] = 0
    return rank, pivots
