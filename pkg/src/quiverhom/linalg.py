"""Exact dense linear algebra over a prime field GF(p).

The only arithmetic substrate used by the rest of the package. Matrices are
row-major numpy int64 arrays with entries in [0, p); all results are exact
and bit-for-bit reproducible (first-nonzero pivoting). The Gauss-Jordan
kernel is compiled (Cython) when available, with a numpy fallback selected
at import; set QUIVERHOM_PURE=1 to force the fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np
from sympy import isprime

if os.environ.get("QUIVERHOM_PURE") == "1":
    from . import _gfpcore_py as _core
else:
    try:
        from . import _gfpcore as _core  # type: ignore[attr-defined]
    except ImportError:
        from . import _gfpcore_py as _core

BACKEND = _core.BACKEND

#: Default modulus: prime, and larger than the dimension of any desk-scale
#: algebra or endomorphism ring (required by the trace-form radical).
DEFAULT_PRIME = 32003


class DimensionMismatch(ValueError):
    """Shapes or ambient dimensions do not line up."""


@dataclass(frozen=True)
class GFp:
    """A prime field GF(p), p an odd prime."""

    p: int

    def __post_init__(self):
        if self.p <= 2 or not isprime(self.p):
            raise ValueError(f"modulus must be a prime > 2, got {self.p}")

    def inv(self, x: int) -> int:
        return pow(x % self.p, self.p - 2, self.p)


def asmat(data, p: int) -> np.ndarray:
    """Coerce to a 2-D C-contiguous int64 array reduced mod p."""
    a = np.ascontiguousarray(np.asarray(data, dtype=np.int64) % p)
    if a.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D array, got ndim={a.ndim}")
    return a


def rref(a, p: int) -> tuple[np.ndarray, int, list[int]]:
    """Unique reduced row-echelon form of `a` mod p.

    Returns (reduced, rank, pivot columns); rows past the rank are zero.
    """
    r = asmat(a, p).copy()
    rank, pivots = _core.rref_ip(r, p)
    return r, rank, pivots


def rank(a, p: int) -> int:
    return rref(a, p)[1]


def matmul(a, b, p: int) -> np.ndarray:
    # int64 is safe: entries < p <= 32003, so accumulated dot products stay
    # far below 2^63 for any desk-scale inner dimension.
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % p


def kernel(a, p: int) -> np.ndarray:
    """Basis (RREF rows) of the right null space {v : a v = 0}."""
    a = asmat(a, p)
    red, rk, pivots = rref(a, p)
    cols = a.shape[1]
    free = [c for c in range(cols) if c not in set(pivots)]
    if not free:
        return np.zeros((0, cols), dtype=np.int64)
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for row, c in enumerate(free):
        basis[row, c] = 1
        for i, pc in enumerate(pivots):
            basis[row, pc] = (-red[i, c]) % p
    return rref(basis, p)[0][: len(free)]


def solve_matrix(a, b, p: int):
    """Some X with a @ X = b, or None when inconsistent.

    `b` may have any number of columns; a particular solution is returned
    (free variables set to zero).
    """
    a = asmat(a, p)
    b = asmat(b, p)
    if a.shape[0] != b.shape[0]:
        raise DimensionMismatch(
            f"a has {a.shape[0]} rows but b has {b.shape[0]}"
        )
    n = a.shape[1]
    aug, rk, pivots = rref(np.hstack([a, b]), p)
    if any(c >= n for c in pivots):
        return None
    x = np.zeros((n, b.shape[1]), dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = aug[i, n:]
    return x


def solve(a, b, p: int):
    """Some x with a x = b for a single right-hand column, or None."""
    b = np.asarray(b, dtype=np.int64)
    if b.ndim == 1:
        x = solve_matrix(a, b.reshape(-1, 1), p)
        return None if x is None else x[:, 0]
    return solve_matrix(a, b, p)


def row_space(a, p: int) -> np.ndarray:
    """RREF basis of the row space (zero rows stripped)."""
    red, rk, _ = rref(a, p)
    return red[:rk]


def in_row_space(rows, v, p: int) -> bool:
    rows = asmat(rows, p)
    v = asmat(np.atleast_2d(v), p)
    if rows.shape[0] == 0:
        return not v.any()
    base = rank(rows, p)
    return rank(np.vstack([rows, v]), p) == base


def intersect_rows(u, v, p: int) -> np.ndarray:
    """RREF basis of (row space of u) ∩ (row space of v)."""
    u = asmat(u, p)
    v = asmat(v, p)
    if u.shape[1] != v.shape[1]:
        raise DimensionMismatch("ambient dimensions differ")
    if u.shape[0] == 0 or v.shape[0] == 0:
        return np.zeros((0, u.shape[1]), dtype=np.int64)
    # (a, b) with a·u = b·v  <=>  (a, -b) in the left kernel of [u; v].
    stacked = np.vstack([u, v])
    left = kernel(stacked.T, p)
    if left.shape[0] == 0:
        return np.zeros((0, u.shape[1]), dtype=np.int64)
    vecs = matmul(left[:, : u.shape[0]], u, p)
    return row_space(vecs, p)


def sum_rows(u, v, p: int) -> np.ndarray:
    u = asmat(u, p)
    v = asmat(v, p)
    if u.shape[1] != v.shape[1]:
        raise DimensionMismatch("ambient dimensions differ")
    return row_space(np.vstack([u, v]), p)


def quotient_projection(u_rows, ambient: int, p: int):
    """Projection of F^ambient onto a complement coordinatization of u.

    Returns (proj, section): proj has kernel exactly the row space of u and
    proj @ section = identity. The complement is coordinatized by the
    non-pivot columns of rref(u).
    """
    red, rk, pivots = rref(asmat(u_rows, p), p) if len(u_rows) else (
        np.zeros((0, ambient), dtype=np.int64), 0, [])
    free = [c for c in range(ambient) if c not in set(pivots)]
    proj = np.zeros((len(free), ambient), dtype=np.int64)
    for row, c in enumerate(free):
        proj[row, c] = 1
        for i, pc in enumerate(pivots):
            proj[row, pc] = (-red[i, c]) % p
    section = np.zeros((ambient, len(free)), dtype=np.int64)
    for row, c in enumerate(free):
        section[c, row] = 1
    return proj, section


class Matrix:
    """Immutable matrix over GF(p) with explicit (rows, cols) shape."""

    __slots__ = ("field", "a")

    def __init__(self, field: GFp, data):
        self.field = field
        a = asmat(data, field.p)
        a.setflags(write=False)
        self.a = a

    @classmethod
    def zeros(cls, field: GFp, rows: int, cols: int) -> "Matrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: GFp, n: int) -> "Matrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, matmul(self.a, other.a, self.field.p))

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, (self.a + other.a) % self.field.p)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, (self.a - other.a) % self.field.p)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.a.shape == other.a.shape
            and bool((self.a == other.a).all())
        )

    def __hash__(self):
        return hash((self.field.p, self.a.shape, self.a.tobytes()))

    def __repr__(self):
        return f"Matrix(GF({self.field.p}), {self.a.tolist()})"

    def rref(self) -> tuple["Matrix", int, list[int]]:
        red, rk, piv = rref(self.a, self.field.p)
        return Matrix(self.field, red), rk, piv

    def rank(self) -> int:
        return rank(self.a, self.field.p)

    def kernel_basis(self) -> "Subspace":
        return Subspace(self.field, self.cols, kernel(self.a, self.field.p))

    def solve(self, b):
        """Some x with self·x = b, or None when inconsistent."""
        return solve(self.a, np.asarray(b, dtype=np.int64), self.field.p)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.a.T)


class Subspace:
    """Subspace of F^ambient, stored as an RREF row basis."""

    __slots__ = ("field", "ambient", "basis")

    def __init__(self, field: GFp, ambient: int, rows, *, canonical=False):
        self.field = field
        self.ambient = ambient
        rows = asmat(rows, field.p) if len(rows) else np.zeros(
            (0, ambient), dtype=np.int64)
        if rows.shape[1] != ambient:
            raise DimensionMismatch(
                f"rows have {rows.shape[1]} columns, ambient is {ambient}"
            )
        b = rows if canonical else row_space(rows, field.p)
        b.setflags(write=False)
        self.basis = b

    @classmethod
    def full(cls, field: GFp, ambient: int) -> "Subspace":
        return cls(field, ambient, np.eye(ambient, dtype=np.int64),
                   canonical=True)

    @classmethod
    def zero(cls, field: GFp, ambient: int) -> "Subspace":
        return cls(field, ambient, [], canonical=True)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def _check(self, other: "Subspace"):
        if self.ambient != other.ambient or self.field != other.field:
            raise DimensionMismatch("subspaces live in different ambients")

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.field, self.ambient,
                        intersect_rows(self.basis, other.basis, self.field.p),
                        canonical=True)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.field, self.ambient,
                        sum_rows(self.basis, other.basis, self.field.p),
                        canonical=True)

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        if other.dim == 0:
            return True
        return in_row_space(self.basis, other.basis, self.field.p)

    def contains_vector(self, v) -> bool:
        return in_row_space(self.basis, np.atleast_2d(v), self.field.p)

    def quotient_projection(self) -> Matrix:
        """Matrix mapping F^ambient onto a complement coordinatization;
        kernel exactly this subspace."""
        proj, _ = quotient_projection(self.basis, self.ambient, self.field.p)
        return Matrix(self.field, proj)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.basis.shape == other.basis.shape
            and bool((self.basis == other.basis).all())
        )

    def __hash__(self):
        return hash((self.field.p, self.ambient, self.basis.tobytes()))

    def __repr__(self):
        return (f"Subspace(GF({self.field.p}), ambient={self.ambient}, "
                f"dim={self.dim})")
