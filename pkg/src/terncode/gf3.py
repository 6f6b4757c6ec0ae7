"""Arithmetic and linear algebra over GF(3).

Vectors and matrices are numpy ``uint8`` arrays with entries in {0, 1, 2}.
Every function accepts array-likes and returns fresh arrays.
"""
from __future__ import annotations

import os
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import CapacityError, DimensionError, RankError

DEFAULT_CAP = 16
_cap: int | None = None


def get_cap() -> int:
    """Current codeword-enumeration cap on the dimension (``TERNCODE_CAP`` overrides)."""
    if _cap is not None:
        return _cap
    env = os.environ.get("TERNCODE_CAP")
    return int(env) if env else DEFAULT_CAP


def set_cap(cap: int | None) -> None:
    global _cap
    _cap = cap


def check_cap(k: int, cap: int | None = None) -> None:
    limit = get_cap() if cap is None else cap
    if k > limit:
        raise CapacityError(f"enumeration of 3^{k} vectors exceeds cap k <= {limit}")


def as_vector(x) -> np.ndarray:
    v = np.asarray(x, dtype=np.int64).reshape(-1) % 3
    return v.astype(np.uint8)


def as_matrix(m, cols: int | None = None) -> np.ndarray:
    a = np.asarray(m, dtype=np.int64)
    if a.size == 0:
        if cols is None:
            cols = a.shape[1] if a.ndim == 2 else 0
        return np.zeros((0, cols), dtype=np.uint8)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-d array, got shape {a.shape}")
    return (a % 3).astype(np.uint8)


def inner_product(x, y) -> int:
    x, y = as_vector(x), as_vector(y)
    if x.shape != y.shape:
        raise DimensionError(f"length mismatch: {x.size} vs {y.size}")
    return int(np.dot(x.astype(np.int64), y.astype(np.int64)) % 3)


def weight(x) -> int:
    return int(np.count_nonzero(as_vector(x)))


def _reduce(m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """In-place Gauss-Jordan elimination; returns (nonzero rows, pivot columns)."""
    a = m.astype(np.int16)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        # 1 and 2 are their own inverses mod 3
        if a[r, c] == 2:
            a[r] = (2 * a[r]) % 3
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % 3
        pivots.append(c)
        r += 1
    return a[:r].astype(np.uint8), pivots


def rref(m) -> np.ndarray:
    """Reduced row-echelon form with zero rows dropped.

    Pivots are the leftmost nonzero entry of each row, normalized to 1, and
    pivot columns are unit columns, so the result is unique per row space.
    """
    return _reduce(as_matrix(m))[0]


def rref_pivots(m) -> tuple[np.ndarray, list[int]]:
    return _reduce(as_matrix(m))


def rank(m) -> int:
    return len(_reduce(as_matrix(m))[1])


def nullspace(m, cols: int | None = None) -> np.ndarray:
    """Basis (as rows) of ``{v : m v^T = 0}``."""
    a = as_matrix(m, cols)
    n = a.shape[1]
    r, pivots = _reduce(a)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, p in enumerate(pivots):
            basis[i, p] = (-int(r[row, f])) % 3
    return basis


def to_standard_form(g) -> tuple[np.ndarray, list[int]]:
    """Return ``(A, perm)`` with ``rref(G[:, perm]) == (I_k | A)``.

    ``perm`` lists the pivot columns first, then the rest, each group in
    its original order.
    """
    a = as_matrix(g)
    k = a.shape[0]
    r, pivots = _reduce(a)
    if len(pivots) != k:
        raise RankError(f"generator has rank {len(pivots)} < {k} rows")
    pset = set(pivots)
    rest = [c for c in range(a.shape[1]) if c not in pset]
    return r[:, rest].copy(), pivots + rest


@lru_cache(maxsize=32)
def messages(k: int) -> np.ndarray:
    """All 3^k vectors of length k in lexicographic order (first entry slowest)."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.uint8)
    grids = np.indices((3,) * k, dtype=np.uint8).reshape(k, -1).T
    grids.setflags(write=False)
    return grids


_BLOCK_DIM = 10


def codeword_blocks(g, cap: int | None = None) -> Iterator[np.ndarray]:
    """Yield the codewords of the row space of ``g`` as chunks of rows.

    Codewords come in lexicographic message order; each chunk is a
    ``(m, n)`` uint8 array.
    """
    a = as_matrix(g)
    k, n = a.shape
    check_cap(k, cap)
    low = min(k, _BLOCK_DIM)
    hi = k - low
    g_hi, g_lo = a[:hi].astype(np.int64), a[hi:].astype(np.int64)
    base = (messages(low).astype(np.int64) @ g_lo) % 3 if low else np.zeros((1, n), np.int64)
    if hi == 0:
        yield base.astype(np.uint8)
        return
    for m in messages(hi):
        shift = (m.astype(np.int64) @ g_hi) % 3
        yield ((base + shift) % 3).astype(np.uint8)


def codeword_array(g, cap: int | None = None) -> np.ndarray:
    return np.concatenate(list(codeword_blocks(g, cap)), axis=0)


def enumerate_codewords(g, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Stream all 3^k codewords of the row space of ``g`` exactly once."""
    for block in codeword_blocks(g, cap):
        for row in block.tolist():
            yield tuple(row)


def in_row_space(x: np.ndarray, r: np.ndarray, pivots: list[int]) -> np.ndarray:
    """Membership mask of the rows of ``x`` in the row space of RREF ``r``."""
    x = np.atleast_2d(x).astype(np.int64)
    if r.shape[0] == 0:
        return ~x.any(axis=1)
    resid = (x - x[:, pivots] @ r.astype(np.int64)) % 3
    return ~resid.any(axis=1)
