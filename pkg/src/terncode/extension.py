"""One-step lengthening of self-orthogonal codes.

A self-orthogonal ``[n-1, k-1]`` parent with standard form ``(I | A)`` is
lengthened to the ``[n, k]`` code generated by

    1 | 0 ... 0 | b
    0 |    I    | A

for every admissible ``b``: ``A b^T = 0``, ``wt(b) = 2 mod 3``, ``wt(b) >=
d_min - 1`` and first nonzero entry 1 (``b`` and ``2b`` give equivalent
codes). The new coordinate is placed first and the parent's columns keep
their original positions, so ``shorten(lengthen(parent, b), 0) == parent``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import gf3
from .code import LinearCode, is_self_orthogonal, make_code


@dataclass(frozen=True)
class LengtheningCandidate:
    parent: LinearCode
    b: tuple[int, ...]
    result: LinearCode


def admissible_b_vectors(a, d_min: int = 0, cols: int | None = None) -> Iterator[np.ndarray]:
    """Kernel vectors of ``a`` satisfying the weight and leading-one conditions.

    ``cols`` gives the width when ``a`` has no rows (zero-code parent).
    """
    a = gf3.as_matrix(a, cols)
    basis = gf3.nullspace(a, a.shape[1]).astype(np.int64)
    if basis.shape[0] == 0:
        return
    gf3.check_cap(basis.shape[0])
    for block in gf3.codeword_blocks(basis):
        w = np.count_nonzero(block, axis=1)
        ok = (w % 3 == 2) & (w >= d_min - 1)
        if not ok.any():
            continue
        # leading entry of each row
        lead = block[np.arange(block.shape[0]), np.argmax(block != 0, axis=1)]
        for b in block[ok & (lead == 1)]:
            yield b


def standard_block(parent: LinearCode) -> tuple[np.ndarray, list[int]]:
    """``(A, perm)`` for the parent; the zero code has an empty ``A``."""
    if parent.k == 0:
        return np.zeros((0, parent.n), dtype=np.uint8), list(range(parent.n))
    return gf3.to_standard_form(parent.generator)


def lengthen(parent: LinearCode, b, *, _block=None) -> LinearCode:
    """The ``[n, k]`` code with generator ``G(A, b)``.

    Only ``A b^T = 0`` and ``wt(b) = 2 mod 3`` are required here; the
    leading-one normalization matters for enumeration, not validity.
    """
    a, perm = _block if _block is not None else standard_block(parent)
    b = gf3.as_vector(b)
    k1, n1 = parent.k, parent.n
    if b.size != n1 - k1:
        raise ValueError(f"b must have length {n1 - k1}, got {b.size}")
    if np.count_nonzero(b) % 3 != 2 or ((a.astype(np.int64) @ b.astype(np.int64)) % 3).any():
        raise ValueError(f"b = {b.tolist()} is not admissible for this parent")
    # first row in standard-form coordinates, then undo the permutation
    first_std = np.concatenate([np.zeros(k1, np.uint8), b])
    first = np.zeros(n1, dtype=np.uint8)
    first[perm] = first_std
    top = np.concatenate([[1], first])
    rest = np.concatenate([np.zeros((k1, 1), np.uint8), parent.generator], axis=1)
    return make_code(np.vstack([top, rest]), n1 + 1)


def lengthen_all(parent: LinearCode, d_min: int = 0) -> Iterator[LinearCode]:
    """Every ``lengthen(parent, b)`` over admissible ``b``."""
    block = standard_block(parent)
    for b in admissible_b_vectors(block[0], d_min, parent.n - parent.k):
        yield lengthen(parent, b, _block=block)


def candidates(parent: LinearCode, d_min: int = 0) -> Iterator[LengtheningCandidate]:
    block = standard_block(parent)
    for b in admissible_b_vectors(block[0], d_min, parent.n - parent.k):
        yield LengtheningCandidate(parent, tuple(int(v) for v in b),
                                   lengthen(parent, b, _block=block))


def check_candidate(c: LengtheningCandidate) -> bool:
    return is_self_orthogonal(c.result) and c.result.k == c.parent.k + 1
