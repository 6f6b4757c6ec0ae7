"""Exhaustive enumeration used to cross-check the generation pipeline."""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import gf3
from .code import LinearCode, zero_code
from .equivalence import brute_force_orbit, codeword_key


@lru_cache(maxsize=None)
def _isotropic_rows(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nonzero vectors of weight 0 mod 3 with leading entry 1, and their leading positions."""
    vs = gf3.messages(n).astype(np.int64)
    vs = vs[vs.any(axis=1) & (np.count_nonzero(vs, axis=1) % 3 == 0)]
    lead = np.argmax(vs != 0, axis=1)
    keep = vs[np.arange(len(vs)), lead] == 1
    return vs[keep], lead[keep]


def all_self_orthogonal(n: int, k: int) -> list[LinearCode]:
    """Every self-orthogonal ``[n, k]`` subspace, as its RREF generator.

    Rows are chosen bottom-up (largest pivot first) so that the zero pattern
    an RREF row needs at the later pivots is known when it is picked; every
    subspace therefore appears exactly once.
    """
    if k == 0:
        return [zero_code(n)]
    vs, lead = _isotropic_rows(n)
    out: list[LinearCode] = []

    def extend(rows: list[np.ndarray], pivots: list[int]) -> None:
        if len(rows) == k:
            out.append(LinearCode(n, tuple(tuple(int(v) for v in r) for r in reversed(rows))))
            return
        ok = lead < (pivots[-1] if pivots else n)
        for r, p in zip(rows, pivots):
            ok &= vs[:, p] == 0
            ok &= (vs @ r) % 3 == 0
        for i in np.flatnonzero(ok):
            extend(rows + [vs[i]], pivots + [int(lead[i])])

    extend([], [])
    return sorted(out, key=lambda c: c.rows)


def orbit_classes(codes: list[LinearCode]) -> list[list[LinearCode]]:
    """Partition ``codes`` into monomial orbits by exhaustive image generation."""
    by_key = {codeword_key(c): c for c in codes}
    seen: set[bytes] = set()
    classes = []
    for c in codes:
        key = codeword_key(c)
        if key in seen:
            continue
        orbit = brute_force_orbit(c)
        seen |= orbit
        classes.append([by_key[k] for k in sorted(orbit) if k in by_key])
    return classes
