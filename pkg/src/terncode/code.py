"""Ternary linear codes stored by the RREF of a generator matrix."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

import numpy as np

from . import gf3
from .errors import DimensionError, ParseError


@dataclass(frozen=True)
class LinearCode:
    """An ``[n, k]`` code. Equality is equality of subspaces, not equivalence."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def generator(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.uint8).reshape(self.k, self.n)

    @property
    def pivots(self) -> list[int]:
        return [row.index(1) for row in self.rows]

    def codewords(self, cap: int | None = None) -> np.ndarray:
        return gf3.codeword_array(self.generator, cap)

    def __repr__(self) -> str:
        body = ",".join("".join(map(str, r)) for r in self.rows)
        return f"LinearCode[{self.n},{self.k}]({body})"


def _from_rref(n: int, r: np.ndarray) -> LinearCode:
    return LinearCode(n, tuple(tuple(int(v) for v in row) for row in r))


def make_code(rows, n: int | None = None) -> LinearCode:
    """The code spanned by ``rows``; ``n`` is needed only when ``rows`` is empty."""
    a = np.asarray(rows, dtype=np.int64)
    if a.size == 0:
        if n is None:
            if a.ndim == 2 and a.shape[1] > 0:
                n = a.shape[1]
            else:
                raise DimensionError("cannot infer the length of an empty generator")
        return LinearCode(n, ())
    a = gf3.as_matrix(a)
    if n is not None and a.shape[1] != n:
        raise DimensionError(f"rows have length {a.shape[1]}, expected {n}")
    return _from_rref(a.shape[1], gf3.rref(a))


def zero_code(n: int) -> LinearCode:
    return LinearCode(n, ())


def full_space(n: int) -> LinearCode:
    return _from_rref(n, np.eye(n, dtype=np.uint8))


def dual(c: LinearCode) -> LinearCode:
    return _from_rref(c.n, gf3.rref(gf3.nullspace(c.generator, c.n)))


def is_self_orthogonal(c: LinearCode) -> bool:
    g = c.generator.astype(np.int64)
    return not ((g @ g.T) % 3).any()


def is_self_dual(c: LinearCode) -> bool:
    return 2 * c.k == c.n and is_self_orthogonal(c)


def weight_distribution(c: LinearCode, cap: int | None = None) -> dict[int, int]:
    counts = np.zeros(c.n + 1, dtype=np.int64)
    for block in gf3.codeword_blocks(c.generator, cap):
        counts += np.bincount(np.count_nonzero(block, axis=1), minlength=c.n + 1)
    return {w: int(m) for w, m in enumerate(counts) if m}


def minimum_weight(c: LinearCode, cap: int | None = None) -> int:
    if c.k == 0:
        raise ValueError("minimum weight of the zero code is undefined")
    return min(w for w in weight_distribution(c, cap) if w > 0)


def dual_distance(c: LinearCode, cap: int | None = None) -> int:
    return minimum_weight(dual(c), cap)


def shorten(c: LinearCode, coord: int) -> LinearCode:
    """Codewords vanishing at ``coord`` (0-based), with that coordinate deleted."""
    if not 0 <= coord < c.n:
        raise IndexError(f"coordinate {coord} out of range for length {c.n}")
    g = c.generator
    keep = [j for j in range(c.n) if j != coord]
    col = g[:, coord]
    nz = np.flatnonzero(col)
    if nz.size == 0:
        return make_code(g[:, keep], c.n - 1)
    # clear the coordinate using the first row that touches it, then drop that row
    p = int(nz[0])
    a = g.astype(np.int64)
    scale = int(col[p])  # self-inverse
    pivot_row = (scale * a[p]) % 3
    others = [i for i in range(c.k) if i != p]
    sub = (a[others] - np.outer(a[others, coord], pivot_row)) % 3
    return make_code(sub[:, keep], c.n - 1)


def zero_extend(c: LinearCode) -> LinearCode:
    return LinearCode(c.n + 1, tuple(row + (0,) for row in c.rows))


def maximal_subcodes(c: LinearCode) -> Iterator[LinearCode]:
    """All (3^k - 1)/2 codimension-one subcodes, one per functional up to scale."""
    if c.k < 1:
        raise ValueError("the zero code has no proper subcodes")
    g = c.generator.astype(np.int64)
    for f in gf3.messages(c.k):
        nz = np.flatnonzero(f)
        if nz.size == 0 or f[nz[0]] != 1:
            continue
        kernel = gf3.nullspace(f.reshape(1, -1), c.k).astype(np.int64)
        yield make_code((kernel @ g) % 3 if kernel.size else [], c.n)


def maximal_dimension(n: int) -> int:
    """Dimension of every maximal self-orthogonal code of length ``n``."""
    if n % 2:
        return (n - 1) // 2
    return n // 2 if n % 4 == 0 else n // 2 - 1


def is_maximal_self_orthogonal(c: LinearCode, cap: int | None = None) -> bool:
    """True iff no ``x`` in the dual, outside ``c``, has ``x.x = 0``."""
    if not is_self_orthogonal(c):
        raise ValueError("code is not self-orthogonal")
    d = dual(c)
    r = c.generator
    piv = c.pivots
    for block in gf3.codeword_blocks(d.generator, cap):
        # x.x = wt(x) mod 3 over GF(3)
        iso = np.count_nonzero(block, axis=1) % 3 == 0
        cand = block[iso]
        if cand.size and not gf3.in_row_space(cand, r, piv).all():
            return False
    return True


@dataclass(frozen=True)
class Monomial:
    """``x -> y`` with ``y[perm[j]] = scale[j] * x[j]``."""

    perm: tuple[int, ...]
    scale: tuple[int, ...]

    def apply_array(self, x: np.ndarray) -> np.ndarray:
        x = np.atleast_2d(x)
        y = np.empty_like(x)
        y[:, list(self.perm)] = (x.astype(np.int64) * np.array(self.scale)) % 3
        return y

    def apply(self, c: LinearCode) -> LinearCode:
        if c.k == 0:
            return c
        return make_code(self.apply_array(c.generator), c.n)

    def compose(self, other: "Monomial") -> "Monomial":
        """``self`` after ``other``."""
        n = len(self.perm)
        perm = tuple(self.perm[other.perm[j]] for j in range(n))
        scale = tuple((self.scale[other.perm[j]] * other.scale[j]) % 3 for j in range(n))
        return Monomial(perm, scale)

    @classmethod
    def identity(cls, n: int) -> "Monomial":
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "Monomial":
        return cls(tuple(int(v) for v in rng.permutation(n)),
                   tuple(int(v) for v in rng.integers(1, 3, n)))


@dataclass
class CodeRecord:
    """A class representative with its invariants; ``min_weight`` is 0 for the zero code."""

    code: LinearCode
    min_weight: int
    dual_distance: int
    aut_order: int | None = None
    certificate: bytes | None = None


# -- file format ---------------------------------------------------------

def format_code(c: LinearCode) -> str:
    lines = [f"{c.n} {c.k}"] + ["".join(map(str, r)) for r in c.rows]
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> LinearCode:
    lines = text.splitlines()
    body = [(i + 1, ln.strip()) for i, ln in enumerate(lines)]
    body = [(i, ln) for i, ln in body if ln and not ln.startswith("#")]
    if not body:
        raise ParseError("empty code file", 1)
    lineno, head = body[0]
    parts = head.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(f"expected 'n k', got {head!r}", lineno)
    n, k = int(parts[0]), int(parts[1])
    if k > n:
        raise ParseError(f"dimension {k} exceeds length {n}", lineno)
    rows = body[1:]
    if len(rows) != k:
        raise ParseError(f"expected {k} generator rows, found {len(rows)}",
                         rows[-1][0] if rows else lineno)
    mat = []
    for i, ln in rows:
        if len(ln) != n or set(ln) - set("012"):
            raise ParseError(f"row must be {n} characters from 0/1/2", i)
        mat.append([int(ch) for ch in ln])
    c = make_code(mat, n) if k else zero_code(n)
    if c.k != k:
        raise ParseError(f"generator rows have rank {c.k}, header says {k}", lineno)
    return c


def load_code(path: str | Path) -> LinearCode:
    return parse_code(Path(path).read_text())


def save_code(c: LinearCode, path: str | Path) -> None:
    Path(path).write_text(format_code(c))


def tetracode() -> LinearCode:
    return make_code([[1, 0, 1, 1], [0, 1, 1, 2]])
