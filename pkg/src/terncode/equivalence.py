"""Monomial equivalence and automorphism groups of ternary codes.

A code ``C`` is encoded as a vertex-colored digraph whose vertices are the
codewords of the weights in a spanning weight set ``W(C)`` together with the
coordinate-value pairs ``(j, y)``, ``y in {1, 2}``.  Codeword ``c`` and
``(j, c_j)`` are joined in both directions and ``(j, y) -> (j, 2y)``.  Two
codes with the same ``W`` are equivalent iff their digraphs are isomorphic,
and the digraph's automorphism group is isomorphic to ``Aut(C)``.
"""
from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import gf3
from .canon import canonical_form
from .code import LinearCode, Monomial, make_code

BRUTE_FORCE_MAX_N = 7


@dataclass(frozen=True)
class WeightSet:
    weights: tuple[int, ...]


@dataclass
class ColoredDigraph:
    """Vertices ``0 .. 2n-1`` are ``(j, y) -> 2j + y - 1``; codewords follow."""

    n: int
    colors: list[int]
    out_adj: list[list[int]]
    words: np.ndarray

    @property
    def num_vertices(self) -> int:
        return len(self.colors)

    @property
    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.out_adj) for v in nbrs]


@dataclass(frozen=True)
class CanonicalCertificate:
    data: bytes

    def hex(self) -> str:
        return self.data.hex()

    def digest(self) -> bytes:
        return hashlib.blake2b(self.data, digest_size=16).digest()

    @classmethod
    def fromhex(cls, text: str) -> "CanonicalCertificate":
        return cls(bytes.fromhex(text))


@dataclass
class AutGroupInfo:
    order: int
    generators: list[Monomial] = field(default_factory=list)


@dataclass
class CanonicalData:
    """Everything one labeling run produces for a code."""

    certificate: CanonicalCertificate
    aut: AutGroupInfo
    weight_set: WeightSet
    nodes: int = 0


def _words_by_weight(c: LinearCode) -> tuple[np.ndarray, np.ndarray]:
    words = c.codewords()
    return words, np.count_nonzero(words, axis=1)


def select_weight_set(c: LinearCode, *, _words=None) -> WeightSet:
    """Smallest-first weight classes (ties to lower weight) until they span ``c``."""
    if c.k < 1:
        raise ValueError("weight set is defined for k >= 1")
    words, wts = _words if _words is not None else _words_by_weight(c)
    counts = np.bincount(wts, minlength=c.n + 1)
    order = sorted((int(counts[i]), i) for i in range(1, c.n + 1) if counts[i])
    chosen: list[int] = []
    basis = np.zeros((0, c.n), dtype=np.uint8)
    for _, i in order:
        chosen.append(i)
        basis = gf3.rref(np.vstack([basis, words[wts == i]]))
        if basis.shape[0] == c.k:
            break
    return WeightSet(tuple(sorted(chosen)))


def build_digraph(c: LinearCode, w: WeightSet | None = None, *, _words=None) -> ColoredDigraph:
    words, wts = _words if _words is not None else _words_by_weight(c)
    if w is None:
        w = select_weight_set(c, _words=(words, wts))
    n = c.n
    sel = np.concatenate([np.flatnonzero(wts == i) for i in w.weights])
    chosen = words[sel]
    colors = [0] * (2 * n) + [int(x) for x in wts[sel]]
    out_adj: list[list[int]] = [[] for _ in range(2 * n + len(sel))]
    for j in range(n):
        out_adj[2 * j].append(2 * j + 1)
        out_adj[2 * j + 1].append(2 * j)
    for idx, row in enumerate(chosen.tolist()):
        u = 2 * n + idx
        for j, y in enumerate(row):
            if y:
                cv = 2 * j + y - 1
                out_adj[u].append(cv)
                out_adj[cv].append(u)
    return ColoredDigraph(n, colors, out_adj, chosen)


def _serialize(c: LinearCode, w: WeightSet, sizes: list[int], g: ColoredDigraph, order: list[int]) -> bytes:
    n = c.n
    pos = [0] * len(order)
    for p, v in enumerate(order):
        pos[v] = p
    head = f"T3;n={n};k={c.k};W={','.join(map(str, w.weights))};A={','.join(map(str, sizes))};"
    width = 1 if 2 * n <= 256 else 2
    out = bytearray(head.encode())
    # coordinate positions come first (color 0), each paired with its scalar partner
    for p in range(2 * n):
        v = order[p]
        out += pos[v ^ 1].to_bytes(width, "big")
    for p in range(2 * n, len(order)):
        v = order[p]
        nb = sorted(pos[x] for x in g.out_adj[v])
        for q in nb:
            out += q.to_bytes(width, "big")
    return bytes(out)


def _monomials_from(gens: list[list[int]], n: int) -> list[Monomial]:
    out = []
    for g in gens:
        perm, scale = [], []
        for j in range(n):
            img = g[2 * j]
            perm.append(img // 2)
            scale.append(img % 2 + 1)
        out.append(Monomial(tuple(perm), tuple(scale)))
    return out


def canonical_data(c: LinearCode) -> CanonicalData:
    """Certificate, ``|Aut|`` and generators from a single labeling search."""
    n = c.n
    if c.k == 0:
        order = 2 ** n * _factorial(n)
        cert = CanonicalCertificate(f"T3;n={n};k=0;".encode())
        return CanonicalData(cert, AutGroupInfo(order), WeightSet(()))
    words = _words_by_weight(c)
    w = select_weight_set(c, _words=words)
    g = build_digraph(c, w, _words=words)
    res = canonical_form(g.num_vertices, g.colors, g.out_adj)
    counts = np.bincount(words[1], minlength=n + 1)
    sizes = [int(counts[i]) for i in w.weights]
    cert = CanonicalCertificate(_serialize(c, w, sizes, g, res.order))
    aut = AutGroupInfo(res.group_order, _monomials_from(res.generators, n))
    return CanonicalData(cert, aut, w, res.nodes)


def canonical_certificate(c: LinearCode) -> CanonicalCertificate:
    return canonical_data(c).certificate


def automorphism_order(c: LinearCode) -> AutGroupInfo:
    return canonical_data(c).aut


def are_equivalent(c: LinearCode, d: LinearCode) -> bool:
    if c.n != d.n or c.k != d.k:
        return False
    if c == d:
        return True
    return canonical_certificate(c) == canonical_certificate(d)


# -- brute-force oracle -----------------------------------------------------

def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


@lru_cache(maxsize=None)
def _perm_weights(n: int) -> np.ndarray:
    """Row per permutation: 3**perm[j] placed at column j."""
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    return 3 ** perms


@lru_cache(maxsize=None)
def _scales(n: int) -> np.ndarray:
    return np.array(list(itertools.product((1, 2), repeat=n)), dtype=np.int64).reshape(-1, n)


def _encode(words: np.ndarray) -> np.ndarray:
    return words.astype(np.int64) @ (3 ** np.arange(words.shape[1], dtype=np.int64))


def _image_sets(c: LinearCode, chunk: int = 16):
    """Sorted encoded codeword lists of every monomial image, in chunks."""
    n = c.n
    if n > BRUTE_FORCE_MAX_N:
        raise gf3.CapacityError(f"brute-force oracle limited to n <= {BRUTE_FORCE_MAX_N}")
    words = c.codewords().astype(np.int64)
    pw = _perm_weights(n)
    sc = _scales(n)
    m = words.shape[0]
    for s0 in range(0, sc.shape[0], chunk):
        s = sc[s0:s0 + chunk]
        digits = (words[None, :, :] * s[:, None, :]) % 3        # (S, m, n)
        codes = digits.reshape(-1, n) @ pw.T                     # (S*m, P)
        codes = codes.reshape(s.shape[0], m, -1).transpose(0, 2, 1).reshape(-1, m)
        codes.sort(axis=1)
        yield codes


def brute_force_certificate(c: LinearCode) -> bytes:
    """Lexicographically least sorted codeword list over all monomial images."""
    best = None
    for codes in _image_sets(c):
        idx = np.lexsort(codes.T[::-1])[0]
        row = codes[idx]
        if best is None or tuple(row) < tuple(best):
            best = row
    return f"BF;n={c.n};k={c.k};".encode() + np.asarray(best, dtype=">i8").tobytes()


def brute_force_aut_order(c: LinearCode) -> int:
    """Number of monomial matrices fixing ``c``, by exhaustion."""
    ref = np.sort(_encode(c.codewords()))
    return int(sum(int((codes == ref).all(axis=1).sum()) for codes in _image_sets(c)))


def brute_force_orbit(c: LinearCode) -> set[bytes]:
    """All distinct images of ``c`` as sorted-codeword byte strings."""
    out: set[bytes] = set()
    for codes in _image_sets(c):
        uniq = np.unique(codes, axis=0)
        out.update(r.tobytes() for r in uniq)
    return out


def codeword_key(c: LinearCode) -> bytes:
    """The sorted-codeword byte string that ``brute_force_orbit`` uses for ``c``."""
    return np.sort(_encode(c.codewords())).tobytes()


def are_equivalent_brute(c: LinearCode, d: LinearCode) -> bool:
    if c.n != d.n or c.k != d.k:
        return False
    return brute_force_certificate(c) == brute_force_certificate(d)


def random_monomial_image(c: LinearCode, rng: np.random.Generator) -> LinearCode:
    return Monomial.random(c.n, rng).apply(c)


def reshuffle_generator(c: LinearCode, rng: np.random.Generator) -> np.ndarray:
    """A random non-RREF generator matrix for the same subspace."""
    while True:
        t = rng.integers(0, 3, (c.k, c.k))
        if gf3.rank(t) == c.k:
            return (t.astype(np.int64) @ c.generator.astype(np.int64)) % 3


__all__ = [
    "WeightSet", "ColoredDigraph", "CanonicalCertificate", "AutGroupInfo", "CanonicalData",
    "select_weight_set", "build_digraph", "canonical_data", "canonical_certificate",
    "automorphism_order", "are_equivalent", "brute_force_certificate",
    "brute_force_aut_order", "brute_force_orbit", "codeword_key", "are_equivalent_brute",
    "make_code",
]
