from pathlib import Path

import numpy as np

from terncode import gf3
from terncode.code import dual, load_code, make_code, zero_code

DATA = Path(__file__).parent / "data"


def random_self_orthogonal(n, k, rng):
    """Random self-orthogonal [n, k] code, grown one isotropic vector at a time."""
    while True:
        c = zero_code(n)
        for _ in range(k):
            words = gf3.codeword_array(dual(c).generator)
            iso = words[np.count_nonzero(words, axis=1) % 3 == 0]
            if c.k:
                iso = iso[~gf3.in_row_space(iso, c.generator, c.pivots)]
            else:
                iso = iso[iso.any(axis=1)]
            if not len(iso):
                break
            x = iso[rng.integers(len(iso))]
            c = make_code(np.vstack([c.generator, x]) if c.k else x[None, :], n)
        if c.k == k:
            return c


def extremal(name):
    return load_code(DATA / f"{name}.code")
