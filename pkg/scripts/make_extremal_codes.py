"""Write the two extremal self-dual [24,12,9] ternary codes as code files.

* qr24: extended quadratic-residue code (cyclic [23,12,8] code spanned by the
  shifts of the residue indicator mod 23, plus a check coordinate).
* pless24: Pless symmetry code (I_12 | S) with S bordered Jacobsthal matrix mod 11.

Usage: python scripts/make_extremal_codes.py [OUTDIR]
"""
import sys
from pathlib import Path

import numpy as np

from terncode.code import format_code, is_self_dual, make_code, minimum_weight


def residues(p):
    return {(x * x) % p for x in range(1, p)}


def extended_qr24():
    q = residues(23)
    v = np.array([1 if i in q else 0 for i in range(23)])
    cyc = make_code([np.roll(v, s) for s in range(23)])
    for sign in (1, 2):
        g = np.hstack([cyc.generator, (-sign * cyc.generator.astype(int).sum(axis=1, keepdims=True)) % 3])
        c = make_code(g)
        if is_self_dual(c):
            return c
    raise RuntimeError("no self-dual extension")


def pless24():
    q = residues(11)
    chi = lambda a: 0 if a % 11 == 0 else (1 if a % 11 in q else -1)
    s = np.zeros((12, 12), dtype=int)
    s[0, 1:] = 1
    s[1:, 0] = -1
    for i in range(11):
        for j in range(11):
            s[1 + i, 1 + j] = chi(j - i)
    return make_code(np.hstack([np.eye(12, dtype=int), s % 3]))


def main(out=Path(__file__).resolve().parents[1] / "tests" / "data"):
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    for name, code in (("qr24", extended_qr24()), ("pless24", pless24())):
        assert is_self_dual(code) and minimum_weight(code) == 9
        (out / f"{name}.code").write_text(format_code(code) + f"# {name}: self-dual [24,12,9]\n")
        print(out / f"{name}.code")


if __name__ == "__main__":
    main(*sys.argv[1:])
