"""Exact mass formula for ternary self-orthogonal codes and its audit."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Iterable

from .errors import AuditError, DomainError


def _check_regime(n: int, k: int) -> None:
    if n % 2:
        ok = 1 <= k <= (n - 1) // 2
    else:
        ok = 2 <= k <= n // 2
    if not ok:
        raise DomainError(f"T(n, k) formula does not cover n={n}, k={k}")


def count_T(n: int, k: int) -> int:
    """Number of distinct self-orthogonal ``[n, k]`` codes over GF(3)."""
    _check_regime(n, k)
    den = prod(3 ** i - 1 for i in range(1, k + 1))
    if n % 2:
        h = (n - 1) // 2
        num = prod(3 ** (2 * (h - i)) - 1 for i in range(k))
    else:
        eps = 1 if n % 4 == 0 else -1
        h = n // 2
        num = (3 ** (n - k) - eps * 3 ** (h - k) + eps * 3 ** h - 1) * prod(
            3 ** (n - 2 * i) - 1 for i in range(1, k))
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"T({n},{k}) is not integral")
    return q


def count_isotropic_lines(n: int) -> int:
    """Self-orthogonal ``[n, 1]`` codes: nonzero vectors of weight 0 mod 3, up to sign."""
    return sum(comb(n, w) * 2 ** w for w in range(3, n + 1, 3)) // 2


def expected_count(n: int, k: int) -> int:
    """Total number of self-orthogonal ``[n, k]`` codes for every ``k >= 0``.

    Covers the cases the closed formula leaves out: ``k = 0``, ``k = 1`` at
    even ``n``, and dimensions above the maximum (no codes).
    """
    from .code import maximal_dimension

    if k == 0:
        return 1
    if k > maximal_dimension(n):
        return 0
    if n % 2 == 0 and k == 1:
        return count_isotropic_lines(n)
    return count_T(n, k)


def monomial_group_order(n: int) -> int:
    return 2 ** n * factorial(n)


def lower_bound(n: int, k: int) -> int:
    """``ceil(T(n, k) / (2^(n-1) n!))``: every class has ``|Aut| >= 2``."""
    t = count_T(n, k)
    d = 2 ** (n - 1) * factorial(n)
    return -(-t // d)


@dataclass
class MassAudit:
    n: int
    k: int
    expected: int
    accumulated: int

    @property
    def residual(self) -> int:
        return self.expected - self.accumulated

    @property
    def complete(self) -> bool:
        return self.residual == 0


def audit(aut_orders: Iterable[int], n: int, k: int) -> MassAudit:
    """Sum ``2^n n! / |Aut|`` over class representatives.

    ``aut_orders`` may also be records carrying an ``aut_order`` attribute.
    """
    g = monomial_group_order(n)
    total = 0
    for i, a in enumerate(aut_orders):
        order = getattr(a, "aut_order", a)
        if order is None:
            raise AuditError(f"record {i} has no automorphism order")
        q, r = divmod(g, order)
        if r or order < 1:
            raise AuditError(f"record {i}: |Aut| = {order} does not divide 2^{n}*{n}!")
        total += q
    result = MassAudit(n, k, expected_count(n, k), total)
    if result.residual < 0:
        raise AuditError(
            f"accumulated mass {total} exceeds T({n},{k}) = {result.expected}: duplicate classes")
    return result
