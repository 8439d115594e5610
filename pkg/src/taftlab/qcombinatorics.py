"""Quantum integers, factorials, and binomials at an arbitrary field element.

The binomial is computed by the q-Pascal recursion

    binom(n, k)_q = binom(n-1, k-1)_q + q**k * binom(n-1, k)_q,

never by the factorial quotient: at a root of unity the quotient degenerates
to 0/0 while the recursion evaluates the integer-coefficient Gaussian
polynomial at q, which is total and agrees with the quotient wherever the
quotient is defined.  At q = 1 everything collapses to ordinary binomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import CycNum
from .errors import InputError


def q_int(n: int, q: CycNum) -> CycNum:
    """1 + q + ... + q**(n-1); zero for n = 0."""
    if n < 0:
        raise InputError("q_int needs n >= 0, got %d" % n)
    acc = CycNum.zero(q.m)
    power = CycNum.one(q.m)
    for _ in range(n):
        acc = acc + power
        power = power * q
    return acc


def q_factorial(n: int, q: CycNum) -> CycNum:
    """Product of q_int(j) for j = 1..n; equals 1 for n = 0."""
    if n < 0:
        raise InputError("q_factorial needs n >= 0, got %d" % n)
    acc = CycNum.one(q.m)
    for j in range(1, n + 1):
        acc = acc * q_int(j, q)
    return acc


@lru_cache(maxsize=None)
def _qbinom_row(n: int, q: CycNum) -> tuple:
    if n == 0:
        return (CycNum.one(q.m),)
    prev = _qbinom_row(n - 1, q)
    zero = CycNum.zero(q.m)
    qpow = CycNum.one(q.m)
    row = []
    for k in range(n + 1):
        left = prev[k - 1] if k >= 1 else zero
        right = prev[k] if k <= n - 1 else zero
        row.append(left + qpow * right)
        qpow = qpow * q
    return tuple(row)


def q_binom(n: int, k: int, q: CycNum) -> CycNum:
    """Gaussian binomial coefficient binom(n, k)_q via q-Pascal."""
    if n < 0:
        raise InputError("q_binom needs n >= 0, got %d" % n)
    if k < 0 or k > n:
        raise InputError("q_binom needs 0 <= k <= n, got k=%d, n=%d" % (k, n))
    return _qbinom_row(n, q)[k]


@dataclass(frozen=True)
class QBinomTable:
    """Memoized triangle of binom(n, k)_q for n <= bound."""

    m: int
    q: CycNum
    bound: int
    rows: tuple

    @staticmethod
    def build(q: CycNum, bound: int | None = None) -> "QBinomTable":
        if bound is None:
            bound = 2 * q.m
        if bound < 0:
            raise InputError("QBinomTable bound must be >= 0")
        rows = tuple(_qbinom_row(n, q) for n in range(bound + 1))
        return QBinomTable(m=q.m, q=q, bound=bound, rows=rows)

    def value(self, n: int, k: int) -> CycNum:
        if not (0 <= n <= self.bound):
            raise InputError("n=%d outside table bound %d" % (n, self.bound))
        if not (0 <= k <= n):
            raise InputError("q_binom needs 0 <= k <= n, got k=%d, n=%d" % (k, n))
        return self.rows[n][k]
