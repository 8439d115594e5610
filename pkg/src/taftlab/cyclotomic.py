"""Exact arithmetic in the cyclotomic field Q(zeta_m).

A CycNum is the reduced residue of a rational polynomial in zeta_m modulo
the m-th cyclotomic polynomial Phi_m, stored as a tuple of Fractions of
length deg Phi_m = phi(m).  The representation is canonical, so two values
are equal iff their coefficient tuples are equal; CycNum therefore works as
a dict key and keeps every assertion in the test suite exact.  No floating
point anywhere.

Arithmetic is ordinary field arithmetic through operators (+, -, *, /, **
with negative exponents allowed).  ints and Fractions are promoted to
constants of the same conductor; mixing two different conductors raises
InputError rather than silently embedding one field in the other.
Division inverts via the extended Euclidean algorithm against Phi_m, which
is irreducible over Q, so every nonzero element is invertible.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import InputError

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_divmod(num, den):
    # den assumed nonzero; plain long division in Q[x]
    num = list(num)
    q = [_ZERO] * max(1, len(num) - len(den) + 1)
    inv_lead = Fraction(1) / Fraction(den[-1])
    while len(num) >= len(den) and _poly_trim(num):
        shift = len(num) - len(den)
        coef = num[-1] * inv_lead
        q[shift] = coef
        for i, di in enumerate(den):
            num[shift + i] -= coef * di
        _poly_trim(num)
    return _poly_trim(q), num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Coefficients of Phi_m, ascending, as ints.  Phi_1 = x - 1."""
    if m < 1:
        raise InputError("cyclotomic polynomial needs m >= 1, got %r" % (m,))
    f = [Fraction(-1)] + [_ZERO] * (m - 1) + [Fraction(1)]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            q, r = _poly_divmod(f, [Fraction(c) for c in cyclotomic_polynomial(d)])
            if r:
                raise RuntimeError("cyclotomic division left a remainder")
            f = q
    out = []
    for c in f:
        if c.denominator != 1:
            raise RuntimeError("cyclotomic coefficients must be integral")
        out.append(int(c))
    return tuple(out)


@lru_cache(maxsize=None)
def _field(m: int):
    """(degree, Phi_m coeffs, table of x^j mod Phi_m for j < 2*degree - 1)."""
    if m < 2:
        raise InputError("cyclotomic field needs m >= 2, got %r" % (m,))
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    xdeg = tuple(Fraction(-phi[i]) for i in range(deg))  # x^deg reduced, Phi monic
    table = []
    for j in range(deg):
        table.append(tuple(_ONE if i == j else _ZERO for i in range(deg)))
    for j in range(deg, max(deg, 2 * deg - 1)):
        prev = table[j - 1]
        top = prev[deg - 1]
        shifted = [_ZERO] + list(prev[:-1])
        if top:
            shifted = [shifted[i] + top * xdeg[i] for i in range(deg)]
        table.append(tuple(shifted))
    return deg, phi, tuple(table)


def _reduce_poly(m, coeffs):
    """Reduce an arbitrary-length coefficient list mod Phi_m to canonical form."""
    deg, _, table = _field(m)
    acc = [_ZERO] * deg
    work = list(coeffs)
    # long coefficients beyond the multiplication table go through zeta^m = product
    # of lower powers; cheapest is to fold exponents mod m first, since x^m = 1 in
    # the quotient only up to Phi_m | x^m - 1 -- and that it does divide exactly.
    folded = [_ZERO] * m if len(work) > len(table) else None
    if folded is not None:
        for e, c in enumerate(work):
            if c:
                folded[e % m] += Fraction(c)
        work = folded
    for e, c in enumerate(work):
        if not c:
            continue
        c = Fraction(c)
        if e < deg:
            acc[e] += c
        else:
            row = table[e] if e < len(table) else None
            if row is None:
                # e in [deg, m): extend the table on the fly via x^(e mod m)
                row = _power_row(m, e)
            for i in range(deg):
                if row[i]:
                    acc[i] += c * row[i]
    return tuple(acc)


@lru_cache(maxsize=None)
def _power_row(m: int, e: int):
    """x^e mod Phi_m as a coefficient tuple, for any e >= 0 (folded mod m)."""
    deg, _, table = _field(m)
    e = e % m
    if e < len(table):
        return table[e]
    row = table[len(table) - 1]
    for _ in range(len(table) - 1, e):
        top = row[deg - 1]
        shifted = [_ZERO] + list(row[:-1])
        if top:
            xdeg = table[deg] if deg < len(table) else None
            if xdeg is None:  # deg == 1, x^1 reduces directly
                phi = cyclotomic_polynomial(m)
                xdeg = (Fraction(-phi[0]),)
            shifted = [shifted[i] + top * xdeg[i] for i in range(deg)]
        row = tuple(shifted)
    return row


class CycNum:
    """An element of Q(zeta_m), canonical residue mod Phi_m."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: tuple):
        # trusted constructor: coeffs must already be canonical
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("CycNum is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def make(m: int, coeffs) -> "CycNum":
        """Value sum(coeffs[j] * zeta^j); coeffs of any length, ints/Fractions."""
        if m < 2:
            raise InputError("conductor must be >= 2, got %r" % (m,))
        return CycNum(m, _reduce_poly(m, list(coeffs)))

    @staticmethod
    def rational(m: int, value) -> "CycNum":
        if m < 2:
            raise InputError("conductor must be >= 2, got %r" % (m,))
        deg, _, _ = _field(m)
        v = Fraction(value)
        return CycNum(m, tuple(v if i == 0 else _ZERO for i in range(deg)))

    @staticmethod
    def zero(m: int) -> "CycNum":
        return CycNum.rational(m, 0)

    @staticmethod
    def one(m: int) -> "CycNum":
        return CycNum.rational(m, 1)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def as_rational(self):
        """The Fraction value if the element is rational, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.m != self.m:
                raise InputError(
                    "conductor mismatch: %d vs %d" % (self.m, other.m))
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.rational(self.m, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum(self.m, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum(self.m, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycNum(self.m, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        r = o.as_rational()
        if r is not None:
            if r == 0:
                return CycNum.zero(self.m)
            return CycNum(self.m, tuple(a * r for a in self.coeffs))
        deg, _, table = _field(self.m)
        conv = [_ZERO] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        conv[i + j] += a * b
        acc = list(conv[:deg])
        for e in range(deg, 2 * deg - 1):
            c = conv[e]
            if c:
                row = table[e]
                for i in range(deg):
                    if row[i]:
                        acc[i] += c * row[i]
        return CycNum(self.m, tuple(acc))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.m)
        deg, phi, _ = _field(self.m)
        a = _poly_trim(list(self.coeffs))
        b = [Fraction(c) for c in phi]
        # extended Euclid: s*a + t*phi = gcd; gcd is a nonzero constant
        r0, r1 = a, b
        s0, s1 = [_ONE], []
        while _poly_trim(list(r1)):
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            qs = _poly_mul(q, s1) if s1 else []
            ns = [_ZERO] * max(len(s0), len(qs))
            for i, c in enumerate(s0):
                ns[i] += c
            for i, c in enumerate(qs):
                ns[i] -= c
            s0, s1 = s1, _poly_trim(ns)
        if len(r0) != 1:
            raise RuntimeError("Phi_m not coprime to a nonzero residue")
        g = r0[0]
        inv = [c / g for c in s0]
        return CycNum(self.m, _reduce_poly(self.m, inv))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = CycNum.one(self.m)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- equality / hashing / display ---------------------------------------

    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (CycNum, int, Fraction)) else None
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        # note: hashes only collide with other CycNum keys, not with ints
        return hash((self.m,) + self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def _pretty(self) -> str:
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                parts.append(str(c))
            else:
                mon = "z" if j == 1 else "z^%d" % j
                if c == 1:
                    parts.append(mon)
                elif c == -1:
                    parts.append("-" + mon)
                else:
                    parts.append("%s*%s" % (c, mon))
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return "CycNum(%d, %s)" % (self.m, self._pretty())

    def __str__(self):
        return self._pretty()

    # -- JSON ---------------------------------------------------------------

    def to_json(self) -> dict:
        return {"m": self.m, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(obj) -> "CycNum":
        if not isinstance(obj, dict) or "m" not in obj or "coeffs" not in obj:
            raise InputError("CycNum JSON needs keys 'm' and 'coeffs': %r" % (obj,))
        m = obj["m"]
        if not isinstance(m, int) or m < 2:
            raise InputError("CycNum conductor must be an int >= 2, got %r" % (m,))
        deg, _, _ = _field(m)
        raw = obj["coeffs"]
        if not isinstance(raw, list) or len(raw) != deg:
            raise InputError(
                "CycNum for m=%d needs exactly %d coefficients, got %r" % (m, deg, raw))
        try:
            coeffs = [Fraction(s) for s in raw]
        except (ValueError, ZeroDivisionError) as e:
            raise InputError("bad rational string in CycNum coeffs: %s" % e) from None
        return CycNum.make(m, coeffs)


def zeta(m: int) -> CycNum:
    """The canonical primitive m-th root of unity."""
    return CycNum.make(m, [0, 1])


def zeta_power(m: int, e: int) -> CycNum:
    """zeta_m ** e for any integer e (negative exponents fold mod m)."""
    if m < 2:
        raise InputError("conductor must be >= 2, got %r" % (m,))
    return CycNum(m, _power_row(m, e % m))


def cyc_make(m: int, coeffs) -> CycNum:
    """Reduce an arbitrary polynomial-in-zeta coefficient list to a CycNum."""
    return CycNum.make(m, coeffs)
