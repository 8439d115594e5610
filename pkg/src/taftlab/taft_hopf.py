"""The Taft Hopf algebra of dimension m**2 over Q(zeta_m).

Generators c (grouplike) and v (skew-primitive) with relations

    c**m = 1,   v**m = 0,   v c = zeta c v,

and basis monomials c^i v^k for 0 <= i, k < m.  Products are normal ordered
into that basis with the commutation factor zeta^(k*j) when v^k crosses c^j.

The coalgebra structure is *generated*: Delta(c) = c (x) c,
Delta(v) = c (x) v + v (x) 1, eps(c) = 1, eps(v) = 0, S(c) = c^{-1},
S(v) = -c^{-1} v.  Coproducts and antipodes of basis monomials are expanded
from the generator values through the (anti)homomorphism property, so any
closed formula for Delta(v^k) is a checked consequence, not an input.  The
generator values can be overridden to build deliberately broken tables;
hopf_verify_axioms then reports exactly which axiom dies.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclotomic import CycNum, zeta, zeta_power
from .errors import InputError


class HopfElement:
    """A linear combination of basis monomials c^i v^k, keyed by (i, k)."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "TaftAlgebra", terms: dict):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "terms",
                           {k: c for k, c in terms.items() if not c.is_zero()})

    def __setattr__(self, *a):
        raise AttributeError("HopfElement is immutable")

    def _check(self, other):
        if other.algebra.m != self.algebra.m:
            raise InputError("conductor mismatch: %d vs %d"
                             % (self.algebra.m, other.algebra.m))

    def __add__(self, other):
        if not isinstance(other, HopfElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, CycNum.zero(self.algebra.m)) + c
        return HopfElement(self.algebra, out)

    def __sub__(self, other):
        if not isinstance(other, HopfElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return HopfElement(self.algebra, {k: -c for k, c in self.terms.items()})

    def scale(self, c) -> "HopfElement":
        c = c if isinstance(c, CycNum) else CycNum.rational(self.algebra.m, c)
        return HopfElement(self.algebra, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HopfElement):
            self._check(other)
            H = self.algebra
            out = {}
            for (i, k), a in self.terms.items():
                for (j, l), b in other.terms.items():
                    hit = H.key_product((i, k), (j, l))
                    if hit is None:
                        continue
                    key, factor = hit
                    out[key] = out.get(key, CycNum.zero(H.m)) + a * b * factor
            return HopfElement(H, out)
        if isinstance(other, (int, CycNum)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, CycNum)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = self.algebra.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, HopfElement):
            return NotImplemented
        return self.algebra.m == other.algebra.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.algebra.m, tuple(sorted(self.terms.items(),
                                                  key=lambda kv: kv[0]))))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, k) in sorted(self.terms):
            mon = []
            if i:
                mon.append("c" if i == 1 else "c^%d" % i)
            if k:
                mon.append("v" if k == 1 else "v^%d" % k)
            name = "*".join(mon) if mon else "1"
            parts.append("(%s)%s" % (self.terms[(i, k)], name))
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"m": self.algebra.m,
                "terms": [{"c": i, "v": k, "coeff": c.to_json()}
                          for (i, k), c in sorted(self.terms.items())]}


class TensorElement:
    """An element of H^(x)deg with coordinates keyed by key tuples."""

    __slots__ = ("algebra", "degree", "terms")

    def __init__(self, algebra: "TaftAlgebra", degree: int, terms: dict):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms",
                           {k: c for k, c in terms.items() if not c.is_zero()})

    def __setattr__(self, *a):
        raise AttributeError("TensorElement is immutable")

    def __add__(self, other):
        if not isinstance(other, TensorElement) or other.degree != self.degree:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, CycNum.zero(self.algebra.m)) + c
        return TensorElement(self.algebra, self.degree, out)

    def __sub__(self, other):
        if not isinstance(other, TensorElement) or other.degree != self.degree:
            return NotImplemented
        return self + other.scale(CycNum.rational(self.algebra.m, -1))

    def scale(self, c) -> "TensorElement":
        c = c if isinstance(c, CycNum) else CycNum.rational(self.algebra.m, c)
        return TensorElement(self.algebra, self.degree,
                             {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        """Componentwise product in the tensor-power algebra (no braiding)."""
        if not isinstance(other, TensorElement) or other.degree != self.degree:
            return NotImplemented
        H = self.algebra
        out = {}
        for keys_a, ca in self.terms.items():
            for keys_b, cb in other.terms.items():
                coeff = ca * cb
                slots = []
                dead = False
                for ka, kb in zip(keys_a, keys_b):
                    hit = H.key_product(ka, kb)
                    if hit is None:
                        dead = True
                        break
                    key, factor = hit
                    slots.append(key)
                    coeff = coeff * factor
                if dead or coeff.is_zero():
                    continue
                key = tuple(slots)
                out[key] = out.get(key, CycNum.zero(H.m)) + coeff
        return TensorElement(H, self.degree, out)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.algebra.m, self.degree, self.terms) == \
               (other.algebra.m, other.degree, other.terms)

    def __hash__(self):
        return hash((self.algebra.m, self.degree,
                     tuple(sorted(self.terms.items(), key=lambda kv: kv[0]))))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return "TensorElement(deg=%d, %d terms)" % (self.degree, len(self.terms))


class TaftAlgebra:
    """Structure constants and (possibly overridden) coalgebra generators."""

    def __init__(self, m: int, *, delta_c=None, delta_v=None,
                 eps_c=None, eps_v=None, s_c=None, s_v=None):
        if m < 2:
            raise InputError("Taft algebra needs m >= 2, got %r" % (m,))
        self.m = m
        self.zeta = zeta(m)
        self.dim = m * m
        self._coproduct_cache = {}
        self._antipode_cache = {}
        self._delta_c = delta_c if delta_c is not None else self.tensor2(
            {((1, 0), (1, 0)): CycNum.one(m)})
        self._delta_v = delta_v if delta_v is not None else self.tensor2(
            {((1, 0), (0, 1)): CycNum.one(m), ((0, 1), (0, 0)): CycNum.one(m)})
        self._eps_c = eps_c if eps_c is not None else CycNum.one(m)
        self._eps_v = eps_v if eps_v is not None else CycNum.zero(m)
        self._s_c = s_c if s_c is not None else self.monomial(m - 1, 0)
        self._s_v = s_v if s_v is not None else self.monomial(m - 1, 1, -1)

    # -- element constructors ------------------------------------------------

    def basis_keys(self):
        return [(i, k) for i in range(self.m) for k in range(self.m)]

    def monomial(self, i: int, k: int, coeff=1) -> HopfElement:
        if not (0 <= i < self.m and 0 <= k < self.m):
            raise InputError("basis key out of range: (%d, %d)" % (i, k))
        c = coeff if isinstance(coeff, CycNum) else CycNum.rational(self.m, coeff)
        return HopfElement(self, {(i, k): c})

    def element(self, terms: dict) -> HopfElement:
        out = {}
        for (i, k), c in terms.items():
            if not (0 <= i < self.m and 0 <= k < self.m):
                raise InputError("basis key out of range: (%d, %d)" % (i, k))
            out[(i, k)] = c if isinstance(c, CycNum) else CycNum.rational(self.m, c)
        return HopfElement(self, out)

    def zero(self) -> HopfElement:
        return HopfElement(self, {})

    def one(self) -> HopfElement:
        return self.monomial(0, 0)

    def c(self) -> HopfElement:
        return self.monomial(1, 0)

    def v(self) -> HopfElement:
        return self.monomial(0, 1)

    def tensor2(self, terms: dict) -> TensorElement:
        return TensorElement(self, 2, {
            k: (c if isinstance(c, CycNum) else CycNum.rational(self.m, c))
            for k, c in terms.items()})

    def tensor_unit(self, degree: int) -> TensorElement:
        return TensorElement(self, degree,
                             {((0, 0),) * degree: CycNum.one(self.m)})

    # -- structure maps --------------------------------------------------------

    def key_product(self, a, b):
        """(c^i v^k)(c^j v^l) in the basis: ((i', k'), coeff) or None if zero."""
        (i, k), (j, l) = a, b
        if k + l >= self.m:
            return None
        return ((i + j) % self.m, k + l), zeta_power(self.m, k * j)

    def product(self, x: HopfElement, y: HopfElement) -> HopfElement:
        return x * y

    def counit(self, x: HopfElement) -> CycNum:
        acc = CycNum.zero(self.m)
        for (i, k), c in x.terms.items():
            acc = acc + c * self._eps_c ** i * self._eps_v ** k
        return acc

    def coproduct_basis(self, key) -> TensorElement:
        hit = self._coproduct_cache.get(key)
        if hit is not None:
            return hit
        i, k = key
        acc = self.tensor_unit(2)
        for _ in range(i):
            acc = acc * self._delta_c
        for _ in range(k):
            acc = acc * self._delta_v
        self._coproduct_cache[key] = acc
        return acc

    def coproduct(self, x: HopfElement) -> TensorElement:
        acc = TensorElement(self, 2, {})
        for key, c in x.terms.items():
            acc = acc + self.coproduct_basis(key).scale(c)
        return acc

    def antipode_basis(self, key) -> HopfElement:
        hit = self._antipode_cache.get(key)
        if hit is not None:
            return hit
        i, k = key
        # antihomomorphism: S(c^i v^k) = S(v)^k * S(c)^i
        acc = self.one()
        for _ in range(k):
            acc = acc * self._s_v
        for _ in range(i):
            acc = acc * self._s_c
        self._antipode_cache[key] = acc
        return acc

    def antipode(self, x: HopfElement) -> HopfElement:
        acc = self.zero()
        for key, c in x.terms.items():
            acc = acc + self.antipode_basis(key).scale(c)
        return acc

    def __repr__(self):
        return "TaftAlgebra(m=%d)" % self.m


@dataclass
class AxiomReport:
    """Outcome of the Hopf axiom battery; failures carry witness strings."""

    m: int
    associativity: bool = True
    coassociativity: bool = True
    counit: bool = True
    bialgebra: bool = True
    antipode: bool = True
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.associativity and self.coassociativity and self.counit
                and self.bialgebra and self.antipode)

    def to_json(self) -> dict:
        return {"m": self.m, "ok": self.ok,
                "axioms": {"associativity": self.associativity,
                           "coassociativity": self.coassociativity,
                           "counit": self.counit,
                           "bialgebra": self.bialgebra,
                           "antipode": self.antipode},
                "failures": list(self.failures)}


def _coassoc_sides(H: TaftAlgebra, key):
    delta = H.coproduct_basis(key)
    left = {}
    right = {}
    for (a, b), c in delta.terms.items():
        for (p, q), c2 in H.coproduct_basis(a).terms.items():
            k3 = (p, q, b)
            left[k3] = left.get(k3, CycNum.zero(H.m)) + c * c2
        for (p, q), c2 in H.coproduct_basis(b).terms.items():
            k3 = (a, p, q)
            right[k3] = right.get(k3, CycNum.zero(H.m)) + c * c2
    return (TensorElement(H, 3, left), TensorElement(H, 3, right))


def hopf_verify_axioms(H: TaftAlgebra, *, assoc_samples: int = 200,
                       assoc_exhaustive_max_m: int = 4,
                       rng_seed: int = 0) -> AxiomReport:
    """Exhaustively check the Hopf axioms on basis monomials.

    Associativity of the product is exhaustive over basis triples for
    m <= assoc_exhaustive_max_m and sampled (seeded) above, since the triple
    count grows like m^6.  All coalgebra checks are exhaustive: the maps are
    linear, so basis verification is complete.
    """
    import random

    report = AxiomReport(m=H.m)
    keys = H.basis_keys()

    def fail(axiom: str, witness: str):
        setattr(report, axiom, False)
        if len(report.failures) < 32:
            report.failures.append("%s: %s" % (axiom, witness))

    # associativity of the basis product
    if H.m <= assoc_exhaustive_max_m:
        triples = [(a, b, c) for a in keys for b in keys for c in keys]
    else:
        rng = random.Random(rng_seed)
        triples = [tuple(rng.choice(keys) for _ in range(3))
                   for _ in range(assoc_samples)]
    for a, b, c in triples:
        x, y, z = H.monomial(*a), H.monomial(*b), H.monomial(*c)
        if (x * y) * z != x * (y * z):
            fail("associativity", "keys %r %r %r" % (a, b, c))

    one = H.one()
    for key in keys:
        x = H.monomial(*key)
        if not (one * x == x and x * one == x):
            fail("associativity", "unit fails at %r" % (key,))

    # coassociativity and counit axioms
    for key in keys:
        left, right = _coassoc_sides(H, key)
        if left != right:
            fail("coassociativity", "key %r" % (key,))
        delta = H.coproduct_basis(key)
        lhs = H.zero()
        rhs = H.zero()
        for (a, b), c in delta.terms.items():
            lhs = lhs + H.monomial(*b).scale(c * H.counit(H.monomial(*a)))
            rhs = rhs + H.monomial(*a).scale(c * H.counit(H.monomial(*b)))
        x = H.monomial(*key)
        if lhs != x or rhs != x:
            fail("counit", "key %r" % (key,))

    # bialgebra: Delta and eps are algebra maps
    if H.coproduct(one) != H.tensor_unit(2):
        fail("bialgebra", "coproduct of 1")
    if H.counit(one) != CycNum.one(H.m):
        fail("bialgebra", "counit of 1")
    for a in keys:
        for b in keys:
            x, y = H.monomial(*a), H.monomial(*b)
            if H.coproduct(x * y) != H.coproduct(x) * H.coproduct(y):
                fail("bialgebra", "coproduct at %r * %r" % (a, b))
                break
            if H.counit(x * y) != H.counit(x) * H.counit(y):
                fail("bialgebra", "counit at %r * %r" % (a, b))
                break
        if not report.bialgebra:
            break

    # antipode: mu (S (x) id) Delta = eta eps = mu (id (x) S) Delta
    for key in keys:
        x = H.monomial(*key)
        delta = H.coproduct_basis(key)
        lhs = H.zero()
        rhs = H.zero()
        for (a, b), c in delta.terms.items():
            lhs = lhs + (H.antipode_basis(a) * H.monomial(*b)).scale(c)
            rhs = rhs + (H.monomial(*a) * H.antipode_basis(b)).scale(c)
        want = one.scale(H.counit(x))
        if lhs != want or rhs != want:
            fail("antipode", "key %r" % (key,))

    return report
