"""Exact sparse arithmetic in K[u]/(u^(k+1)) and its tensor powers.

Elements of the n-fold tensor power are stored as a mapping from exponent
vectors ``(e_1, ..., e_n)`` (the basis element u^e_1 (x) ... (x) u^e_n) to
nonzero coefficients.  The generator has even degree, so the tensor algebra
is strictly commutative and no Koszul signs ever appear.

Coefficients are Python ints (or Fractions) in characteristic 0 and
canonical residues in [1, p-1] in characteristic p.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .errors import AlgebraError, ResourceError
from .primes import is_prime

DEFAULT_TERM_BUDGET = 10**7


@dataclass(frozen=True)
class FieldSpec:
    """A prime field or the rationals, identified by its characteristic."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise AlgebraError(f"characteristic must be a non-negative integer, got {c!r}")
        if c != 0 and not is_prime(c):
            raise AlgebraError(f"characteristic {c} is not prime")

    def reduce(self, c):
        """Canonical representative of the scalar ``c`` in this field."""
        p = self.characteristic
        if p == 0:
            if isinstance(c, Fraction):
                return c.numerator if c.denominator == 1 else c
            if isinstance(c, int):
                return c
            raise AlgebraError(f"inexact scalar {c!r} not allowed")
        if isinstance(c, Fraction):
            den = c.denominator % p
            if den == 0:
                raise AlgebraError(f"{c} is not defined in characteristic {p}")
            return c.numerator * pow(den, -1, p) % p
        if isinstance(c, int):
            return c % p
        raise AlgebraError(f"inexact scalar {c!r} not allowed")

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"


QQ = FieldSpec(0)


@dataclass(frozen=True)
class TruncatedAlgebra:
    """K[u]/(u^(k+1)) with |u| = r."""

    r: int
    k: int
    field: FieldSpec = QQ

    def __post_init__(self):
        if self.r < 2 or self.r % 2:
            raise AlgebraError(
                f"odd generator degree r={self.r} rejected: graded commutativity "
                "forces u^2 = 0 away from characteristic 2; r must be even and >= 2"
            )
        if self.k < 2:
            raise AlgebraError(f"nilpotency index k={self.k} must be >= 2")

    @property
    def characteristic(self):
        return self.field.characteristic

    def __str__(self):
        return f"{self.field}[u]/(u^{self.k + 1}), |u|={self.r}"


def make_algebra(r, k, field=QQ):
    if isinstance(field, int):
        field = FieldSpec(field)
    return TruncatedAlgebra(r, k, field)


@dataclass(frozen=True, eq=False)
class TensorElement:
    """Element of the ``arity``-fold tensor power of ``algebra``.

    Build these with :func:`basis_class`, :func:`identity`, :func:`from_terms`
    or arithmetic; the constructor assumes already-canonical terms.
    """

    algebra: TruncatedAlgebra
    arity: int
    terms: Mapping[tuple, object] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", MappingProxyType(dict(self.terms)))

    # arithmetic -----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, TensorElement):
            raise AlgebraError(f"expected TensorElement, got {type(other).__name__}")
        if other.algebra != self.algebra:
            raise AlgebraError(f"algebra mismatch: {self.algebra} vs {other.algebra}")
        if other.arity != self.arity:
            raise AlgebraError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, negate(other))

    def __neg__(self):
        return negate(self)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return multiply(self, other)
        return scale(self, other)

    def __rmul__(self, other):
        return scale(self, other)

    def __pow__(self, m):
        return power(self, m)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.algebra == other.algebra and self.arity == other.arity
                and dict(self.terms) == dict(other.terms))

    def __hash__(self):
        return hash((self.algebra, self.arity, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def degrees(self):
        """Set of exponent totals appearing in the element."""
        return {sum(v) for v in self.terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        body = ", ".join(f"{v}: {c}" for v, c in self.sorted_terms())
        return f"TensorElement({{{body}}}, arity={self.arity}, field={self.algebra.field})"


def from_terms(algebra, arity, terms):
    """Build an element from a ``{exponent_vector: coefficient}`` mapping.

    Coefficients are reduced into the field, zeros dropped and any key with
    a slot above k discarded (it is zero in the truncated algebra).
    """
    out = {}
    fs = algebra.field
    for key, c in terms.items():
        key = tuple(int(e) for e in key)
        if len(key) != arity:
            raise AlgebraError(f"exponent vector {key} has length {len(key)}, expected {arity}")
        if any(e < 0 for e in key):
            raise AlgebraError(f"negative exponent in {key}")
        if any(e > algebra.k for e in key):
            continue
        c = fs.reduce(c)
        acc = fs.reduce(out.get(key, 0) + c)
        if acc:
            out[key] = acc
        else:
            out.pop(key, None)
    return TensorElement(algebra, arity, out)


def zero(algebra, arity):
    return TensorElement(algebra, arity, {})


def identity(algebra, arity):
    return TensorElement(algebra, arity, {(0,) * arity: 1})


def basis_class(algebra, n, i):
    """A_i = 1 (x) ... (x) u (x) ... (x) 1 with u in slot i (1-based)."""
    if n < 1:
        raise AlgebraError(f"arity must be >= 1, got {n}")
    if not 1 <= i <= n:
        raise AlgebraError(f"position {i} out of range 1..{n}")
    key = tuple(1 if j == i else 0 for j in range(1, n + 1))
    return TensorElement(algebra, n, {key: 1})


def monomial(algebra, exponents, coefficient=1):
    return from_terms(algebra, len(exponents), {tuple(exponents): coefficient})


def add(a, b):
    a._check(b)
    fs = a.algebra.field
    out = dict(a.terms)
    for key, c in b.terms.items():
        s = fs.reduce(out.get(key, 0) + c)
        if s:
            out[key] = s
        else:
            del out[key]
    return TensorElement(a.algebra, a.arity, out)


def negate(a):
    fs = a.algebra.field
    return TensorElement(a.algebra, a.arity, {key: fs.reduce(-c) for key, c in a.terms.items()})


def scale(a, c):
    fs = a.algebra.field
    c = fs.reduce(c)
    if not c:
        return zero(a.algebra, a.arity)
    out = {}
    for key, v in a.terms.items():
        s = fs.reduce(v * c)
        if s:
            out[key] = s
    return TensorElement(a.algebra, a.arity, out)


def multiply(a, b, term_budget=DEFAULT_TERM_BUDGET):
    """Product in the tensor algebra; slots exceeding k annihilate a term."""
    a._check(b)
    work = len(a.terms) * len(b.terms)
    if term_budget is not None and work > term_budget:
        raise ResourceError(
            f"product of {len(a.terms)} x {len(b.terms)} terms exceeds the term budget {term_budget}"
        )
    k = a.algebra.k
    fs = a.algebra.field
    p = fs.characteristic
    out = {}
    bterms = list(b.terms.items())
    for ka, ca in a.terms.items():
        for kb, cb in bterms:
            key = tuple(x + y for x, y in zip(ka, kb))
            if max(key, default=0) > k:
                continue
            out[key] = out.get(key, 0) + ca * cb
    if p:
        out = {key: c % p for key, c in out.items() if c % p}
    else:
        out = {key: fs.reduce(c) for key, c in out.items() if c}
    return TensorElement(a.algebra, a.arity, out)


def power(a, m, term_budget=DEFAULT_TERM_BUDGET):
    if m < 0:
        raise AlgebraError(f"negative exponent {m}")
    result = identity(a.algebra, a.arity)
    for _ in range(m):
        result = multiply(result, a, term_budget)
        if result.is_zero():
            break
    return result


def product(factors, algebra=None, arity=None, term_budget=DEFAULT_TERM_BUDGET):
    """Ordered product of a sequence of elements (identity if empty)."""
    factors = list(factors)
    if not factors:
        if algebra is None or arity is None:
            raise AlgebraError("empty product needs algebra and arity")
        return identity(algebra, arity)
    result = factors[0]
    for f in factors[1:]:
        result = multiply(result, f, term_budget)
    return result


def coefficient_at(a, v):
    v = tuple(v)
    if len(v) != a.arity:
        raise AlgebraError(f"exponent vector {v} has length {len(v)}, expected {a.arity}")
    return a.terms.get(v, 0)


def change_field(a, field):
    """Reduce an integer-coefficient element into another characteristic."""
    if isinstance(field, int):
        field = FieldSpec(field)
    alg = TruncatedAlgebra(a.algebra.r, a.algebra.k, field)
    return from_terms(alg, a.arity, dict(a.terms))


def basis(algebra, n, degree=None):
    """All exponent vectors of arity ``n`` (optionally of a fixed total) in lex order."""
    k = algebra.k
    vecs = itertools.product(range(k + 1), repeat=n)
    if degree is None:
        return list(vecs)
    return [v for v in vecs if sum(v) == degree]


def serialize(a):
    """One ``c * u^e1⊗u^e2⊗...`` line per term, lexicographic order; ``0`` if empty."""
    if a.is_zero():
        return "0"
    lines = []
    for key, c in a.sorted_terms():
        lines.append(f"{c} * " + "⊗".join(f"u^{e}" for e in key))
    return "\n".join(lines)
