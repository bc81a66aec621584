"""Zero-divisor witnesses in H^{(x)n} for H = K[u]/(u^(k+1)).

The products

    xi_(n,k) = [ (A_1 - A_2) ... (A_1 - A_n) (A_2 - A_3) ]^k
    mu_(n,k) = xi_(n,k-1) (A_1 - A_2) ... (A_1 - A_n)

are assembled one linear factor at a time, so every intermediate stays
within (k+1)^n terms.  ``zcl_witness`` packages the nk kernel factors and
whether their product survives in the chosen field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import algebra as alg
from .algebra import DEFAULT_TERM_BUDGET, basis_class
from .errors import AlgebraError, ResourceError
from .lambdas import lambda3, lambda_nk

EXHAUSTIVE_BASIS_CAP = 125
EXHAUSTIVE_LEN_CAP = 8
EXHAUSTIVE_POOL_CAP = 200_000


def diagonal_multiply(a):
    """Image of ``a`` under the n-fold multiplication, as ``{degree: coefficient}``."""
    k = a.algebra.k
    fs = a.algebra.field
    out = {}
    for key, c in a.terms.items():
        d = sum(key)
        if d <= k:
            out[d] = fs.reduce(out.get(d, 0) + c)
    return {d: c for d, c in out.items() if c}


def diagonal_kernel_check(a):
    """True iff ``a`` lies in the kernel of the n-fold multiplication map."""
    return not diagonal_multiply(a)


def difference(algebra, n, i, j):
    return basis_class(algebra, n, i) - basis_class(algebra, n, j)


def xi_factors(n, algebra):
    """The nk linear kernel factors whose product is xi_(n,k), in order."""
    k = algebra.k
    if n < 2:
        raise AlgebraError(f"xi needs arity n >= 2, got {n}")
    if n == 2:
        return [difference(algebra, 2, 1, 2)] * (2 * k)
    block = [difference(algebra, n, 1, i) for i in range(2, n + 1)]
    block.append(difference(algebra, n, 2, 3))
    return block * k


def _block_factors(n, algebra, exponent):
    block = [difference(algebra, n, 1, i) for i in range(2, n + 1)]
    block.append(difference(algebra, n, 2, 3))
    return block * exponent


def mu_factors(n, algebra):
    """Factors of mu_(n,k): xi_(n,k-1) followed by (A_1 - A_2) ... (A_1 - A_n)."""
    if n < 3:
        raise AlgebraError(f"mu needs arity n >= 3, got {n}")
    tail = [difference(algebra, n, 1, i) for i in range(2, n + 1)]
    return _block_factors(n, algebra, algebra.k - 1) + tail


def xi(n, algebra, term_budget=DEFAULT_TERM_BUDGET):
    return alg.product(xi_factors(n, algebra), algebra, n, term_budget)


def mu(n, algebra, term_budget=DEFAULT_TERM_BUDGET):
    return alg.product(mu_factors(n, algebra), algebra, n, term_budget)


def mu_reduced(n, algebra, term_budget=DEFAULT_TERM_BUDGET):
    """mu with xi_(n,k-1) replaced by its value in K[u]/(u^k).

    In K[u]/(u^k) the product xi_(n,k-1) collapses to
    lambda_(n,k-1) u^(k-1) (x) ... (x) u^(k-1); lifting that single term back
    to K[u]/(u^(k+1)) and multiplying by (A_1 - A_2) ... (A_1 - A_n) gives an
    element that differs from the literal :func:`mu` whenever xi_(n,k-1) has
    terms with a slot equal to k.
    """
    if n < 3:
        raise AlgebraError(f"mu needs arity n >= 3, got {n}")
    k = algebra.k
    if k - 1 >= 2:
        lower = alg.make_algebra(algebra.r, k - 1, algebra.field)
        coeff = alg.coefficient_at(xi(n, lower, term_budget), (k - 1,) * n)
    else:
        # in K[u]/(u^2) the Vandermonde product vanishes: lambda_(3,1) = 0
        coeff = lambda3(1)
    start = alg.monomial(algebra, (k - 1,) * n, coeff)
    tail = [difference(algebra, n, 1, i) for i in range(2, n + 1)]
    return alg.product([start] + tail, algebra, n, term_budget)


def top_class(algebra, n, coefficient=1):
    """coefficient * u^k (x) ... (x) u^k."""
    return alg.monomial(algebra, (algebra.k,) * n, coefficient)


@dataclass(frozen=True)
class WitnessCertificate:
    n: int
    k: int
    field: alg.FieldSpec
    factors: tuple
    product_nonzero: bool
    witness_length: int
    product: alg.TensorElement
    shape: str

    def factor_labels(self):
        return [_label(f) for f in self.factors]

    def as_dict(self):
        top = (self.k,) * self.n
        return {
            "n": self.n,
            "k": self.k,
            "characteristic": self.field.characteristic,
            "shape": self.shape,
            "factors": self.factor_labels(),
            "witness_length": self.witness_length,
            "all_factors_in_kernel": all(diagonal_kernel_check(f) for f in self.factors),
            "product_nonzero": self.product_nonzero,
            "product_top_coefficient": alg.coefficient_at(self.product, top) if self.product else 0,
            "product": alg.serialize(self.product).splitlines(),
            "lower_bound": self.witness_length if self.product_nonzero else None,
            "upper_bound": self.n * self.k,
        }


def _label(f):
    """``A1-A3`` style label for a difference of two basis classes."""
    pos = [(key.index(1) + 1, c) for key, c in f.sorted_terms()]
    if len(pos) == 2:
        (i, ci), (j, cj) = sorted(pos, key=lambda t: t[0])
        if ci == 1:
            return f"A{i}-A{j}"
        return f"A{j}-A{i}"
    return alg.serialize(f).replace("\n", " + ")


def zcl_witness(n, algebra, term_budget=DEFAULT_TERM_BUDGET):
    """Certificate of nk zero divisors, with the outcome over ``algebra.field``."""
    k = algebra.k
    if n < 2:
        raise AlgebraError(f"zcl witness needs n >= 2, got {n}")
    if n == 2:
        factors = xi_factors(2, algebra)
        shape = "(A1-A2)^(2k)"
    elif k % 2 == 0:
        factors = xi_factors(n, algebra)
        shape = "xi_(n,k)"
    else:
        factors = mu_factors(n, algebra) + [difference(algebra, n, 1, n)]
        shape = "mu_(n,k)(A1-An)"
    if len(factors) != n * k:
        raise AssertionError(f"witness has {len(factors)} factors, expected {n * k}")
    prod = alg.product(factors, algebra, n, term_budget)
    return WitnessCertificate(
        n=n, k=k, field=algebra.field, factors=tuple(factors),
        product_nonzero=not prod.is_zero(), witness_length=len(factors),
        product=prod, shape=shape,
    )


def sandwich_bounds(n, k, r=2):
    """(lower, upper) from zcl_n <= TC_n <= n dim X / (s+1) with dim X = kr, s = r-1."""
    upper_num = n * k * r
    if upper_num % r:
        raise AssertionError("n*dim X/(s+1) is not an integer")
    return n * k, upper_num // r


# identity checks -----------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    name: str
    n: int
    k: int
    expected: int
    observed: object
    passed: bool

    def as_dict(self):
        return {"identity": self.name, "n": self.n, "k": self.k,
                "expected": self.expected, "observed": self.observed, "passed": self.passed}


def _single_term_value(elem, n, k):
    """The top coefficient if ``elem`` is exactly c * u^k(x)...(x)u^k, else the term dump."""
    if elem.is_zero():
        return 0
    top = (k,) * n
    if set(elem.terms) == {top}:
        return elem.terms[top]
    return alg.serialize(elem).splitlines()


def verify_witness_identities(ns, ks, term_budget=DEFAULT_TERM_BUDGET):
    """Check the xi / mu / recursion identities over Q for every (n, k) pair.

    Identities checked (top class T = u^k (x) ... (x) u^k):

    * ``xi``: xi_(n,k) = lambda_(n,k) T for even k, 0 for odd k;
    * ``mu*(A1-An)``: mu_(n,k) (A_1 - A_n) = 2 (-1)^(n-1) lambda_(3,k-1) T, odd k;
    * ``mu*(A1-An)|reduced``: the same product with xi_(n,k-1) replaced by
      its reduction lambda_(n,k-1) u^(k-1) (x) ... (x) u^(k-1), odd k;
    * ``recursion``: lambda_(n+1,k) = (-1)^k lambda_(n,k), read off the products.
    """
    checks = []
    cache = {}
    for k in ks:
        algebra = alg.make_algebra(2, k)
        for n in ns:
            x = xi(n, algebra, term_budget)
            cache[n, k] = x
            expected = lambda_nk(n, k) if k % 2 == 0 else 0
            obs = _single_term_value(x, n, k)
            checks.append(IdentityCheck("xi", n, k, expected, obs, obs == expected))
            if k % 2:
                m = alg.multiply(mu(n, algebra, term_budget), difference(algebra, n, 1, n), term_budget)
                expected = 2 * (-1) ** (n - 1) * lambda3(k - 1)
                obs = _single_term_value(m, n, k)
                checks.append(IdentityCheck("mu*(A1-An)", n, k, expected, obs, obs == expected))
                red = alg.multiply(mu_reduced(n, algebra, term_budget), difference(algebra, n, 1, n), term_budget)
                obs = _single_term_value(red, n, k)
                checks.append(IdentityCheck("mu*(A1-An)|reduced", n, k, expected, obs, obs == expected))
        for n in ns:
            if (n + 1, k) not in cache:
                continue
            lo = _single_term_value(cache[n, k], n, k)
            hi = _single_term_value(cache[n + 1, k], n + 1, k)
            ok = isinstance(lo, int) and isinstance(hi, int) and hi == (-1) ** k * lo
            checks.append(IdentityCheck("recursion", n, k, (-1) ** k * lo if isinstance(lo, int) else lo, hi, ok))
    return checks


# Brute-force oracle -----------------------------------------------------------

def _kernel_basis(algebra, n, degree):
    """Basis of Ker(multiplication) in one degree.

    Differences e_v - e_v0 of same-degree monomials when degree <= k, all
    monomials when degree > k (everything there maps to zero).
    """
    vecs = alg.basis(algebra, n, degree)
    if not vecs:
        return []
    if degree > algebra.k:
        return [alg.monomial(algebra, v) for v in vecs]
    v0 = vecs[0]
    return [alg.from_terms(algebra, n, {v: 1, v0: -1}) for v in vecs[1:]]


def _box_pool(algebra, n, degree):
    """All nonzero {-1,0,1}-combinations of the kernel basis, one per sign class."""
    base = _kernel_basis(algebra, n, degree)
    if not base:
        return []
    if 3 ** len(base) > EXHAUSTIVE_POOL_CAP:
        raise ResourceError(
            f"degree-{degree} kernel box has 3^{len(base)} elements, above the cap {EXHAUSTIVE_POOL_CAP}"
        )
    seen = set()
    pool = []
    zero = alg.zero(algebra, n)
    for coeffs in itertools.product((0, 1, -1), repeat=len(base)):
        elem = zero
        for c, b in zip(coeffs, base):
            if c:
                elem = elem + alg.scale(b, c)
        if elem.is_zero():
            continue
        lead = elem.sorted_terms()[0][1]
        if lead != 1:
            elem = -elem
        key = frozenset(elem.terms.items())
        if key in seen:
            continue
        seen.add(key)
        pool.append(elem)
    return pool


def exhaustive_zcl(n, algebra, max_len):
    """Longest nonzero product of homogeneous kernel elements, by exhaustive search.

    The search space is restricted: in each degree d, the candidates are the
    nonzero combinations with coefficients in {-1, 0, 1} of the kernel basis
    (differences of degree-d monomials for d <= k, the monomials themselves
    for d > k).  The result is therefore a lower bound for zcl_n in general,
    and exact over F_2 and F_3 where the box exhausts the degree-wise kernel.
    Returns 0 if no single candidate is nonzero.
    """
    k = algebra.k
    if (k + 1) ** n > EXHAUSTIVE_BASIS_CAP:
        raise ResourceError(f"(k+1)^n = {(k + 1) ** n} exceeds the cap {EXHAUSTIVE_BASIS_CAP}")
    if max_len > EXHAUSTIVE_LEN_CAP:
        raise ResourceError(f"max_len = {max_len} exceeds the cap {EXHAUSTIVE_LEN_CAP}")
    top = n * k
    pools = {}

    def pool(d):
        if d not in pools:
            pools[d] = _box_pool(algebra, n, d)
        return pools[d]

    for j in range(max_len, 0, -1):
        # j factors of degree >= 1 with total above nk cannot survive truncation
        if j > top:
            continue
        max_deg = top - (j - 1)
        cands = [(d, e) for d in range(1, max_deg + 1) for e in pool(d)]
        if _search(cands, j, top, alg.identity(algebra, n)):
            return j
    return 0


def _search(cands, length, top, start):
    """Is there a multiset of ``length`` candidates with nonzero product?"""

    def rec(idx, remaining, deg, partial):
        if remaining == 0:
            return True
        for pos in range(idx, len(cands)):
            d, e = cands[pos]
            if deg + d + (remaining - 1) > top:
                # candidates are sorted by degree, later ones are no smaller
                break
            nxt = alg.multiply(partial, e)
            if nxt.is_zero():
                continue
            if rec(pos, remaining - 1, deg + d, nxt):
                return True
        return False

    return rec(0, length, 0, start)
