"""The coefficients lambda_(3,k) = sum_i (-1)^i C(k,i)^3 and lambda_(n,k).

For even k = 2a the alternating sum has the Dixon closed form
(-1)^a (3a)! / (a!)^3, which hands over the prime factorization through
Legendre's formula.  Odd k gives zero by the symmetry i <-> k - i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import AlgebraError, InputError
from .primes import primes_up_to, trial_factor


def lambda3(k):
    """Exact alternating sum of cubed binomial coefficients."""
    if k < 0:
        raise InputError(f"k must be >= 0, got {k}")
    return sum((-1) ** i * comb(k, i) ** 3 for i in range(k + 1))


def legendre_valuation(n, p):
    """Exponent of the prime p in n!."""
    v = 0
    while n:
        n //= p
        v += n
    return v


@lru_cache(maxsize=None)
def dixon_factorization(a):
    """Sorted ``(prime, exponent)`` list of (3a)! / (a!)^3."""
    out = []
    for p in primes_up_to(3 * a):
        e = legendre_valuation(3 * a, p) - 3 * legendre_valuation(a, p)
        if e:
            out.append((p, e))
    return tuple(out)


def lambda3_closed_form(a):
    """(-1)^a (3a)!/(a!)^3, reassembled from its prime valuations."""
    if a < 0:
        raise InputError(f"a must be >= 0, got {a}")
    value = 1
    for p, e in dixon_factorization(a):
        value *= p**e
    return -value if a % 2 else value


def lambda_nk(n, k):
    """lambda_(n,k) = (-1)^((n-1)k) lambda_(3,k) for n >= 3."""
    if n < 3:
        raise InputError(f"n must be >= 3, got {n}")
    if k < 2:
        raise InputError(f"k must be >= 2, got {k}")
    sign = -1 if ((n - 1) * k) % 2 else 1
    return sign * lambda3(k)


def lambda_factorization(k):
    """Prime factorization of lambda_(3,k) for even k, cross-checked.

    The closed-form valuations are confirmed by trial division of the raw
    alternating sum by all primes up to 3k/2 (a bound on any prime of
    (3a)!), which must leave a unit cofactor.
    """
    if k % 2:
        raise AlgebraError(f"lambda_(3,{k}) vanishes for odd k; no factorization")
    if k < 0:
        raise InputError(f"k must be >= 0, got {k}")
    a = k // 2
    closed = list(dixon_factorization(a))
    raw = lambda3(k)
    trial, cofactor = trial_factor(raw, 3 * a)
    if cofactor != 1 or trial != closed:
        raise ArithmeticError(
            f"closed form and trial division disagree at k={k}: {closed} vs {trial} (cofactor {cofactor})"
        )
    return closed


def factor_lambda(k):
    """Sorted distinct primes dividing lambda_(3,k), k even."""
    return [p for p, _ in lambda_factorization(k)]


def relevant_lambda(k):
    """The integer a characteristic must not divide: lambda_(3,k) for even k,
    2 lambda_(3,k-1) for odd k."""
    if k % 2 == 0:
        return lambda3(k)
    return 2 * lambda3(k - 1)


def relevant_lambda_primes(k):
    if k % 2 == 0:
        return factor_lambda(k)
    return sorted({2, *factor_lambda(k - 1)})


def expanded_display_value(k):
    """The expanded display 2[sum_{i<=a} (-1)^i C(2a,i)^3] + C(2a,a)^3 for k = 2a.

    Reported alongside :func:`lambda3` for comparison only; it agrees with
    the alternating sum at k = 2 but not beyond (522 vs 90 at k = 4).
    """
    if k % 2:
        raise AlgebraError("the expanded display is only stated for even k")
    a = k // 2
    return 2 * sum((-1) ** i * comb(k, i) ** 3 for i in range(a + 1)) + comb(k, a) ** 3


@dataclass(frozen=True)
class LambdaValue:
    n: int
    k: int
    value: int
    prime_factors: tuple

    def as_dict(self):
        return {
            "n": self.n,
            "k": self.k,
            "value": self.value,
            "prime_factors": [list(pe) for pe in self.prime_factors],
        }


def lambda_value(k, n=3):
    value = lambda_nk(n, k)
    factors = tuple(lambda_factorization(k)) if value not in (0, 1, -1) else ()
    return LambdaValue(n=n, k=k, value=value, prime_factors=factors)


def lambda_prime_table(max_k=40):
    """Rows ``(k, primes of lambda_(3,k))`` for even k in 2..max_k."""
    return [(k, factor_lambda(k)) for k in range(2, max_k + 1, 2)]
