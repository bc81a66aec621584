"""Small prime utilities: sieve, deterministic primality, trial division."""

from math import isqrt

# Deterministic Miller-Rabin bases, valid for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981


def primes_up_to(n):
    """Return the sorted list of primes <= n."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def is_prime(n):
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    if n >= _MR_LIMIT:
        raise ValueError(f"primality of {n} is outside the deterministic range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n):
    """Smallest prime strictly greater than n."""
    c = max(n + 1, 2)
    while not is_prime(c):
        c += 1
    return c


def iter_primes(start=2):
    p = start - 1
    while True:
        p = next_prime(p)
        yield p


def first_primes(count):
    gen = iter_primes()
    return [next(gen) for _ in range(count)]


def trial_factor(n, bound):
    """Divide |n| by every prime <= bound.

    Returns ``(factors, cofactor)`` where ``factors`` is a sorted list of
    ``(prime, multiplicity)`` and ``cofactor`` is what remains (1 when
    ``n`` is ``bound``-smooth).
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    factors = []
    for p in primes_up_to(bound):
        if n == 1:
            break
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            factors.append((p, e))
    return factors, n


def factorize(n):
    """Sorted ``(prime, multiplicity)`` list of a nonzero integer, by trial division."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out = []
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def prime_support(n):
    """Distinct primes dividing a nonzero integer."""
    if n == 0:
        raise ValueError("0 has no finite prime support")
    return [p for p, _ in factorize(n)]
