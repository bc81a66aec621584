"""Characteristics over which u^k stays nonzero, from integral cohomology data.

Two cases, by the additive order of u^k in H^{kr}(X; Z):

* infinite order, u^k = q_1^f_1 ... q_g^f_g * w with w primitive: every
  characteristic (0 included) except the q_j;
* finite order, l the largest power of u of infinite order: every prime
  outside the torsion primes of H^{kr} and the primes of the u^l content.

All of these sets are cofinite in the primes, so they are stored by their
finite list of exclusions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import InputError
from .lambdas import relevant_lambda
from .primes import is_prime, iter_primes


@dataclass(frozen=True)
class TorsionPrimary:
    prime: int
    exponent: int = 1

    def __post_init__(self):
        if not is_prime(self.prime):
            raise InputError(f"torsion prime {self.prime} is not prime")
        if self.exponent < 1:
            raise InputError(f"torsion exponent {self.exponent} must be >= 1")

    @property
    def order(self):
        return self.prime**self.exponent


@dataclass(frozen=True)
class DegreeGroup:
    """H^{ir}(X; Z) = Z^free_rank + torsion."""

    free_rank: int = 1
    torsion: tuple = ()


@dataclass(frozen=True)
class InfiniteOrder:
    """u^k = prod q^f * w, w primitive in the free part."""

    q_factors: tuple = ()


@dataclass(frozen=True)
class FiniteOrder:
    """u^k torsion; ``l`` is the greatest power of u of infinite order."""

    l: int
    l_q_factors: tuple = ()


@dataclass(frozen=True)
class CohomologyData:
    r: int
    k: int
    degrees: tuple
    power_order: object
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        errors = validate(self)
        if errors:
            raise InputError(errors)

    def group(self, i):
        """H^{ir}, 1 <= i <= k."""
        return self.degrees[i - 1]

    @property
    def top(self):
        return self.degrees[-1]

    @property
    def is_infinite(self):
        return isinstance(self.power_order, InfiniteOrder)


def _check_factors(label, factors, errors):
    for entry in factors:
        try:
            p, e = entry
        except (TypeError, ValueError):
            errors.append(f"{label}: entry {entry!r} is not a (prime, exponent) pair")
            continue
        if not isinstance(p, int) or not is_prime(p):
            errors.append(f"{label}: {p!r} is not prime")
        if not isinstance(e, int) or e < 1:
            errors.append(f"{label}: exponent {e!r} for {p} must be a positive integer")


def validate(data):
    """List every invariant violation of ``data`` (empty when valid)."""
    errors = []
    if not isinstance(data.r, int) or data.r < 2 or data.r % 2:
        errors.append(f"r must be an even integer >= 2, got {data.r!r}")
    if not isinstance(data.k, int) or data.k < 2:
        errors.append(f"k must be an integer >= 2, got {data.k!r}")
        return errors
    if len(data.degrees) != data.k:
        errors.append(f"expected {data.k} degree groups (degrees r..kr), got {len(data.degrees)}")
        return errors
    for i, g in enumerate(data.degrees, start=1):
        if not isinstance(g.free_rank, int) or g.free_rank < 0:
            errors.append(f"degree {i}r: free_rank must be >= 0, got {g.free_rank!r}")
        for t in g.torsion:
            if not isinstance(t, TorsionPrimary):
                errors.append(f"degree {i}r: torsion entry {t!r} is not a TorsionPrimary")
    if data.degrees and data.degrees[0].free_rank != 1:
        errors.append(f"free rank in degree r must be 1, got {data.degrees[0].free_rank}")
    po = data.power_order
    if isinstance(po, InfiniteOrder):
        _check_factors("q_factors", po.q_factors, errors)
        if data.top.free_rank < 1:
            errors.append("infinite-order u^k requires free rank >= 1 in degree kr")
    elif isinstance(po, FiniteOrder):
        if not isinstance(po.l, int) or not 2 <= po.l <= data.k - 1:
            errors.append(f"l must satisfy 2 <= l <= k-1 (k={data.k}), got {po.l!r}")
        _check_factors("l_q_factors", po.l_q_factors, errors)
        if not data.top.torsion:
            errors.append("finite-order u^k requires torsion in degree kr")
    else:
        errors.append(f"power_order must be InfiniteOrder or FiniteOrder, got {type(po).__name__}")
    return errors


@dataclass(frozen=True)
class CofinitePrimeSet:
    """All primes (and 0 when ``includes_zero``) except ``excluded``."""

    includes_zero: bool
    excluded: tuple = ()

    def __post_init__(self):
        ex = tuple(sorted(set(self.excluded)))
        for p in ex:
            if not is_prime(p):
                raise InputError(f"excluded entry {p} is not prime")
        object.__setattr__(self, "excluded", ex)

    def __contains__(self, c):
        if c == 0:
            return self.includes_zero
        return is_prime(c) and c not in self.excluded

    def first_members(self, count, with_zero=True):
        out = [0] if (self.includes_zero and with_zero) else []
        for p in iter_primes():
            if len(out) >= count:
                break
            if p not in self.excluded:
                out.append(p)
        return out[:count]

    def as_dict(self):
        return {"includes_zero": self.includes_zero, "excluded": list(self.excluded)}


def q_set(factors):
    """Distinct primes of a ``[(prime, exponent), ...]`` content."""
    out = set()
    for p, e in factors:
        if not is_prime(p):
            raise InputError(f"{p} is not prime")
        if e >= 1:
            out.add(p)
    return sorted(out)


def p_set(torsion):
    """Distinct primes among torsion primaries."""
    return sorted({t.prime for t in torsion})


def admissible_characteristics(data):
    """``(case_tag, CofinitePrimeSet)`` of characteristics with dim span{u, ..., u^k} = k."""
    po = data.power_order
    if isinstance(po, InfiniteOrder):
        return "(i)", CofinitePrimeSet(True, tuple(q_set(po.q_factors)))
    if isinstance(po, FiniteOrder):
        excluded = set(p_set(data.top.torsion)) | set(q_set(po.l_q_factors))
        return "(ii)", CofinitePrimeSet(False, tuple(excluded))
    raise InputError("inconsistent power_order data")


def select_characteristic(data):
    """Characteristic for the zero-divisor witness: 0 if allowed, else the
    smallest admissible prime not dividing lambda_(3,k) (k even) or
    2 lambda_(3,k-1) (k odd)."""
    _, allowed = admissible_characteristics(data)
    if allowed.includes_zero:
        return 0
    bad = relevant_lambda(data.k)
    # finitely many exclusions, so the scan terminates
    for p in iter_primes():
        if p in allowed and bad % p:
            return p


def is_r_admissible(r, characteristic):
    """Whether some (r-1)-connected complex has truncated polynomial
    cohomology over a field of this characteristic (lookup rule)."""
    if r < 2 or r % 2:
        return False
    p = characteristic
    if p == 0:
        return True
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if r in (2, 4):
        return True
    if r == 8:
        return p == 2 or p % 4 == 1
    return p % 2 == 1 and (p - 1) % (r // 2) == 0


def report(data):
    tag, allowed = admissible_characteristics(data)
    po = data.power_order
    out = {
        "case": tag,
        "admissible": allowed.as_dict(),
        "P_uk": p_set(data.top.torsion),
        "selected_characteristic": select_characteristic(data),
        "relevant_lambda": relevant_lambda(data.k),
        "first_admissible": allowed.first_members(10),
    }
    if isinstance(po, InfiniteOrder):
        out["Q_uk"] = q_set(po.q_factors)
    else:
        out["Q_ul"] = q_set(po.l_q_factors)
        out["l"] = po.l
    return out
