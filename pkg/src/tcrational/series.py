"""TC-generating functions F(x) = sum_{n>=1} TC_{n+1} x^n = P(x)/(1-x)^2.

The x^n coefficient of F is TC_{n+1}; in particular the x^1 coefficient is
TC_2 and the constant term is 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError


class NotRationalError(InputError):
    pass


@dataclass(frozen=True)
class TCSequence:
    """Prefix TC_2..TC_m and an eventual law TC_{n+1} = slope*n + offset for n >= start.

    ``values[0]`` is TC_2, i.e. the x^1 coefficient.
    """

    values: tuple
    slope: int
    offset: int
    start: int = 1

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        errors = []
        if any((not isinstance(v, int)) or v < 0 for v in self.values):
            errors.append("TC values must be non-negative integers")
        if self.start < 1:
            errors.append(f"start must be >= 1, got {self.start}")
        if self.start > len(self.values) + 1:
            errors.append(f"start {self.start} lies beyond the prefix (length {len(self.values)})")
        if self.slope < 0:
            errors.append("a negative slope eventually yields negative TC values")
        if errors:
            raise InputError(errors)

    def coefficient(self, n):
        """x^n coefficient of F (= TC_{n+1} for n >= 1, 0 for n = 0)."""
        if n <= 0:
            return 0
        if n >= self.start:
            return self.slope * n + self.offset
        return self.values[n - 1]

    def mismatches(self):
        """Prefix indices n >= start where the stored value breaks the linear law."""
        return [n for n in range(self.start, len(self.values) + 1)
                if self.values[n - 1] != self.slope * n + self.offset]


def infer_sequence(values):
    """TCSequence from a prefix TC_2..TC_m, reading the law off its tail."""
    values = tuple(values)
    if len(values) < 2:
        raise InputError("need at least two values to infer an eventual slope")
    m = len(values)
    slope = values[-1] - values[-2]
    offset = values[-1] - slope * m
    start = m
    while start > 1 and values[start - 2] == slope * (start - 1) + offset:
        start -= 1
    return TCSequence(values, slope, offset, start)


def tc_sequence_for_condition1(k, m):
    """TC_n = n*k for n = 2..m; eventual law TC_{n+1} = k*n + k."""
    if k < 2 or m < 2:
        raise InputError(f"need k >= 2 and m >= 2, got k={k}, m={m}")
    return TCSequence(tuple(n * k for n in range(2, m + 1)), k, k, 1)


@dataclass(frozen=True)
class NumeratorPolynomial:
    coefficients: tuple

    def __post_init__(self):
        c = list(self.coefficients)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def generating_polynomial(seq):
    """P = (1-x)^2 F, exact; checks that coefficients vanish past start+1."""
    bad = seq.mismatches()
    if bad:
        raise NotRationalError(
            f"not rational with order-2 pole at 1: prefix breaks the declared law at n={bad}"
        )
    span = max(len(seq.values), seq.start) + 3
    a = [seq.coefficient(n) for n in range(span + 1)]
    p = [a[j] - 2 * (a[j - 1] if j >= 1 else 0) + (a[j - 2] if j >= 2 else 0) for j in range(span + 1)]
    if any(p[j] for j in range(seq.start + 2, span + 1)):
        raise NotRationalError("not rational with order-2 pole at 1")
    return NumeratorPolynomial(tuple(p[: seq.start + 2]))


def series_expand(poly, count):
    """First ``count`` coefficients of P(x)/(1-x)^2 via the Cauchy product with sum (n+1)x^n."""
    if count < 1:
        raise InputError(f"count must be >= 1, got {count}")
    coeffs = poly.coefficients if isinstance(poly, NumeratorPolynomial) else tuple(poly)
    return [sum(coeffs[i] * (n - i + 1) for i in range(min(n, len(coeffs) - 1) + 1))
            for n in range(count)]
