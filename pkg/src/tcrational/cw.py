"""Minimal cell structures S^r u e^2r u ... u e^kr and their cellular cohomology.

A spine cell e^{ir} (i >= 2) carries the generalized Hopf invariant m_i of
its attaching map, so that x_1 x_{i-1} = m_i x_i and, inductively,
x_1^k = (m_2 ... m_k) x_k.  Achievable invariants are constrained by

    Im(h_i^r) = Z    if i = 2 and r in {2, 4, 8}, or r = 2 and i prime,
                iZ   otherwise.

Torsion in the top degree is realized by generator/relator pairs: the pair
with lower cell e^d has boundary d(e^{d+1}) = p^a e^d.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Optional

from .algebra import FieldSpec
from .charsets import CohomologyData, DegreeGroup, FiniteOrder, InfiniteOrder, q_set
from .errors import InputError
from .lambdas import relevant_lambda, relevant_lambda_primes
from .primes import factorize, is_prime, prime_support

GENERATOR = "generator"
RELATOR = "relator"


def hopf_image_generator(r, i):
    """Positive generator of Im(h_i^r) in Z."""
    if i == 2 and r in (2, 4, 8):
        return 1
    if r == 2 and is_prime(i):
        return 1
    return i


def in_hopf_image(r, i, m):
    return m % hopf_image_generator(r, i) == 0


@dataclass(frozen=True)
class HopfData:
    """Invariants m_2, ..., m_k of the spine attaching maps."""

    r: int
    k: int
    invariants: tuple

    def __post_init__(self):
        object.__setattr__(self, "invariants", tuple(self.invariants))
        if len(self.invariants) != self.k - 1:
            raise InputError(f"expected {self.k - 1} invariants m_2..m_k, got {len(self.invariants)}")
        bad = [f"m_{i}={m}" for i, m in self.indexed() if not in_hopf_image(self.r, i, m)]
        if bad:
            raise InputError(f"not realizable for r={self.r}: {', '.join(bad)}")

    def indexed(self):
        return list(enumerate(self.invariants, start=2))


def min_hopf_invariants(r, k):
    """Componentwise-minimal positive achievable invariants."""
    if r < 2 or r % 2:
        raise InputError(f"r must be even and >= 2, got {r}")
    return HopfData(r, k, tuple(hopf_image_generator(r, i) for i in range(2, k + 1)))


def spine_power_relation(h):
    """The integer N with x_1^k = N x_k; zero means u^k = 0 integrally."""
    return prod(h.invariants)


def satisfies_condition1(h):
    return spine_power_relation(h) != 0


def excluded_characteristics(r, k, hopf=None):
    """Primes of the Hopf product together with those of the relevant lambda."""
    hopf = hopf or min_hopf_invariants(r, k)
    n = spine_power_relation(hopf)
    hopf_primes = set(prime_support(n)) if n else set()
    return sorted(hopf_primes | set(relevant_lambda_primes(k)))


def factorial_family_exclusions(r=6, ks=(4, 5, 16, 18, 20, 22)):
    return [(k, excluded_characteristics(r, k)) for k in ks]


@dataclass(frozen=True)
class Cell:
    dimension: int
    role: str = GENERATOR
    boundary_multiplicity: int = 0
    boundary_target: Optional[int] = None
    hopf_invariant: Optional[int] = None
    label: str = ""

    def as_dict(self):
        d = {"dimension": self.dimension, "role": self.role, "label": self.label}
        if self.role == RELATOR:
            d["boundary_multiplicity"] = self.boundary_multiplicity
            d["boundary_target"] = self.boundary_target
        if self.hopf_invariant is not None:
            d["hopf_invariant"] = self.hopf_invariant
        return d


@dataclass(frozen=True)
class CellStructure:
    r: int
    k: int
    case_tag: str
    cells: tuple
    notes: tuple = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))
        errors = check_structure(self)
        if errors:
            raise InputError(errors)

    @property
    def hopf_invariants(self):
        return tuple(c.hopf_invariant for c in self.cells if c.hopf_invariant is not None)

    @property
    def spine_product(self):
        return prod(self.hopf_invariants)

    @property
    def top_dimension(self):
        return max(c.dimension for c in self.cells)

    def as_dict(self):
        return {
            "r": self.r,
            "k": self.k,
            "case": self.case_tag,
            "cells": [c.as_dict() for c in self.cells],
            "notes": list(self.notes),
        }


def check_structure(cs):
    errors = []
    r = cs.r
    dims = [c.dimension for c in cs.cells]
    if not cs.cells:
        return ["no cells"]
    for idx, c in enumerate(cs.cells):
        if c.dimension % r not in (0, 1, r - 1):
            errors.append(f"cell {idx}: dimension {c.dimension} is not a multiple of r or off by one")
        if c.role == RELATOR:
            if c.boundary_multiplicity < 2:
                errors.append(f"cell {idx}: relator multiplicity {c.boundary_multiplicity} < 2")
            t = c.boundary_target
            if t is None or not 0 <= t < len(cs.cells) or cs.cells[t].dimension != c.dimension - 1:
                errors.append(f"cell {idx}: relator must bound a cell one dimension lower")
        elif c.role != GENERATOR:
            errors.append(f"cell {idx}: unknown role {c.role!r}")
    if dims.count(0) != 1 or dims.count(r) != 1:
        errors.append("need exactly one cell in dimensions 0 and r")
    if max(dims) != cs.k * r:
        errors.append(f"top dimension {max(dims)} differs from kr = {cs.k * r}")
    return errors


def _spine_cells(r, invariants):
    cells = [Cell(0, label="e^0"), Cell(r, label=f"e^{r}")]
    for i, m in enumerate(invariants, start=2):
        cells.append(Cell(i * r, hopf_invariant=m, label=f"e^{i * r}"))
    return cells


def structure_from_hopf(h):
    """Spine complex S^r u e^2r u ... u e^kr with the given invariants."""
    return CellStructure(h.r, h.k, "(a)", _spine_cells(h.r, h.invariants))


def fit_hopf_invariants(r, top, factors):
    """Achievable m_2..m_top with product matching the content ``factors``.

    Tries the exact product first (possible iff the minimal product divides
    it, by scaling m_top).  Otherwise matches the prime support only, which
    needs the minimal product's primes to lie in the target support.
    Returns ``(HopfData, mode)`` with mode "exact" or "support".
    """
    base = min_hopf_invariants(r, top)
    g = spine_power_relation(base)
    target = prod(p**e for p, e in factors)
    support = set(q_set(factors))
    inv = list(base.invariants)
    if target % g == 0:
        inv[-1] *= target // g
        return HopfData(r, top, inv), "exact"
    g_support = set(prime_support(g))
    if not g_support <= support:
        raise InputError(
            f"content {target} not reachable for r={r}, k={top}: achievable invariants "
            f"force primes {sorted(g_support - support)}"
        )
    inv[-1] *= prod(support - g_support)
    return HopfData(r, top, inv), "support"


def synthesize_cell_structure(data, relator_placement="high", alpha_prime=None):
    """Minimal cell structure realizing ``data``.

    Infinite order: the k-cell spine whose Hopf product carries exactly the
    primes of u^k.  Finite order: the spine up to e^{lr}, then per torsion
    summand p^a of H^{kr} one pair for each l+1 <= j <= k-1 (lower cell
    e^{jr-1} when ``relator_placement`` is "high", e^{jr} when "low") of
    multiplicity p^{a'}, and a top pair (e^{kr}, e^{kr-1}) of multiplicity
    p^a.  ``alpha_prime`` maps a prime to a' (default a' = a).
    """
    if relator_placement not in ("high", "low"):
        raise InputError(f"relator_placement must be 'high' or 'low', got {relator_placement!r}")
    r, k = data.r, data.k
    po = data.power_order
    if isinstance(po, InfiniteOrder):
        h, mode = fit_hopf_invariants(r, k, po.q_factors)
        notes = [f"hopf product {spine_power_relation(h)} ({mode} match)"]
        return CellStructure(r, k, "(a)", _spine_cells(r, h.invariants), tuple(notes))
    if not isinstance(po, FiniteOrder):
        raise InputError("inconsistent power_order data")
    if not data.top.torsion:
        raise InputError("finite-order case needs torsion in degree kr")
    l = po.l
    h, mode = fit_hopf_invariants(r, l, po.l_q_factors)
    cells = _spine_cells(r, h.invariants)
    alpha_prime = alpha_prime or {}
    for t in data.top.torsion:
        a2 = alpha_prime.get(t.prime, t.exponent)
        if a2 < t.exponent:
            raise InputError(f"alpha' = {a2} for p = {t.prime} must be >= {t.exponent}")
        for j in range(l + 1, k):
            low = j * r - 1 if relator_placement == "high" else j * r
            cells.append(Cell(low, label=f"g{t.prime}^{low}"))
            cells.append(Cell(low + 1, RELATOR, t.prime**a2, len(cells) - 1, label=f"rel{t.prime}^{low + 1}"))
        low = k * r - 1
        cells.append(Cell(low, label=f"g{t.prime}^{low}"))
        cells.append(Cell(low + 1, RELATOR, t.order, len(cells) - 1, label=f"rel{t.prime}^{low + 1}"))
    notes = (
        f"spine hopf product {spine_power_relation(h)} ({mode} match)",
        f"{k - l - 1} intermediate pair(s) plus one top pair per torsion summand; "
        "the stated count k-l and the enumerated count k-l-1 of intermediate pairs differ",
    )
    return CellStructure(r, k, "(b)", cells, notes)


# cellular cohomology ----------------------------------------------------------

def _rank(rows, p):
    """Rank of an integer matrix over Q (p = 0) or F_p."""
    if p:
        m = [[x % p for x in row] for row in rows]
    else:
        m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        if p:
            inv = pow(m[rank][col], -1, p)
            m[rank] = [x * inv % p for x in m[rank]]
        else:
            inv = 1 / m[rank][col]
            m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(a - f * b) % p if p else a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def boundary_matrix(cs, d):
    """Cellular boundary C_d -> C_{d-1} as rows indexed by d-cells."""
    src = [i for i, c in enumerate(cs.cells) if c.dimension == d]
    dst = [i for i, c in enumerate(cs.cells) if c.dimension == d - 1]
    pos = {j: n for n, j in enumerate(dst)}
    rows = []
    for i in src:
        row = [0] * len(dst)
        c = cs.cells[i]
        if c.role == RELATOR:
            row[pos[c.boundary_target]] = c.boundary_multiplicity
        rows.append(row)
    return rows


@dataclass(frozen=True)
class CohomologyReport:
    characteristic: int
    dims: tuple
    dims_match: bool
    spine_product: int
    unit_check: bool
    truncated_polynomial: bool
    relevant_lambda: int
    lambda_unit: bool
    witness_hypothesis: bool

    def as_dict(self):
        return {
            "characteristic": self.characteristic,
            "dims": list(self.dims),
            "dims_match": self.dims_match,
            "spine_product": self.spine_product,
            "unit_check": self.unit_check,
            "truncated_polynomial": self.truncated_polynomial,
            "relevant_lambda": self.relevant_lambda,
            "lambda_unit": self.lambda_unit,
            "witness_hypothesis": self.witness_hypothesis,
        }


def cellular_cohomology(cs, field):
    """dim H^d(K; field) for d = 0..top plus the truncated-polynomial checks.

    ``truncated_polynomial`` requires the dimension profile (1 in each degree
    ir, 0 <= i <= k, zero elsewhere) and that the spine product, which gives
    x_1^k in terms of x_k, is a unit in the field.  ``witness_hypothesis``
    additionally requires the relevant lambda to be a unit.
    """
    if isinstance(field, int):
        field = FieldSpec(field)
    p = field.characteristic
    top = cs.top_dimension
    counts = [sum(1 for c in cs.cells if c.dimension == d) for d in range(top + 2)]
    ranks = [0] * (top + 2)
    for d in range(1, top + 2):
        rows = boundary_matrix(cs, d)
        ranks[d] = _rank(rows, p) if rows and rows[0] else 0
    dims = tuple(counts[d] - ranks[d + 1] - ranks[d] for d in range(top + 1))
    profile = tuple(1 if d % cs.r == 0 and d // cs.r <= cs.k else 0 for d in range(top + 1))
    n = cs.spine_product
    unit = (n % p != 0) if p else n != 0
    lam = relevant_lambda(cs.k)
    lam_unit = (lam % p != 0) if p else lam != 0
    tp = dims == profile and unit
    return CohomologyReport(p, dims, dims == profile, n, unit, tp, lam, lam_unit, tp and lam_unit)


def structure_from_dict(d):
    try:
        cells = []
        for c in d["cells"]:
            cells.append(Cell(
                dimension=int(c["dimension"]),
                role=c.get("role", GENERATOR),
                boundary_multiplicity=int(c.get("boundary_multiplicity", 0)),
                boundary_target=c.get("boundary_target"),
                hopf_invariant=c.get("hopf_invariant"),
                label=c.get("label", ""),
            ))
        return CellStructure(int(d["r"]), int(d["k"]), d.get("case", "(a)"), cells, tuple(d.get("notes", ())))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed cell structure: {exc}") from exc


def cohomology_from_hopf(h):
    """CohomologyData of the spine complex with invariants ``h``."""
    n = spine_power_relation(h)
    if n == 0:
        raise InputError("Hopf product is zero: u^k vanishes")
    return CohomologyData(h.r, h.k, tuple(DegreeGroup(1) for _ in range(h.k)),
                          InfiniteOrder(tuple(factorize(n))))
