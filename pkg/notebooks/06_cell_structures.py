"""
Cell structures from Hopf invariants
====================================

S^r u e^2r u ... u e^kr with attaching maps of Hopf invariants m_2..m_k has
x_1^k = (m_2 ... m_k) x_k.  Cellular cochains then tell us where the
cohomology is truncated polynomial.
"""

from pathlib import Path

from tcrational import cw
from tcrational.catalog import EXAMPLE_HOPF
from tcrational.reports import parse_cohomology_input

# Smallest achievable invariants for a few generator degrees
for r, k in ((2, 5), (4, 3), (8, 7), (6, 4)):
    h = cw.min_hopf_invariants(r, k)
    print(f"r={r}, k={k}: {h.invariants}, product {cw.spine_power_relation(h)}")

# Excluded characteristics for the k! family in degree 6
for k, primes in cw.factorial_family_exclusions():
    print(f"{k:>3} | {', '.join(map(str, primes))}")

# The example complexes: where does the witness hypothesis hold?
for i, h in EXAMPLE_HOPF.items():
    cs = cw.structure_from_hopf(h)
    good = [p for p in (0, 2, 3, 5, 7, 11, 13) if cw.cellular_cohomology(cs, p).witness_hypothesis]
    print(f"example {i} (r={h.r}, k={h.k}, m={h.invariants}): holds for {good}")

# Torsion in the top degree: relator pairs add classes over F_5
data = parse_cohomology_input((Path(__file__).parent / "data" / "torsion_top.json").read_bytes())
for placement in ("high", "low"):
    cs = cw.synthesize_cell_structure(data, placement)
    print(placement, [(c.dimension, c.role, c.boundary_multiplicity) for c in cs.cells])
    for p in (0, 5, 7):
        print("   ", p, cw.cellular_cohomology(cs, p).dims)
print(cs.notes[-1])
