"""
Which fields see u^k?
=====================

From integral cohomology data, decide the characteristics where u^k stays
nonzero and pick one that also keeps the zero-divisor witness alive.
"""

from pathlib import Path

from tcrational import charsets
from tcrational.reports import parse_cohomology_input

DATA = Path(__file__).parent / "data"

for name in ("cp2_like.json", "r6_k4_support.json", "torsion_top.json"):
    data = parse_cohomology_input((DATA / name).read_bytes())
    tag, allowed = charsets.admissible_characteristics(data)
    print(f"{data.name}")
    print(f"   case {tag}, excluded {list(allowed.excluded)}, zero allowed: {allowed.includes_zero}")
    print(f"   first members {allowed.first_members(6)}")
    print(f"   witness characteristic {charsets.select_characteristic(data)}")

# Fields with truncated polynomial cohomology exist only for some (r, p)
for r in (2, 4, 6, 8, 12):
    print(r, [p for p in (2, 3, 5, 7, 11, 13) if charsets.is_r_admissible(r, p)])
