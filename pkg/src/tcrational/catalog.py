"""Named example complexes S^r u e^2r u ... u e^kr, given by their Hopf invariants."""

from .cw import HopfData, cohomology_from_hopf, min_hopf_invariants

EXAMPLE_HOPF = {
    1: HopfData(2, 2, (1,)),
    2: HopfData(2, 3, (1, 3)),
    3: HopfData(4, 3, (1, 3)),
    4: HopfData(4, 4, (1, 3, 4)),
    5: HopfData(8, 7, (1, 3, 4, 5, 6, 7)),
    6: HopfData(8, 8, (1, 3, 4, 5, 6, 7, 8)),
}


def example_hopf(i):
    return EXAMPLE_HOPF[i]


def example_cohomology(i):
    return cohomology_from_hopf(EXAMPLE_HOPF[i])


def generic_r_family(r, k):
    """The complex with minimal invariants; for r not in {2, 4, 8} the product is k!."""
    return min_hopf_invariants(r, k)
