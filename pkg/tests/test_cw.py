from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from tcrational import cw
from tcrational.catalog import EXAMPLE_HOPF, example_cohomology, example_hopf, generic_r_family
from tcrational.charsets import (
    CohomologyData, DegreeGroup, FiniteOrder, InfiniteOrder, TorsionPrimary, admissible_characteristics, q_set,
)
from tcrational.errors import InputError
from tcrational.primes import first_primes, prime_support

REFERENCE_EXCLUSIONS = {
    4: [2, 3, 5],
    5: [2, 3, 5],
    16: [2, 3, 5, 7, 11, 13, 17, 19, 23],
    18: [2, 3, 5, 7, 11, 13, 17, 19, 23],
    20: [2, 3, 5, 7, 11, 13, 17, 19, 23, 29],
    22: [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31],
}


class TestHopf:
    @pytest.mark.parametrize("r, k, inv", [
        (4, 3, (1, 3)), (8, 7, (1, 3, 4, 5, 6, 7)), (6, 4, (2, 3, 4)), (2, 5, (1, 1, 4, 1)),
    ])
    def test_minimal(self, r, k, inv):
        assert cw.min_hopf_invariants(r, k).invariants == inv

    def test_k_factorial_family(self):
        for k in range(2, 12):
            assert cw.spine_power_relation(generic_r_family(6, k)) == factorial(k)

    @pytest.mark.parametrize("inv, n", [((1, 3), 3), ((1, 3, 4), 12)])
    def test_power_relation(self, inv, n):
        h = cw.HopfData(4, len(inv) + 1, inv)
        assert cw.spine_power_relation(h) == n and cw.satisfies_condition1(h)

    def test_zero_product(self):
        h = cw.HopfData(4, 3, (0, 3))
        assert cw.spine_power_relation(h) == 0 and not cw.satisfies_condition1(h)

    def test_unrealizable(self):
        with pytest.raises(InputError, match="m_3=2"):
            cw.HopfData(6, 3, (2, 2))
        with pytest.raises(InputError, match="m_2=1"):
            cw.HopfData(6, 2, (1,))

    def test_wrong_length(self):
        with pytest.raises(InputError):
            cw.HopfData(2, 4, (1, 1))

    def test_odd_r(self):
        with pytest.raises(InputError):
            cw.min_hopf_invariants(3, 2)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([2, 4, 6, 8, 10, 12, 16]), st.integers(2, 15))
def test_minimal_invariants_are_realizable(r, k):
    h = cw.min_hopf_invariants(r, k)
    assert all(cw.in_hopf_image(r, i, m) for i, m in h.indexed())
    assert all(m > 0 for m in h.invariants)


@pytest.mark.parametrize("k", sorted(REFERENCE_EXCLUSIONS))
def test_exclusion_rows(k):
    assert cw.excluded_characteristics(6, k) == REFERENCE_EXCLUSIONS[k]


def test_exclusion_table_function():
    assert cw.factorial_family_exclusions() == [(k, REFERENCE_EXCLUSIONS[k]) for k in (4, 5, 16, 18, 20, 22)]


def _infinite(r, k, q):
    return CohomologyData(r, k, tuple(DegreeGroup(1) for _ in range(k)), InfiniteOrder(tuple(q)))


CASE_B = CohomologyData(
    2, 3, (DegreeGroup(1), DegreeGroup(1), DegreeGroup(0, (TorsionPrimary(5),))), FiniteOrder(2),
)


class TestSynthesis:
    def test_example1(self):
        cs = cw.synthesize_cell_structure(_infinite(2, 2, []))
        assert [c.dimension for c in cs.cells] == [0, 2, 4]
        assert cs.hopf_invariants == (1,) and cs.case_tag == "(a)"

    def test_support_two_three(self):
        cs = cw.synthesize_cell_structure(_infinite(6, 4, [(2, 3), (3, 1)]))
        assert cs.hopf_invariants == (2, 3, 4)
        assert prime_support(cs.spine_product) == [2, 3]
        assert "exact" in cs.notes[0]

    def test_support_only_fallback(self):
        # 2 * 3 * 4 = 24 cannot equal 6; the support {2,3} is still reachable
        cs = cw.synthesize_cell_structure(_infinite(6, 4, [(2, 1), (3, 1)]))
        assert prime_support(cs.spine_product) == [2, 3]
        assert "support" in cs.notes[0]

    def test_unreachable_support(self):
        with pytest.raises(InputError, match="not reachable"):
            cw.synthesize_cell_structure(_infinite(6, 4, [(5, 1)]))

    def test_case_b_high(self):
        cs = cw.synthesize_cell_structure(CASE_B)
        assert cs.case_tag == "(b)"
        assert [(c.dimension, c.role, c.boundary_multiplicity) for c in cs.cells] == [
            (0, "generator", 0), (2, "generator", 0), (4, "generator", 0),
            (5, "generator", 0), (6, "relator", 5),
        ]
        assert any("k-l-1" in n for n in cs.notes)

    def test_case_b_intermediate_pairs(self):
        data = CohomologyData(2, 4, (DegreeGroup(1), DegreeGroup(1), DegreeGroup(1),
                                     DegreeGroup(0, (TorsionPrimary(3, 2),))), FiniteOrder(2))
        high = cw.synthesize_cell_structure(data, "high", alpha_prime={3: 3})
        low = cw.synthesize_cell_structure(data, "low")
        pairs = lambda s: [(c.dimension, c.boundary_multiplicity) for c in s.cells if c.role == cw.RELATOR]
        assert pairs(high) == [(6, 27), (8, 9)]
        assert pairs(low) == [(7, 9), (8, 9)]
        with pytest.raises(InputError):
            cw.synthesize_cell_structure(data, alpha_prime={3: 1})
        with pytest.raises(InputError):
            cw.synthesize_cell_structure(data, "middle")

    @pytest.mark.parametrize("placement", ["high", "low"])
    def test_structure_invariants(self, placement):
        data = CohomologyData(4, 5, tuple(DegreeGroup(1) for _ in range(4))
                              + (DegreeGroup(0, (TorsionPrimary(2), TorsionPrimary(7))),),
                              FiniteOrder(3, ((3, 1),)))
        cs = cw.synthesize_cell_structure(data, placement)
        assert cw.check_structure(cs) == []
        assert cs.top_dimension == 20
        assert sum(1 for c in cs.cells if c.dimension == 0) == 1
        assert sum(1 for c in cs.cells if c.dimension == 4) == 1


class TestStructureValidation:
    def test_bad_dimension(self):
        with pytest.raises(InputError):
            cw.CellStructure(4, 2, "(a)", (cw.Cell(0), cw.Cell(4), cw.Cell(6), cw.Cell(8, hopf_invariant=1)))

    def test_relator_multiplicity(self):
        with pytest.raises(InputError):
            cw.CellStructure(2, 2, "(a)", (cw.Cell(0), cw.Cell(2), cw.Cell(3), cw.Cell(4, cw.RELATOR, 1, 2)))

    def test_top_dimension(self):
        with pytest.raises(InputError):
            cw.CellStructure(2, 3, "(a)", (cw.Cell(0), cw.Cell(2), cw.Cell(4, hopf_invariant=1)))


class TestCellularCohomology:
    def test_example1_f5(self):
        rep = cw.cellular_cohomology(cw.structure_from_hopf(example_hopf(1)), 5)
        assert rep.dims == (1, 0, 1, 0, 1) and rep.truncated_polynomial

    @pytest.mark.parametrize("p, dims", [
        (0, (1, 0, 1, 0, 1, 0, 0)), (5, (1, 0, 1, 0, 1, 1, 1)), (7, (1, 0, 1, 0, 1, 0, 0)),
    ])
    def test_case_b(self, p, dims):
        rep = cw.cellular_cohomology(cw.synthesize_cell_structure(CASE_B), p)
        assert rep.dims == dims
        assert not rep.truncated_polynomial

    def test_rational_profile_iff_nonzero_product(self):
        for inv in [(1, 3), (0, 3), (2, 6)]:
            cs = cw.structure_from_hopf(cw.HopfData(2, 3, inv))
            rep = cw.cellular_cohomology(cs, 0)
            assert rep.truncated_polynomial is (0 not in inv)

    def test_rank(self):
        assert cw._rank([[2, 4], [1, 2]], 0) == 1
        assert cw._rank([[2, 0], [0, 3]], 3) == 1
        assert cw._rank([[2, 0], [0, 3]], 0) == 2

    def test_dict_round_trip(self):
        cs = cw.synthesize_cell_structure(CASE_B)
        again = cw.structure_from_dict(cs.as_dict())
        assert again == cs

    def test_malformed_dict(self):
        with pytest.raises(InputError):
            cw.structure_from_dict({"r": 2, "cells": []})


EXPECTED_EXCLUSIONS = {1: [2, 3], 2: [2, 3], 3: [2, 3], 4: [2, 3, 5], 5: [2, 3, 5, 7], 6: [2, 3, 5, 7, 11]}


@pytest.mark.parametrize("i", sorted(EXAMPLE_HOPF))
def test_catalog_examples(i):
    h = example_hopf(i)
    data = example_cohomology(i)
    cs = cw.synthesize_cell_structure(data)
    # the synthesized spine reproduces the listed invariants exactly
    assert cs.hopf_invariants == h.invariants
    assert q_set(data.power_order.q_factors) == prime_support(cw.spine_power_relation(h))
    assert cw.excluded_characteristics(h.r, h.k, h) == EXPECTED_EXCLUSIONS[i]
    _, allowed = admissible_characteristics(data)
    for p in [0] + first_primes(15):
        rep = cw.cellular_cohomology(cs, p)
        assert rep.truncated_polynomial is (p in allowed)
        assert rep.witness_hypothesis is (p not in EXPECTED_EXCLUSIONS[i])


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 4, 6, 8]), st.integers(2, 7), st.integers(1, 5))
def test_case_a_round_trip(r, k, scale):
    base = cw.min_hopf_invariants(r, k)
    h = cw.HopfData(r, k, base.invariants[:-1] + (base.invariants[-1] * scale,))
    data = cw.cohomology_from_hopf(h)
    cs = cw.synthesize_cell_structure(data)
    assert prime_support(cs.spine_product) == q_set(data.power_order.q_factors)
    for p in first_primes(10):
        rep = cw.cellular_cohomology(cs, p)
        assert rep.dims_match
        assert rep.unit_check is (p not in q_set(data.power_order.q_factors))
