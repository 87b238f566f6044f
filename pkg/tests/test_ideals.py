from functools import reduce
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vdlab.groebner import groebner_basis
from vdlab.ideals import (IndexTuple, PartitionSpec, build_confluent_ideal, build_H_matrix,
                          build_ideal_A, build_ideal_BC, build_ideal_coarse, parse_tuple, partitions)
from vdlab.linalg import det_bareiss
from vdlab.polyring import Polynomial
from vdlab.symmetric import schur, vandermonde_det

from strategies import index_tuples


def test_parse_tuple():
    assert parse_tuple("0, 1,3,7") == (0, 1, 3, 7)
    with pytest.raises(ValueError):
        parse_tuple("0,a")
    with pytest.raises(ValueError):
        IndexTuple(3, (0, 2, 2, 4))
    with pytest.raises(ValueError):
        IndexTuple(3, (0, 2))


def test_derived_fields():
    t = IndexTuple(3, (0, 2, 4, 6))
    assert (t.m, t.N, t.gcd) == (4, 12, 2)
    assert IndexTuple(3, (0, 1, 3, 7)).dual.I == (0, 4, 6, 7)


@given(index_tuples(5, 15))
def test_dual_is_involution(I):
    t = IndexTuple(3, I)
    assert t.dual.dual == t


@given(st.lists(st.integers(0, 40), min_size=2, max_size=6, unique=True))
def test_gcd_matches_pairwise_folding(xs):
    I = tuple(sorted(xs))
    assert IndexTuple(2, I).gcd == reduce(gcd, (i - I[0] for i in I[1:]))


def test_partitions_of_four():
    assert [p for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    with pytest.raises(ValueError):
        PartitionSpec((1, 2))


def test_staircase_contains_one():
    gens = build_ideal_A(IndexTuple(3, (0, 1, 2, 3)))
    assert gens.by_subsequence((0, 1, 2)) == Polynomial.one(3)


def test_minimal_generators_and_degrees():
    gens = build_ideal_A(IndexTuple(3, (0, 2, 3, 4)), minimal=True)
    assert gens.provenance == ((0, 2, 3), (0, 2, 4), (0, 3, 4))
    assert [g.degree() for g in gens] == [2, 3, 4]
    with pytest.raises(ValueError):
        build_ideal_A(IndexTuple(3, (1, 2, 3, 4)), minimal=True)


@given(index_tuples(5, 8))
def test_minimal_and_full_generate_same_ideal(I):
    t = IndexTuple(3, I)
    full = build_ideal_A(t)
    small = groebner_basis(build_ideal_A(t, minimal=True).nonzero, nvars=3)
    assert all(small.contains(g) for g in full)
    big = groebner_basis(full.nonzero, nvars=3)
    assert big.basis == small.basis


@given(index_tuples(4, 10))
def test_A_generators_homogeneous_of_expected_degree(I):
    t = IndexTuple(3, I)
    for J, g in zip(build_ideal_A(t).provenance, build_ideal_A(t)):
        assert g.is_homogeneous() and g.degree() == sum(J) - 3


def test_BC_examples():
    # (0,2) reduces to h_1, not to the staircase; the ideal is still the unit ideal
    gens = build_ideal_BC(IndexTuple(2, (0, 1, 2)))
    assert Polynomial.one(2) in gens.generators
    assert groebner_basis(gens.nonzero).is_unit()
    assert len(build_ideal_BC(IndexTuple(3, (0, 1, 3, 7)))) == 4


@given(index_tuples(4, 10), st.integers(1, 6))
def test_BC_shift_invariant(I, c):
    t = IndexTuple(3, I)
    a = set(build_ideal_BC(t).generators)
    assert a == set(build_ideal_BC(t.shifted(c)).generators)


def test_gcd_tag_warns():
    with pytest.warns(UserWarning):
        gens = build_ideal_A(IndexTuple(2, (0, 2, 4)))
    assert "rescalable" in gens.tags


def test_H_matrix_rows_and_minors():
    H = build_H_matrix(IndexTuple(3, (0, 2, 3, 4)))
    assert [bool(e) for e in H[0]] == [False, False, True]
    one = Polynomial.one(3)
    minor = det_bareiss([H[0], H[1], H[3]], one)
    assert minor in (schur((0, 2, 4)), -schur((0, 2, 4)))
    H2 = build_H_matrix(IndexTuple(2, (0, 1)))
    assert det_bareiss(H2, Polynomial.one(2)) == -Polynomial.one(2)


def test_coarse_minor_is_vandermonde_times_schur():
    t = IndexTuple(3, (0, 1, 3, 7))
    for J, g in zip(build_ideal_coarse(t).provenance, build_ideal_coarse(t)):
        assert g == vandermonde_det(3) * schur(J)


def test_confluent_distinct_partition_is_coarse():
    t = IndexTuple(3, (0, 1, 3, 7))
    assert build_confluent_ideal(t, PartitionSpec((1, 1, 1))).generators == build_ideal_coarse(t).generators


def test_confluent_full_partition_single_minor():
    t = IndexTuple(3, (1, 2, 5))
    gens = build_confluent_ideal(t, PartitionSpec((3,)))
    (g,) = gens.generators
    # x^{sum I} times the integer determinant of (i^r)
    assert list(g.terms) == [(8,)] and g.terms[(8,)] != 0


def test_confluent_21_has_four_minors():
    gens = build_confluent_ideal(IndexTuple(3, (0, 1, 2, 3)), PartitionSpec((2, 1)))
    assert len(gens) == 4 and gens.nvars == 2
