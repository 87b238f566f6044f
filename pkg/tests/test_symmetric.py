from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vdlab.polyring import Polynomial, parse_poly
from vdlab.symmetric import (complete_h, reduced_schur, schur, schur_bialternant, schur_degree,
                             schur_jacobi_trudi, vandermonde_det)


def exponent_sets(max_k=4, bound=10):
    return st.integers(1, max_k).flatmap(
        lambda k: st.lists(st.integers(0, bound), min_size=k, max_size=k, unique=True)
        .map(lambda xs: tuple(sorted(xs))))


def test_complete_h_edges():
    assert not complete_h(-2, 3)
    assert complete_h(0, 3) == Polynomial.one(3)
    assert complete_h(2, 2) == parse_poly("x1^2 + x1*x2 + x2^2")


def test_vandermonde_convention():
    assert vandermonde_det(1) == Polynomial.one(1)
    assert vandermonde_det(2) == parse_poly("x2 - x1")
    assert len(vandermonde_det(3)) == 6


def test_bialternant_examples():
    assert schur((0, 1, 2)) == Polynomial.one(3)
    assert schur_bialternant((2, 3))[0] == parse_poly("x1^2*x2^2")
    s21 = parse_poly("x1^2*x2 + x1^2*x3 + x2^2*x1 + x2^2*x3 + x3^2*x1 + x3^2*x2 + 2*x1*x2*x3")
    assert schur((0, 2, 4)) == s21


def test_jacobi_trudi_examples():
    assert schur_jacobi_trudi((0, 2, 4))[0] == schur_bialternant((0, 2, 4))[0]
    assert schur_jacobi_trudi((0, 1, 2))[0] == Polynomial.one(3)
    assert schur_jacobi_trudi((2, 3))[0] == parse_poly("x1^2*x2^2")


def test_cofactor_path_agrees():
    for J in combinations(range(8), 4):
        assert schur_jacobi_trudi(J, "cofactor") == schur_jacobi_trudi(J)


def test_rejects_non_increasing():
    with pytest.raises(ValueError):
        schur((2, 2))


def test_reduced_schur():
    assert reduced_schur((2, 3)) == Polynomial.one(2)
    assert reduced_schur((1, 3, 5)) == schur((0, 2, 4))


@given(exponent_sets(), st.integers(1, 3))
def test_reduced_schur_shift_invariant(J, c):
    assert reduced_schur(tuple(j + c for j in J)) == reduced_schur(J)


@given(exponent_sets())
def test_constructions_agree(J):
    assert schur_bialternant(J)[0] == schur_jacobi_trudi(J)[0]


@given(exponent_sets(max_k=3))
def test_schur_positive_symmetric_homogeneous(J):
    s = schur(J)
    k = len(J)
    assert s.is_nonnegative() and s.is_homogeneous()
    assert s.degree() == schur_degree(J) == sum(J) - k * (k - 1) // 2
    for perm in permutations(range(k)):
        assert s.permute(perm) == s
