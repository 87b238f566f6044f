import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from vdlab.ideals import IndexTuple, PartitionSpec
from vdlab.recurrences import (RecurrenceSpec, emptiness_record, eval_recurrence, forcing_check,
                               nondegenerate, solution_from_kernel, stratum_empty, vandermonde_rank,
                               vieta, zero_report)

nonzero = st.fractions(min_value=-9, max_value=9, max_denominator=4).filter(lambda x: x != 0)


def test_vieta_examples():
    assert vieta((1, 1)).alphas == (-2, 1)
    assert vieta((2, 3)).alphas == (-5, 6)
    with pytest.raises(ValueError):
        vieta((0, 1))
    with pytest.raises(ValueError):
        RecurrenceSpec((1, 0))


@given(st.lists(nonzero, min_size=1, max_size=4), st.randoms())
def test_vieta_permutation_invariant_and_roots_annihilate(roots, rnd):
    shuffled = list(roots)
    rnd.shuffle(shuffled)
    spec = vieta(roots)
    assert spec.alphas == vieta(shuffled).alphas
    char = spec.characteristic()
    for r in roots:
        assert sum(c * r ** (len(char) - 1 - i) for i, c in enumerate(char)) == 0


def test_eval_examples():
    assert eval_recurrence(vieta((1, -1)), (0, 1), 5) == [0, 1, 0, 1, 0, 1]
    assert eval_recurrence(RecurrenceSpec((-1, -1)), (0, 1), 7) == [0, 1, 1, 2, 3, 5, 8, 13]
    assert not any(eval_recurrence(vieta((2, 3)), (0, 0), 6))
    with pytest.raises(ValueError):
        eval_recurrence(vieta((2, 3)), (0, 1), 1)


def test_zero_reports():
    rep = zero_report(vieta((1, -1)), (0, 1), 30, 6)
    assert rep.progressions == [(0, 2)] and rep.sporadic == []
    fib = zero_report(RecurrenceSpec((-1, -1)), (0, 1), 30, 6)
    assert fib.zeros == [0] and fib.progressions == [] and fib.sporadic == [0]
    triv = zero_report(vieta((2, 3)), (0, 0), 10, 4)
    assert triv.trivial and triv.progressions == []


@given(st.lists(st.integers(-3, 3), min_size=2, max_size=3), st.lists(st.integers(-2, 2), min_size=3, max_size=3))
def test_zero_report_progressions_are_zero(alphas, init):
    assume(alphas[-1] != 0)
    spec = RecurrenceSpec(alphas)
    rep = zero_report(spec, init[: spec.k], 40, 6)
    u = eval_recurrence(spec, init[: spec.k], 40)
    for r, d in rep.progressions:
        assert 0 <= r < d and all(u[n] == 0 for n in range(r, 41, d))


def test_nondegenerate():
    assert nondegenerate(vieta((2, 3)))
    assert not nondegenerate(vieta((2, -2)))
    assert not nondegenerate(vieta((1, 2, -2)))
    with pytest.raises(ValueError):
        nondegenerate(RecurrenceSpec((1, 1)))


def test_vandermonde_rank_examples():
    assert vandermonde_rank((2, 3, 5), (0, 1, 2)).rank == 3
    res = vandermonde_rank((1, -1), (0, 2))
    assert res.rank == 1
    c = res.kernel
    assert c[0] == -c[1]
    with pytest.raises(ValueError):
        vandermonde_rank((1, 1), (0, 1))
    with pytest.raises(ValueError):
        vandermonde_rank((0, 1), (0, 1))


@given(st.lists(nonzero, min_size=2, max_size=4, unique=True))
def test_square_vandermonde_full_rank(points):
    assert vandermonde_rank(points, tuple(range(len(points)))).rank == len(points)


def test_kernel_solution_matches_recurrence():
    pts = (1, -1)
    res = vandermonde_rank(pts, (0, 2, 4))
    u = solution_from_kernel(pts, res.kernel, 8)
    spec = vieta(pts)
    assert eval_recurrence(spec, u[:2], 8) == u
    assert all(u[i] == 0 for i in (0, 2, 4))


def test_full_partition_stratum_always_empty():
    for I in [(0, 1, 3, 7), (0, 2, 5, 9), (0, 1, 2, 3, 4)]:
        assert stratum_empty(IndexTuple(3, I), PartitionSpec((3,)))


def test_emptiness_requires_every_stratum():
    t = IndexTuple(3, (0, 1, 3, 7))
    full = emptiness_record(t)
    assert full.strata[(1, 1, 1)] == "nonempty" and full.empty is False
    # dropping the open-stratum check flips the verdict
    mutated = emptiness_record(t, strata=[(3,), (2, 1)])
    assert mutated.empty is True


def test_emptiness_dual_symmetric_small():
    for I in [(0, 1, 3, 5), (0, 2, 4, 7), (0, 1, 4, 6), (0, 1, 3, 7)]:
        t = IndexTuple(3, I)
        assert emptiness_record(t).empty == emptiness_record(t.dual).empty


def test_forcing_examples():
    assert forcing_check(IndexTuple(3, (0, 1, 4, 6)), 13).forced is True
    assert forcing_check(IndexTuple(3, (0, 1, 4, 6)), 5).forced is False
    assert forcing_check(IndexTuple(3, (0, 1, 4, 6)), 4).forced is True


def test_forcing_0_1_4_13_at_6_has_cyclotomic_survivors():
    res = forcing_check(IndexTuple(3, (0, 1, 4, 13)), 6)
    assert res.forced is False and res.survivors
    # u_n = c1 + c2 i^n + c3 (-1)^n vanishes on (0, 1, 4, 13) but u_6 = -4
    pts, c = (1, 1j, -1), (-1 - 1j, 2, -1 + 1j)
    u = [sum(a * x ** n for a, x in zip(c, pts)) for n in range(14)]
    assert all(u[n] == 0 for n in (0, 1, 4, 13)) and u[6] == -4
    assert forcing_check(IndexTuple(3, (0, 1, 4, 13)), 52).forced is True
